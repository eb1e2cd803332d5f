"""Command-line front end.

Exit codes: 0 success, 2 parse error, 3 unstable Gin, 4 verdict inconsistency
(a violated consistency contract or a failed ``expect.*`` regression value).
"""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb

import numpy as np

from . import boij_soderberg as bs
from .betti import BettiTable, betti_table, koszul_betti, property_ndp, rigidity_check, thmA_verdict, is_acm_dlinear
from .constructions import (
    general_hyperplane_section,
    generic_catalecticant_minors,
    project_from_points,
    random_points,
    rational_normal_curve,
    rnc_variety,
    toric_from_matrix,
    veronese,
)
from .gin import GinResult, generic_initial_ideal
from .hilbert import h_nonnegativity_check, hilbert_data
from .io import IdealFileError, emit_ideal, read_ideal, read_matrix, read_points, read_table
from .monideal import MonomialIdeal
from .nd import degree_bound_check, nd_check, nd_check_direct, nd_index, point_section
from .pei import multisecant_length_sampler, partial_elimination_ideals
from .polyring import DEFAULT_PRIME, Ideal, PolynomialSyntaxError, format_polynomial

EXIT_OK, EXIT_PARSE, EXIT_UNSTABLE, EXIT_INCONSISTENT = 0, 2, 3, 4


@dataclass
class AnalysisReport:
    data: dict = field(default_factory=dict)
    problems: list[str] = field(default_factory=list)
    unstable: bool = False

    @property
    def exit_code(self) -> int:
        if self.unstable:
            return EXIT_UNSTABLE
        return EXIT_INCONSISTENT if self.problems else EXIT_OK


def _table_dict(B: BettiTable) -> dict:
    return {"triples": B.to_triples(), "complete": B.complete, "max_i": B.max_i, "max_j": B.max_j}


def analyze(I: Ideal, seed: int = 0, trials: int = 2, cap: int | None = None,
            max_i: int | None = None, max_degree: int | None = None, direct: bool = False,
            expect: dict[str, str] | None = None) -> AnalysisReport:
    """Gin, ND-index, Hilbert data, Betti table and the derived verdicts."""
    rep = AnalysisReport()
    d = rep.data
    H = hilbert_data(I)
    d["ring"] = {"nvars": I.ring.nvars, "prime": I.ring.prime}
    d["hilbert"] = H.as_dict()
    if H.degree != sum(H.h_vector):
        rep.problems.append("degree differs from the h-vector sum")
    g = generic_initial_ideal(I, trials=trials, seed=seed)
    d["gin"] = g.as_dict()
    if not g.stable:
        rep.unstable = True
        rep.problems.append("unstable Gin")
        d["partial"] = True
        return rep
    reg = g.gin.max_degree()
    e = H.codim
    d["regularity"] = reg
    d["gin_projective_dimension"] = g.gin.support()
    cap = cap if cap is not None else max(reg, 1)
    idx = nd_index(I, cap, seed=seed, gin=g, hilbert=H) if I.gens else cap
    certs = [nd_check(I, ell, seed=seed, gin=g, hilbert=H) for ell in (idx, idx + 1) if ell >= 1]
    d["nd_index"] = idx
    d["nd_certificates"] = [c.as_dict() for c in certs]
    if direct and I.gens:
        checks = []
        for c in certs:
            dc = nd_check_direct(I, c.ell, seed=seed, hilbert=H)
            checks.append(dc.as_dict())
            if dc.verdict != c.verdict:
                rep.problems.append(f"ND({c.ell}): Gin criterion says {c.verdict}, direct section says {dc.verdict}")
        d["nd_direct"] = checks

    if max_i is not None or max_degree is not None:
        B = koszul_betti(I, max_i=max_i if max_i is not None else I.ring.nvars,
                         max_j=max_degree if max_degree is not None else max(reg - 1, 0))
    else:
        B = betti_table(I, seed=seed, gin=g)
    d["betti"] = _table_dict(B)
    d["betti_text"] = B.to_text()
    if B.complete and B.euler_numerator() != list(H.numerator):
        rep.problems.append("Betti table does not reproduce the Hilbert series")

    pd = B.projective_dimension() if B.complete else B.max_i
    ndp = {}
    for dd in range(1, reg + 2):
        for steps in range(1, max(pd, 1) + 1):
            v = property_ndp(B, dd, steps)
            ndp[f"{dd},{steps}"] = v.holds
    d["ndp"] = ndp

    verdicts = {}
    if idx >= 1 and I.gens:
        A = thmA_verdict(B, e, idx, gin=g, degree=H.degree)
        verdicts["bound_on_betti"] = A.as_dict()
        if not A.consistent:
            rep.problems.append("Betti bound under ND violated or equality without its equivalents")
        db = degree_bound_check(I, idx, hilbert=H)
        verdicts["degree_bound"] = db.as_dict()
        if not db.holds:
            rep.problems.append("degree below the ND lower bound")
    if I.gens:
        R = rigidity_check(I, idx + 1, seed=seed, betti=B if B.complete else None, gin=g)
        verdicts["rigidity"] = R.as_dict()
        if not R.ok:
            rep.problems.append("rigidity hypotheses hold but the conclusion fails")
        if B.complete and e >= 1:
            first = next((dd for dd in range(1, reg + 2) if property_ndp(B, dd, e).holds), None)
            if first is not None:
                bound = comb(first - 1 + e, e)
                eq = H.degree == bound
                item = {"d": first, "degree": H.degree, "bound": bound, "holds": H.degree <= bound, "equality": eq}
                if eq:
                    item["acm_linear"] = is_acm_dlinear(B, e, first)
                    if not item["acm_linear"]:
                        rep.problems.append("degree bound equality without an ACM linear resolution")
                if H.degree > bound:
                    rep.problems.append("degree above the bound forced by N_{d,e}")
                verdicts["degree_upper_bound"] = item
        hv = h_nonnegativity_check(I, idx + 1, data=H)
        verdicts["h_vector"] = hv.as_dict()
        if not hv.ok:
            rep.problems.append("h-vector formula check failed")
    d["verdicts"] = verdicts

    if expect:
        d["expectations"] = _check_expectations(d, expect, g, B, rep)
    return rep


def _check_expectations(d: dict, expect: dict[str, str], g: GinResult, B: BettiTable, rep: AnalysisReport) -> dict:
    out = {}
    flat = {
        "nd_index": d.get("nd_index"),
        "regularity": d.get("regularity"),
        "codim": d["hilbert"]["e"],
        "degree": d["hilbert"]["degree"],
        "dim": d["hilbert"]["n"],
        "gin_projective_dimension": d.get("gin_projective_dimension"),
    }
    for key, want in sorted(expect.items()):
        if key == "gin":
            got = sorted(g.gin.generator_strings())
            ok = got == sorted(s.strip() for s in want.split(",") if s.strip())
        elif key == "betti":
            triples = []
            for part in want.split(";"):
                if part.strip():
                    i, j, b = (int(x) for x in part.split(","))
                    triples.append((i, j, b))
            ok = B.entries == BettiTable.from_triples(triples).entries
            got = B.to_triples()
        elif key in flat:
            got = flat[key]
            ok = str(got) == want.strip()
        else:
            got, ok = None, False
        out[key] = {"expected": want, "ok": ok}
        if not ok:
            rep.problems.append(f"expectation {key} = {want} not met (got {got})")
    return out


# --------------------------------------------------------------------------- output


def _emit(args, payload: dict, text: str) -> None:
    if args.format == "structured":
        sys.stdout.write(json.dumps(payload, sort_keys=True, indent=2, default=str) + "\n")
    else:
        sys.stdout.write(text.rstrip("\n") + "\n")


def _analysis_text(rep: AnalysisReport) -> str:
    d = rep.data
    h = d["hilbert"]
    lines = [
        f"ring: {d['ring']['nvars']} variables over GF({d['ring']['prime']})",
        f"dimension n = {h['n']}, codimension e = {h['e']}, degree = {h['degree']}",
        f"h-vector: {h['h_vector']}",
        f"Gin ({'stable' if d['gin']['stable'] else 'UNSTABLE'}, {d['gin']['agreements']}/{d['gin']['runs']} runs agree, seed {d['gin']['seed']}):",
        "  (" + ", ".join(d["gin"]["gin"]) + ")",
    ]
    if "regularity" in d:
        lines.append(f"regularity: {d['regularity']}; projective dimension of R/Gin: {d['gin_projective_dimension']}")
        lines.append(f"ND-index: {d['nd_index']}")
        for c in d["nd_certificates"]:
            lines.append(f"  ND({c['ell']}): {c['verdict']} ({c['method']})")
        for c in d.get("nd_direct", []):
            lines.append(f"  ND({c['ell']}): {c['verdict']} ({c['method']}, section length {c['section_length']})")
        lines.append("Betti table:")
        lines.extend("  " + s for s in d["betti_text"].splitlines())
        for name, v in d.get("verdicts", {}).items():
            lines.append(f"{name}: {json.dumps(v, sort_keys=True)}")
    for key, v in d.get("expectations", {}).items():
        lines.append(f"expect {key}: {'ok' if v['ok'] else 'MISMATCH'}")
    for p in rep.problems:
        lines.append(f"PROBLEM: {p}")
    return "\n".join(lines)


# --------------------------------------------------------------------------- commands


def _load(args) -> tuple[Ideal, dict]:
    f = read_ideal(args.file, prime=args.prime)
    return f.ideal, f.expect


def cmd_analyze(args) -> int:
    I, expect = _load(args)
    rep = analyze(I, seed=args.seed, trials=args.trials, cap=args.cap, max_i=args.max_i,
                  max_degree=args.max_degree, direct=args.direct, expect=expect)
    rep.data["problems"] = rep.problems
    _emit(args, rep.data, _analysis_text(rep))
    return rep.exit_code


def cmd_gin(args) -> int:
    I, _ = _load(args)
    g = generic_initial_ideal(I, trials=args.trials, seed=args.seed)
    _emit(args, g.as_dict(), "(" + ", ".join(g.gin.generator_strings()) + ")" + ("" if g.stable else "\nUNSTABLE"))
    return EXIT_OK if g.stable else EXIT_UNSTABLE


def cmd_betti(args) -> int:
    I, _ = _load(args)
    if args.max_i is not None or args.max_degree is not None:
        B = koszul_betti(I, max_i=args.max_i, max_j=args.max_degree)
    else:
        B = betti_table(I, seed=args.seed, trials=args.trials)
    _emit(args, _table_dict(B), B.to_text())
    return EXIT_OK


def cmd_hilbert(args) -> int:
    I, _ = _load(args)
    H = hilbert_data(I)
    dd = H.as_dict()
    _emit(args, dd, f"n = {dd['n']}, e = {dd['e']}, degree = {dd['degree']}, h-vector = {dd['h_vector']}")
    return EXIT_OK


def cmd_nd(args) -> int:
    I, _ = _load(args)
    H = hilbert_data(I)
    out = []
    if args.method in ("gin", "both"):
        out.append(nd_check(I, args.ell, seed=args.seed, trials=args.trials, hilbert=H))
    if args.method in ("direct", "both"):
        out.append(nd_check_direct(I, args.ell, seed=args.seed, hilbert=H))
    payload = {"certificates": [c.as_dict() for c in out]}
    text = "\n".join(f"ND({c.ell}): {c.verdict} ({c.method}); witness: {', '.join(c.witness)}" for c in out)
    _emit(args, payload, text)
    if any(c.verdict == "unstable" for c in out):
        return EXIT_UNSTABLE
    if len({c.verdict for c in out}) > 1:
        return EXIT_INCONSISTENT
    return EXIT_OK


def cmd_nd_index(args) -> int:
    I, _ = _load(args)
    k = nd_index(I, args.cap, seed=args.seed, trials=args.trials)
    _emit(args, {"nd_index": k, "cap": args.cap, "seed": args.seed}, f"ND-index: {k} (cap {args.cap})")
    return EXIT_OK


def cmd_section(args) -> int:
    I, _ = _load(args)
    if args.points:
        e = hilbert_data(I).codim
        S = point_section(I, e, np.random.default_rng(args.seed))
    else:
        S = general_hyperplane_section(I, args.count, seed=args.seed)
    text = emit_ideal(S)
    _emit(args, {"nvars": S.ring.nvars, "generators": [format_polynomial(g) for g in S.gens]}, text)
    return EXIT_OK


def cmd_pei(args) -> int:
    I, _ = _load(args)
    F = partial_elimination_ideals(I, args.max_i)
    payload = {"K": [[format_polynomial(g) for g in K.gens] for K in F.ideals], "base_nvars": F.ring.nvars}
    lines = []
    for i, K in enumerate(F.ideals):
        lines.append(f"K_{i}: (" + ", ".join(format_polynomial(g) for g in K.gens) + ")")
    _emit(args, payload, "\n".join(lines))
    return EXIT_OK


def cmd_bezout(args) -> int:
    X = None
    if args.rnc:
        X = rnc_variety(args.rnc, args.prime or DEFAULT_PRIME)
        I = X.ideal
    else:
        if not args.file:
            raise SystemExit("bezout needs an ideal file or --rnc")
        I, _ = _load(args)
    B = betti_table(I, seed=args.seed, trials=args.trials)
    v = property_ndp(B, args.d, args.p)
    stats = multisecant_length_sampler(I, args.p, args.d, samples=args.samples, seed=args.seed, variety=X)
    payload = stats.as_dict()
    payload["ndp_verified"] = v.holds
    text = (f"N_{{{args.d},{args.p}}}: {v.holds}; max length {stats.max_length} over {len(stats.lengths)} planes; "
            f"bound {stats.bound}; lengths {payload['histogram']}")
    _emit(args, payload, text)
    if v.holds and not stats.within_bound:
        return EXIT_INCONSISTENT
    return EXIT_OK


def cmd_construct(args) -> int:
    p = args.prime or DEFAULT_PRIME
    kind = args.kind
    if kind == "rnc":
        I = rational_normal_curve(args.deg, p)
    elif kind == "toric":
        I = toric_from_matrix(read_matrix(args.matrix), p)
    elif kind == "minors":
        blocks = [int(b) for b in args.blocks.split(",")]
        I = generic_catalecticant_minors(args.t, blocks, p)
    elif kind == "veronese":
        I = veronese(args.n, args.d, p)
    elif kind == "project":
        base = read_ideal(args.ideal, prime=args.prime).ideal
        if args.points:
            pts = read_points(args.points)
        else:
            pts = random_points(base.ring.nvars, args.random, np.random.default_rng(args.seed), base.ring.prime)
        I = project_from_points(base, pts, seed=args.seed, isomorphic=args.isomorphic)
    elif kind == "section":
        base = read_ideal(args.ideal, prime=args.prime).ideal
        I = general_hyperplane_section(base, args.count, seed=args.seed)
    else:
        raise SystemExit(f"unknown construction {kind}")
    text = emit_ideal(I, name=kind)
    _emit(args, {"nvars": I.ring.nvars, "prime": I.ring.prime,
                 "generators": [format_polynomial(g) for g in I.gens]}, text)
    return EXIT_OK


def cmd_bs(args) -> int:
    B = read_table(args.decompose)
    T = bs.from_betti(B)
    parts = bs.decompose(T)
    exact = bs.recompose(parts) == T
    payload = {"summands": [s.as_dict() for s in parts], "exact": exact, "chain": bs.chain_ok(parts)}
    text = " + ".join(f"{s.coefficient} * B{s.degrees}" for s in parts)
    _emit(args, payload, text)
    return EXIT_OK if exact else EXIT_INCONSISTENT


# --------------------------------------------------------------------------- parser


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--prime", type=int, default=None, help="coefficient prime (default 32003 or the file's header)")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--trials", type=int, default=2, help="agreeing random trials required for a stable Gin")
    common.add_argument("--max-i", dest="max_i", type=int, default=None)
    common.add_argument("--max-degree", dest="max_degree", type=int, default=None)
    common.add_argument("--format", choices=("text", "structured"), default="text")

    ap = argparse.ArgumentParser(prog="ndsyz", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    s = sub.add_parser("analyze", parents=[common], help="full pipeline report")
    s.add_argument("file")
    s.add_argument("--cap", type=int, default=None, help="largest ell tried for the ND-index")
    s.add_argument("--direct", action="store_true", help="cross-check ND by random point sections")
    s.set_defaults(func=cmd_analyze)

    for name, fn, hlp in (("gin", cmd_gin, "generic initial ideal"), ("betti", cmd_betti, "Betti table"),
                          ("hilbert", cmd_hilbert, "dimension, degree and h-vector")):
        s = sub.add_parser(name, parents=[common], help=hlp)
        s.add_argument("file")
        s.set_defaults(func=fn)

    s = sub.add_parser("nd", parents=[common], help="certify or refute ND(ell)")
    s.add_argument("file")
    s.add_argument("--ell", type=int, required=True)
    s.add_argument("--method", choices=("gin", "direct", "both"), default="gin")
    s.set_defaults(func=cmd_nd)

    s = sub.add_parser("nd-index", parents=[common], help="largest ell with ND(ell)")
    s.add_argument("file")
    s.add_argument("--cap", type=int, default=10)
    s.set_defaults(func=cmd_nd_index)

    s = sub.add_parser("section", parents=[common], help="general linear sections")
    s.add_argument("file")
    s.add_argument("--count", type=int, default=1)
    s.add_argument("--points", action="store_true", help="cut down to a general point section")
    s.set_defaults(func=cmd_section)

    s = sub.add_parser("pei", parents=[common], help="partial elimination ideals")
    s.add_argument("file")
    s.set_defaults(func=cmd_pei, max_i_required=True)

    s = sub.add_parser("bezout", parents=[common], help="sample multisecant plane lengths")
    s.add_argument("file", nargs="?")
    s.add_argument("--p", type=int, required=True, help="plane dimension")
    s.add_argument("--d", type=int, required=True)
    s.add_argument("--samples", type=int, default=64)
    s.add_argument("--rnc", type=int, default=None, help="use the rational normal curve of this degree")
    s.set_defaults(func=cmd_bezout)

    s = sub.add_parser("construct", parents=[common], help="build example ideals")
    csub = s.add_subparsers(dest="kind", required=True)
    c = csub.add_parser("rnc", parents=[common])
    c.add_argument("--deg", type=int, required=True)
    c = csub.add_parser("toric", parents=[common])
    c.add_argument("--matrix", required=True)
    c = csub.add_parser("minors", parents=[common])
    c.add_argument("--t", type=int, required=True)
    c.add_argument("--blocks", required=True, help="comma-separated block sizes, e.g. 5,5")
    c = csub.add_parser("veronese", parents=[common])
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--d", type=int, required=True)
    c = csub.add_parser("project", parents=[common])
    c.add_argument("ideal")
    c.add_argument("--points", default=None, help="file with one point per line")
    c.add_argument("--random", type=int, default=0, help="project from this many random points")
    c.add_argument("--isomorphic", action="store_true")
    c = csub.add_parser("section", parents=[common])
    c.add_argument("ideal")
    c.add_argument("--count", type=int, default=1)
    s.set_defaults(func=cmd_construct)

    s = sub.add_parser("bs", parents=[common], help="Boij-Soderberg decomposition of a table file")
    s.add_argument("--decompose", required=True)
    s.set_defaults(func=cmd_bs)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    if args.command == "pei" and args.max_i is None:
        ap.error("pei needs --max-i")
    try:
        return args.func(args)
    except PolynomialSyntaxError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except IdealFileError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except bs.NotDecomposableError as exc:
        print(f"not decomposable: {exc}", file=sys.stderr)
        return EXIT_INCONSISTENT


if __name__ == "__main__":
    sys.exit(main())
