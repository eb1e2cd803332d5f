"""Ideal files and table files.

An ideal file holds ``key = value`` header lines (``prime``, ``nvars``,
``name``, ``expect.<field>``), ``#`` comments, and one generator per line in
the polynomial grammar.  A trailing comma on a generator line is ignored.
"""
from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from pathlib import Path

from .polyring import DEFAULT_PRIME, Ideal, PolynomialSyntaxError, RingContext, format_polynomial, parse_polynomial

_HEADER = re.compile(r"^\s*([A-Za-z_][\w.]*)\s*=\s*(.*?)\s*$")
_VAR = re.compile(r"x(\d+)")


class IdealFileError(ValueError):
    pass


class InhomogeneousGeneratorError(IdealFileError):
    pass


@dataclass
class IdealFile:
    ideal: Ideal
    name: str = ""
    expect: dict[str, str] = field(default_factory=dict)
    meta: dict[str, str] = field(default_factory=dict)


def parse_ideal_text(text: str, prime: int | None = None, nvars: int | None = None) -> IdealFile:
    meta: dict[str, str] = {}
    body: list[tuple[int, str]] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].rstrip()
        if not line.strip():
            continue
        m = _HEADER.match(line)
        if m:
            meta[m.group(1)] = m.group(2)
            continue
        body.append((lineno, line.strip().rstrip(",")))
    try:
        p = prime if prime is not None else int(meta.get("prime", DEFAULT_PRIME))
        if nvars is None and "nvars" in meta:
            nvars = int(meta["nvars"])
    except ValueError as exc:
        raise IdealFileError(f"bad header value: {exc}") from None
    if nvars is None:
        idx = [int(v) for _, line in body for v in _VAR.findall(line)]
        nvars = max(idx) + 1 if idx else 1
    try:
        ring = RingContext(nvars, p)
    except ValueError as exc:
        raise IdealFileError(str(exc)) from None
    gens = []
    for lineno, line in body:
        try:
            f = parse_polynomial(line, ring)
        except PolynomialSyntaxError as exc:
            raise PolynomialSyntaxError(str(exc).split(": ", 1)[-1], exc.column, lineno) from None
        if not f.is_homogeneous:
            degs = sorted({sum(e) for e in f.terms})
            raise InhomogeneousGeneratorError(f"line {lineno}: inhomogeneous generator (term degrees {degs})")
        gens.append(f)
    expect = {k.split(".", 1)[1]: v for k, v in meta.items() if k.startswith("expect.")}
    return IdealFile(Ideal(ring, gens), meta.get("name", ""), expect, meta)


def read_ideal(path: str | Path, prime: int | None = None) -> IdealFile:
    return parse_ideal_text(Path(path).read_text(), prime=prime)


def emit_ideal(I: Ideal, name: str = "", extra: dict[str, str] | None = None) -> str:
    lines = []
    if name:
        lines.append(f"name = {name}")
    lines.append(f"prime = {I.ring.prime}")
    lines.append(f"nvars = {I.ring.nvars}")
    for k, v in (extra or {}).items():
        lines.append(f"{k} = {v}")
    lines.extend(format_polynomial(g) for g in I.gens)
    return "\n".join(lines) + "\n"


def read_points(path: str | Path) -> list[list[int]]:
    """One point per line, coordinates separated by spaces or commas."""
    pts = []
    for raw in Path(path).read_text().splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            pts.append([int(x) for x in re.split(r"[,\s]+", line) if x])
    return pts


def read_matrix(path: str | Path) -> list[list[int]]:
    return read_points(path)


def read_table(path: str | Path):
    """A Betti table as JSON triples ``[{"i":..,"j":..,"beta":..}]`` or in the text layout."""
    from .betti import BettiTable

    text = Path(path).read_text()
    s = text.strip()
    if s.startswith("[") or s.startswith("{"):
        data = json.loads(s)
        if isinstance(data, dict):
            data = data.get("betti", data.get("triples", []))
        return BettiTable.from_triples(data)
    return BettiTable.parse_text(text)
