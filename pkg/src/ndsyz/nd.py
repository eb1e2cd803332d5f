"""Certificates for ND(ell): no general point section lies on a hypersurface of degree ell."""
from __future__ import annotations

from dataclasses import dataclass, field
from math import comb

import numpy as np

from .gin import GinResult, generic_initial_ideal
from .groebner import saturate_by_variable
from .hilbert import HilbertData, hilbert_data
from .monideal import MonomialIdeal
from .polyring import Ideal, format_monomial, format_polynomial, random_invertible_matrix

CERTIFIED = "certified"
REFUTED = "refuted"
UNSTABLE = "unstable"


@dataclass
class NDCertificate:
    ell: int
    verdict: str
    method: str
    e: int
    seed: int
    witness: list[str] = field(default_factory=list)
    gin: GinResult | None = field(default=None, repr=False)
    section_length: int | None = None

    @property
    def certified(self) -> bool:
        return self.verdict == CERTIFIED

    def as_dict(self) -> dict:
        return {
            "ell": self.ell,
            "verdict": self.verdict,
            "method": self.method,
            "e": self.e,
            "seed": self.seed,
            "witness": self.witness,
            "section_length": self.section_length,
        }


def _as_ideal(I) -> Ideal:
    return I.to_ideal() if isinstance(I, MonomialIdeal) else I


def leading_block_degree(T, e: int) -> int:
    """Degree of ``T`` in ``x0, ..., x_{e-1}``."""
    return sum(T[:e])


def nd_check(I, ell: int, seed: int = 0, trials: int = 2, gin: GinResult | None = None,
             hilbert: HilbertData | None = None) -> NDCertificate:
    """Gin criterion: ND(ell) iff every minimal Gin generator has ``x0..x_{e-1}``-degree > ell."""
    I = _as_ideal(I)
    H = hilbert or hilbert_data(I)
    e = H.codim
    if ell <= 0:
        return NDCertificate(ell, CERTIFIED, "gin_criterion", e, seed, [])
    g = gin or generic_initial_ideal(I, trials=trials, seed=seed)
    if not g.stable:
        return NDCertificate(ell, UNSTABLE, "gin_criterion", e, seed, g.gin.generator_strings(), g)
    bad = [T for T in g.gin.min_gens if leading_block_degree(T, e) < ell + 1]
    if bad:
        return NDCertificate(ell, REFUTED, "gin_criterion", e, seed, [format_monomial(T) for T in bad], g)
    return NDCertificate(ell, CERTIFIED, "gin_criterion", e, seed, g.gin.generator_strings(), g)


def point_section(I: Ideal, e: int, rng: np.random.Generator) -> Ideal:
    """Ideal of ``X`` cut by a random ``e``-plane, in ``e + 1`` variables and saturated."""
    g = random_invertible_matrix(I.ring.nvars, I.ring.prime, rng)
    sub = I.transform(g).restrict(e + 1)
    if not sub.gens:
        return sub
    return Ideal(sub.ring, saturate_by_variable(sub.gens, e, sub.ring))


def nd_check_direct(I, ell: int, seed: int = 0, max_resamples: int = 5,
                    hilbert: HilbertData | None = None) -> NDCertificate:
    """Random point section ``Gamma``; ND(ell) iff ``(I_Gamma)_ell = 0``.

    The section is accepted only when its length equals ``deg X`` (a general
    section); otherwise it is resampled.
    """
    I = _as_ideal(I)
    H = hilbert or hilbert_data(I)
    e = H.codim
    rng = np.random.default_rng(seed)
    for _ in range(max_resamples):
        S = point_section(I, e, rng)
        SH = hilbert_data(S) if S.gens else None
        length = SH.degree if SH is not None and SH.krull_dim == 1 else None
        if S.gens and length != H.degree:
            continue
        if ell <= 0 or not S.gens:
            return NDCertificate(ell, CERTIFIED, "direct_section", e, seed, [], section_length=H.degree if not S.gens else length)
        dim = comb(ell + e, e) - SH.hilbert_function(ell)
        if dim:
            forms = [format_polynomial(f) for f in S.gens if f.degree <= ell]
            return NDCertificate(ell, REFUTED, "direct_section", e, seed, forms or [f"dim (I_section)_{ell} = {dim}"],
                                 section_length=length)
        return NDCertificate(ell, CERTIFIED, "direct_section", e, seed, [], section_length=length)
    return NDCertificate(ell, UNSTABLE, "direct_section", e, seed, ["no section of the expected length"])


def nd_index(I, cap: int, seed: int = 0, trials: int = 2, gin: GinResult | None = None,
             hilbert: HilbertData | None = None) -> int:
    """Largest ``ell <= cap`` with ND(ell); 0 means ND(1) fails.  Values match ``nd_check`` at every ``ell``."""
    if cap < 0:
        raise ValueError("cap must be >= 0")
    I = _as_ideal(I)
    H = hilbert or hilbert_data(I)
    g = gin or generic_initial_ideal(I, trials=trials, seed=seed)
    if not g.stable:
        raise RuntimeError("unstable Gin")
    e = H.codim
    if not g.gin.min_gens:
        return cap
    least = min(leading_block_degree(T, e) for T in g.gin.min_gens)
    return max(0, min(cap, least - 1))


@dataclass
class DegreeBoundReport:
    ell: int
    e: int
    degree: int
    bound: int
    holds: bool
    minimal: bool

    def as_dict(self) -> dict:
        return dict(ell=self.ell, e=self.e, degree=self.degree, bound=self.bound, holds=self.holds, minimal=self.minimal)


def degree_bound_check(I, ell: int, hilbert: HilbertData | None = None) -> DegreeBoundReport:
    """``deg X >= C(e+ell, ell)`` under ND(ell); equality is minimal degree of the ell-th kind."""
    H = hilbert or hilbert_data(_as_ideal(I))
    bound = comb(H.codim + ell, ell)
    return DegreeBoundReport(ell, H.codim, H.degree, bound, H.degree >= bound, H.degree == bound)
