"""Betti rows of (x0..x_{e-1})^(ell+1) against the closed form, plus the J0 distraction loop."""
import argparse
from dataclasses import dataclass
from math import comb

from ndsyz.betti import betti_table, is_acm_dlinear, rigidity_check, thmA_verdict
from ndsyz.gin import generic_initial_ideal
from ndsyz.hilbert import hilbert_data
from ndsyz.monideal import distraction, ek_betti, power_ideal, power_ideal_betti


@dataclass
class Config:
    max_e: int = 6
    max_ell: int = 4
    loop: tuple = ((2, 1), (2, 2), (3, 2))
    seed: int = 1


def closed_form_rows(cfg: Config) -> None:
    for e in range(1, cfg.max_e + 1):
        for ell in range(1, cfg.max_ell + 1):
            B = ek_betti(power_ideal(e, ell))
            row = [B.entries.get((i, ell), 0) for i in range(1, e + 1)]
            ok = row == [power_ideal_betti(e, ell, i) for i in range(1, e + 1)]
            print(f"e={e} ell={ell}: {row} {'ok' if ok else 'MISMATCH'}")


def equality_loop(cfg: Config) -> None:
    for e, ell in cfg.loop:
        D = distraction(power_ideal(e, ell, nvars=e + 2), seed=cfg.seed)
        g = generic_initial_ideal(D, seed=cfg.seed)
        H = hilbert_data(D)
        B = betti_table(D, gin=g)
        A = thmA_verdict(B, e, ell, gin=g, degree=H.degree)
        R = rigidity_check(D, ell + 1, gin=g, betti=B)
        print(f"(e, ell) = ({e}, {ell}): equality at {A.equality_indices}, "
              f"ACM linear {is_acm_dlinear(B, e, ell + 1)}, degree {H.degree} vs {comb(e + ell, ell)}, "
              f"rigidity ok {R.ok and R.conclusion_asserted}")


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-e", type=int, default=6)
    ap.add_argument("--max-ell", type=int, default=4)
    a = ap.parse_args()
    cfg = Config(max_e=a.max_e, max_ell=a.max_ell)
    closed_form_rows(cfg)
    equality_loop(cfg)
