"""Project the rational normal sextic from three random points and tabulate syzygies.

Prints the Betti tables of the image curve in P^3 and of a general
hyperplane section, the ND verdicts by both methods, and the degree bound.
"""
import argparse
from dataclasses import dataclass

import numpy as np

from ndsyz.betti import betti_table
from ndsyz.constructions import ProjectionError, general_hyperplane_section, project_from_points, random_points, rational_normal_curve
from ndsyz.nd import degree_bound_check, nd_check, nd_check_direct


@dataclass
class Config:
    seed: int = 0
    max_reseeds: int = 20


def projected_curve(cfg: Config):
    I = rational_normal_curve(6)
    for k in range(cfg.max_reseeds):
        rng = np.random.default_rng(cfg.seed + k)
        try:
            return project_from_points(I, random_points(7, 3, rng), seed=cfg.seed + k, isomorphic=True), k
        except ProjectionError:
            continue
    raise RuntimeError("every sampled center met the secant variety")


def run(cfg: Config) -> None:
    C, reseeds = projected_curve(cfg)
    print(f"reseeds: {reseeds}")
    print("curve:")
    print(betti_table(C, seed=cfg.seed).to_text())
    S = general_hyperplane_section(C, 1, seed=cfg.seed)
    print("hyperplane section:")
    print(betti_table(S, seed=cfg.seed).to_text())
    for ell in (2, 3):
        print(f"ND({ell}): gin {nd_check(C, ell, seed=cfg.seed).verdict}, "
              f"direct {nd_check_direct(C, ell, seed=cfg.seed).verdict}")
    print(degree_bound_check(C, 2).as_dict())


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--seed", type=int, default=0)
    run(Config(seed=ap.parse_args().seed))
