"""Lengths of plane sections of rational normal curves versus the N_{2,p} bound."""
import argparse
from dataclasses import dataclass

from ndsyz.betti import betti_table, property_ndp
from ndsyz.constructions import rnc_variety
from ndsyz.pei import multisecant_length_sampler


@dataclass
class Config:
    samples: int = 64
    seed: int = 0
    cases: tuple = ((3, 1), (4, 1), (4, 2), (5, 2), (5, 3))


def run(cfg: Config) -> None:
    for deg, pdim in cfg.cases:
        X = rnc_variety(deg)
        verified = property_ndp(betti_table(X.ideal), 2, pdim).holds
        st = multisecant_length_sampler(X.ideal, pdim, 2, samples=cfg.samples, seed=cfg.seed, variety=X)
        print(f"RNC{deg}, {pdim}-planes: N_(2,{pdim}) {verified}, {st.as_dict()['histogram']}, bound {st.bound}")


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--samples", type=int, default=64)
    ap.add_argument("--seed", type=int, default=0)
    a = ap.parse_args()
    run(Config(samples=a.samples, seed=a.seed))
