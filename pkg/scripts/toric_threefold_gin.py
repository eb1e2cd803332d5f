"""Gin, ND-index, Betti table and h-vector check for the toric threefold in P^5."""
import argparse
from dataclasses import dataclass
from pathlib import Path

from ndsyz.cli import analyze
from ndsyz.io import read_ideal

DATA = Path(__file__).resolve().parent.parent / "data"


@dataclass
class Config:
    seed: int = 0
    trials: int = 2
    path: Path = DATA / "toric_threefold.ideal"


def run(cfg: Config) -> int:
    f = read_ideal(cfg.path)
    rep = analyze(f.ideal, seed=cfg.seed, trials=cfg.trials, direct=True, expect=f.expect)
    d = rep.data
    print("Gin:", ", ".join(d["gin"]["gin"]))
    print(f"degree {d['hilbert']['degree']}, h = {d['hilbert']['h_vector']}, reg {d['regularity']}")
    print(f"ND-index {d['nd_index']}, pd(R/Gin) = {d['gin_projective_dimension']}")
    print(d["betti_text"])
    print("h-vector check:", d["verdicts"]["h_vector"]["ok"])
    for k, v in d.get("expectations", {}).items():
        print(f"  expect {k}: {'ok' if v['ok'] else 'MISMATCH'}")
    return rep.exit_code


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--trials", type=int, default=2)
    a = ap.parse_args()
    raise SystemExit(run(Config(seed=a.seed, trials=a.trials)))
