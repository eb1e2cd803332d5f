"""Decompose a Betti table file into pure tables."""
import argparse
from pathlib import Path

from ndsyz.boij_soderberg import chain_ok, decompose, from_betti, recompose
from ndsyz.io import read_table

DATA = Path(__file__).resolve().parent.parent / "data"

if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("table", nargs="?", default=str(DATA / "bs_table.txt"))
    T = from_betti(read_table(ap.parse_args().table))
    parts = decompose(T)
    print(" + ".join(f"{s.coefficient} * B{s.degrees}" for s in parts))
    print("exact:", recompose(parts) == T, "chain:", chain_ok(parts))
