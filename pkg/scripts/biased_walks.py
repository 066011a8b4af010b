#!/usr/bin/env python3
"""Steering the walk: biased coin vs biased ratchet vs symmetric.

Runs the symmetric ratchet walk, a biased-coin walk (every toss
rebalanced to 0.7/0.3), and a biased-ratchet walk (k1 = -1.7,
k2 = +1.0), and tabulates the mean momentum per step. Writes
out/biased_walks.csv.
"""

import csv
from pathlib import Path

from momentum_walk import (
    WalkConfig,
    moments,
    run_biased_coin_walk,
    run_biased_ratchet_walk,
    run_walk,
)

STEPS = 12
SEED = 42
OUT = Path("out")


def main():
    OUT.mkdir(exist_ok=True)
    config = WalkConfig(steps=STEPS, shift_mode="ratchet", seed=SEED)
    symmetric = moments(run_walk(config)).mean
    biased_coin = moments(run_biased_coin_walk(config)).mean
    biased_ratchet = moments(run_biased_ratchet_walk(config)).mean

    with open(OUT / "biased_walks.csv", "w", newline="") as handle:
        writer = csv.writer(handle)
        writer.writerow(["step", "mean_p_symmetric", "mean_p_biased_coin",
                         "mean_p_biased_ratchet"])
        for j in range(STEPS + 1):
            writer.writerow([j, f"{symmetric[j]:.12g}",
                             f"{biased_coin[j]:.12g}",
                             f"{biased_ratchet[j]:.12g}"])
            print(f"j={j:2d}  sym={symmetric[j]:+8.4f}  "
                  f"BC={biased_coin[j]:+8.4f}  BR={biased_ratchet[j]:+8.4f}")
    print(f"wrote {OUT / 'biased_walks.csv'}")


if __name__ == "__main__":
    main()
