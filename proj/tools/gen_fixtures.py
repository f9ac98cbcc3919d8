#!/usr/bin/env python3
"""Regenerates data/fixtures. Deterministic; safe to re-run."""

import os
import random

HERE = os.path.dirname(os.path.abspath(__file__))
OUT = os.path.join(HERE, "..", "data", "fixtures")

VARIANTS = ["HVRPFD", "HVRPD", "FSMFD", "FSMF", "FSMD"]


def ffd_fits(demands, vehicles):
    """First-fit-decreasing into the vehicle multiset; success proves
    the instance is packable."""
    loads = [0.0] * len(vehicles)
    for q in sorted(demands, reverse=True):
        for i, cap in enumerate(vehicles):
            if loads[i] + q <= cap:
                loads[i] += q
                break
        else:
            return False
    return True


def write_instance(path, name, variant, coords, demands, types):
    n = len(coords) - 1
    with open(path, "w") as f:
        f.write(f"NAME {name}\n")
        f.write(f"VARIANT {variant}\n")
        f.write(f"DIMENSION {n + 1}\n")
        f.write(f"VEHICLE_TYPES {len(types)}\n")
        for cap, fixed, unit, count in types:
            if count > 0:
                f.write(f"{cap:g} {fixed:g} {unit:g} {count}\n")
            else:
                f.write(f"{cap:g} {fixed:g} {unit:g}\n")
        f.write("NODE_COORD_SECTION\n")
        for i, (x, y) in enumerate(coords):
            f.write(f"{i} {x:g} {y:g}\n")
        f.write("DEMAND_SECTION\n")
        for i, q in enumerate(demands):
            f.write(f"{i} {q:g}\n")
        f.write("EOF\n")


def gen_tiny(idx, rng):
    variant = VARIANTS[(idx - 1) % len(VARIANTS)]
    n = 4 + (idx - 1) // len(VARIANTS)  # 4..7
    while True:
        coords = [(rng.randint(0, 20), rng.randint(0, 20)) for _ in range(n + 1)]
        demands = [0] + [rng.randint(1, 8) for _ in range(n)]
        h = 2 if idx % 2 == 0 else 3
        caps = sorted(rng.sample([12, 15, 20, 25, 30, 40], h))
        types = []
        for t in range(h):
            fixed = rng.choice([5, 10, 20, 35, 50])
            unit = [1.0, 1.3, 1.6][t]
            count = rng.randint(1, 2) if t < h - 1 else 2
            types.append((caps[t], fixed, unit, count))
        vehicles = []
        for cap, _, _, count in types:
            vehicles += [cap] * count
        if ffd_fits(demands[1:], vehicles):
            break
    name = f"tiny_{idx:02d}"
    write_instance(os.path.join(OUT, name + ".txt"), name, variant, coords,
                   demands, types)


def gen_synth(name, variant, n, coord_hi, demand_hi, types, rng):
    while True:
        coords = [(rng.randint(0, coord_hi), rng.randint(0, coord_hi))
                  for _ in range(n + 1)]
        demands = [0] + [rng.randint(1, demand_hi) for _ in range(n)]
        vehicles = []
        for cap, _, _, count in types:
            vehicles += [cap] * (count if count > 0 else n)
        if ffd_fits(demands[1:], vehicles):
            break
    write_instance(os.path.join(OUT, name + ".txt"), name, variant, coords,
                   demands, types)


def main():
    os.makedirs(OUT, exist_ok=True)
    rng = random.Random(911)
    for idx in range(1, 21):
        gen_tiny(idx, rng)
    gen_synth("synth_50", "HVRPFD", 50, 70, 12,
              [(20, 20, 1.0, 4), (30, 35, 1.1, 2), (40, 50, 1.2, 4),
               (70, 120, 1.7, 4), (120, 225, 2.5, 2), (200, 400, 3.2, 1)],
              rng)
    gen_synth("synth_150", "FSMD", 150, 100, 10,
              [(50, 0, 1.0, 0), (100, 0, 1.5, 0), (150, 0, 1.9, 0)], rng)
    print(f"wrote fixtures to {OUT}")


if __name__ == "__main__":
    main()
