#!/usr/bin/env python3
"""Write b-file fixtures for the p(n,t) sequences when oeis.org is unreachable.

Each sequence is produced from its own definition, independently of the C++
library:

  A000005  d(n)                                   n = 1..400
  A049820  n - d(n)                               n = 1..400
  A008805  (floor(m/2)+1)(floor(m/2)+2)/2         m = 0..396
  A128508  #{s, a, b, c, d : a,d >= 1, b,c >= 0,
             a s + b (s+1) + c (s+2) + d (s+3) = n}  n = 1..400

Refresh with real data via `partition_gf oeis fetch --id <id>`.
"""
import argparse
import pathlib

from sympy import divisor_count

N_MAX = 400


def p3(n):
    total = 0
    for s in range(1, n + 1):
        if 2 * s + 3 > n:
            break
        for d in range(1, n // (s + 3) + 1):
            r_d = n - d * (s + 3)
            for c in range(0, r_d // (s + 2) + 1):
                r_c = r_d - c * (s + 2)
                for b in range(0, r_c // (s + 1) + 1):
                    r_b = r_c - b * (s + 1)
                    if r_b >= s and r_b % s == 0:
                        total += 1
    return total


SEQUENCES = {
    "A000005": [(n, int(divisor_count(n))) for n in range(1, N_MAX + 1)],
    "A049820": [(n, n - int(divisor_count(n))) for n in range(1, N_MAX + 1)],
    "A008805": [(m, (m // 2 + 1) * (m // 2 + 2) // 2) for m in range(0, N_MAX - 3)],
    "A128508": [(n, p3(n)) for n in range(1, N_MAX + 1)],
}


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--out", default=str(pathlib.Path(__file__).resolve().parent.parent / "data" / "oeis"))
    args = parser.parse_args()
    out = pathlib.Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    for seq_id, rows in SEQUENCES.items():
        lines = [f"# {seq_id}: generated offline from the sequence definition"]
        lines += [f"{i} {v}" for i, v in rows]
        (out / f"b{seq_id[1:]}.txt").write_text("\n".join(lines) + "\n")


if __name__ == "__main__":
    main()
