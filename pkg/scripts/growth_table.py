"""Leaf counts, lengths and length/alphabet ratios of Xi(i, j, c) from closed forms."""
import argparse

from dslab.growth import growth_table


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-i", type=int, default=4)
    ap.add_argument("--max-j", type=int, default=3)
    ap.add_argument("--c", type=int, default=1)
    args = ap.parse_args(argv)
    pts = [(i, j, args.c) for i in range(1, args.max_i + 1) for j in range(1, args.max_j + 1)]
    for r in growth_table(pts):
        d = r.as_dict()
        print("  ".join(f"{k}={v}" for k, v in d.items()))


if __name__ == "__main__":
    main()
