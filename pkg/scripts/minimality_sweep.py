"""For each pattern, test whether every one-letter deletion embeds in some buildable Xi."""
import argparse

from dslab.extremal import DEFAULT_GRID, MINIMALITY_NODE_BUDGET, minimality_check


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("patterns", nargs="*", default=["ababa", "abcacbc"])
    ap.add_argument("--max-nodes", type=int, default=MINIMALITY_NODE_BUDGET)
    args = ap.parse_args(argv)
    for p in args.patterns:
        r = minimality_check(p, DEFAULT_GRID, max_nodes=args.max_nodes)
        for row in r["rows"]:
            where = row["found_in"] or ("undecided" if row["undecided"] else "none")
            print(f"{p}  -{row['deleted']}  {row['sub']:<12} {where}")


if __name__ == "__main__":
    main()
