"""Run the acceptance criteria and print one line per criterion (optionally dump JSON)."""
import argparse
import json
import sys

from dslab.acceptance import run_all


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("numbers", nargs="*", type=int, help="criteria to run (default: all)")
    ap.add_argument("--json", help="write results to this file")
    args = ap.parse_args(argv)
    results = run_all(args.numbers or None)
    for r in results:
        print(r.line(), flush=True)
    if args.json:
        with open(args.json, "w") as fh:
            json.dump([r.as_dict() for r in results], fh, indent=2, sort_keys=True, default=str)
    print(f"{sum(r.ok for r in results)}/{len(results)} passed")
    return 0 if all(r.ok for r in results) else 1


if __name__ == "__main__":
    sys.exit(main())
