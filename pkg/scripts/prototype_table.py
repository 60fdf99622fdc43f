"""Print the prototype table: class, encoding, generated sequences, printed anchor."""
import argparse

from dslab.sequences import to_text
from dslab.synth import prototypes


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__)
    ap.parse_args(argv)
    print(f"{'cls':>3}  {'encoding':<14} {'printed':<13} match  sequences")
    for p in prototypes():
        seqs = ", ".join(to_text(s) for s in p.sequences)
        print(f"{p.cls:>3}  {str(p.encoding):<14} {p.printed or '-':<13} {str(p.printed_match):<6} {seqs}")


if __name__ == "__main__":
    main()
