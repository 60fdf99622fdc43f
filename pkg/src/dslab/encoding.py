"""Compact encodings: strings over binder/guard/trap/trapped/padding symbols.

ASCII syntax (Unicode suits are accepted on input)::

    h = binder  (heart)      d = guard    (diamond)
    c = trap    (club)       s = trapped  (spade)
    * = padding (star)       (ds), (dsc)  parenthesized groups

An element is a single symbol or one parenthesized group; groups never nest.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass, field
from typing import Optional

SINGLE = ("h", "d", "c", "s", "*")
GROUPS = ("ds", "dsc")
ELEMENTS = SINGLE + GROUPS

_UNICODE = {"♥": "h", "♡": "h", "♦": "d", "♢": "d", "◇": "d", "♣": "c", "♧": "c",
            "♠": "s", "♤": "s", "★": "*", "☆": "*"}
_PRETTY = {"h": "♥", "d": "♦", "c": "♣", "s": "♠", "*": "★"}


class EncodingError(ValueError):
    pass


@dataclass(frozen=True)
class CompactEncoding:
    elements: tuple

    def __str__(self) -> str:
        return "".join(f"({e})" if len(e) > 1 else e for e in self.elements)

    def pretty(self) -> str:
        return "".join(
            "(" + "".join(_PRETTY[ch] for ch in e) + ")" if len(e) > 1 else _PRETTY[e]
            for e in self.elements
        )

    def __len__(self) -> int:
        return len(self.elements)

    def symbols(self) -> list:
        return [ch for e in self.elements for ch in e]

    def indices(self, ch: str) -> list:
        """Indices of the elements that contain symbol ``ch``."""
        return [j for j, e in enumerate(self.elements) if ch in e]

    @property
    def stars(self) -> list:
        return self.indices("*")

    @property
    def binder(self) -> Optional[int]:
        h = self.indices("h")
        return h[0] if len(h) == 1 else None

    @property
    def group(self) -> Optional[int]:
        g = [j for j, e in enumerate(self.elements) if len(e) > 1]
        return g[0] if g else None


def parse_encoding(text: str) -> CompactEncoding:
    raw = "".join(_UNICODE.get(ch, ch) for ch in text if not ch.isspace())
    if not raw:
        raise EncodingError("empty encoding")
    els: list = []
    k = 0
    while k < len(raw):
        ch = raw[k]
        if ch == "(":
            close = raw.find(")", k + 1)
            inner = raw[k + 1:close] if close != -1 else raw[k + 1:]
            if close == -1 or "(" in inner:
                raise EncodingError(f"unbalanced or nested parentheses in {text!r}")
            if inner not in GROUPS:
                raise EncodingError(f"group ({inner}) must be (ds) or (dsc)")
            els.append(inner)
            k = close + 1
        elif ch == ")":
            raise EncodingError(f"unbalanced parentheses in {text!r}")
        elif ch in SINGLE:
            els.append(ch)
            k += 1
        else:
            raise EncodingError(f"unknown character {ch!r} in {text!r}")
    return CompactEncoding(tuple(els))


def as_encoding(e) -> CompactEncoding:
    return e if isinstance(e, CompactEncoding) else parse_encoding(e)


# Category table, written over the ASCII print form.  ``\**`` is zero or more
# padding stars.
CLASS_PATTERNS = {
    1: r"hcsc",
    2: r"hs\(dsc\)",
    3: r"hs\(ds\)c",
    4: r"hsdsc",
    5: r"hdssc",
    6: r"dhssc",
    7: r"\*cs\**hc",
    8: r"\*s\**h\(dsc\)",
    9: r"\*s\**h\(ds\)c",
    10: r"\*s\**hdsc",
    11: r"\*ds\**s\**hc",
    12: r"d\*s\**s\**hc",
    13: r"\*ds\**hsc",
    14: r"d\*s\**hsc",
    15: r"\*s\**\(ds\)\**hc",
    16: r"\*s\**d\**s\**hc",
    17: r"\*s\**d\**hsc",
}
_COMPILED = {k: re.compile(v) for k, v in CLASS_PATTERNS.items()}
TWO_TRAP_CLASSES = (1, 7)


def matching_classes(e) -> list:
    s = str(as_encoding(e))
    return [k for k, rx in _COMPILED.items() if rx.fullmatch(s)]


def is_legal_classes(e) -> Optional[int]:
    """The category of ``e`` in the class table, or None."""
    hits = matching_classes(e)
    return hits[0] if hits else None


@dataclass
class LegalityReport:
    input: str
    legal: bool
    violations: list = field(default_factory=list)
    cls: Optional[int] = None

    def as_dict(self) -> dict:
        return {"input": self.input, "legal": self.legal,
                "violations": list(self.violations), "class": self.cls}


def rule_violations(e: CompactEncoding) -> list:
    """Violated general restrictions (counts plus rules i..vi); empty means legal."""
    sym = e.symbols()
    els = e.elements
    out = []
    for ch, want in (("h", 1), ("d", 1), ("c", 1), ("s", 2)):
        if sym.count(ch) != want:
            out.append(f"count:{ch}")
    if sum(len(x) > 1 for x in els) > 1:
        out.append("count:group")
    if out:
        return out
    if sym[-1] != "c":
        out.append("i")
    di = sym.index("d")
    if "s" not in sym[di + 1:]:
        out.append("ii")
    if "*" in sym[sym.index("h") + 1:]:
        out.append("iii")
    binders = [j for j, x in enumerate(els) if x in ("*", "h")]
    spades = e.indices("s")
    if binders[0] > spades[0]:
        out.append("iv")
    if "ds" in els:
        g = els.index("ds")
        if any(x == "s" for x in els[g + 1:]):
            out.append("v")
    if len(binders) >= 2:
        a, b = binders[0], binders[1]
        if not any("s" in x for x in els[a + 1:b]):
            out.append("vi")
    return out


def is_legal_rules(e) -> LegalityReport:
    e = as_encoding(e)
    special = [k for k in matching_classes(e) if k in TWO_TRAP_CLASSES]
    if special:
        return LegalityReport(str(e), True, [], special[0])
    v = rule_violations(e)
    return LegalityReport(str(e), not v, v, is_legal_classes(e) if not v else None)


def enumerate_legal(max_stars: int) -> list:
    """Every legal encoding with at most ``max_stars`` padding stars.

    Non-star element counts are fixed (one binder, guard and trap, two
    trapped, at most one group, or the two-trap forms), so candidates are the
    distinct orderings of those multisets plus stars.
    """
    if max_stars < 0:
        raise ValueError("max_stars must be >= 0")
    bases = [
        ["h", "d", "c", "s", "s"],
        ["h", "ds", "c", "s"],
        ["h", "dsc", "s"],
        ["h", "c", "s", "c"],
    ]
    found = set()
    for base in bases:
        for k in range(max_stars + 1):
            for perm in set(itertools.permutations(base + ["*"] * k)):
                e = CompactEncoding(perm)
                if is_legal_rules(e).legal:
                    found.add(e)
    return sorted(found, key=lambda x: (len(x), str(x)))


def all_element_strings(max_len: int):
    """Every element string up to ``max_len`` elements that could be legal
    under either definition.

    Prefixes already holding a second binder, guard or group, a third trap or
    a third trapped symbol are dropped: no class pattern and no rule set
    accepts such strings, so pruning them cannot hide a disagreement.
    """
    limits = {"h": 1, "d": 1, "c": 2, "s": 2, "g": 1}

    def rec(prefix: list, counts: dict):
        yield tuple(prefix)
        if len(prefix) == max_len:
            return
        for el in ELEMENTS:
            nc = dict(counts)
            for ch in el:
                if ch != "*":
                    nc[ch] = nc.get(ch, 0) + 1
            if len(el) > 1:
                nc["g"] = nc.get("g", 0) + 1
            if any(nc.get(key, 0) > lim for key, lim in limits.items()):
                continue
            prefix.append(el)
            yield from rec(prefix, nc)
            prefix.pop()

    for t in rec([], {}):
        if t:
            yield CompactEncoding(t)


def agreement(max_len: int = 8) -> dict:
    """Compare the rule checker with the class table on every candidate string."""
    checked = 0
    mismatches = []
    overlaps = []
    for e in all_element_strings(max_len):
        checked += 1
        by_rules = is_legal_rules(e).legal
        hits = matching_classes(e)
        if len(hits) > 1:
            overlaps.append((str(e), hits))
        if by_rules != bool(hits):
            mismatches.append(str(e))
    return {"checked": checked, "mismatches": mismatches, "overlaps": overlaps}
