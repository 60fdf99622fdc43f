"""Finite sequences over integer symbols and isomorphic-subsequence matching.

A sequence is a tuple of nonnegative ints.  Letters ``a..z`` are only an I/O
convenience: ``"abcacbc"`` and ``"0 1 2 0 2 1 2"`` denote the same sequence.
"""

from __future__ import annotations

import bisect
import itertools
import string
from collections import Counter, OrderedDict
from typing import Iterable, Union

Seq = tuple[int, ...]
SeqLike = Union[str, Iterable[int]]

ORACLE_MAX_LEN = 14
ORACLE_MAX_SYMBOLS = 5


def as_seq(obj: SeqLike) -> Seq:
    """Coerce letters, whitespace-separated ids, or an int iterable to a tuple."""
    if isinstance(obj, str):
        s = obj.strip()
        if not s:
            return ()
        if any(ch.isspace() for ch in s) or s.isdigit():
            return tuple(int(tok) for tok in s.split())
        if all(ch in string.ascii_lowercase for ch in s):
            return tuple(ord(ch) - ord("a") for ch in s)
        raise ValueError(f"cannot read sequence from {obj!r}")
    return tuple(int(x) for x in obj)


def to_text(s: SeqLike) -> str:
    """Letter form when the symbols fit in a..z, token form otherwise."""
    s = as_seq(s)
    if all(0 <= x < 26 for x in s):
        return "".join(chr(ord("a") + x) for x in s)
    return " ".join(map(str, s))


def normalize(s: SeqLike) -> Seq:
    """Rename symbols to 0, 1, 2, ... in order of first occurrence."""
    names: dict[int, int] = {}
    return tuple(names.setdefault(x, len(names)) for x in as_seq(s))


def alphabet_size(s: SeqLike) -> int:
    return len(set(as_seq(s)))


def is_c_regular(s: SeqLike, c: int) -> bool:
    """True iff any two equal symbols are at least ``c`` positions apart."""
    if c < 1:
        raise ValueError("c must be >= 1")
    last: dict[int, int] = {}
    for i, x in enumerate(as_seq(s)):
        if x in last and i - last[x] < c:
            return False
        last[x] = i
    return True


def reverse(s: SeqLike) -> Seq:
    return tuple(reversed(as_seq(s)))


def is_palindrome(s: SeqLike) -> bool:
    """Isomorphic to its own reversal."""
    return normalize(s) == normalize(reverse(s))


def contains_plain(sub: SeqLike, text: SeqLike) -> bool:
    """Plain subsequence test, no renaming."""
    it = iter(as_seq(text))
    return all(any(x == y for y in it) for x in as_seq(sub))


def contains_oracle(pattern: SeqLike, text: SeqLike) -> bool:
    """Exhaustive ground truth: try every injective renaming of the pattern."""
    p, t = normalize(pattern), as_seq(text)
    if len(t) > ORACLE_MAX_LEN or alphabet_size(t) > ORACLE_MAX_SYMBOLS:
        raise ValueError(
            f"oracle cap exceeded (|text| <= {ORACLE_MAX_LEN}, "
            f"||text|| <= {ORACLE_MAX_SYMBOLS})"
        )
    k = alphabet_size(p)
    symbols = sorted(set(t))
    for image in itertools.permutations(symbols, k):
        if contains_plain(tuple(image[x] for x in p), t):
            return True
    return False


class TextIndex:
    """Occurrence lists of a text, reusable across many containment queries."""

    def __init__(self, text: SeqLike):
        self.text = as_seq(text)
        occ: dict[int, list[int]] = {}
        for i, x in enumerate(self.text):
            occ.setdefault(x, []).append(i)
        self.occ = occ
        # rank[i]: index of position i inside occ[text[i]]
        self.rank = [0] * len(self.text)
        for positions in occ.values():
            for r, i in enumerate(positions):
                self.rank[i] = r
        self.max_mult = max((len(v) for v in occ.values()), default=0)

    def __len__(self) -> int:
        return len(self.text)


class SearchBudgetExceeded(RuntimeError):
    """Raised when a Matcher with ``max_nodes`` runs out of budget."""


class Matcher:
    """Backtracking search for an occurrence of ``pattern`` up to renaming.

    Symbols are bound left to right.  A bound pattern symbol always takes the
    next occurrence of its image (greedy is complete once the binding is
    fixed); a fresh pattern symbol branches over every unbound text symbol at
    its first occurrence after the cursor.  Candidates are pruned by remaining
    occurrence counts and by the latest cursor position that still leaves room
    for the remaining occurrences of already bound symbols.
    """

    def __init__(self, pattern: SeqLike, text: Union[SeqLike, TextIndex], memo_size: int = 1 << 16,
                 max_nodes: Union[int, None] = None):
        self.p = normalize(pattern)
        self.max_nodes = max_nodes
        self.idx = text if isinstance(text, TextIndex) else TextIndex(text)
        self.memo_size = memo_size
        self._failed: OrderedDict = OrderedDict()
        m = len(self.p)
        k = alphabet_size(self.p)
        # need[i][x] = occurrences of pattern symbol x in p[i:]
        need = [[0] * k for _ in range(m + 1)]
        for i in range(m - 1, -1, -1):
            need[i] = list(need[i + 1])
            need[i][self.p[i]] += 1
        self.need = need
        self.total = Counter(self.p)
        self.nodes = 0

    def _remember(self, key) -> None:
        self._failed[key] = None
        if len(self._failed) > self.memo_size:
            self._failed.popitem(last=False)

    def find(self) -> Union[list[int], None]:
        """Matched text positions for each pattern item, or None."""
        p, idx = self.p, self.idx
        if not p:
            return []
        if len(p) > len(idx.text):
            return None
        # multiplicity profile must be dominated
        text_counts = sorted((len(v) for v in idx.occ.values()), reverse=True)
        pat_counts = sorted(self.total.values(), reverse=True)
        if len(pat_counts) > len(text_counts):
            return None
        if any(pc > tc for pc, tc in zip(pat_counts, text_counts)):
            return None
        binding: dict[int, int] = {}
        used: set[int] = set()
        out: list[int] = []
        if self._search(0, 0, binding, used, out):
            return out
        return None

    def _projection_fits(self, pi: int, tpos: int, binding: dict) -> bool:
        """Greedy check that p[pi:] still fits after tpos, with bound items
        pinned to their images and every unbound item taking any one slot."""
        occ, n = self.idx.occ, len(self.idx.text)
        pos = tpos
        for x in self.p[pi:]:
            s = binding.get(x)
            if s is None:
                pos += 1
                if pos > n:
                    return False
                continue
            positions = occ[s]
            r = bisect.bisect_left(positions, pos)
            if r == len(positions):
                return False
            pos = positions[r] + 1
        return True

    def _search(self, pi: int, tpos: int, binding: dict, used: set, out: list) -> bool:
        p, idx, need = self.p, self.idx, self.need
        m = len(p)
        occ, text, rank = idx.occ, idx.text, idx.rank
        start_len = len(out)
        # deterministic run over already bound symbols
        while pi < m and p[pi] in binding:
            x = p[pi]
            positions = occ[binding[x]]
            r = bisect.bisect_left(positions, tpos)
            if len(positions) - r < need[pi][x]:
                del out[start_len:]
                return False
            q = positions[r]
            out.append(q)
            tpos = q + 1
            pi += 1
        if pi == m:
            return True
        self.nodes += 1
        if self.max_nodes is not None and self.nodes > self.max_nodes:
            raise SearchBudgetExceeded(f"more than {self.max_nodes} search nodes")
        key = (pi, tpos, tuple(sorted(binding.items())))
        if key in self._failed or not self._projection_fits(pi, tpos, binding):
            del out[start_len:]
            return False
        x = p[pi]
        want = self.total[x]
        # latest admissible position for the fresh symbol
        limit = len(text) - (m - pi)
        for y, s in binding.items():
            r_y = need[pi][y]
            if r_y:
                positions = occ[s]
                limit = min(limit, positions[len(positions) - r_y] - 1)
        for q in range(tpos, limit + 1):
            s = text[q]
            if s in used:
                continue
            r = rank[q]
            if r and occ[s][r - 1] >= tpos:
                continue  # not the first occurrence after the cursor
            if len(occ[s]) - r < want:
                continue
            binding[x] = s
            used.add(s)
            out.append(q)
            if self._search(pi + 1, q + 1, binding, used, out):
                return True
            out.pop()
            del binding[x]
            used.discard(s)
        self._remember(key)
        del out[start_len:]
        return False


def embedding(pattern: SeqLike, text: Union[SeqLike, TextIndex]) -> Union[list[int], None]:
    """Text positions of a witness occurrence of ``pattern`` (up to renaming)."""
    return Matcher(pattern, text).find()


def contains(pattern: SeqLike, text: Union[SeqLike, TextIndex]) -> bool:
    """The isomorphic-subsequence relation: is ``pattern`` a renamed subsequence of ``text``?"""
    return embedding(pattern, text) is not None
