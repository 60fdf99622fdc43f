"""Extremal checks: brute-force Ex, avoidance and minimality sweeps over Xi
transcripts, Klazar's digraph criterion, and the Klazar-Valtr grammar.
"""

from __future__ import annotations

import functools
import itertools
import logging
from dataclasses import dataclass
from typing import Optional

from .compression import TooLarge, build_system, max_leaves_default
from .sequences import (Matcher, SearchBudgetExceeded, Seq, TextIndex, alphabet_size, as_seq, contains, contains_plain, embedding,
                        is_c_regular, normalize, reverse, to_text)

log = logging.getLogger(__name__)

DEFAULT_GRID = [(i, j, c) for i in (1, 2) for j in (1, 2) for c in (1, 2)] + [(3, 1, 1)]
ENLARGED_GRID = DEFAULT_GRID + [(i, 3, c) for i in (1, 2) for c in (1, 2)]


# --------------------------------------------------------------- Ex(sigma, n)

@dataclass
class ExResult:
    kind: str  # "exact" | "at_least"
    value: int
    witness: Seq = ()

    def as_dict(self) -> dict:
        return {"kind": self.kind, "value": self.value, "witness": to_text(self.witness)}


def ex_brute(pattern, n: int, cap: int = 20) -> ExResult:
    """Longest ||pattern||-regular pattern-free sequence on exactly n symbols.

    Depth-first over canonical sequences (symbol k first appears after
    symbols 0..k-1), pruning on regularity and avoidance at every step.
    """
    p = normalize(pattern)
    r = alphabet_size(p)
    if n < 1 or r < 1:
        raise ValueError("need n >= 1 and a nonempty pattern")
    if cap > 30:
        raise ValueError("cap must be <= 30")
    best: list = [()]
    found = [False]

    def dfs(seq: list, used: int) -> bool:
        if used == n and len(seq) > len(best[0]):
            best[0] = tuple(seq)
            found[0] = True
            if len(seq) >= cap:
                return True
        if len(seq) >= cap:
            return False
        recent = set(seq[-(r - 1):]) if r > 1 else set()
        for x in range(min(used + 1, n)):
            if x in recent:
                continue
            seq.append(x)
            if not contains(p, seq) and dfs(seq, max(used, x + 1)):
                return True
            seq.pop()
        return False

    hit_cap = dfs([], 0)
    if not found[0]:
        return ExResult("exact", 0, ())
    return ExResult("at_least" if hit_cap else "exact", len(best[0]), best[0])


def validate_witness(pattern, n: int, res: ExResult) -> bool:
    w = res.witness
    if res.value == 0:
        return w == ()
    return (len(w) == res.value and alphabet_size(w) == n
            and is_c_regular(w, alphabet_size(pattern)) and not contains(pattern, w))


# ------------------------------------------------------------ grid transcripts

@functools.lru_cache(maxsize=None)
def grid_text(i: int, j: int, c: int, max_leaves: Optional[int] = None) -> Optional[TextIndex]:
    """Indexed transcript for a grid point, or None when it is too large."""
    try:
        sys_ = build_system(i, j, c, max_leaves=max_leaves or max_leaves_default())
    except TooLarge:
        log.info("grid point (%d,%d,%d) too large, skipped", i, j, c)
        return None
    return TextIndex(sys_.transcript.sequence)


def avoidance_check(patterns, grid=DEFAULT_GRID) -> dict:
    """Every pattern must be absent from every buildable grid transcript."""
    rows, skipped, violations = [], [], []
    for pt in grid:
        idx = grid_text(*pt)
        if idx is None:
            skipped.append(pt)
            continue
        for pat in patterns:
            occ = embedding(pat, idx)
            rows.append({"point": pt, "pattern": to_text(pat), "contained": occ is not None})
            if occ is not None:
                violations.append({"point": pt, "pattern": to_text(pat), "positions": occ})
    return {"rows": rows, "skipped": skipped, "violations": violations, "ok": not violations}


def deletions(pattern) -> list:
    """Distinct (up to renaming) sequences obtained by deleting one item."""
    p = as_seq(pattern)
    out: dict = {}
    for k in range(len(p)):
        out.setdefault(normalize(p[:k] + p[k + 1:]), k)
    return [(k, s) for s, k in out.items()]


MINIMALITY_NODE_BUDGET = 300_000


def find_in_grid(sub, grid, max_nodes: Optional[int] = MINIMALITY_NODE_BUDGET) -> tuple:
    """First grid point whose transcript contains ``sub``, plus the points
    where the search budget ran out before deciding."""
    undecided = []
    for pt in grid:
        idx = grid_text(*pt)
        if idx is None:
            continue
        try:
            if Matcher(sub, idx, max_nodes=max_nodes).find() is not None:
                return pt, undecided
        except SearchBudgetExceeded:
            undecided.append(pt)
    return None, undecided


def minimality_check(pattern, grid=DEFAULT_GRID, max_nodes: Optional[int] = MINIMALITY_NODE_BUDGET) -> dict:
    """For each one-item deletion, the first grid point whose transcript contains it.

    Each containment query gets ``max_nodes`` search nodes; points where the
    budget ran out are listed under ``undecided`` instead of being counted
    as misses.
    """
    rows = []
    for k, sub in deletions(pattern):
        where, undecided = find_in_grid(sub, grid, max_nodes)
        rows.append({"deleted": k, "sub": to_text(sub), "found_in": where, "undecided": undecided})
    found = sum(r["found_in"] is not None for r in rows)
    return {"pattern": to_text(pattern), "rows": rows, "found": found, "total": len(rows)}


# ------------------------------------------------------------------ digraph

@dataclass
class Digraph:
    vertices: tuple
    edges: frozenset

    def successors(self, u) -> list:
        return [b for a, b in self.edges if a == u]


def collapse_runs(s) -> Seq:
    return tuple(x for k, x in enumerate(as_seq(s)) if k == 0 or as_seq(s)[k - 1] != x)


DIGRAPH_RULES = {
    "literal": ((1, 0, 1, 0), (0, 1, 1, 0)),  # vuvu or uvvu
    "alternation": ((1, 0, 1, 0),),        # vuvu only
}


def build_digraph(s, rule: str = "literal") -> Digraph:
    """Edge (u, v) when vuvu or uvvu is a plain subsequence of the run-collapsed
    sequence.  ``rule="alternation"`` keeps only the vuvu condition.
    """
    shapes = DIGRAPH_RULES[rule]
    t = collapse_runs(s)
    verts = tuple(dict.fromkeys(t))
    edges = frozenset(
        (u, v) for u, v in itertools.permutations(verts, 2)
        if any(contains_plain(tuple((u, v)[k] for k in sh), t) for sh in shapes)
    )
    return Digraph(verts, edges)


def _reach(g: Digraph, start, forward: bool) -> set:
    adj: dict = {}
    for a, b in g.edges:
        if forward:
            adj.setdefault(a, []).append(b)
        else:
            adj.setdefault(b, []).append(a)
    seen, stack = {start}, [start]
    while stack:
        for w in adj.get(stack.pop(), []):
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return seen


def is_strongly_connected(g: Digraph) -> bool:
    if len(g.vertices) <= 1:
        return True
    v0 = g.vertices[0]
    allv = set(g.vertices)
    return _reach(g, v0, True) == allv and _reach(g, v0, False) == allv


# ------------------------------------------------------- Klazar-Valtr grammar

@dataclass
class GrammarItem:
    sequence: Seq
    derivation: tuple  # ("axiom", m) | ("r1", parent, pos, k) | ("r2", inner, outer, pos)
    depth: int = 0

    def as_dict(self) -> dict:
        return {"sequence": to_text(self.sequence), "depth": self.depth,
                "derivation": list(_flatten(self.derivation))}


def _flatten(d):
    if d[0] == "axiom":
        yield f"axiom a^{d[1]}"
    elif d[0] == "r1":
        yield from _flatten(d[1])
        yield f"rule1 pos={d[2]} k={d[3]}"
    else:
        yield from _flatten(d[2])
        yield f"rule2 pos={d[3]} inner={to_text(replay(d[1]))}"


def _rule1(s: Seq, pos: int, k: int) -> Optional[Seq]:
    """s = s1 a a s2 a with the doubled a at ``pos`` -> s1 a b^k a s2 a b^k."""
    a = s[pos]
    if pos + 2 >= len(s) or s[pos + 1] != a or s[-1] != a:
        return None
    b = max(s) + 1
    return normalize(s[:pos + 1] + (b,) * k + s[pos + 1:] + (b,) * k)


def _rule2(inner: Seq, outer: Seq, pos: int) -> Optional[Seq]:
    """outer = s1 a a s2 with the doubled a at ``pos`` -> s1 a inner' a s2."""
    if pos + 1 >= len(outer) or outer[pos] != outer[pos + 1]:
        return None
    shift = max(outer) + 1
    fresh = tuple(x + shift for x in inner)
    return normalize(outer[:pos + 1] + fresh + outer[pos + 1:])


def replay(d) -> Seq:
    if d[0] == "axiom":
        return (0,) * d[1]
    if d[0] == "r1":
        return _rule1(replay(d[1]), d[2], d[3])
    return _rule2(replay(d[1]), replay(d[2]), d[3])


def _doubles(s: Seq) -> list:
    return [k for k in range(len(s) - 1) if s[k] == s[k + 1]]


def kv_closure(max_depth: int = 3, max_k: int = 2, max_len: int = 12) -> list:
    """Breadth-first closure of the axioms a^m under both production rules."""
    if min(max_depth, max_k, max_len) < 1:
        raise ValueError("bounds must be positive")
    items: dict = {}
    for m in range(1, max_len + 1):
        s = (0,) * m
        items[s] = GrammarItem(s, ("axiom", m), 0)
    for depth in range(1, max_depth + 1):
        current = list(items.values())
        newest = [it for it in current if it.depth == depth - 1]
        fresh: dict = {}

        def add(seq, deriv):
            if seq is not None and len(seq) <= max_len and seq not in items and seq not in fresh:
                fresh[seq] = GrammarItem(seq, deriv, depth)

        for it in newest:
            for pos in _doubles(it.sequence):
                for k in range(1, max_k + 1):
                    add(_rule1(it.sequence, pos, k), ("r1", it.derivation, pos, k))
        # rule 2 needs at least one premise from the previous layer
        for outer in current:
            for inner in current:
                if outer.depth != depth - 1 and inner.depth != depth - 1:
                    continue
                if len(outer.sequence) + len(inner.sequence) > max_len:
                    continue
                for pos in _doubles(outer.sequence):
                    add(_rule2(inner.sequence, outer.sequence, pos),
                        ("r2", inner.derivation, outer.derivation, pos))
        items.update(fresh)
    return sorted(items.values(), key=lambda it: (it.depth, len(it.sequence), it.sequence))


# ----------------------------------------------------------- |Phi| >= 5 table

SIGMAS = ("ababa", "abcacbc", "abcbcac", "abacabc", "abacacb")
EXPECTED_ROWS = {"pi2": (False, True, False, False, False), "pi8": (False, False, True, False, False)}


def phi5_report(pi2=None, pi8=None) -> dict:
    if pi2 is None or pi8 is None:
        from .synth import generate
        pi2 = pi2 or generate("hs(dsc)")[0]
        pi8 = pi8 or generate("*sh(dsc)")[0]
    rows = {}
    for name, pi in (("pi2", pi2), ("pi8", pi8)):
        got = tuple(contains(s, pi) for s in SIGMAS)
        rows[name] = {"sequence": to_text(pi), "contains": dict(zip(SIGMAS, got)),
                      "ok": got == EXPECTED_ROWS[name]}
    rev = {
        "rev(s2)=s4": normalize(reverse(SIGMAS[1])) == normalize(SIGMAS[3]),
        "rev(s3)=s5": normalize(reverse(SIGMAS[2])) == normalize(SIGMAS[4]),
        "abadadbd palindrome": normalize(reverse("abadadbd")) == normalize("abadadbd"),
    }
    ok = all(r["ok"] for r in rows.values()) and all(rev.values())
    return {"rows": rows, "reversals": rev, "ok": ok}
