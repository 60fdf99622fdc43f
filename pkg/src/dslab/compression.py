"""Recursively composed trees T(i, j), their path compression system, and its
transcription into a sequence Xi.

Vertices are dense ints.  Every vertex carries a level tag: leaves of the
whole tree are i-nodes, internal nodes of the elementary full binary blocks
are 0-nodes, and a block root that was glued onto a leaf of a higher block
takes that leaf's tag.
"""

from __future__ import annotations

import os
import random
from dataclasses import dataclass, field
from typing import Optional

from dslab.sequences import is_c_regular

DEFAULT_MAX_LEAVES = 1 << 22


class TooLarge(ValueError):
    """Raised when a tree would exceed the configured leaf cap."""


def max_leaves_default() -> int:
    return int(os.environ.get("DSLAB_MAX_LEAVES", DEFAULT_MAX_LEAVES))


def leaf_count(i: int, j: int, c: int = 1, limit: Optional[int] = None) -> int:
    """|T(i, j)| computed exactly from the recurrence.

    Raises TooLarge as soon as an intermediate value exceeds ``limit``.
    Without a limit, only call this on arguments known to be small.
    """
    if i < 1 or j < 0 or c < 1:
        raise ValueError("need i >= 1, j >= 0, c >= 1")

    def check(n: int) -> int:
        if limit is not None and n > limit:
            raise TooLarge(f"|T({i},{j})| exceeds {limit}")
        return n

    def pow2(e: int) -> int:
        # |T(i', e)| >= 2**e, so a huge exponent is already over the limit
        if limit is not None and e > limit.bit_length():
            raise TooLarge(f"|T({i},{j})| exceeds {limit}")
        return check(1 << e)

    def rec(a: int, b: int) -> int:
        if a == 1:
            return pow2(b)
        # each step at least doubles the count, so a limit bounds the loop
        v = pow2(c)
        for _ in range(b):
            v = check(v * rec(a - 1, v))
        return v

    return rec(i, j)


@dataclass
class _Block:
    """One embedded copy of T(i, j) inside the built tree."""

    i: int
    j: int
    root: int
    leaves: list
    top: Optional["_Block"] = None
    copies: list = field(default_factory=list)
    sub: int = 0  # leaves per copy, |T(i, j-1)|


@dataclass
class CompTree:
    i: int
    j: int
    c: int
    parent: list
    children: list
    tag: list
    leaves: list
    root: int
    block: _Block
    postorder: list = field(default_factory=list)
    # first and one-past-last leaf index below each vertex
    span: list = field(default_factory=list)

    @property
    def n_leaves(self) -> int:
        return len(self.leaves)

    @property
    def n_vertices(self) -> int:
        return len(self.parent)

    def is_ancestor(self, a: int, b: int) -> bool:
        """a is an ancestor of b or equal to it."""
        lo, hi = self.span[a]
        blo, bhi = self.span[b]
        if a == b:
            return True
        if not (lo <= blo and bhi <= hi):
            return False
        v = b
        while v != -1 and v != a:
            v = self.parent[v]
        return v == a

    def path_up(self, v: int):
        while v != -1:
            yield v
            v = self.parent[v]


def build_tree(i: int, j: int, c: int = 1, max_leaves: Optional[int] = None) -> CompTree:
    """Build T(i, j) with block size t_c, refusing anything over ``max_leaves``."""
    cap = max_leaves_default() if max_leaves is None else max_leaves
    leaf_count(i, j, c, limit=cap)

    parent: list = []
    children: list = []
    tag: list = []

    def new_vertex(t: int) -> int:
        parent.append(-1)
        children.append([])
        tag.append(t)
        return len(parent) - 1

    def full_binary(depth: int, lv: list) -> int:
        level = lv
        for _ in range(depth):
            nxt = []
            for a in range(0, len(level), 2):
                u = new_vertex(0)
                for w in (level[a], level[a + 1]):
                    parent[w] = u
                    children[u].append(w)
                nxt.append(u)
            level = nxt
        return level[0]

    def build(a: int, b: int, given: Optional[list]) -> _Block:
        if a == 1 or b == 0:
            depth = b if a == 1 else c
            if given is None:
                lv = [new_vertex(a) for _ in range(1 << depth)]
            else:
                lv = list(given)
                for v in lv:
                    tag[v] = a
            return _Block(a, b, full_binary(depth, lv), lv)
        sub = leaf_count(a, b - 1, c)
        n_copies = leaf_count(a - 1, sub, c)
        copies = []
        for k in range(n_copies):
            part = None if given is None else given[k * sub:(k + 1) * sub]
            copies.append(build(a, b - 1, part))
        top = build(a - 1, sub, [cp.root for cp in copies])
        lv = [v for cp in copies for v in cp.leaves]
        return _Block(a, b, top.root, lv, top=top, copies=copies, sub=sub)

    block = build(i, j, None)
    tree = CompTree(i, j, c, parent, children, tag, block.leaves, block.root, block)
    _index(tree)
    return tree


def _index(tree: CompTree) -> None:
    n = tree.n_vertices
    leaf_pos = {v: k for k, v in enumerate(tree.leaves)}
    span = [(0, 0)] * n
    post = []
    stack = [(tree.root, False)]
    while stack:
        v, done = stack.pop()
        if done:
            post.append(v)
            kids = tree.children[v]
            if kids:
                span[v] = (span[kids[0]][0], span[kids[-1]][1])
            else:
                span[v] = (leaf_pos[v], leaf_pos[v] + 1)
            continue
        stack.append((v, True))
        for w in reversed(tree.children[v]):
            stack.append((w, False))
    tree.postorder = post
    tree.span = span


def nu(tree: CompTree, leaf: int, k: int) -> int:
    """The k-th (i-1)-node ancestor of ``leaf``, counting upward from the leaf."""
    if not 1 <= k <= tree.j:
        raise ValueError(f"k must be in 1..{tree.j}")
    want = tree.i - 1
    seen = 0
    for v in tree.path_up(tree.parent[leaf]):
        if tree.tag[v] == want:
            seen += 1
            if seen == k:
                return v
    raise ValueError("leaf has fewer than k (i-1)-node ancestors")


def mu(tree: CompTree, leaf: int, k: int) -> int:
    """1-based rank of ``leaf`` among the leaves below ``nu(tree, leaf, k)``."""
    v = nu(tree, leaf, k)
    return tree.span[leaf][0] - tree.span[v][0] + 1


@dataclass(frozen=True)
class Compression:
    id: int
    origin: int
    k: int
    participants: tuple
    terminus: int


def _compress(tree: CompTree, block: _Block, leaf_index: int, k: int):
    if block.i == 1:
        x = block.leaves[leaf_index]
        v = x
        for _ in range(k):
            v = tree.parent[v]
        return (x,), v
    while block.j > k:
        a, leaf_index = divmod(leaf_index, block.sub)
        block = block.copies[a]
    x = block.leaves[leaf_index]
    a, b = divmod(leaf_index, block.sub)
    rest, term = _compress(tree, block.top, a, b + 1)
    return (x,) + rest, term


def build_compressions(tree: CompTree, decreasing_k: bool = False) -> list:
    """All j*L compressions, ordered by origin leaf then k; ids follow that order.

    ``decreasing_k`` flips the order among compressions sharing an origin; it
    exists only for comparing the two orders under :func:`execute`.
    """
    ks = list(range(1, tree.j + 1))
    if decreasing_k:
        ks.reverse()
    out = []
    for li in range(tree.n_leaves):
        for k in ks:
            parts, term = _compress(tree, tree.block, li, k)
            out.append(Compression(len(out), tree.leaves[li], k, parts, term))
    return out


@dataclass
class ExecutionReport:
    valid: bool
    checked: int
    failures: list


def execute(tree: CompTree, comps: list) -> ExecutionReport:
    """Apply the compressions in id order on a private copy of the tree.

    Each compression must find its participants as a strictly ascending chain
    of ancestors ending strictly below the terminus in the current forest.
    """
    parent = list(tree.parent)

    def strict_above(a: int, b: int) -> bool:
        v = parent[b]
        while v != -1:
            if v == a:
                return True
            v = parent[v]
        return False

    failures = []
    for comp in sorted(comps, key=lambda cm: cm.id):
        chain = comp.participants + (comp.terminus,)
        if not all(strict_above(chain[t + 1], chain[t]) for t in range(len(chain) - 1)):
            failures.append(comp.id)
        for u in comp.participants:
            parent[u] = comp.terminus
            if u == comp.terminus:
                raise RuntimeError("compression re-parents a vertex onto itself")
    return ExecutionReport(not failures, len(comps), failures)


@dataclass
class Transcript:
    i: int
    j: int
    c: int
    n_leaves: int
    sequence: tuple
    n_comp: int
    xi: dict
    comp_of_symbol: dict
    vertex_of_symbol: dict

    def token(self, sym: int) -> str:
        if sym < self.n_comp:
            return f"C{sym}"
        return f"V{self.vertex_of_symbol[sym]}"

    def header(self) -> str:
        return f"# xi i={self.i} j={self.j} c={self.c} L={self.n_leaves}"

    def dumps(self) -> str:
        return self.header() + "\n" + " ".join(self.token(s) for s in self.sequence) + "\n"


def participation(tree: CompTree, comps: list) -> dict:
    """xi(v): ids of compressions in which v participates, latest first."""
    xi: dict = {v: [] for v in range(tree.n_vertices)}
    for comp in comps:
        for u in comp.participants:
            xi[u].append(comp.id)
    for v in xi:
        xi[v].sort(reverse=True)
    return xi


def transcribe(tree: CompTree, comps: list, xi: Optional[dict] = None) -> Transcript:
    """Concatenate xi(u_1), u_2, xi(u_2), ... over the vertices in postorder."""
    if xi is None:
        xi = participation(tree, comps)
    n_comp = len(comps)
    seq: list = []
    vsym = {}
    for pos, v in enumerate(tree.postorder):
        if pos:
            sym = n_comp + v
            vsym[sym] = v
            seq.append(sym)
        seq.extend(xi[v])
    comp_of = {cm.id: cm for cm in comps}
    return Transcript(tree.i, tree.j, tree.c, tree.n_leaves, tuple(seq), n_comp, xi, comp_of, vsym)


def load_transcript_tokens(text: str) -> tuple:
    """Parse the transcript file format into (params, sequence of ints).

    Compression tokens keep their id; vertex tokens are shifted past every
    compression id so the two symbol spaces stay disjoint.
    """
    params: dict = {}
    toks: list = []
    for line in text.splitlines():
        line = line.strip()
        if line.startswith("#"):
            for part in line[1:].split():
                if "=" in part:
                    key, val = part.split("=", 1)
                    params[key] = int(val)
            continue
        toks.extend(line.split())
    comp_ids = [int(t[1:]) for t in toks if t[0] == "C"]
    offset = max(comp_ids, default=-1) + 1
    seq = []
    for t in toks:
        if t[0] == "C":
            seq.append(int(t[1:]))
        elif t[0] == "V":
            seq.append(offset + int(t[1:]))
        else:
            raise ValueError(f"bad transcript token {t!r}")
    return params, tuple(seq)


@dataclass
class XiSystem:
    """A built tree with its compressions and transcript, kept together."""

    tree: CompTree
    comps: list
    transcript: Transcript


def build_system(i: int, j: int, c: int = 1, max_leaves: Optional[int] = None) -> XiSystem:
    tree = build_tree(i, j, c, max_leaves=max_leaves)
    comps = build_compressions(tree)
    return XiSystem(tree, comps, transcribe(tree, comps))


def expected_length(i: int, j: int, n_leaves: int) -> int:
    return i * j * n_leaves + 2 * n_leaves - 2


def expected_alphabet(j: int, n_leaves: int) -> int:
    return j * n_leaves + 2 * n_leaves - 2


# -- lemma checks ------------------------------------------------------------


def check_regularity(x: Transcript) -> dict:
    applicable = x.i > 1 or x.j >= x.c
    return {
        "check": "regular",
        "params": (x.i, x.j, x.c),
        "applicable": applicable,
        "ok": is_c_regular(x.sequence, x.c) if applicable else None,
    }


def _positions(x: Transcript) -> dict:
    pos: dict = {}
    for t, s in enumerate(x.sequence):
        if s < x.n_comp:
            pos.setdefault(s, []).append(t)
    return pos


def _qpqp(qpos: list, ppos: list) -> bool:
    import bisect

    a = qpos[0]
    r = bisect.bisect_right(ppos, a)
    if r == len(ppos):
        return False
    b = ppos[r]
    r = bisect.bisect_right(qpos, b)
    if r == len(qpos):
        return False
    return ppos[-1] > qpos[r]


def qpqp_candidates(x: Transcript) -> list:
    """Pairs (p, q), p before q, where p occurs strictly inside q's span.

    Any other pair cannot form q p q p, so it is vacuously fine.
    """
    pos = _positions(x)
    seq = x.sequence
    pairs = []
    for q, qp in pos.items():
        if len(qp) < 2:
            continue
        inside = {seq[t] for t in range(qp[0] + 1, qp[-1]) if seq[t] < q}
        pairs.extend((p, q) for p in sorted(inside))
    return pairs


def check_qpqp(x: Transcript, sample: Optional[int] = None, seed: int = 0) -> dict:
    """For compressions p before q, the plain word q p q p must not occur."""
    pos = _positions(x)
    cands = qpqp_candidates(x)
    if sample is not None and sample < len(cands):
        cands = random.Random(seed).sample(cands, sample)
    bad = [(p, q) for p, q in cands if _qpqp(pos[q], pos[p])]
    n = x.n_comp
    return {
        "check": "qpqp",
        "params": (x.i, x.j, x.c),
        "ordered_pairs": n * (n - 1) // 2,
        "nonvacuous_checked": len(cands),
        "violations": bad[:20],
        "n_violations": len(bad),
        "ok": not bad,
    }


def check_implied(tree: CompTree, comps: list, xi: dict, sample: Optional[int] = None, seed: int = 0) -> dict:
    """Implied occurrences: for u strictly below v, v at or below w, p in xi(v),
    q in both xi(u) and xi(w), and p originating at or below u, p is in xi(u)."""
    comp_of = {cm.id: cm for cm in comps}
    xi_sets = {v: set(ids) for v, ids in xi.items() if ids}
    triples = []
    for q in comps:
        parts = q.participants
        for a in range(len(parts)):
            for b in range(a + 1, len(parts)):
                u, w = parts[a], parts[b]
                v = tree.parent[u]
                while v != -1:
                    triples.append((u, v, q.id))
                    if v == w:
                        break
                    v = tree.parent[v]
    if sample is not None and sample < len(triples):
        triples = random.Random(seed).sample(triples, sample)
    checked = 0
    bad = []
    for u, v, qid in triples:
        lo, hi = tree.span[u]
        su = xi_sets.get(u, set())
        for pid in xi.get(v, ()):
            origin = comp_of[pid].origin
            olo = tree.span[origin][0]
            if lo <= olo < hi:
                checked += 1
                if pid not in su:
                    bad.append((u, v, qid, pid))
    return {
        "check": "implied",
        "params": (tree.i, tree.j, tree.c),
        "triples": len(triples),
        "applicable": checked,
        "violations": bad[:20],
        "n_violations": len(bad),
        "ok": not bad,
    }
