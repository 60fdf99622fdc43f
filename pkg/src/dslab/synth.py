"""Pattern synthesis: compact encoding -> labeled trees -> sequences.

Leaves are element indices 0..n-1 left to right.  Padding stars and the
binder become spine nodes y_1..y_l (each labeled by one star/binder index),
three apex nodes z1 < z2 < z3 sit above the spine, and reading labels in
postorder yields the sequence.  Leaves trapped between two children of the
same spine node are forced under it; the leaves in a gap between two spine
levels may sit under either level, which is where the variants come from.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .encoding import TWO_TRAP_CLASSES, CompactEncoding, as_encoding, enumerate_legal, is_legal_classes, is_legal_rules
from .sequences import Seq, normalize, to_text

ABABA: Seq = (0, 1, 0, 1, 0)

# Transcriptions of printed prototypes, used only as a cross-check.
PRINTED = {
    1: "abcdbdadbcd",
    2: "abcacbc",
    3: "abcdadccbd",
    8: "abcadadbd",
}


@dataclass
class Node:
    role: str  # leaf | merged | spine | apex
    label: tuple
    children: list = field(default_factory=list)

    def postorder(self):
        for ch in self.children:
            yield from ch.postorder()
        yield self

    def to_dict(self) -> dict:
        d = {"role": self.role, "label": list(self.label)}
        if self.children:
            d["children"] = [c.to_dict() for c in self.children]
        return d

    @classmethod
    def from_dict(cls, d: dict) -> "Node":
        return cls(d["role"], tuple(d["label"]), [cls.from_dict(c) for c in d.get("children", [])])


def _units(e: CompactEncoding, two_trap: bool) -> list:
    """Leaf-level units: plain leaves, or merged nodes over trap+trapped (+trap)."""
    els = e.elements
    traps = [j for j, x in enumerate(els) if x == "c"]
    out = []
    j = 0
    n = len(els)
    while j < n:
        if two_trap and j == traps[0] and j + 1 < n and els[j + 1] == "s":
            kids = [Node("leaf", (j,)), Node("leaf", (j + 1,))]
            label = (j,)
            span = 2
            if j + 2 == traps[1]:
                kids.append(Node("leaf", (j + 2,)))
                label = (j, j + 2)
                span = 3
            out.append((j, j + span - 1, Node("merged", label, kids)))
            j += span
        else:
            out.append((j, j, Node("leaf", (j,))))
            j += 1
    return out


def _apex_labels(e: CompactEncoding, two_trap: bool) -> tuple:
    if two_trap:
        c1, c2 = e.indices("c")
        (s,) = e.indices("s")
        return (c2, c1), (s,), (c2,)
    (jc,) = e.indices("c")
    (jd,) = e.indices("d")
    s1, s2 = e.indices("s")
    if jc == jd:
        # a (dsc) group: z1's occurrence of the group symbol already plays
        # the second trapped role, so z2 carries only the first
        return (jc,), (s1,), (jc,)
    return (jc, jd), (s2, s1), (jc,)


def build_trees(e) -> list:
    """All labeled trees for a legal encoding (one per gap split choice)."""
    e = as_encoding(e)
    rep = is_legal_rules(e)
    if not rep.legal:
        raise ValueError(f"illegal encoding {e}: {rep.violations}")
    two_trap = rep.cls in TWO_TRAP_CLASSES
    n = len(e)
    J = e.stars + [e.binder]
    l = len(J)
    units = _units(e, two_trap)
    pos_of = {}
    for u, (a, b, _) in enumerate(units):
        for j in range(a, b + 1):
            pos_of[j] = u
    anchors = [pos_of[j] for j in J] + [pos_of[n - 1]]
    # y_1 spans anchors[0]..anchors[1]; y_i (i >= 2) adds anchors[i]
    gaps = [range(anchors[i - 1] + 1, anchors[i]) for i in range(2, l + 1)]
    trees = []
    for splits in itertools.product(*[range(len(g) + 1) for g in gaps]):
        kids = [[] for _ in range(l)]
        kids[0] = [units[u][2] for u in range(0, anchors[1] + 1)]
        for i in range(1, l):
            g = gaps[i - 1]
            cut = splits[i - 1]
            kids[i - 1].extend(units[u][2] for u in list(g)[:cut])
            kids[i] = [units[u][2] for u in list(g)[cut:]] + [units[anchors[i + 1]][2]]
        ys = []
        for i in range(l):
            ch = ([ys[-1]] if ys else []) + kids[i]
            ys.append(Node("spine", (J[i],), ch))
        z1l, z2l, z3l = _apex_labels(e, two_trap)
        z1 = Node("apex", z1l, [ys[-1]])
        z2 = Node("apex", z2l, [z1])
        trees.append(Node("apex", z3l, [z2]))
    return _fresh(trees)


def _fresh(trees: list) -> list:
    # itertools reuses leaf objects across variants; give each tree its own copy
    return [Node.from_dict(t.to_dict()) for t in trees]


def tree_to_sequence(tree: Node) -> Seq:
    return normalize([x for node in tree.postorder() for x in node.label])


def generate(e) -> list:
    """Distinct normalized sequences of an encoding, in tree order."""
    seen = []
    for t in build_trees(e):
        s = tree_to_sequence(t)
        if s not in seen:
            seen.append(s)
    return seen


@dataclass
class Prototype:
    cls: int
    encoding: str
    sequences: list
    printed: str = ""
    printed_match: bool = True

    def as_dict(self) -> dict:
        return {"class": self.cls, "encoding": self.encoding,
                "sequences": [to_text(s) for s in self.sequences],
                "printed": self.printed, "printed_match": self.printed_match}


def prototypes() -> list:
    """The minimal-star encoding of each of the 17 categories."""
    out = {}
    for e in enumerate_legal(1):
        k = is_legal_classes(e)
        if k is not None and k not in out:
            seqs = generate(e)
            pr = PRINTED.get(k, "")
            ok = not pr or normalize(pr) in seqs
            out[k] = Prototype(k, str(e), seqs, pr, ok)
    return [out[k] for k in sorted(out)]


def psi_members(max_stars: int) -> list:
    """ababa plus every sequence generated from encodings with <= max_stars stars."""
    seen = {ABABA: None}
    for e in enumerate_legal(max_stars):
        for s in generate(e):
            seen.setdefault(s, None)
    return list(seen)
