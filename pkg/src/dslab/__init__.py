"""Forbidden-subsequence synthesis and path-compression transcripts."""

from .sequences import contains, embedding, normalize, to_text
from .encoding import parse_encoding, is_legal_rules, is_legal_classes, enumerate_legal
from .synth import build_trees, generate, prototypes, psi_members
from .compression import build_system, leaf_count

__all__ = [
    "contains", "embedding", "normalize", "to_text",
    "parse_encoding", "is_legal_rules", "is_legal_classes", "enumerate_legal",
    "build_trees", "generate", "prototypes", "psi_members",
    "build_system", "leaf_count",
]
