"""Incomplete Tambara functors over finite groups."""

from ._tambara import (
    Bispan,
    Group,
    IndexingSystem,
    NormUnavailable,
    ParseError,
    ResourceError,
    TambaraError,
    acceptance,
    count_indexing_systems,
    evaluate,
    ideal_check,
    indexing_systems,
    validate_indexing,
    verify_reciprocity,
)

__all__ = [
    "Bispan",
    "Group",
    "IndexingSystem",
    "NormUnavailable",
    "ParseError",
    "ResourceError",
    "TambaraError",
    "acceptance",
    "count_indexing_systems",
    "evaluate",
    "ideal_check",
    "indexing_systems",
    "validate_indexing",
    "verify_reciprocity",
]
