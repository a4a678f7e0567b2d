"""Colouring validity checkers.

Every checker scans hyperedges in canonical order and reports the first
violator, so counterexamples are deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from . import _pykernels as codes
from ._backend import kernels
from .hypergraph import Hypergraph, SubsetColouring, VertexColouring

__all__ = ["NOTIONS", "PARAMETRIC_NOTIONS", "Verdict", "validate_colouring", "validate_subset_cf"]

# notion -> (kernel code, fixed t or None when caller-supplied)
NOTIONS = {
    "proper": (codes.NOTION_PROPER, 1),
    "cf": (codes.NOTION_STRONG, 1),
    "um": (codes.NOTION_TUM, 1),
    "t-colourful": (codes.NOTION_COLOURFUL, None),
    "t-strong-cf": (codes.NOTION_STRONG, None),
    "t-um": (codes.NOTION_TUM, None),
}
PARAMETRIC_NOTIONS = frozenset(k for k, (_, t) in NOTIONS.items() if t is None)


@dataclass(frozen=True)
class Verdict:
    """Outcome of a validity check; falsy when a counterexample was found."""

    ok: bool
    counterexample: Optional[tuple] = None

    def __bool__(self) -> bool:
        return self.ok

    @staticmethod
    def valid() -> "Verdict":
        return Verdict(True)

    @staticmethod
    def invalid(edge: tuple) -> "Verdict":
        return Verdict(False, tuple(edge))


def _resolve_notion(notion: str, t: Optional[int]) -> tuple[int, int]:
    key = notion.strip().lower()
    if key not in NOTIONS:
        raise ValueError(f"unknown notion {notion!r}; expected one of {sorted(NOTIONS)}")
    code, fixed_t = NOTIONS[key]
    if fixed_t is not None:
        return code, fixed_t
    if t is None:
        raise ValueError(f"notion {notion!r} needs a subset-size parameter t")
    if t < 1:
        raise ValueError("t must be >= 1")
    return code, t


def validate_colouring(
    h: Hypergraph, colouring: VertexColouring, notion: str, t: Optional[int] = None
) -> Verdict:
    """Check a vertex colouring against one of the colouring notions.

    Notions: proper, cf, um, t-colourful, t-strong-cf, t-um (the last three
    take t; cf and um are their t=1 instances).  Integer colours are the
    order for the unique-maximum notions.
    """
    if colouring.n != h.n:
        raise ValueError("colouring does not cover all vertices")
    code, tt = _resolve_notion(notion, t)
    indptr, flat = h.csr()
    bad = int(kernels.validate_vertex(colouring.as_array(), indptr, flat, code, tt))
    if bad < 0:
        return Verdict.valid()
    return Verdict.invalid(h.hyperedges[bad])


def validate_subset_cf(h: Hypergraph, sigma: SubsetColouring) -> Verdict:
    """Check that every hyperedge with more than t vertices contains a
    t-subset whose token differs from all other t-subsets inside it.

    Hyperedges of size at most t are unconstrained.
    """
    if sigma.n != h.n:
        raise ValueError("subset colouring domain does not match the hypergraph")
    indptr, flat = h.csr()
    if sigma.t <= 3:
        bad = int(kernels.validate_subset(sigma.t, sigma.n, sigma.token_ids(), indptr, flat))
    else:
        bad = int(
            codes.validate_subset(sigma.t, sigma.n, sigma.token_ids(), indptr, flat)
        )
    if bad < 0:
        return Verdict.valid()
    return Verdict.invalid(h.hyperedges[bad])
