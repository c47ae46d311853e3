"""Duality and minor operations: dual, cocircuits, deletion, contraction.

The dual is computed from hyperplane complements (a cocircuit is exactly
the complement of a maximal proper flat).  Basis complementation is kept
out of this module on purpose: the test suite uses it as an independent
oracle against this construction.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import (
    CircuitFamily,
    ElemSet,
    GroundSet,
    Matroid,
    compress_mask,
    mask_sort_key,
)
from .errors import InvalidParameter, OverlappingSpec, TheoremViolation


@dataclass(frozen=True)
class MinorSpec:
    """Disjoint (deleted, contracted) pair over one parent ground set."""

    deleted: ElemSet
    contracted: ElemSet

    def __post_init__(self) -> None:
        if self.deleted.ground != self.contracted.ground:
            raise InvalidParameter("delete and contract sets over different grounds")
        if not self.deleted.isdisjoint(self.contracted):
            raise OverlappingSpec(
                f"delete and contract sets overlap: {self.deleted & self.contracted!r}"
            )

    @classmethod
    def empty(cls, ground: GroundSet) -> "MinorSpec":
        return cls(ground.empty(), ground.empty())

    @property
    def removed(self) -> ElemSet:
        return self.deleted | self.contracted

    def is_empty(self) -> bool:
        return not self.deleted and not self.contracted

    def __repr__(self) -> str:
        return f"MinorSpec(del={self.deleted!r}, con={self.contracted!r})"


def dual(m: Matroid) -> Matroid:
    """Dual matroid: circuits are the complements of the hyperplanes.

    The result is cached on the input (idempotent fill); the reverse link
    is deliberately not set so dual(dual(m)) exercises a fresh computation.
    """
    cached = m._dual_cache
    if cached is not None:
        return cached
    full = m.ground.full_mask
    masks = [full ^ h.mask for h in m.hyperplanes()]
    d = Matroid(
        m.ground,
        masks,
        name=f"dual({m.name})" if m.name else None,
        validate=False,
    )
    if d.rank() != m.size - m.rank():
        raise TheoremViolation(
            "dual rank differs from |E| - rank; hyperplane enumeration is buggy"
        )
    m._dual_cache = d
    return d


def cocircuits(m: Matroid) -> CircuitFamily:
    """Circuits of the dual, in canonical order."""
    return dual(m).circuits


def _survivor_ground(m: Matroid, removed_mask: int) -> tuple[GroundSet, dict[int, int]]:
    kept = [i for i in range(m.size) if not (removed_mask >> i) & 1]
    ground = GroundSet(m.ground.labels[i] for i in kept)
    return ground, {old: new for new, old in enumerate(kept)}


def delete(m: Matroid, removed: ElemSet) -> Matroid:
    """Deletion: keep exactly the circuits avoiding the removed set."""
    if removed.ground != m.ground:
        raise InvalidParameter("removed set over a different ground set")
    if not removed:
        return m
    ground, index_map = _survivor_ground(m, removed.mask)
    masks = [
        compress_mask(c, index_map)
        for c in m.circuits.masks
        if c & removed.mask == 0
    ]
    return Matroid(ground, masks, validate=False)


def contract(m: Matroid, removed: ElemSet) -> Matroid:
    """Contraction: circuits are the minimal nonempty sets C - T."""
    if removed.ground != m.ground:
        raise InvalidParameter("removed set over a different ground set")
    if not removed:
        return m
    keep = ~removed.mask
    reduced = sorted(
        {c & keep for c in m.circuits.masks if c & keep},
        key=mask_sort_key,
    )
    minimal: list[int] = []
    for cand in reduced:
        if not any(kept & ~cand == 0 for kept in minimal):
            minimal.append(cand)
    ground, index_map = _survivor_ground(m, removed.mask)
    masks = [compress_mask(c, index_map) for c in minimal]
    return Matroid(ground, masks, validate=False)


def minor(m: Matroid, spec: MinorSpec) -> Matroid:
    """Apply a minor spec; asserts delete/contract order independence."""
    if spec.deleted.ground != m.ground:
        raise InvalidParameter("minor spec over a different ground set")
    if spec.is_empty():
        return m
    deleted_first = delete(m, spec.deleted)
    first = contract(deleted_first, spec.contracted.to_ground(deleted_first.ground))
    contracted_first = contract(m, spec.contracted)
    second = delete(contracted_first, spec.deleted.to_ground(contracted_first.ground))
    if first != second:
        raise TheoremViolation(
            "delete-then-contract disagrees with contract-then-delete; "
            "minor machinery is buggy"
        )
    return first


def corank(m: Matroid, subset: ElemSet | None = None) -> int:
    """Rank in the dual, via |S| - r(E) + r(E - S); no dual construction."""
    if subset is None:
        return m.size - m.rank()
    if subset.ground != m.ground:
        raise InvalidParameter("subset over a different ground set")
    rest = ElemSet(m.ground, m.ground.full_mask & ~subset.mask)
    return len(subset) - m.rank() + m.rank(rest)
