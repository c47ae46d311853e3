"""Core matroid machinery: ground sets, bitmask subsets, circuit families.

A matroid is stored as the full list of its circuits (minimal dependent
sets) over a labelled ground set of at most 64 elements.  Subsets are int
bitmasks, and every derived query -- rank, closure, hyperplanes,
simplicity -- reduces to the single primitive "does this subset contain a
circuit".  The canonical order used everywhere is by cardinality, then
lexicographically by element index; every deterministic tie-break in the
package relies on it.  All types are immutable after construction and safe
for concurrent reads (caches fill idempotently).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import comb
from typing import Iterable, Iterator

from .errors import (
    AxiomError,
    CapExceeded,
    InvalidParameter,
    PreconditionViolated,
    TheoremViolation,
)

MAX_GROUND = 64
# Exhaustive subset scans (hyperplane enumeration, brute-force oracles)
# refuse ground sets larger than this.
MAX_SCAN = 20


def bit_indices(mask: int) -> Iterator[int]:
    """Yield the set bit positions of a mask in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_sort_key(mask: int) -> tuple[int, tuple[int, ...]]:
    """Canonical comparison key: cardinality, then lex on ascending indices."""
    return (mask.bit_count(), tuple(bit_indices(mask)))


def compress_mask(mask: int, index_map: dict[int, int]) -> int:
    """Re-express a mask through an old-index -> new-index table."""
    out = 0
    for i in bit_indices(mask):
        out |= 1 << index_map[i]
    return out


class GroundSet:
    """Ordered, immutable set of distinct element labels.

    Index order (position in the label list) is the canonical element
    order.  An empty ground set is representable so that minors may
    degenerate; file ingestion rejects it.
    """

    __slots__ = ("labels", "size", "full_mask", "_index")

    def __init__(self, labels: Iterable[str]) -> None:
        labs = tuple(labels)
        if len(labs) > MAX_GROUND:
            raise CapExceeded(
                f"ground set has {len(labs)} elements; the bitmask cap is {MAX_GROUND}"
            )
        for lab in labs:
            if not isinstance(lab, str) or not lab:
                raise InvalidParameter(
                    f"element labels must be non-empty strings, got {lab!r}"
                )
        index = {lab: i for i, lab in enumerate(labs)}
        if len(index) != len(labs):
            raise InvalidParameter("element labels must be pairwise distinct")
        self.labels = labs
        self.size = len(labs)
        self.full_mask = (1 << len(labs)) - 1
        self._index = index

    def index(self, label: str) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise InvalidParameter(f"unknown element label {label!r}") from None

    def label(self, index: int) -> str:
        return self.labels[index]

    def subset(self, labels: Iterable[str]) -> "ElemSet":
        mask = 0
        for lab in labels:
            mask |= 1 << self.index(lab)
        return ElemSet(self, mask)

    def singleton(self, label: str) -> "ElemSet":
        return ElemSet(self, 1 << self.index(label))

    def from_indices(self, indices: Iterable[int]) -> "ElemSet":
        mask = 0
        for i in indices:
            if not 0 <= i < self.size:
                raise InvalidParameter(f"element index {i} out of range")
            mask |= 1 << i
        return ElemSet(self, mask)

    def from_mask(self, mask: int) -> "ElemSet":
        return ElemSet(self, mask)

    def empty(self) -> "ElemSet":
        return ElemSet(self, 0)

    def full(self) -> "ElemSet":
        return ElemSet(self, self.full_mask)

    def __contains__(self, label: object) -> bool:
        return label in self._index

    def __len__(self) -> int:
        return self.size

    def __eq__(self, other: object) -> bool:
        return isinstance(other, GroundSet) and self.labels == other.labels

    def __hash__(self) -> int:
        return hash(self.labels)

    def __repr__(self) -> str:
        return f"GroundSet({list(self.labels)!r})"


@dataclass(frozen=True, slots=True)
class ElemSet:
    """Subset of a ground set, stored as a bitmask."""

    ground: GroundSet
    mask: int

    def __post_init__(self) -> None:
        if self.mask < 0 or self.mask & ~self.ground.full_mask:
            raise InvalidParameter("subset mask has bits outside its ground set")

    def _check(self, other: "ElemSet") -> None:
        if self.ground != other.ground:
            raise InvalidParameter("element sets live over different ground sets")

    def __or__(self, other: "ElemSet") -> "ElemSet":
        self._check(other)
        return ElemSet(self.ground, self.mask | other.mask)

    def __and__(self, other: "ElemSet") -> "ElemSet":
        self._check(other)
        return ElemSet(self.ground, self.mask & other.mask)

    def __sub__(self, other: "ElemSet") -> "ElemSet":
        self._check(other)
        return ElemSet(self.ground, self.mask & ~other.mask)

    def __xor__(self, other: "ElemSet") -> "ElemSet":
        self._check(other)
        return ElemSet(self.ground, self.mask ^ other.mask)

    def complement(self) -> "ElemSet":
        return ElemSet(self.ground, self.ground.full_mask & ~self.mask)

    def __le__(self, other: "ElemSet") -> bool:
        self._check(other)
        return self.mask & ~other.mask == 0

    def __lt__(self, other: "ElemSet") -> bool:
        return self <= other and self.mask != other.mask

    def isdisjoint(self, other: "ElemSet") -> bool:
        self._check(other)
        return self.mask & other.mask == 0

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __bool__(self) -> bool:
        return self.mask != 0

    def __contains__(self, label: object) -> bool:
        return (
            isinstance(label, str)
            and label in self.ground
            and bool(self.mask >> self.ground.index(label) & 1)
        )

    def __iter__(self) -> Iterator[str]:
        for i in bit_indices(self.mask):
            yield self.ground.labels[i]

    def indices(self) -> tuple[int, ...]:
        return tuple(bit_indices(self.mask))

    def labels(self) -> tuple[str, ...]:
        return tuple(self)

    def sort_key(self) -> tuple[int, tuple[int, ...]]:
        return mask_sort_key(self.mask)

    def to_ground(self, other: GroundSet) -> "ElemSet":
        """Translate by labels onto another ground set."""
        return other.subset(self.labels())

    def __repr__(self) -> str:
        return "{" + ",".join(self) + "}"


class CircuitFamily:
    """Deduplicated list of circuits held in canonical order."""

    __slots__ = ("ground", "sets", "masks", "sizes", "_members")

    def __init__(self, ground: GroundSet, circuits: Iterable[ElemSet | int]) -> None:
        masks = set()
        for c in circuits:
            if isinstance(c, ElemSet):
                if c.ground != ground:
                    raise InvalidParameter("circuit over a different ground set")
                masks.add(c.mask)
            else:
                masks.add(int(c))
        ordered = sorted(masks, key=mask_sort_key)
        self.ground = ground
        self.masks = tuple(ordered)
        self.sizes = tuple(m.bit_count() for m in ordered)
        self.sets = tuple(ElemSet(ground, m) for m in ordered)
        self._members = frozenset(ordered)

    def __iter__(self) -> Iterator[ElemSet]:
        return iter(self.sets)

    def __len__(self) -> int:
        return len(self.sets)

    def __getitem__(self, i: int) -> ElemSet:
        return self.sets[i]

    def __contains__(self, item: object) -> bool:
        if isinstance(item, ElemSet):
            return item.ground == self.ground and item.mask in self._members
        if isinstance(item, int):
            return item in self._members
        return False

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, CircuitFamily)
            and self.ground == other.ground
            and self.masks == other.masks
        )

    def __hash__(self) -> int:
        return hash((self.ground, self.masks))

    def __repr__(self) -> str:
        return f"CircuitFamily({len(self.sets)} circuits)"


@dataclass(frozen=True)
class AxiomReport:
    """Outcome of circuit-axiom validation; failure carries a witness."""

    ok: bool
    axiom: str | None = None
    witnesses: tuple[ElemSet, ...] = ()
    element: str | None = None

    def describe(self) -> str:
        if self.ok:
            return "circuit axioms hold"
        parts = [f"axiom {self.axiom} violated"]
        if self.witnesses:
            parts.append("witnesses " + ", ".join(repr(w) for w in self.witnesses))
        if self.element is not None:
            parts.append(f"at element {self.element}")
        return "; ".join(parts)


def validate_circuit_axioms(
    circuits: CircuitFamily | Iterable[ElemSet | int],
    ground: GroundSet | None = None,
) -> AxiomReport:
    """Check C1 (no empty circuit), C2 (antichain), C3 (weak elimination).

    Returns a report rather than raising: the first violated axiom in
    canonical scan order together with the witnessing sets/element.
    """
    if isinstance(circuits, CircuitFamily):
        fam = circuits
    else:
        if ground is None:
            raise InvalidParameter("ground set required for a raw circuit list")
        fam = CircuitFamily(ground, circuits)
    g = fam.ground
    masks = fam.masks
    sizes = fam.sizes
    n = len(masks)

    # C1: the empty set is never a circuit.  Canonical order puts it first.
    if n and sizes[0] == 0:
        return AxiomReport(False, "C1", (fam.sets[0],))

    # C2: no circuit contains another.  Sizes ascend, so only i < j can nest.
    for i in range(n):
        mi = masks[i]
        for j in range(i + 1, n):
            if sizes[j] > sizes[i] and mi & ~masks[j] == 0:
                return AxiomReport(False, "C2", (fam.sets[i], fam.sets[j]))

    # C3 (weak elimination): for distinct circuits and any common element e,
    # the union minus e must contain some member.  A cached witness is tried
    # first; similar neighbouring pairs usually share one.
    witness = 0
    for i in range(n):
        mi = masks[i]
        for j in range(i + 1, n):
            mj = masks[j]
            common = mi & mj
            if not common:
                continue
            union = mi | mj
            for e in bit_indices(common):
                target = union & ~(1 << e)
                if witness and witness & ~target == 0:
                    continue
                pc = target.bit_count()
                found = 0
                for size, m in zip(sizes, masks):
                    if size > pc:
                        break
                    if m & ~target == 0:
                        found = m
                        break
                if not found:
                    return AxiomReport(
                        False, "C3", (fam.sets[i], fam.sets[j]), g.label(e)
                    )
                witness = found
    return AxiomReport(True)


class Matroid:
    """Immutable matroid presented by its canonical circuit family.

    Rank, closure and flats all derive from the independence test
    "contains no circuit"; rank uses the greedy scan in element index
    order, which the exchange property makes exact.
    """

    __slots__ = (
        "ground",
        "circuits",
        "name",
        "_masks",
        "_sizes",
        "_rank_full",
        "_dual_cache",
        "_hyperplane_cache",
    )

    def __init__(
        self,
        ground: GroundSet,
        circuits: CircuitFamily | Iterable[ElemSet | int],
        *,
        name: str | None = None,
        validate: bool = True,
    ) -> None:
        fam = (
            circuits
            if isinstance(circuits, CircuitFamily)
            else CircuitFamily(ground, circuits)
        )
        if fam.ground != ground:
            raise InvalidParameter("circuit family belongs to a different ground set")
        if validate:
            report = validate_circuit_axioms(fam)
            if not report.ok:
                raise AxiomError(report)
        self.ground = ground
        self.circuits = fam
        self.name = name
        self._masks = fam.masks
        self._sizes = fam.sizes
        self._dual_cache = None
        self._hyperplane_cache = None
        self._rank_full = self._greedy_basis_mask(ground.full_mask).bit_count()

    # -- independence primitives ------------------------------------------

    def _dependent_mask(self, mask: int) -> bool:
        pc = mask.bit_count()
        for size, m in zip(self._sizes, self._masks):
            if size > pc:
                return False
            if m & ~mask == 0:
                return True
        return False

    def _greedy_basis_mask(self, mask: int) -> int:
        cur = 0
        for i in bit_indices(mask):
            cand = cur | (1 << i)
            if not self._dependent_mask(cand):
                cur = cand
        return cur

    def _closure_mask(self, mask: int) -> int:
        base = self._greedy_basis_mask(mask)
        cl = mask
        for i in bit_indices(self.ground.full_mask & ~mask):
            if self._dependent_mask(base | (1 << i)):
                cl |= 1 << i
        return cl

    # -- public queries ----------------------------------------------------

    @property
    def size(self) -> int:
        return self.ground.size

    def is_independent(self, subset: ElemSet) -> bool:
        self._own(subset)
        return not self._dependent_mask(subset.mask)

    def is_basis(self, subset: ElemSet) -> bool:
        return len(subset) == self._rank_full and self.is_independent(subset)

    def rank(self, subset: ElemSet | None = None) -> int:
        """Size of a maximum independent subset (of the whole ground if None)."""
        if subset is None:
            return self._rank_full
        self._own(subset)
        return self._greedy_basis_mask(subset.mask).bit_count()

    def closure(self, subset: ElemSet) -> ElemSet:
        """All elements whose addition leaves the rank unchanged."""
        self._own(subset)
        return ElemSet(self.ground, self._closure_mask(subset.mask))

    def is_flat(self, subset: ElemSet) -> bool:
        self._own(subset)
        return self._closure_mask(subset.mask) == subset.mask

    def hyperplanes(self) -> tuple[ElemSet, ...]:
        """All maximal proper flats, in canonical order.

        Every rank-(r-1) flat is the closure of an independent (r-1)-set,
        so scanning those closures is exhaustive.  Rank-0 matroids have no
        proper flat below the loop set and yield an empty tuple.
        """
        cached = self._hyperplane_cache
        if cached is not None:
            return cached
        if self.size > MAX_SCAN:
            raise CapExceeded(
                f"hyperplane enumeration needs |E| <= {MAX_SCAN}, got {self.size}"
            )
        r = self._rank_full
        out: set[int] = set()
        if r > 0:
            full = self.ground.full_mask
            for combo in itertools.combinations(range(self.size), r - 1):
                mask = 0
                for i in combo:
                    mask |= 1 << i
                if self._dependent_mask(mask):
                    continue
                cl = self._closure_mask(mask)
                if cl != full:
                    out.add(cl)
        result = tuple(
            ElemSet(self.ground, m) for m in sorted(out, key=mask_sort_key)
        )
        self._hyperplane_cache = result
        return result

    def fundamental_circuit(self, independent: ElemSet, element: str) -> ElemSet:
        """The unique circuit inside independent + element that contains it."""
        self._own(independent)
        bit = 1 << self.ground.index(element)
        if independent.mask & bit:
            raise PreconditionViolated(f"element {element!r} already in the set")
        if self._dependent_mask(independent.mask):
            raise PreconditionViolated("base set is dependent")
        cand = independent.mask | bit
        if not self._dependent_mask(cand):
            raise PreconditionViolated(
                f"adding {element!r} keeps the set independent"
            )
        hits = [
            m for m in self._masks if m & bit and m & ~cand == 0
        ]
        if len(hits) != 1:
            raise TheoremViolation(
                f"fundamental circuit not unique ({len(hits)} candidates); "
                "circuit axioms are broken"
            )
        return ElemSet(self.ground, hits[0])

    def is_simple(self) -> bool:
        """True iff there is no loop (1-circuit) and no parallel pair (2-circuit)."""
        return not (self._sizes and self._sizes[0] <= 2)

    def restrict(self, subset: ElemSet) -> "Matroid":
        """Matroid on the subset whose circuits are those contained in it."""
        self._own(subset)
        sub_labels = subset.labels()
        new_ground = GroundSet(sub_labels)
        index_map = {
            old: new for new, old in enumerate(bit_indices(subset.mask))
        }
        masks = [
            compress_mask(m, index_map)
            for m in self._masks
            if m & ~subset.mask == 0
        ]
        return Matroid(new_ground, masks, validate=False)

    def is_uniform(self, n: int, k: int) -> bool:
        """True iff the circuit family is exactly that of the rank-k uniform
        matroid on n elements (all (k+1)-subsets; empty when k = n)."""
        if self.size != n or k < 0 or k > n:
            return False
        if k == n:
            return len(self.circuits) == 0
        want = comb(n, k + 1)
        return len(self.circuits) == want and all(s == k + 1 for s in self._sizes)

    # -- plumbing ------------------------------------------------------------

    def _own(self, subset: ElemSet) -> None:
        if subset.ground != self.ground:
            raise InvalidParameter("subset belongs to a different ground set")

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Matroid)
            and self.ground == other.ground
            and self._masks == other._masks
        )

    def __hash__(self) -> int:
        return hash((self.ground, self._masks))

    def __repr__(self) -> str:
        tag = f"{self.name!r} " if self.name else ""
        return (
            f"Matroid({tag}|E|={self.size} "
            f"rank={self._rank_full} circuits={len(self.circuits)})"
        )
