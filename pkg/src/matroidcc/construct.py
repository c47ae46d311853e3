"""Matroid constructors: uniform, linear over small prime fields, graphic,
named catalog entries, and seeded random linear instances.

All constructors validate the resulting circuit family, so anything built
here is safe input for the rest of the package.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .core import MAX_GROUND, MAX_SCAN, GroundSet, Matroid
from .errors import CapExceeded, InvalidParameter, UnknownName

FIELD_SIZES = (2, 3, 5, 7)


@dataclass(frozen=True)
class MatrixOverGF:
    """Column-major matrix over GF(p); column j represents element j."""

    p: int
    rows: int
    columns: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if self.p not in FIELD_SIZES:
            raise InvalidParameter(
                f"field size must be one of {FIELD_SIZES}, got {self.p}"
            )
        if self.rows < 0:
            raise InvalidParameter("row count must be non-negative")
        for col in self.columns:
            if len(col) != self.rows:
                raise InvalidParameter("all columns must have the declared length")
            if any(not (0 <= x < self.p) for x in col):
                raise InvalidParameter("entries must be reduced mod p")

    @classmethod
    def from_rows(cls, p: int, rows: Sequence[Sequence[int]]) -> "MatrixOverGF":
        """Build from a row-major listing, reducing entries mod p."""
        if p not in FIELD_SIZES:
            raise InvalidParameter(f"field size must be one of {FIELD_SIZES}, got {p}")
        height = len(rows)
        width = len(rows[0]) if height else 0
        for row in rows:
            if len(row) != width:
                raise InvalidParameter("ragged rows in matrix")
        cols = tuple(
            tuple(rows[i][j] % p for i in range(height)) for j in range(width)
        )
        return cls(p=p, rows=height, columns=cols)


@dataclass(frozen=True)
class GraphSpec:
    """Multigraph given by a vertex count and labelled edges.

    Loops (u == v) and parallel edges are allowed; edge labels must be
    pairwise distinct since they become the matroid's elements.
    """

    vertex_count: int
    edges: tuple[tuple[int, int, str], ...]

    def __post_init__(self) -> None:
        if self.vertex_count < 0:
            raise InvalidParameter("vertex count must be non-negative")
        seen: set[str] = set()
        for u, v, lab in self.edges:
            if not (0 <= u < self.vertex_count and 0 <= v < self.vertex_count):
                raise InvalidParameter(f"edge ({u},{v}) out of vertex range")
            if lab in seen:
                raise InvalidParameter(f"duplicate edge label {lab!r}")
            seen.add(lab)


def default_labels(n: int) -> tuple[str, ...]:
    """Numeric labels "1".."n"."""
    return tuple(str(i + 1) for i in range(n))


def uniform(n: int, k: int, labels: Sequence[str] | None = None) -> Matroid:
    """Rank-k uniform matroid on n elements: circuits are all (k+1)-subsets."""
    if n <= 0 or n > MAX_GROUND or k < 0 or k > n:
        raise InvalidParameter(f"uniform matroid needs 0 <= k <= n <= {MAX_GROUND}")
    ground = GroundSet(labels if labels is not None else default_labels(n))
    if ground.size != n:
        raise InvalidParameter("label count does not match n")
    masks: list[int] = []
    if k < n:
        for combo in itertools.combinations(range(n), k + 1):
            m = 0
            for i in combo:
                m |= 1 << i
            masks.append(m)
    return Matroid(ground, masks, name=f"u{n}_{k}")


def gf_rank(vectors: Iterable[Sequence[int]], p: int) -> int:
    """Rank of a set of vectors over GF(p), by Gaussian elimination."""
    basis: list[list[int]] = []
    pivots: list[int] = []
    for vec in vectors:
        row = [x % p for x in vec]
        for piv, brow in zip(pivots, basis):
            c = row[piv]
            if c:
                row = [(a - c * b) % p for a, b in zip(row, brow)]
        lead = next((i for i, x in enumerate(row) if x), None)
        if lead is None:
            continue
        inv = pow(row[lead], p - 2, p)
        basis.append([(a * inv) % p for a in row])
        pivots.append(lead)
    return len(basis)


def from_matrix(
    matrix: MatrixOverGF,
    labels: Sequence[str] | None = None,
    name: str | None = None,
) -> Matroid:
    """Linear matroid of the matrix columns over GF(p).

    Circuits are found by scanning column subsets in size order and rank
    testing with elimination; a subset free of previously found circuits
    that is dependent is automatically minimal.
    """
    cols = matrix.columns
    n = len(cols)
    if n == 0:
        raise InvalidParameter("matrix has no columns")
    if n > MAX_SCAN:
        raise CapExceeded(
            f"circuit enumeration needs at most {MAX_SCAN} columns, got {n}"
        )
    ground = GroundSet(labels if labels is not None else default_labels(n))
    if ground.size != n:
        raise InvalidParameter("label count does not match the column count")
    p = matrix.p
    full_rank = gf_rank(cols, p)
    found: list[int] = []
    for size in range(1, min(n, full_rank + 1) + 1):
        for combo in itertools.combinations(range(n), size):
            m = 0
            for i in combo:
                m |= 1 << i
            if any(f & ~m == 0 for f in found):
                continue
            if gf_rank([cols[i] for i in combo], p) < size:
                found.append(m)
    return Matroid(ground, found, name=name)


def _is_single_cycle(edges: Sequence[tuple[int, int, str]], chosen: Sequence[int]) -> bool:
    """True iff the chosen edge subset is one cycle: connected, all degrees 2.

    A loop contributes 2 to its endpoint, so loops and parallel pairs come
    out as 1- and 2-element cycles.
    """
    deg: dict[int, int] = {}
    parent: dict[int, int] = {}

    def find(a: int) -> int:
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for idx in chosen:
        u, v, _ = edges[idx]
        deg[u] = deg.get(u, 0) + 1
        deg[v] = deg.get(v, 0) + 1
        parent.setdefault(u, u)
        parent.setdefault(v, v)
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[ru] = rv
    if any(d != 2 for d in deg.values()):
        return False
    roots = {find(x) for x in deg}
    return len(roots) == 1


def from_graph(graph: GraphSpec, name: str | None = None) -> Matroid:
    """Cycle matroid of a multigraph: circuits are the simple cycles."""
    m = len(graph.edges)
    if m == 0:
        raise InvalidParameter("graph has no edges")
    if m > MAX_SCAN:
        raise CapExceeded(
            f"cycle enumeration needs at most {MAX_SCAN} edges, got {m}"
        )
    ground = GroundSet(lab for _, _, lab in graph.edges)
    found: list[int] = []
    for size in range(1, m + 1):
        for combo in itertools.combinations(range(m), size):
            mask = 0
            for i in combo:
                mask |= 1 << i
            if any(f & ~mask == 0 for f in found):
                continue
            if _is_single_cycle(graph.edges, combo):
                found.append(mask)
    return Matroid(ground, found, name=name)


def from_circuits(
    labels: Sequence[str],
    circuits: Iterable[Iterable[str]],
    name: str | None = None,
) -> Matroid:
    """Matroid from an explicit circuit list; validates the axioms."""
    ground = GroundSet(labels)
    return Matroid(ground, [ground.subset(c) for c in circuits], name=name)


def _complete_graph_spec(v: int) -> GraphSpec:
    edges = tuple(
        (a, b, f"e{a + 1}{b + 1}")
        for a, b in itertools.combinations(range(v), 2)
    )
    return GraphSpec(vertex_count=v, edges=edges)


def _wheel3_spec() -> GraphSpec:
    # Hub 0 with spokes to the rim triangle 1-2-3.
    edges = (
        (0, 1, "s1"),
        (0, 2, "s2"),
        (0, 3, "s3"),
        (1, 2, "r12"),
        (2, 3, "r23"),
        (1, 3, "r13"),
    )
    return GraphSpec(vertex_count=4, edges=edges)


def _binary_columns(n_bits: int, count: int) -> tuple[tuple[int, ...], ...]:
    # Columns are the binary expansions of 1..count, most significant bit first.
    return tuple(
        tuple((value >> (n_bits - 1 - i)) & 1 for i in range(n_bits))
        for value in range(1, count + 1)
    )


def _vamos() -> Matroid:
    # Four pairs; every pair-union of the first five listed combinations is a
    # plane, the last one deliberately is not.  No matrix over any field
    # realizes this, so the circuits are given explicitly: the five 4-sets
    # plus every 5-set containing none of them.
    labels = ("a1", "a2", "b1", "b2", "c1", "c2", "d1", "d2")
    quads = (
        ("a1", "a2", "b1", "b2"),
        ("a1", "a2", "c1", "c2"),
        ("a1", "a2", "d1", "d2"),
        ("b1", "b2", "c1", "c2"),
        ("b1", "b2", "d1", "d2"),
    )
    quad_sets = [frozenset(q) for q in quads]
    circuits: list[tuple[str, ...]] = list(quads)
    for five in itertools.combinations(labels, 5):
        fs = frozenset(five)
        if not any(q <= fs for q in quad_sets):
            circuits.append(five)
    return from_circuits(labels, circuits, name="vamos")


def named(name: str) -> Matroid:
    """A standard matroid by name.

    Known names: fano, nonfano, k4, k5, wheel3, vamos.
    """
    key = name.lower()
    if key == "fano":
        matrix = MatrixOverGF(p=2, rows=3, columns=_binary_columns(3, 7))
        return from_matrix(matrix, name="fano")
    if key == "nonfano":
        # Same seven 0/1 columns read over GF(3): the three "diagonal" points
        # become independent and one line of the plane disappears.
        matrix = MatrixOverGF(p=3, rows=3, columns=_binary_columns(3, 7))
        return from_matrix(matrix, name="nonfano")
    if key == "k4":
        return from_graph(_complete_graph_spec(4), name="k4")
    if key == "k5":
        return from_graph(_complete_graph_spec(5), name="k5")
    if key == "wheel3":
        return from_graph(_wheel3_spec(), name="wheel3")
    if key == "vamos":
        return _vamos()
    raise UnknownName(f"no catalog matroid named {name!r}")


NAMED_CATALOG = ("fano", "nonfano", "k4", "k5", "wheel3", "vamos")

# 64-bit linear congruential generator (Knuth's MMIX multiplier/increment).
# Each matrix entry consumes one step, column-major; the drawn value is the
# top 31 bits of the state reduced mod p.  Fixed here so seeded catalogs are
# bit-identical across platforms and Python versions.
_LCG_MULT = 6364136223846793005
_LCG_INC = 1442695040888963407
_MASK64 = (1 << 64) - 1


def lcg_stream(seed: int) -> Iterator[int]:
    """Infinite stream of 31-bit values from the documented 64-bit LCG."""
    state = seed & _MASK64
    while True:
        state = (state * _LCG_MULT + _LCG_INC) & _MASK64
        yield state >> 33


def random_matrix(seed: int, n: int, r: int, p: int) -> MatrixOverGF:
    """Seed-stable random r x n matrix over GF(p), entries column-major."""
    if p not in FIELD_SIZES:
        raise InvalidParameter(f"field size must be one of {FIELD_SIZES}, got {p}")
    if not (0 <= r <= n <= 14):
        raise InvalidParameter("random instances need 0 <= r <= n <= 14")
    stream = lcg_stream(seed)
    columns = tuple(
        tuple(next(stream) % p for _ in range(r)) for _ in range(n)
    )
    return MatrixOverGF(p=p, rows=r, columns=columns)


def random_linear(seed: int, n: int, r: int, p: int) -> Matroid:
    """Matroid of a seed-stable random r x n matrix over GF(p)."""
    matrix = random_matrix(seed, n, r, p)
    return from_matrix(matrix, name=f"rand_s{seed}_n{n}_r{r}_p{p}")


def graph_components(graph: GraphSpec) -> int:
    """Connected components of the graph (isolated vertices count)."""
    parent = list(range(graph.vertex_count))

    def find(a: int) -> int:
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for u, v, _ in graph.edges:
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[ru] = rv
    return len({find(x) for x in range(graph.vertex_count)})
