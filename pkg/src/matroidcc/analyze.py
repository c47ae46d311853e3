"""Circuit-cocircuit intersection analysis.

This module carries the substantive machinery: brute-force intersection
enumeration (the oracle everything else is checked against), extraction of
a verified minor in which the intersection X becomes both a circuit and a
cocircuit, the property suites over that minor's special circuit families,
and the constructive size-(k-2) witnesses for k = 4, 5, 6, lifted back to
the original matroid.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

from .core import ElemSet, Matroid, bit_indices
from .errors import (
    CapExceeded,
    ExtractionFailed,
    InvalidParameter,
    LiftFailed,
    PreconditionViolated,
    TheoremViolation,
)
from .transform import MinorSpec, cocircuits, contract, delete, dual, minor

DEFAULT_PAIR_CAP = 10_000_000


@dataclass(frozen=True)
class CCIntersection:
    """A circuit, a cocircuit, and their (nonempty) intersection."""

    circuit: ElemSet
    cocircuit: ElemSet
    intersection: ElemSet
    size: int

    def __post_init__(self) -> None:
        if (self.circuit & self.cocircuit) != self.intersection:
            raise InvalidParameter("intersection field does not match the pair")
        if self.size != len(self.intersection):
            raise InvalidParameter("size field does not match the intersection")
        if self.size == 0:
            raise InvalidParameter("disjoint circuit/cocircuit pair")
        if self.size == 1:
            raise TheoremViolation(
                "circuit-cocircuit intersection of size 1; "
                "a circuit and a cocircuit can never meet in a single element"
            )

    @classmethod
    def of(cls, circuit: ElemSet, cocircuit: ElemSet) -> "CCIntersection":
        meet = circuit & cocircuit
        return cls(circuit, cocircuit, meet, len(meet))


def _pair_lists(m: Matroid, cap: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    co = cocircuits(m)
    total = len(m.circuits) * len(co)
    if total > cap:
        raise CapExceeded(
            f"{total} circuit-cocircuit pairs exceed the cap of {cap}"
        )
    return m.circuits.masks, co.masks


def cc_intersections(m: Matroid, cap: int = DEFAULT_PAIR_CAP) -> list[CCIntersection]:
    """Every intersecting circuit/cocircuit pair, in canonical pair order.

    This is the brute-force oracle the constructive machinery is checked
    against; order is (circuit index, cocircuit index) over the canonical
    families.
    """
    cmasks, dmasks = _pair_lists(m, cap)
    g = m.ground
    out: list[CCIntersection] = []
    for cm in cmasks:
        for dm in dmasks:
            meet = cm & dm
            if meet:
                out.append(
                    CCIntersection(
                        ElemSet(g, cm),
                        ElemSet(g, dm),
                        ElemSet(g, meet),
                        meet.bit_count(),
                    )
                )
    return out


def achieved_sizes(m: Matroid, cap: int = DEFAULT_PAIR_CAP) -> tuple[int, ...]:
    """Sorted sizes |C & D| over intersecting pairs; can never contain 1."""
    cmasks, dmasks = _pair_lists(m, cap)
    sizes: set[int] = set()
    for cm in cmasks:
        for dm in dmasks:
            meet = cm & dm
            if meet:
                sizes.add(meet.bit_count())
    if 1 in sizes:
        raise TheoremViolation(
            "achieved intersection size 1; duality machinery is broken"
        )
    return tuple(sorted(sizes))


def find_intersection_of_size(
    m: Matroid, k: int, cap: int = DEFAULT_PAIR_CAP
) -> CCIntersection | None:
    """Canonical-first pair with |C & D| = k, or None."""
    cmasks, dmasks = _pair_lists(m, cap)
    g = m.ground
    for cm in cmasks:
        for dm in dmasks:
            meet = cm & dm
            if meet and meet.bit_count() == k:
                return CCIntersection(
                    ElemSet(g, cm), ElemSet(g, dm), ElemSet(g, meet), k
                )
    return None


# ---------------------------------------------------------------------------
# Minor extraction
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class OxleyMinor:
    """A minor in which the intersection X is both a circuit and a cocircuit.

    Fields live over the minor's own ground set except ``spec``, which is
    in the parent's coordinates; surviving elements keep their labels, so
    sets translate between the two by label.
    """

    spec: MinorSpec
    minor: Matroid
    x: ElemSet
    y: ElemSet
    k: int

    def invariant_failures(self) -> tuple[str, ...]:
        """Re-verify every defining invariant; empty tuple means all hold."""
        n = self.minor
        k = self.k
        bad: list[str] = []
        if len(self.x) != k or k < 4:
            bad.append("|X| = k >= 4")
        if (self.x | self.y).mask != n.ground.full_mask or (self.x & self.y):
            bad.append("Y = E(N) - X")
        if len(self.y) != k - 2:
            bad.append("|Y| = k - 2")
        if n.size != 2 * k - 2:
            bad.append("|E(N)| = 2k - 2")
        if n.rank() != k - 1:
            bad.append("rank(N) = k - 1")
        if dual(n).rank() != k - 1:
            bad.append("dual rank(N) = k - 1")
        if self.x not in n.circuits:
            bad.append("X is a circuit of N")
        if self.x not in cocircuits(n):
            bad.append("X is a cocircuit of N")
        if not n.is_simple():
            bad.append("N is simple")
        if not n.restrict(self.x).is_uniform(k, k - 1):
            bad.append("N|X is the rank-(k-1) uniform matroid on k elements")
        if not n.restrict(self.y).is_uniform(k - 2, k - 2):
            bad.append("N|Y is free on k - 2 elements")
        if n.closure(self.y) != self.y:
            bad.append("Y is a flat of N")
        return tuple(bad)


_CONTRACT, _DELETE, _KEEP = "contract", "delete", "keep"
# Branch preferences per element class: contract what the circuit loses,
# delete what neither the circuit nor the cocircuit uses, delete what the
# cocircuit loses.
_CHOICES_IN_CIRCUIT = (_CONTRACT, _DELETE, _KEEP)
_CHOICES_OUTSIDE = (_DELETE, _KEEP, _CONTRACT)
_CHOICES_IN_COCIRCUIT = (_DELETE, _CONTRACT, _KEEP)


def _search_viable(
    cur: Matroid, x_mask: int, k: int, removals_left: int
) -> bool:
    """Cheap necessary conditions for the current minor to still reach a
    state where X is a circuit and a cocircuit with rank and corank k - 1.

    All four tests are monotone: once false on a state they are false on
    every minor of it that keeps X, so pruning is sound.
    """
    r_cur = cur.rank()
    co_cur = cur.size - r_cur
    # Each removal changes rank (resp. corank) by at most one, downwards.
    if not (r_cur - removals_left <= k - 1 <= r_cur):
        return False
    if not (co_cur - removals_left <= k - 1 <= co_cur):
        return False
    full = cur.ground.full_mask
    rest = full & ~x_mask
    # X must be able to become dependent: contracting everything outside X
    # realizes the minimum achievable rank of X.
    if cur.rank() - cur.rank(ElemSet(cur.ground, rest)) == k:
        return False
    # No circuit and no cocircuit may sit strictly inside X; both survive
    # every further operation on non-X elements.
    for xi in bit_indices(x_mask):
        sub = x_mask & ~(1 << xi)
        if cur._dependent_mask(sub):
            return False
        if cur.rank(ElemSet(cur.ground, rest | (1 << xi))) < r_cur:
            return False
    return True


def oxley_minor(m: Matroid, circuit: ElemSet, cocircuit: ElemSet) -> OxleyMinor:
    """Extract a verified minor in which X = circuit & cocircuit (|X| >= 4)
    is both a circuit and a cocircuit and rank = corank = |X| - 1.

    Deterministic backtracking over minor specs: never touch X; decide
    elements one at a time in canonical order grouped by class (circuit
    side first, then elements outside both, then the cocircuit side), with
    class-specific action preferences; prune states that provably cannot
    reach the target; verify the full invariant list on every complete
    state and return the first that passes.
    """
    if circuit not in m.circuits:
        raise PreconditionViolated("first argument is not a circuit")
    if cocircuit not in cocircuits(m):
        raise PreconditionViolated("second argument is not a cocircuit")
    x = circuit & cocircuit
    k = len(x)
    if k < 4:
        raise PreconditionViolated(f"|X| = {k}; extraction needs |X| >= 4")
    target = 2 * k - 2
    removals = m.size - target
    if removals < 0:
        # Impossible for a valid matroid: rank >= k-1 and corank >= k-1
        # force |E| >= 2k-2.
        raise TheoremViolation("ground set smaller than rank + corank bound")

    outside_both = (circuit | cocircuit).complement()
    order: list[tuple[str, tuple[str, str, str]]] = []
    for label in (circuit - x).labels():
        order.append((label, _CHOICES_IN_CIRCUIT))
    for label in outside_both.labels():
        order.append((label, _CHOICES_OUTSIDE))
    for label in (cocircuit - x).labels():
        order.append((label, _CHOICES_IN_COCIRCUIT))
    keeps = len(order) - removals

    x_labels = x.labels()
    seen: set[tuple[int, int]] = set()
    states_examined = 0

    def verify(
        cur: Matroid, del_labels: tuple[str, ...], con_labels: tuple[str, ...]
    ) -> OxleyMinor | None:
        nonlocal states_examined
        spec = MinorSpec(m.ground.subset(del_labels), m.ground.subset(con_labels))
        key = (spec.deleted.mask, spec.contracted.mask)
        if key in seen:
            return None
        seen.add(key)
        states_examined += 1
        x_n = cur.ground.subset(x_labels)
        candidate = OxleyMinor(
            spec=spec, minor=cur, x=x_n, y=x_n.complement(), k=k
        )
        if candidate.invariant_failures():
            return None
        # The incremental build must agree with applying the spec in one go.
        if minor(m, spec) != cur:
            raise TheoremViolation(
                "incrementally built minor differs from its spec; "
                "minor machinery is buggy"
            )
        return candidate

    def dfs(
        pos: int,
        cur: Matroid,
        removals_left: int,
        keeps_left: int,
        del_labels: tuple[str, ...],
        con_labels: tuple[str, ...],
    ) -> OxleyMinor | None:
        if not _search_viable(
            cur, cur.ground.subset(x_labels).mask, k, removals_left
        ):
            return None
        if removals_left == 0:
            # Everything still undecided is kept; the minor is already final.
            return verify(cur, del_labels, con_labels)
        label, choices = order[pos]
        for choice in choices:
            if choice == _KEEP:
                if keeps_left == 0:
                    continue
                found = dfs(
                    pos + 1, cur, removals_left, keeps_left - 1, del_labels, con_labels
                )
            else:
                single = cur.ground.singleton(label)
                if choice == _DELETE:
                    found = dfs(
                        pos + 1,
                        delete(cur, single),
                        removals_left - 1,
                        keeps_left,
                        del_labels + (label,),
                        con_labels,
                    )
                else:
                    found = dfs(
                        pos + 1,
                        contract(cur, single),
                        removals_left - 1,
                        keeps_left,
                        del_labels,
                        con_labels + (label,),
                    )
            if found is not None:
                return found
        return None

    if keeps < 0:
        raise TheoremViolation("more removals required than elements available")
    result = dfs(0, m, removals, keeps, (), ())
    if result is None:
        raise ExtractionFailed(
            f"no minor of {m!r} realizes X={x!r} as circuit and cocircuit "
            f"with rank {k - 1} after {states_examined} complete states; "
            "this contradicts a guaranteed existence and indicates a bug"
        )
    return result


# ---------------------------------------------------------------------------
# Property suites over an extracted minor
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CeFamily:
    """Circuits of the minor whose only element outside X is ``element``."""

    element: str
    members: tuple[ElemSet, ...]


def ce_family(ox: OxleyMinor, element: str) -> CeFamily:
    """All circuits C of the minor with C - X = {element}; at least two."""
    if element not in ox.y:
        raise PreconditionViolated(f"element {element!r} is not in Y")
    n = ox.minor
    ebit = 1 << n.ground.index(element)
    allowed = ox.x.mask | ebit
    members = tuple(
        c for c in n.circuits if c.mask & ebit and c.mask & ~allowed == 0
    )
    if len(members) < 2:
        raise TheoremViolation(
            f"only {len(members)} circuit(s) leave X exactly at {element!r}; "
            "at least two are guaranteed"
        )
    return CeFamily(element=element, members=members)


@dataclass
class PropertyReport:
    """Result of one property suite: pass/fail plus exercise counts."""

    name: str
    passed: bool
    exercised: dict[str, int] = field(default_factory=dict)
    failure: str | None = None


def check_ce_families(ox: OxleyMinor) -> PropertyReport:
    """Laws of the families C_e (circuits leaving X at a single element e):
    member size and rank bounds, at least two members, pairwise unions
    covering X + e, third members containing X minus any pair's meet, and
    the two-member criterion |C_e| = 2 iff the pair meets only in e.
    """
    n = ox.minor
    k = ox.k
    stats = {
        "families": 0,
        "families_size_2": 0,
        "families_size_gt_2": 0,
        "pair_union_checks": 0,
        "third_member_checks": 0,
    }

    def fail(msg: str) -> PropertyReport:
        return PropertyReport("ce_families", False, stats, msg)

    for element in ox.y.labels():
        ebit = 1 << n.ground.index(element)
        allowed = ox.x.mask | ebit
        members = [
            c for c in n.circuits if c.mask & ebit and c.mask & ~allowed == 0
        ]
        stats["families"] += 1
        for c in members:
            if not 3 <= len(c) <= k:
                return fail(f"member {c!r} of C_{element} has size {len(c)}")
            rc = n.rank(c)
            if not 2 <= rc <= k - 1:
                return fail(f"member {c!r} of C_{element} has rank {rc}")
        if len(members) < 2:
            return fail(f"|C_{element}| = {len(members)} < 2")
        if len(members) == 2:
            stats["families_size_2"] += 1
        else:
            stats["families_size_gt_2"] += 1
        union_target = ox.x.mask | ebit
        pair_meets_only_e = False
        for i in range(len(members)):
            for j in range(i + 1, len(members)):
                c1, c2 = members[i], members[j]
                stats["pair_union_checks"] += 1
                if (c1.mask | c2.mask) != union_target:
                    return fail(
                        f"{c1!r} and {c2!r} in C_{element} do not union to X + e"
                    )
                meet = c1.mask & c2.mask
                if meet == ebit:
                    pair_meets_only_e = True
                required = ox.x.mask & ~meet
                for c in members:
                    if c is c1 or c is c2:
                        continue
                    stats["third_member_checks"] += 1
                    if required & ~(c.mask & ~ebit):
                        return fail(
                            f"{c!r} misses X - ({c1!r} & {c2!r}) in C_{element}"
                        )
        if (len(members) == 2) != pair_meets_only_e:
            return fail(
                f"two-member criterion fails for C_{element}: "
                f"size {len(members)}, pair-meets-only-e {pair_meets_only_e}"
            )
    return PropertyReport("ce_families", True, stats)


def check_circuit_pairs(ox: OxleyMinor) -> PropertyReport:
    """Laws for intersecting circuit pairs that each leave X at one element:
    (1) when X is not covered by the union, the X-parts nest or some circuit
    squeezes strictly between the symmetric difference and the union;
    (2) when one X-part strictly contains the other, the Y-parts differ and
    a circuit strictly inside the union carries the union's Y-part and the
    larger side's difference.
    """
    n = ox.minor
    stats = {"qualifying_pairs": 0, "clause1_applications": 0, "clause2_applications": 0}
    qual = [c for c in n.circuits if len(c & ox.y) == 1]
    masks = n.circuits.masks

    def fail(msg: str) -> PropertyReport:
        return PropertyReport("circuit_pairs", False, stats, msg)

    for i in range(len(qual)):
        for j in range(i + 1, len(qual)):
            c, cp = qual[i], qual[j]
            if not c.mask & cp.mask:
                continue
            stats["qualifying_pairs"] += 1
            union = c.mask | cp.mask
            cx, cpx = c.mask & ox.x.mask, cp.mask & ox.x.mask
            if ox.x.mask & ~union:
                stats["clause1_applications"] += 1
                nested = cx & ~cpx == 0 or cpx & ~cx == 0
                if not nested:
                    sym = c.mask ^ cp.mask
                    ok = any(
                        sym & ~m == 0 and m & ~union == 0 and m != union
                        for m in masks
                    )
                    if not ok:
                        return fail(
                            f"no nesting and no squeezed circuit for {c!r}, {cp!r}"
                        )
            for a, b in ((c, cp), (cp, c)):
                ax, bx = a.mask & ox.x.mask, b.mask & ox.x.mask
                if bx & ~ax == 0 and bx != ax:
                    stats["clause2_applications"] += 1
                    if (a.mask & ox.y.mask) == (b.mask & ox.y.mask):
                        return fail(
                            f"{a!r} and {b!r} share their Y-part despite "
                            "strictly nested X-parts"
                        )
                    uni = a.mask | b.mask
                    uni_y = uni & ox.y.mask
                    diff = a.mask & ~b.mask
                    ok = any(
                        m & ~uni == 0
                        and m != uni
                        and (m & ox.y.mask) == uni_y
                        and diff & ~m == 0
                        for m in masks
                    )
                    if not ok:
                        return fail(
                            f"no witness circuit inside {a!r} | {b!r} carrying "
                            "its Y-part and the difference"
                        )
    return PropertyReport("circuit_pairs", True, stats)


def check_rank2_circuits(ox: OxleyMinor) -> PropertyReport:
    """Laws for rank-2 circuits of the minor: each is a 3-element flat with
    exactly one Y element; for k >= 5, two of them are disjoint or meet in
    one element with Y-parts differing and symmetric difference a 4-circuit.
    """
    n = ox.minor
    stats = {"rank2_circuits": 0, "pairs_checked": 0, "intersecting_pairs": 0}
    r2 = [c for c in n.circuits if len(c) == 3]

    def fail(msg: str) -> PropertyReport:
        return PropertyReport("rank2_circuits", False, stats, msg)

    for c in r2:
        stats["rank2_circuits"] += 1
        if n.rank(c) != 2:
            return fail(f"3-circuit {c!r} does not have rank 2")
        if len(c & ox.y) != 1:
            return fail(f"rank-2 circuit {c!r} does not meet Y in one element")
        if n.closure(c) != c:
            return fail(f"rank-2 circuit {c!r} is not a flat")
    if ox.k >= 5:
        for i in range(len(r2)):
            for j in range(i + 1, len(r2)):
                c, cp = r2[i], r2[j]
                stats["pairs_checked"] += 1
                meet = c & cp
                if not meet:
                    continue
                stats["intersecting_pairs"] += 1
                if len(meet) != 1:
                    return fail(f"rank-2 circuits {c!r}, {cp!r} meet in {meet!r}")
                if len((c | cp) & ox.y) != 2:
                    return fail(
                        f"union of {c!r}, {cp!r} does not meet Y in two elements"
                    )
                sym = c ^ cp
                if len(sym) != 4 or sym not in n.circuits:
                    return fail(
                        f"symmetric difference {sym!r} of {c!r}, {cp!r} "
                        "is not a 4-circuit"
                    )
    return PropertyReport("rank2_circuits", True, stats)


# ---------------------------------------------------------------------------
# Constructive witnesses
# ---------------------------------------------------------------------------


def witness_k4(ox: OxleyMinor) -> CCIntersection:
    """Size-2 intersection inside a k=4 minor.

    Y + x1 is independent (Y is an independent flat), so Y + {x1, x2} is
    dependent and holds a unique circuit through x2; that circuit must also
    contain x1, and it meets the cocircuit X in exactly {x1, x2}.
    """
    if ox.k != 4:
        raise PreconditionViolated(f"k = {ox.k}; this witness is for k = 4")
    n = ox.minor
    xs = ox.x.labels()
    x1, x2 = xs[0], xs[1]
    base = ox.y | n.ground.singleton(x1)
    if not n.is_independent(base):
        raise TheoremViolation(f"Y + {{{x1}}} is dependent in the extracted minor")
    circ = n.fundamental_circuit(base, x2)
    if x1 not in circ:
        raise TheoremViolation(
            f"the circuit in Y + {{{x1},{x2}}} through {x2} avoids {x1}"
        )
    meet = circ & ox.x
    if meet.labels() != (x1, x2):
        raise TheoremViolation(f"witness circuit meets X in {meet!r}, not {{x1,x2}}")
    return CCIntersection.of(circ, ox.x)


def witness_k5(ox: OxleyMinor) -> CCIntersection:
    """Size-3 intersection inside a k=5 minor, following the case split.

    (a) Any size-4 circuit or cocircuit with a single Y element pairs with
        X directly.
    (b) Otherwise pick a size-5 cocircuit C0 with one Y element (it misses
        exactly one x1 of X), take another Y element y2, and search the
        family C_{y2} for a size-5 circuit containing x1, which is
        guaranteed to exist; it meets C0 in exactly three elements.
    """
    if ox.k != 5:
        raise PreconditionViolated(f"k = {ox.k}; this witness is for k = 5")
    n = ox.minor
    co = cocircuits(n)
    # Branch (a): a size-4 circuit or cocircuit with exactly one Y element.
    for c in n.circuits:
        if len(c) == 4 and len(c & ox.y) == 1:
            found = CCIntersection.of(c, ox.x)
            if found.size != 3:
                raise TheoremViolation("size-4 circuit does not meet X in 3")
            return found
    for d in co:
        if len(d) == 4 and len(d & ox.y) == 1:
            found = CCIntersection.of(ox.x, d)
            if found.size != 3:
                raise TheoremViolation("size-4 cocircuit does not meet X in 3")
            return found
    # Branch (b): all one-Y circuits/cocircuits have size 3 or 5.
    c0 = next(
        (d for d in co if len(d) == 5 and len(d & ox.y) == 1),
        None,
    )
    if c0 is None:
        raise TheoremViolation(
            "no size-5 cocircuit with a single Y element; one is guaranteed"
        )
    y1 = (c0 & ox.y).labels()[0]
    missing = ox.x - c0
    if len(missing) != 1:
        raise TheoremViolation(f"cocircuit {c0!r} misses {missing!r} of X, not one")
    x1 = missing.labels()[0]
    y2 = next(lab for lab in ox.y.labels() if lab != y1)
    fam = ce_family(ox, y2)
    c1 = next((c for c in fam.members if x1 in c), None)
    if c1 is None:
        raise TheoremViolation(
            f"no circuit leaving X at {y2} contains {x1}; one is guaranteed"
        )
    if len(c1) == 5:
        chosen = c1
    elif len(c1) == 3:
        chosen = next(
            (c for c in fam.members if len(c) == 5 and x1 in c), None
        )
        if chosen is None:
            raise TheoremViolation(
                f"no size-5 circuit through {x1} leaving X at {y2}; "
                "one is guaranteed"
            )
    else:
        raise TheoremViolation(
            f"one-Y circuit {c1!r} of size {len(c1)} after size-4 exclusion"
        )
    found = CCIntersection.of(chosen, c0)
    if found.size != 3:
        raise TheoremViolation(
            f"witness pair meets in {found.size} elements instead of 3"
        )
    return found


# ---------------------------------------------------------------------------
# Lifting and witness chains
# ---------------------------------------------------------------------------


def lift_intersection(
    m: Matroid,
    spec: MinorSpec,
    circuit_n: ElemSet,
    cocircuit_n: ElemSet,
) -> tuple[ElemSet, ElemSet]:
    """Lift a minor's circuit/cocircuit pair to the parent.

    Canonical-order scan: the lifted circuit avoids the deleted set and
    reduces to the minor circuit after contraction; dually for the
    cocircuit.  Any such pair meets in exactly the minor intersection.
    """
    sub = minor(m, spec)
    if circuit_n not in sub.circuits:
        raise PreconditionViolated("lift input is not a circuit of the minor")
    if cocircuit_n not in cocircuits(sub):
        raise PreconditionViolated("lift input is not a cocircuit of the minor")
    if not circuit_n & cocircuit_n:
        raise PreconditionViolated("lift inputs are disjoint")

    del_mask = spec.deleted.mask
    con_mask = spec.contracted.mask
    cn = circuit_n.to_ground(m.ground)
    dn = cocircuit_n.to_ground(m.ground)

    lifted_c = next(
        (
            c
            for c in m.circuits
            if c.mask & del_mask == 0 and c.mask & ~con_mask == cn.mask
        ),
        None,
    )
    if lifted_c is None:
        raise LiftFailed(f"no parent circuit lifts {circuit_n!r}")
    lifted_d = next(
        (
            d
            for d in cocircuits(m)
            if d.mask & con_mask == 0 and d.mask & ~del_mask == dn.mask
        ),
        None,
    )
    if lifted_d is None:
        raise LiftFailed(f"no parent cocircuit lifts {cocircuit_n!r}")
    if (lifted_c & lifted_d) != (cn & dn):
        raise TheoremViolation(
            "lifted pair changed the intersection; lifting is buggy"
        )
    return lifted_c, lifted_d


@dataclass(frozen=True)
class ExtractionStep:
    kind = "extraction"
    minor: OxleyMinor


@dataclass(frozen=True)
class OracleStep:
    kind = "oracle-size-4"
    found: CCIntersection


@dataclass(frozen=True)
class WitnessStep:
    kind = "constructive-witness"
    found: CCIntersection


@dataclass(frozen=True)
class LiftStep:
    kind = "lift"
    circuit: ElemSet
    cocircuit: ElemSet


@dataclass(frozen=True)
class WitnessChain:
    """Audit trail from a size-k intersection down to size k - 2."""

    k: int
    steps: tuple
    final: CCIntersection


def witness_k6(
    m: Matroid,
    circuit: ElemSet,
    cocircuit: ElemSet,
    cap: int = DEFAULT_PAIR_CAP,
) -> WitnessChain:
    """Chain for |C & D| = 6: extract the minor (at most ten elements),
    find a size-4 intersection inside it by oracle enumeration, and lift."""
    if len(circuit & cocircuit) != 6:
        raise PreconditionViolated("witness_k6 needs an intersection of size 6")
    ox = oxley_minor(m, circuit, cocircuit)
    inner = find_intersection_of_size(ox.minor, 4, cap)
    if inner is None:
        raise TheoremViolation(
            "no size-4 intersection inside the k=6 minor; one is guaranteed"
        )
    lifted_c, lifted_d = lift_intersection(m, ox.spec, inner.circuit, inner.cocircuit)
    final = CCIntersection.of(lifted_c, lifted_d)
    if final.size != 4:
        raise TheoremViolation(f"lifted size {final.size} instead of 4")
    return WitnessChain(
        k=6,
        steps=(ExtractionStep(ox), OracleStep(inner), LiftStep(lifted_c, lifted_d)),
        final=final,
    )


# ---------------------------------------------------------------------------
# Whole-matroid verification
# ---------------------------------------------------------------------------


@dataclass
class SuiteResult:
    status: str  # "pass" | "fail" | "vacuous"
    exercised: dict[str, int]
    failure: str | None = None


@dataclass
class ConjectureEntry:
    k: int
    oracle_ok: bool
    chain: WitnessChain


@dataclass
class ConjectureReport:
    """Per-matroid verification outcome for the achieved sizes 4, 5, 6."""

    name: str
    elements: int
    rank: int
    circuit_count: int
    cocircuit_count: int
    achieved: tuple[int, ...]
    entries: tuple[ConjectureEntry, ...]
    out_of_scope: tuple[tuple[int, bool], ...]
    suites: dict[str, SuiteResult]

    @property
    def vacuous(self) -> bool:
        return not self.entries and not self.out_of_scope


_SUITES: tuple[tuple[str, Callable[[OxleyMinor], PropertyReport]], ...] = (
    ("ce_families", check_ce_families),
    ("circuit_pairs", check_circuit_pairs),
    ("rank2_circuits", check_rank2_circuits),
)


def _aggregate_suites(minors: list[OxleyMinor]) -> dict[str, SuiteResult]:
    out: dict[str, SuiteResult] = {}
    for suite_name, check in _SUITES:
        if not minors:
            out[suite_name] = SuiteResult("vacuous", {})
            continue
        totals: dict[str, int] = {}
        failure: str | None = None
        ok = True
        for ox in minors:
            report = check(ox)
            for key, count in report.exercised.items():
                totals[key] = totals.get(key, 0) + count
            if not report.passed and failure is None:
                ok = False
                failure = report.failure
        out[suite_name] = SuiteResult("pass" if ok else "fail", totals, failure)
    return out


def verify_conjecture(
    m: Matroid,
    cap: int = DEFAULT_PAIR_CAP,
    name: str | None = None,
) -> ConjectureReport:
    """Check, for every achieved size k in {4, 5, 6}, that size k - 2 is
    achieved (oracle) and produce a verified constructive chain ending in
    a size-(k-2) intersection of this matroid.  Achieved sizes beyond 6
    are reported but not asserted.  Every extracted minor also runs the
    three property suites.
    """
    label = name or m.name or "matroid"
    sizes = achieved_sizes(m, cap)
    entries: list[ConjectureEntry] = []
    minors: list[OxleyMinor] = []
    for k in (4, 5, 6):
        if k not in sizes:
            continue
        oracle_ok = (k - 2) in sizes
        if not oracle_ok:
            raise TheoremViolation(
                f"{label}: size {k} achieved but size {k - 2} is not; "
                "this would disprove the theorem and indicates a bug"
            )
        first = find_intersection_of_size(m, k, cap)
        assert first is not None
        if k == 6:
            chain = witness_k6(m, first.circuit, first.cocircuit, cap)
            ox = chain.steps[0].minor
        else:
            ox = oxley_minor(m, first.circuit, first.cocircuit)
            inner = witness_k4(ox) if k == 4 else witness_k5(ox)
            lifted_c, lifted_d = lift_intersection(
                m, ox.spec, inner.circuit, inner.cocircuit
            )
            final = CCIntersection.of(lifted_c, lifted_d)
            if final.size != k - 2:
                raise TheoremViolation(
                    f"{label}: chain for k={k} ended at size {final.size}"
                )
            chain = WitnessChain(
                k=k,
                steps=(
                    ExtractionStep(ox),
                    WitnessStep(inner),
                    LiftStep(lifted_c, lifted_d),
                ),
                final=final,
            )
        minors.append(ox)
        entries.append(ConjectureEntry(k=k, oracle_ok=oracle_ok, chain=chain))
    co_count = len(cocircuits(m))
    return ConjectureReport(
        name=label,
        elements=m.size,
        rank=m.rank(),
        circuit_count=len(m.circuits),
        cocircuit_count=co_count,
        achieved=sizes,
        entries=tuple(entries),
        out_of_scope=tuple((k, (k - 2) in sizes) for k in sizes if k >= 7),
        suites=_aggregate_suites(minors),
    )
