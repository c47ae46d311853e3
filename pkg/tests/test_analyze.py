"""Intersection enumeration, minor extraction, property suites, witnesses."""

from __future__ import annotations

import pytest

import matroidcc as mc
from matroidcc import (
    MinorSpec,
    achieved_sizes,
    cc_intersections,
    ce_family,
    check_ce_families,
    check_circuit_pairs,
    check_rank2_circuits,
    cocircuits,
    find_intersection_of_size,
    lift_intersection,
    oxley_minor,
    verify_conjecture,
    witness_k4,
    witness_k5,
    witness_k6,
)


def first_pair(m: mc.Matroid, k: int) -> mc.CCIntersection:
    found = find_intersection_of_size(m, k)
    assert found is not None
    return found


def extract(m: mc.Matroid, k: int) -> mc.OxleyMinor:
    cc = first_pair(m, k)
    return oxley_minor(m, cc.circuit, cc.cocircuit)


# ---------------------------------------------------------------------------
# Oracle enumeration
# ---------------------------------------------------------------------------


def test_achieved_sizes_examples():
    assert achieved_sizes(mc.uniform(4, 2)) == (2, 3)
    assert achieved_sizes(mc.named("fano")) == (2, 4)
    assert achieved_sizes(mc.named("k4")) == (2, 4)
    assert achieved_sizes(mc.uniform(10, 5)) == (2, 3, 4, 5, 6)
    # The lone circuit of the triangle meets every 2-element cocircuit in
    # exactly two elements.
    assert achieved_sizes(mc.uniform(3, 2)) == (2,)


def test_cc_intersections_enumerates_all_meeting_pairs():
    m = mc.named("fano")
    pairs = cc_intersections(m)
    co = cocircuits(m)
    expected = sum(
        1 for c in m.circuits for d in co if c.mask & d.mask
    )
    assert len(pairs) == expected
    for cc in pairs:
        assert cc.circuit in m.circuits
        assert cc.cocircuit in co
        assert cc.intersection == cc.circuit & cc.cocircuit
        assert cc.size >= 2


def test_cc_intersections_cap():
    with pytest.raises(mc.CapExceeded):
        cc_intersections(mc.uniform(10, 5), cap=100)


def test_find_intersection_of_size():
    f7 = mc.named("fano")
    found = first_pair(f7, 4)
    # The canonical-first size-4 pair is a 4-circuit with itself as the
    # matching cocircuit (the complement of the first line).
    assert found.circuit == found.cocircuit
    assert len(found.circuit) == 4
    assert find_intersection_of_size(f7, 4) == found  # deterministic
    assert find_intersection_of_size(f7, 3) is None
    assert find_intersection_of_size(f7, 1) is None


# ---------------------------------------------------------------------------
# Extraction
# ---------------------------------------------------------------------------


def test_extraction_when_the_matroid_is_already_minimal():
    u105 = mc.uniform(10, 5)
    cc = first_pair(u105, 6)
    ox = oxley_minor(u105, cc.circuit, cc.cocircuit)
    assert ox.minor == u105
    assert ox.spec.is_empty()
    assert ox.k == 6
    assert ox.invariant_failures() == ()


def test_extraction_u63():
    u63 = mc.uniform(6, 3)
    cc = first_pair(u63, 4)
    ox = oxley_minor(u63, cc.circuit, cc.cocircuit)
    assert ox.minor == u63
    assert ox.y == ox.x.complement()
    assert ox.invariant_failures() == ()


def test_extraction_fano():
    ox = extract(mc.named("fano"), 4)
    assert (ox.minor.size, ox.minor.rank(), ox.k) == (6, 3, 4)
    assert ox.invariant_failures() == ()
    # X stays a circuit and a cocircuit of the minor.
    assert ox.x in ox.minor.circuits
    assert ox.x in cocircuits(ox.minor)


@pytest.mark.parametrize(
    "name,k",
    [("k4", 4), ("k5", 4), ("vamos", 4), ("vamos", 5), ("nonfano", 4)],
)
def test_extraction_across_named_matroids(name, k):
    ox = extract(mc.named(name), k)
    assert ox.invariant_failures() == ()
    assert ox.minor.size == 2 * k - 2


def test_extraction_preconditions():
    u63 = mc.uniform(6, 3)
    g = u63.ground
    not_circuit = g.subset(["1", "2"])
    with pytest.raises(mc.PreconditionViolated):
        oxley_minor(u63, not_circuit, g.subset(["1", "2", "3", "4"]))
    # |X| = 4 is required: a self-paired circuit meets itself in 4, but two
    # circuits meeting in fewer elements are rejected.
    c = g.subset(["1", "2", "3", "4"])
    d = g.subset(["1", "2", "5", "6"])
    with pytest.raises(mc.PreconditionViolated):
        oxley_minor(u63, c, d)


# ---------------------------------------------------------------------------
# C_e families
# ---------------------------------------------------------------------------


def test_ce_family_uniform_members():
    ox = extract(mc.uniform(6, 3), 4)
    e = ox.y.labels()[0]
    fam = ce_family(ox, e)
    # Circuits are 4-subsets, so members are e plus any 3 of the 4 X elements.
    assert len(fam.members) == 4
    for c in fam.members:
        assert (c & ox.y).labels() == (e,)
        assert len(c) == 4


def test_ce_family_u84():
    ox = extract(mc.uniform(8, 4), 5)
    fam = ce_family(ox, ox.y.labels()[0])
    assert len(fam.members) == 5
    assert all(len(c) == 5 for c in fam.members)


def test_ce_family_requires_y_element():
    ox = extract(mc.uniform(6, 3), 4)
    with pytest.raises(mc.PreconditionViolated):
        ce_family(ox, ox.x.labels()[0])


@pytest.mark.parametrize("source", ["u6_3", "u8_4", "fano"])
def test_ce_families_suite_passes(source):
    if source.startswith("u"):
        n, k = map(int, source[1:].split("_"))
        ox = extract(mc.uniform(n, k), k + 1)
    else:
        ox = extract(mc.named(source), 4)
    report = check_ce_families(ox)
    assert report.passed, report.failure


def test_ce_families_exercises_both_cardinality_cases():
    fano_stats = check_ce_families(extract(mc.named("fano"), 4)).exercised
    assert fano_stats["families_size_2"] >= 1
    uniform_stats = check_ce_families(extract(mc.uniform(6, 3), 4)).exercised
    assert uniform_stats["families_size_gt_2"] >= 1


# ---------------------------------------------------------------------------
# Circuit-pair and rank-2-circuit suites
# ---------------------------------------------------------------------------


@pytest.mark.parametrize("source,k", [("u6_3", 4), ("u8_4", 5), ("fano", 4)])
def test_circuit_pairs_suite_passes(source, k):
    m = mc.uniform(*map(int, source[1:].split("_"))) if source.startswith("u") else mc.named(source)
    report = check_circuit_pairs(extract(m, k))
    assert report.passed, report.failure


def test_rank2_suite_vacuous_on_uniform_k5():
    ox = extract(mc.uniform(8, 4), 5)
    report = check_rank2_circuits(ox)
    assert report.passed
    assert report.exercised["rank2_circuits"] == 0


def test_rank2_suite_nonvacuous_on_fano_minor():
    ox = extract(mc.named("fano"), 4)
    report = check_rank2_circuits(ox)
    assert report.passed, report.failure
    assert report.exercised["rank2_circuits"] == 4


def test_rank2_suite_intersecting_pairs_at_k5():
    # rand11 of the default catalog: its k=5 minor has rank-2 circuits that
    # meet, so the symmetric-difference clause runs non-vacuously.
    m = mc.random_linear(1011, 9, 4, 3)
    ox = extract(m, 5)
    report = check_rank2_circuits(ox)
    assert report.passed, report.failure
    assert report.exercised["intersecting_pairs"] >= 1


# ---------------------------------------------------------------------------
# Witnesses
# ---------------------------------------------------------------------------


def test_witness_k4_uniform():
    ox = extract(mc.uniform(6, 3), 4)
    w = witness_k4(ox)
    y1, y2 = ox.y.labels()
    x1, x2 = ox.x.labels()[:2]
    assert w.circuit == ox.minor.ground.subset([y1, y2, x1, x2])
    assert w.cocircuit == ox.x
    assert w.intersection.labels() == (x1, x2)
    assert w.size == 2


@pytest.mark.parametrize("name", ["fano", "k4", "nonfano"])
def test_witness_k4_found_in_oracle(name):
    ox = extract(mc.named(name), 4)
    w = witness_k4(ox)
    assert w.size == 2
    assert any(
        cc.circuit == w.circuit and cc.cocircuit == w.cocircuit
        for cc in cc_intersections(ox.minor)
    )


def test_witness_k4_requires_k4():
    ox = extract(mc.uniform(8, 4), 5)
    with pytest.raises(mc.PreconditionViolated):
        witness_k4(ox)


def test_witness_k5_uniform_takes_the_general_branch():
    ox = extract(mc.uniform(8, 4), 5)
    w = witness_k5(ox)
    assert w.size == 3
    # Branch (b): neither side of the pair is X itself.
    assert w.circuit != ox.x and w.cocircuit != ox.x
    assert any(
        cc.circuit == w.circuit and cc.cocircuit == w.cocircuit
        for cc in cc_intersections(ox.minor)
    )


def test_witness_k5_vamos_takes_the_direct_branch():
    ox = extract(mc.named("vamos"), 5)
    w = witness_k5(ox)
    assert w.size == 3
    # Branch (a): a size-4 circuit with one Y element pairs with X.
    assert w.cocircuit == ox.x and len(w.circuit) == 4


def test_witness_k5_random_instance():
    ox = extract(mc.random_linear(1011, 9, 4, 3), 5)
    w = witness_k5(ox)
    assert w.size == 3
    assert any(
        cc.circuit == w.circuit and cc.cocircuit == w.cocircuit
        for cc in cc_intersections(ox.minor)
    )


def test_witness_k5_direct_branch_cocircuit_side():
    # This seeded instance's minor has a one-Y size-4 cocircuit but no
    # one-Y size-4 circuit, so the direct branch pairs X with a cocircuit.
    ox = extract(mc.random_linear(24, 8, 4, 3), 5)
    assert not any(
        len(c) == 4 and len(c & ox.y) == 1 for c in ox.minor.circuits
    )
    w = witness_k5(ox)
    assert w.size == 3
    assert w.circuit == ox.x and len(w.cocircuit) == 4
    assert any(
        cc.circuit == w.circuit and cc.cocircuit == w.cocircuit
        for cc in cc_intersections(ox.minor)
    )


def test_witness_k6_chain():
    u105 = mc.uniform(10, 5)
    cc = first_pair(u105, 6)
    chain = witness_k6(u105, cc.circuit, cc.cocircuit)
    assert chain.k == 6 and chain.final.size == 4
    kinds = [step.kind for step in chain.steps]
    assert kinds == ["extraction", "oracle-size-4", "lift"]
    assert chain.final.circuit in u105.circuits
    assert chain.final.cocircuit in cocircuits(u105)


def test_witness_k6_needs_size_6():
    u105 = mc.uniform(10, 5)
    cc = first_pair(u105, 5)
    with pytest.raises(mc.PreconditionViolated):
        witness_k6(u105, cc.circuit, cc.cocircuit)


def test_witness_k6_on_random_binary_matroid():
    # Seeded GF(2) instance achieving sizes (2, 4, 6) and nothing odd.
    m = mc.random_linear(2, 12, 6, 2)
    assert mc.achieved_sizes(m) == (2, 4, 6)
    cc = first_pair(m, 6)
    chain = witness_k6(m, cc.circuit, cc.cocircuit)
    assert chain.final.size == 4
    assert chain.final.circuit in m.circuits
    assert chain.final.cocircuit in cocircuits(m)
    report = verify_conjecture(m)
    assert [(e.k, e.chain.final.size) for e in report.entries] == [(4, 2), (6, 4)]


# ---------------------------------------------------------------------------
# Lifting
# ---------------------------------------------------------------------------


def test_lift_through_empty_spec_is_identity():
    f7 = mc.named("fano")
    cc = first_pair(f7, 4)
    spec = MinorSpec.empty(f7.ground)
    lifted_c, lifted_d = lift_intersection(f7, spec, cc.circuit, cc.cocircuit)
    assert lifted_c == cc.circuit and lifted_d == cc.cocircuit


def test_lift_through_deletion():
    u63 = mc.uniform(6, 3)
    spec = MinorSpec(u63.ground.subset(["6"]), u63.ground.empty())
    sub = mc.minor(u63, spec)
    cc = cc_intersections(sub)[0]
    lifted_c, lifted_d = lift_intersection(u63, spec, cc.circuit, cc.cocircuit)
    assert lifted_c in u63.circuits
    assert lifted_d in cocircuits(u63)
    assert (lifted_c & lifted_d).labels() == cc.intersection.labels()


def test_lift_through_contraction():
    f7 = mc.named("fano")
    spec = MinorSpec(f7.ground.empty(), f7.ground.subset(["1"]))
    sub = mc.minor(f7, spec)
    cc = cc_intersections(sub)[0]
    lifted_c, lifted_d = lift_intersection(f7, spec, cc.circuit, cc.cocircuit)
    assert lifted_c in f7.circuits
    assert lifted_d in cocircuits(f7)
    assert (lifted_c & lifted_d).labels() == cc.intersection.labels()


def test_lift_rejects_non_circuits():
    u63 = mc.uniform(6, 3)
    spec = MinorSpec(u63.ground.subset(["6"]), u63.ground.empty())
    sub = mc.minor(u63, spec)
    with pytest.raises(mc.PreconditionViolated):
        lift_intersection(
            u63, spec, sub.ground.subset(["1", "2"]), sub.ground.subset(["1", "2"])
        )


# ---------------------------------------------------------------------------
# Whole-matroid verification
# ---------------------------------------------------------------------------


def test_verify_fano():
    report = verify_conjecture(mc.named("fano"))
    assert report.achieved == (2, 4)
    assert [(e.k, e.chain.final.size) for e in report.entries] == [(4, 2)]
    assert all(s.status == "pass" for s in report.suites.values())
    assert not report.vacuous


def test_verify_u105_all_three_chains():
    report = verify_conjecture(mc.uniform(10, 5))
    assert [(e.k, e.chain.final.size) for e in report.entries] == [
        (4, 2), (5, 3), (6, 4),
    ]
    m = mc.uniform(10, 5)
    for entry in report.entries:
        final = entry.chain.final
        assert final.circuit in m.circuits
        assert final.cocircuit in cocircuits(m)


def test_verify_triangle_is_vacuous():
    report = verify_conjecture(mc.uniform(3, 2))
    assert report.entries == ()
    assert report.vacuous
    assert all(s.status == "vacuous" for s in report.suites.values())


def test_verify_is_deterministic():
    a = verify_conjecture(mc.named("vamos"))
    b = verify_conjecture(mc.named("vamos"))
    assert a == b


def test_verify_reports_sizes_beyond_six_without_asserting():
    # U_12^6 achieves size 7.  Built directly from the circuit list to skip
    # constructor validation, which is slow at this size and covered by the
    # axiom checks of smaller uniforms.
    import itertools

    from matroidcc.core import GroundSet, Matroid

    g = GroundSet(str(i + 1) for i in range(12))
    masks = []
    for combo in itertools.combinations(range(12), 7):
        m = 0
        for i in combo:
            m |= 1 << i
        masks.append(m)
    u126 = Matroid(g, masks, name="u12_6", validate=False)
    report = verify_conjecture(u126)
    assert report.achieved == (2, 3, 4, 5, 6, 7)
    assert [(e.k, e.chain.final.size) for e in report.entries] == [
        (4, 2), (5, 3), (6, 4),
    ]
    assert report.out_of_scope == ((7, True),)
