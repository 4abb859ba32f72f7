import pytest

from coxmon import (
    INFINITY,
    LiftCertificate,
    OrbitCertificate,
    apply_morphism,
    bipartite_partition,
    block_partition,
    braid_from_word,
    build_morphism,
    burst,
    burst_base_multiplicity,
    canonical_word,
    check_folding,
    compose,
    divides,
    fixed_submonoid_check,
    is_isomorphic,
    is_lcm_partition,
    lcm,
    lift,
    longest_element,
    multiply,
    named_graph,
    orbit_partition,
    parse_graph,
    verify_burst,
    verify_respects_lcm,
    verify_respects_normal_forms,
)
from coxmon.morphisms import burst_multiplier


# -- morphisms from admissible partitions ---------------------------------


def test_build_morphism_basics():
    g = named_graph("A3")
    m = build_morphism(g, bipartite_partition(g))
    assert m.target == g
    assert m.source.vertices == ("1", "2")
    assert m.source.m("1", "2") == 4  # the type is B2
    # atoms map to the lifted block longest elements
    assert m.image_of_atom("1") == lift(longest_element(g, ("1", "3")))
    assert m.image_of_atom("2") == braid_from_word(g, "2")


def test_build_morphism_rejects_inadmissible():
    g = named_graph("A3")
    with pytest.raises(ValueError):
        build_morphism(g, block_partition(g, [["1"], ["2", "3"]]))


def test_apply_morphism_is_multiplicative():
    g = named_graph("A3")
    m = build_morphism(g, bipartite_partition(g))
    src = m.source
    x = braid_from_word(src, "121")
    y = braid_from_word(src, "2")
    fx, fy = apply_morphism(m, x), apply_morphism(m, y)
    assert apply_morphism(m, multiply(x, y)) == multiply(fx, fy)
    # image of a word is the product of atom images
    assert fx == multiply(
        multiply(m.image_of_atom("1"), m.image_of_atom("2")), m.image_of_atom("1")
    )


def test_full_verification_on_small_spherical_targets():
    for name in ("A3", "B3", "H3"):
        g = named_graph(name)
        m = build_morphism(g, bipartite_partition(g))
        rl = verify_respects_lcm(m, pairs=40, max_len=5)
        rn = verify_respects_normal_forms(m, samples=30, max_len=5)
        assert rl.ok and not rl.skipped, (name, rl.failures())
        assert rn.ok, (name, rn.failures())


def test_verification_skips_undecidable_pairs_on_affine_target():
    # the affine square has no infinite labels, so reversing can never
    # certify a missing common multiple: those pairs are skipped, not
    # counted as violations
    g = named_graph("Atilde3")
    m = build_morphism(g, block_partition(g, [["1", "3"], ["2", "4"]]))
    r = verify_respects_lcm(m, pairs=12, max_len=3, step_bound=800)
    assert r.skipped
    assert r.ok, r.failures()


# -- lcm partitions -------------------------------------------------------


def test_lcm_partition_positive():
    g = named_graph("A3")
    rep = is_lcm_partition(bipartite_partition(g))
    assert rep.is_lcm
    f = named_graph("F4")
    assert is_lcm_partition(block_partition(f, [["1", "4"], ["2", "3"]])).is_lcm


def test_lcm_partition_negative_on_affine_square():
    # admissible, but block {1,3} extends vertex 2 to a spherical subgraph,
    # so the blocks cannot carry a common-multiple structure
    g = named_graph("Atilde3")
    rep = is_lcm_partition(block_partition(g, [["1", "3"], ["2", "4"]]))
    assert not rep.is_lcm
    assert any(
        "spherical" in detail
        for _, _, _, ok, detail in rep.pair_results
        if not ok
    )


# -- bursts ---------------------------------------------------------------

# base multiplicities: lcm over the edges of (m-1) for even m, (m-1)/2 for
# odd m, 2 for an infinite label
BASE_MULT = {
    "A2": 1,
    "B2": 3,
    "B3": 3,
    "F4": 3,
    "H3": 2,
    "H4": 2,
    "I2(inf)": 2,
    "E6": 1,
}


def test_burst_base_multiplicity():
    for name, n0 in BASE_MULT.items():
        assert burst_base_multiplicity(named_graph(name)) == n0, name
    assert burst_multiplier(4) == 3
    assert burst_multiplier(5) == 2
    assert burst_multiplier(INFINITY) == 2


def test_burst_rejects_bad_copy_counts():
    g = named_graph("B2")
    with pytest.raises(ValueError):
        burst(g, 2)  # not a multiple of 3
    with pytest.raises(ValueError):
        burst(g, 0)


# frozen burst shapes: (input, copies) -> graph isomorphic to
BURST_SHAPES = [
    ("H3", 2, ["D6"]),
    ("H4", 2, ["E8"]),
    ("I2(inf)", 2, ["Atilde3"]),
    ("B2", 3, ["A3", "A3"]),
    ("F4", 3, ["E6", "E6"]),
    ("B3", 3, ["A5", "D4"]),
    ("A2", 1, ["A2"]),
]


def test_burst_shapes():
    for name, copies, parts in BURST_SHAPES:
        g = named_graph(name)
        b = burst(g, copies)
        assert b.copies == copies
        comps = sorted(
            (b.graph.restrict(c) for c in b.graph.components()),
            key=lambda h: h.rank,
        )
        want = sorted((named_graph(p) for p in parts), key=lambda h: h.rank)
        assert len(comps) == len(want), name
        for got, expect in zip(comps, want):
            assert is_isomorphic(got, expect), (name, expect.vertices)


def test_burst_partition_blocks_are_the_fibers():
    b = burst(named_graph("H3"), 2)
    assert b.partition.names == ("1", "2", "3")
    assert b.partition.block_of("1") == ("1^1", "1^2")


def test_verify_burst():
    for name, copies, _ in BURST_SHAPES:
        b = burst(named_graph(name), copies)
        rep = verify_burst(b)
        assert rep.ok, (name, rep)
        assert rep.type_matches
        assert rep.verdict.is_admissible


def test_verify_burst_infinite_edge_structure():
    b = burst(named_graph("I2(inf)"), 2)
    rep = verify_burst(b)
    assert rep.ok
    assert isinstance(rep.verdict.certificate, OrbitCertificate)
    ((pair, ok, detail),) = rep.infinite_pair_structure
    assert pair == ("1", "2") and ok
    assert "opposite-pair squares" in detail


def test_burst_partitions_are_lcm_partitions():
    for name, copies in (("H3", 2), ("B2", 3)):
        b = burst(named_graph(name), copies)
        assert is_lcm_partition(b.partition).is_lcm, name


def test_burst_morphism_h3_into_d6():
    b = burst(named_graph("H3"), 2)
    m = build_morphism(b.graph, b.partition)
    assert is_isomorphic(m.source, named_graph("H3"))
    rl = verify_respects_lcm(m, pairs=30, max_len=4)
    assert rl.ok and not rl.skipped, rl.failures()


# -- foldings -------------------------------------------------------------


def test_folding_e6_to_f4():
    rep = check_folding(
        named_graph("E6"),
        named_graph("F4"),
        {"1": "1", "6": "1", "3": "2", "5": "2", "4": "3", "2": "4"},
    )
    assert rep.ok and rep.type_matches
    tags = {pair: tag for pair, _, tag, _, _ in rep.pair_tags}
    assert tags[("1", "2")] == "A"
    assert tags[("2", "3")] == "B"  # the folded A3 chain against label 4
    assert tags[("1", "3")] == "product"


def test_folding_exceptional_tags():
    # the three exceptional families show up when a single base edge
    # carries a full non-bipartite admissible partition
    a4 = check_folding(
        named_graph("A4"), named_graph("I2(4)"),
        {"1": "1", "4": "1", "2": "2", "3": "2"},
    )
    assert a4.ok and [t for _, _, t, _, _ in a4.pair_tags] == ["C1"]
    e6 = check_folding(
        named_graph("E6"), named_graph("I2(8)"),
        {"1": "1", "2": "1", "6": "1", "3": "2", "4": "2", "5": "2"},
    )
    assert e6.ok and [t for _, _, t, _, _ in e6.pair_tags] == ["C2"]
    f4 = check_folding(
        named_graph("F4"), named_graph("I2(8)"),
        {"1": "1", "4": "1", "2": "2", "3": "2"},
    )
    assert f4.ok and [t for _, _, t, _, _ in f4.pair_tags] == ["C3"]


def test_folding_mixed_components():
    # two components over one base edge with matching orders but different
    # mechanisms: tagged D(...) with the member tags
    g = parse_graph(
        "edge a b 3\nedge b c 3\nedge 1 2 3\nedge 2 3 3\nedge 3 4 3"
    )
    rep = check_folding(
        g, named_graph("I2(4)"),
        {"a": "1", "c": "1", "b": "2", "1": "1", "4": "1", "2": "2", "3": "2"},
    )
    assert rep.ok
    assert [t for _, _, t, _, _ in rep.pair_tags] == ["D(C1,B)"]


def test_folding_negative():
    # folding A3 onto I2(3) is impossible: the folded pair has order 4
    rep = check_folding(
        named_graph("A3"), named_graph("I2(3)"), {"1": "1", "3": "1", "2": "2"}
    )
    assert not rep.ok
    assert any("pair order 4 != label 3" in d for _, _, _, ok, d in rep.pair_tags
               if not ok)


def test_folding_rejects_non_surjective_mapping():
    with pytest.raises(ValueError):
        check_folding(named_graph("A3"), named_graph("I2(3)"),
                      {"1": "1", "3": "1", "2": "1"})


# -- composition ----------------------------------------------------------


def test_compose_two_foldings_of_a6():
    # A6 folded by its flip has type B3; folding that by its bipartite
    # partition lands on I2(6); the composite is the order-6 two-block
    # partition of A6 directly
    a6 = named_graph("A6")
    outer = build_morphism(a6, orbit_partition(a6))
    assert outer.source.m("2", "3") == 4  # type B3
    inner = build_morphism(outer.source, bipartite_partition(outer.source))
    assert inner.source.m("1", "2") == 6
    comp = compose(outer, inner)
    assert comp.partition.blocks == (("1", "3", "4", "6"), ("2", "5"))
    assert comp.source.m("1", "2") == 6
    assert isinstance(comp.verdict.certificate, LiftCertificate)
    # the composite morphism acts exactly like applying one after the other
    x = braid_from_word(inner.source, "1221")
    assert apply_morphism(comp, x) == apply_morphism(
        outer, apply_morphism(inner, x)
    )


def test_compose_requires_matching_graphs():
    a6 = named_graph("A6")
    outer = build_morphism(a6, orbit_partition(a6))
    other = build_morphism(named_graph("A3"),
                           bipartite_partition(named_graph("A3")))
    with pytest.raises(ValueError):
        compose(outer, other)


# -- fixed submonoids -----------------------------------------------------


def test_fixed_submonoid_a3_flip():
    # elements fixed by the end swap of A3, counted by length, match the
    # submonoid generated by the orbit elements s2 and s1 s3 exactly
    rep = fixed_submonoid_check(
        named_graph("A3"), [{"1": "3", "3": "1", "2": "2"}], 6
    )
    assert rep.ok and rep.sets_match
    assert rep.fixed_counts == (1, 1, 2, 3, 5, 8, 12)
    assert rep.generated_counts == rep.fixed_counts
    assert rep.ptype.graph().m("1", "2") == 4  # the orbit type is B2


def test_fixed_submonoid_d4_rotation():
    rep = fixed_submonoid_check(
        named_graph("D4"), [{"1": "3", "3": "4", "4": "1", "2": "2"}], 5
    )
    assert rep.ok and rep.sets_match
    assert rep.fixed_counts == (1, 1, 1, 2, 3, 4)
    assert rep.ptype.graph().m("1", "2") == 6  # the orbit type is I2(6)


def test_fixed_submonoid_rejects_non_automorphism():
    with pytest.raises(ValueError):
        fixed_submonoid_check(
            named_graph("A3"), [{"1": "2", "2": "1", "3": "3"}], 4
        )
