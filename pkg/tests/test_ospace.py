"""Ordered-space properties: separation, convexity, stability, webs,
semilattice continuity, and the equivalence bundles.

The production predicates shortcut through minimal neighborhoods; here they
are replayed against direct full-quantifier scans on small carriers."""

import pytest

from ordertop import ospace, topoderive as td
from ordertop.finstruct import (
    OrderedSpace,
    Qoset,
    Topology,
    ValidationError,
    bits,
    generate_topology,
    subsets_of,
)
from ordertop.labcli import qosets, topologies

CHAIN2 = Qoset(2, (0b11, 0b10))
CHAIN3 = Qoset(3, (0b111, 0b110, 0b100))
ANTI3 = Qoset(3, (1, 2, 4))
DIAMOND4 = Qoset(4, (0b1111, 0b1010, 0b1100, 0b1000))

CHAIN2_DISCRETE = OrderedSpace(CHAIN2, Topology(2, (0, 1, 2, 3)))
CHAIN2_INDISCRETE = OrderedSpace(CHAIN2, Topology(2, (0, 3)))
CHAIN3_TOP = OrderedSpace(CHAIN3, Topology(3, (0, 0b100, 0b111)))
ANTI3_PAIR = OrderedSpace(ANTI3, Topology(3, (0, 0b011, 0b111)))

ALL_PAIRS_3 = [
    OrderedSpace(Qoset(3, rows), Topology(3, opens))
    for rows in qosets(3)
    for opens in topologies(3)
]


def _tables(space):
    return ospace.Tables(space)


# ---------------------------------------------------------------- separation

def test_separation_profile_of_discrete_chain_is_all_true():
    prof = ospace.separation_profile(CHAIN2_DISCRETE)
    assert all(getattr(prof, f) for f in prof.__dataclass_fields__)


def test_separation_profile_of_indiscrete_chain():
    prof = ospace.separation_profile(CHAIN2_INDISCRETE)
    assert not prof.lower_semi_qospace
    assert not prof.upper_semi_qospace
    assert not prof.qospace
    assert prof.upper_regular and prof.lower_regular


def _qospace_oracle(s):
    q, t = s.qoset, s.topology
    for x in range(s.n):
        for y in range(s.n):
            if q.leq[x] >> y & 1:
                continue
            if not any(
                u >> x & 1 and v >> y & 1 and not (q.up(u) & q.down(v))
                for u in t.opens for v in t.opens
            ):
                return False
    return True


def _t2_ordered_oracle(s, tb):
    if not s.qoset.is_antisymmetric():
        return False
    q = s.qoset
    for x in range(s.n):
        for y in range(s.n):
            if q.leq[x] >> y & 1:
                continue
            if not any(
                u >> x & 1 and v >> y & 1 and not (u & v)
                for u in tb.upper_opens for v in tb.lower_opens
            ):
                return False
    return True


def _upper_regular_oracle(s, tb):
    closed_uppers = [
        s.topology.full ^ o for o in s.topology.opens
        if s.qoset.up(s.topology.full ^ o) == s.topology.full ^ o
    ]
    for o in tb.upper_opens:
        for x in bits(o):
            if not any(
                v >> x & 1 and v & ~a == 0 and a & ~o == 0
                for v in tb.upper_opens for a in closed_uppers
            ):
                return False
    return True


def test_separation_predicates_match_direct_scans():
    for s in ALL_PAIRS_3:
        tb = _tables(s)
        assert ospace.is_qospace(tb) == _qospace_oracle(s)
        assert ospace.is_t2_ordered(tb) == _t2_ordered_oracle(s, tb)
        assert ospace.is_upper_regular(tb) == _upper_regular_oracle(s, tb)


# ---------------------------------------------------------------- convexity

def test_convexity_worked_examples():
    assert ospace.convexity_profile(CHAIN2_DISCRETE) == ospace.ConvexityProfile(
        True, True, True, True, True
    )
    # opens {top} only: strongly convex but the finitely-generated lower
    # cotopology is not contained in the topology
    prof = ospace.convexity_profile(CHAIN3_TOP)
    assert prof.strongly_convex and not prof.hyperconvex
    prof = ospace.convexity_profile(ANTI3_PAIR)
    assert prof.strongly_convex and not prof.hyperconvex


def _strongly_convex_oracle(s, tb):
    return generate_topology(
        s.n, list(tb.upper_opens) + list(tb.lower_opens)
    ) == s.topology


def _hyperconvex_oracle(s, tb):
    cotop = td.alexandroff(tb.q2.dual())
    if any(v not in set(s.topology.opens) for v in cotop.opens):
        return False
    return generate_topology(
        s.n, list(tb.upper_opens) + list(cotop.opens)
    ) == s.topology


def test_convexity_predicates_match_generation_oracles():
    for s in ALL_PAIRS_3:
        tb = _tables(s)
        assert ospace.is_strongly_convex(tb) == _strongly_convex_oracle(s, tb)
        assert ospace.is_hyperconvex(tb) == _hyperconvex_oracle(s, tb)
        assert ospace.is_hyperconvex(tb) == ospace.hyperconvex_fan_base(tb)


# ---------------------------------------------------------------- stability

def test_stability_worked_examples():
    assert all(
        getattr(ospace.stability_profile(CHAIN3_TOP), f)
        for f in ospace.StabilityProfile.__dataclass_fields__
    )
    prof = ospace.stability_profile(ANTI3_PAIR)
    assert prof.up_stable and not prof.core_stable
    assert not prof.vee_stable and not prof.diamond_stable


def test_stability_families_on_diamond():
    # on 2x2 the principal-filter unions and intersections generate all
    # upper sets; the lattice generated by both coincides with the unions
    vee = ospace.vee_family(DIAMOND4)
    wedge = ospace.wedge_family(DIAMOND4)
    diamond = ospace.diamond_family(DIAMOND4)
    assert set(wedge) <= set(diamond)
    assert set(vee) <= set(diamond)
    assert all(DIAMOND4.up(m) == m for m in diamond)


# ---------------------------------------------------------------- webs

def _base_oracle(tb, pred):
    """Full quantifier scan: for every point and every open around it, some
    pred-subset of the open is a neighborhood of the point."""
    for x in range(tb.n):
        for o in tb.t.opens:
            if not o >> x & 1:
                continue
            if not any(
                tb.int_of[w] >> x & 1 and pred(w, x) for w in subsets_of(o)
            ):
                return False
    return True


def test_neighborhood_bases_match_full_scans():
    for s in ALL_PAIRS_3:
        tb = _tables(s)
        for pred in (
            lambda w, x, tb=tb: ospace._is_web_around(tb, w, x),
            lambda w, x, tb=tb: ospace._is_filtered_set(tb, w),
            lambda w, x, tb=tb: ospace._is_sector(tb, w),
            lambda w, x, tb=tb: ospace._is_fan(tb, w),
        ):
            assert ospace._neighborhood_base(tb, pred) == _base_oracle(tb, pred)


def test_web_profile_worked_examples():
    prof = ospace.web_profile(CHAIN3_TOP)
    assert prof.web_ordered and prof.locally_filtered
    assert not prof.sector_space and not prof.fan_space
    assert prof.mc_ordered and prof.upper_m_determined
    prof = ospace.web_profile(ANTI3_PAIR)
    assert not prof.web_ordered and not prof.locally_filtered


def test_sector_implies_upsilon_sector_implies_fan():
    for s in ALL_PAIRS_3:
        tb = _tables(s)
        sec = ospace.is_sector_space(tb)
        usec = ospace.is_upsilon_sector_space(tb)
        fan = ospace.is_fan_space(tb)
        assert (not sec or usec) and (not usec or fan)


# ---------------------------------------------------------------- domains

def test_domain_predicates():
    assert ospace.is_domain(CHAIN3)
    assert ospace.is_domain(DIAMOND4)
    assert not ospace.is_domain(Qoset(2, (0b11, 0b11)))  # not antisymmetric
    # in finite posets the way-below sets are the principal ideals, so
    # every finite domain is continuous and meet-continuous
    for rows in qosets(3):
        q = Qoset(3, rows)
        if ospace.is_domain(q):
            assert ospace.is_continuous_domain(q)
            assert ospace.is_meet_continuous_domain(q)


def test_t2_space():
    assert ospace.is_t2_space(Topology(2, (0, 1, 2, 3)))
    assert not ospace.is_t2_space(Topology(2, (0, 2, 3)))


# ---------------------------------------------------------------- semilattices

def test_meet_table_examples():
    meet = ospace.meet_table(CHAIN3)
    assert meet == ((0, 0, 0), (0, 1, 1), (0, 1, 2))
    assert ospace.meet_table(ANTI3) is None
    assert ospace.meet_table(Qoset(2, (0b11, 0b11))) is None
    dia = ospace.meet_table(DIAMOND4)
    assert dia[1][2] == 0 and dia[1][3] == 1


def _topological_oracle(s, meet):
    """Continuity of the meet map w.r.t. the genuine product topology,
    realised on a carrier of point pairs."""
    n = s.n
    subbase = [
        sum(1 << (a * n + b) for a in bits(u) for b in range(n))
        for u in s.topology.opens
    ] + [
        sum(1 << (a * n + b) for a in range(n) for b in bits(u))
        for u in s.topology.opens
    ]
    product = generate_topology(n * n, subbase)
    prod_opens = set(product.opens)
    for o in s.topology.opens:
        pre = sum(
            1 << (a * n + b)
            for a in range(n) for b in range(n)
            if o >> meet[a][b] & 1
        )
        if pre not in prod_opens:
            return False
    return True


def test_topological_matches_product_topology_oracle():
    for s in ALL_PAIRS_3:
        meet = ospace.meet_table(s.qoset)
        if meet is None:
            continue
        tb = _tables(s)
        assert ospace.is_topological(tb, meet) == _topological_oracle(s, meet)


def test_semilattice_profile_of_lawson_diamond():
    law = OrderedSpace(DIAMOND4, td.lawson_topology(DIAMOND4))
    prof = ospace.semilattice_profile(law)
    # the order has open lower sets in its own topology, so it is not
    # between the weak upper and the Alexandroff topology of itself
    assert not prof.compatible
    assert prof.semitopological and prof.topological
    assert prof.small_semilattices and prof.small_convex_semilattices


def test_semilattice_profile_rejects_non_semilattice():
    with pytest.raises(ValidationError) as err:
        ospace.semilattice_profile(ANTI3_PAIR)
    assert err.value.code == "NotASemilattice"


# ---------------------------------------------------------------- bundles

def test_bundle_agreement_on_all_small_ordered_spaces():
    for s in ALL_PAIRS_3:
        tb = _tables(s)
        for which in ("thm-4.6", "thm-5.3"):
            assert ospace.theorem_bundle(s, which, tb).agreement


def test_bundles_all_true_on_lawson_spaces_of_small_posets():
    for rows in qosets(4):
        q = Qoset(4, rows)
        if not q.is_antisymmetric():
            continue
        s = OrderedSpace(q, td.lawson_topology(q))
        bundle = ospace.theorem_bundle(s, "thm-6.2")
        assert bundle.agreement and all(bundle.vector)


def test_thm_7_2_and_prop_7_4_on_lawson_diamond():
    law = OrderedSpace(DIAMOND4, td.lawson_topology(DIAMOND4))
    b = ospace.theorem_bundle(law, "thm-7.2")
    assert b.agreement and all(b.vector)
    b = ospace.theorem_bundle(law, "prop-7.4")
    assert b.agreement and all(b.vector)


def test_bundle_errors():
    with pytest.raises(ValidationError) as err:
        ospace.theorem_bundle(CHAIN2_DISCRETE, "thm-0.0")
    assert err.value.code == "UnknownSuite"
    with pytest.raises(ValidationError) as err:
        ospace.theorem_bundle(ANTI3_PAIR, "thm-7.2")
    assert err.value.code == "NotASemilattice"
