"""Ordered-space predicate profiles: separation, convexity, stability, web /
sector / fan structure, mc-orderedness, semilattice-ordered classes, and
theorem-level equivalence bundles.

Neighborhood-base predicates are quantified over subsets of the minimal open
neighborhood of each point: on a finite carrier a base of P-sets exists at x
iff one exists inside the minimal open neighborhood of x.

Generation identities ("the topology is generated by ...") are decided by the
base criterion: the generated topology consists of all unions of finite
intersections of subbase members, so equality with the ambient topology holds
iff every subbase member is open and every point of every open set sits in a
basic set inside it; minimal basic neighborhoods are the optimal witnesses.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from . import cord
from . import topoderive as td
from .finstruct import (
    OrderedSpace,
    Qoset,
    Topology,
    ValidationError,
    bits,
    generate_topology,
    subsets_of,
)


# ---------------------------------------------------------------- tables

class Tables:
    """Per-space caches shared by the predicate evaluations.  A precomputed
    interior table (indexed by point-set mask) may be supplied when sweeping
    many qosets against one topology."""

    def __init__(self, space: OrderedSpace, interior_table=None):
        self.space = space
        self.q = space.qoset
        self.t = space.topology
        self.n = space.n
        self.full = self.t.full
        self.opens_set = set(self.t.opens)
        if interior_table is None:
            interior_table = interior_table_of(self.t)
        self.int_of = interior_table

    @cached_property
    def M(self):
        """Minimal open neighborhood per point."""
        return tuple(self.t.min_neighborhood(x) for x in range(self.n))

    @cached_property
    def upper_opens(self):
        return tuple(u for u in self.t.opens if self.q.up(u) == u)

    @cached_property
    def lower_opens(self):
        return tuple(u for u in self.t.opens if self.q.down(u) == u)

    @cached_property
    def upper_space(self) -> Topology:
        return Topology(self.n, self.upper_opens)

    @cached_property
    def lower_space(self) -> Topology:
        return Topology(self.n, self.lower_opens)

    @cached_property
    def Mup(self):
        """Minimal open upper neighborhood per point (the specialization row
        of the upper space)."""
        out = []
        for x in range(self.n):
            m = self.full
            for u in self.upper_opens:
                if u >> x & 1:
                    m &= u
            out.append(m)
        return tuple(out)

    @cached_property
    def Mdown(self):
        out = []
        for x in range(self.n):
            m = self.full
            for u in self.lower_opens:
                if u >> x & 1:
                    m &= u
            out.append(m)
        return tuple(out)

    @cached_property
    def q2(self) -> Qoset:
        """Specialization qoset of the upper space."""
        return Qoset(self.n, self.Mup)

    @cached_property
    def closed_uppers(self):
        return tuple(
            self.full ^ u for u in self.t.opens if self.q.up(self.full ^ u) == self.full ^ u
        )

    @cached_property
    def closed_lowers(self):
        return tuple(
            self.full ^ u for u in self.t.opens if self.q.down(self.full ^ u) == self.full ^ u
        )

    @cached_property
    def hM_upper(self):
        """Smallest closed upper set containing the minimal open upper
        neighborhood, per point."""
        out = []
        for x in range(self.n):
            m = self.full
            for b in self.closed_uppers:
                if self.Mup[x] & ~b == 0:
                    m &= b
            out.append(m)
        return tuple(out)

    @cached_property
    def hM_lower(self):
        out = []
        for x in range(self.n):
            m = self.full
            for b in self.closed_lowers:
                if self.Mdown[x] & ~b == 0:
                    m &= b
            out.append(m)
        return tuple(out)

    @cached_property
    def int_up(self):
        """Interior (ambient topology) of each principal filter."""
        return tuple(self.int_of[self.q.leq[u]] for u in range(self.n))

    @cached_property
    def int_upper_of(self):
        return interior_table_of(self.upper_space)

    @cached_property
    def int_lower_of(self):
        return interior_table_of(self.lower_space)

    @cached_property
    def int_up_upper(self):
        """Interior w.r.t. the upper topology of each principal filter."""
        return tuple(self.int_upper_of[self.q.leq[u]] for u in range(self.n))

    @cached_property
    def upsilon_dual(self) -> Topology:
        """Weak topology of the dual of the upper-space specialization."""
        return td.weak_upper(self.q2.dual())

    @cached_property
    def directed(self):
        return td.directed_subsets(self.q)

    @cached_property
    def filtered(self):
        return td.filtered_subsets(self.q)

    @cached_property
    def upper_sets(self):
        return self.q.upper_sets()


def interior_table_of(t: Topology):
    """Interior of every point-set mask, as a list indexed by mask."""
    table = [0] * (t.full + 1)
    for u in t.opens:
        for m in range(t.full + 1):
            if u & ~m == 0:
                table[m] |= u
    return table


def _closure(tb: Tables, mask) -> int:
    return tb.full ^ tb.int_of[tb.full ^ mask]


# ---------------------------------------------------------------- separation

@dataclass(frozen=True)
class SeparationProfile:
    lower_semi_qospace: bool
    upper_semi_qospace: bool
    semi_qospace: bool
    qospace: bool
    pospace: bool
    t1_ordered: bool
    t2_ordered: bool
    upper_regular: bool
    lower_regular: bool
    upper_t3_ordered: bool


def is_lower_semi_qospace(tb: Tables) -> bool:
    """All principal ideals are closed."""
    return all(
        tb.full ^ tb.q.down(1 << x) in tb.opens_set for x in range(tb.n)
    )


def is_upper_semi_qospace(tb: Tables) -> bool:
    """All principal filters are closed."""
    return all(tb.full ^ tb.q.leq[x] in tb.opens_set for x in range(tb.n))


def is_semi_qospace(tb: Tables) -> bool:
    return is_lower_semi_qospace(tb) and is_upper_semi_qospace(tb)


def is_qospace(tb: Tables) -> bool:
    """For x not below y there are opens U around x and V around y whose
    up- and down-closures are disjoint; the minimal neighborhoods are the
    optimal witnesses."""
    q = tb.q
    for x in range(tb.n):
        for y in range(tb.n):
            if not q.leq[x] >> y & 1:
                if q.up(tb.M[x]) & q.down(tb.M[y]):
                    return False
    return True


def is_t2_ordered(tb: Tables) -> bool:
    """For x not below y: disjoint open upper set around x and open lower set
    around y (ordered spaces only); the minimal such neighborhoods are the
    optimal witnesses."""
    if not tb.q.is_antisymmetric():
        return False
    q = tb.q
    return all(
        q.leq[x] >> y & 1 or not (tb.Mup[x] & tb.Mdown[y])
        for x in range(tb.n) for y in range(tb.n)
    )


def is_upper_regular(tb: Tables) -> bool:
    """Every open upper set around a point contains a closed upper set that
    in turn contains an open upper neighborhood."""
    return all(
        all(tb.hM_upper[x] & ~o == 0 for x in bits(o)) for o in tb.upper_opens
    )


def is_lower_regular(tb: Tables) -> bool:
    return all(
        all(tb.hM_lower[x] & ~o == 0 for x in bits(o)) for o in tb.lower_opens
    )


def separation_profile(t: OrderedSpace, tables: Tables = None) -> SeparationProfile:
    tb = tables or Tables(t)
    antisym = tb.q.is_antisymmetric()
    semi = is_semi_qospace(tb)
    qos = is_qospace(tb)
    upreg = is_upper_regular(tb)
    return SeparationProfile(
        lower_semi_qospace=is_lower_semi_qospace(tb),
        upper_semi_qospace=is_upper_semi_qospace(tb),
        semi_qospace=semi,
        qospace=qos,
        pospace=qos and antisym,
        t1_ordered=semi and antisym,
        t2_ordered=is_t2_ordered(tb),
        upper_regular=upreg,
        lower_regular=is_lower_regular(tb),
        upper_t3_ordered=upreg and semi and antisym,
    )


# ---------------------------------------------------------------- convexity

@dataclass(frozen=True)
class ConvexityProfile:
    locally_convex: bool
    strongly_convex: bool
    hyperconvex: bool
    sigma_convex: bool
    alpha_convex: bool


def is_locally_convex(tb: Tables) -> bool:
    """The convex open sets form a base."""
    q = tb.q
    convex_opens = [c for c in tb.t.opens if q.up(c) & q.down(c) == c]
    for o in tb.t.opens:
        for x in bits(o):
            if not any(c >> x & 1 and c & ~o == 0 for c in convex_opens):
                return False
    return True


def is_strongly_convex(tb: Tables) -> bool:
    """The topology is generated by the open upper and open lower sets."""
    return all(
        all(tb.Mup[x] & tb.Mdown[x] & ~o == 0 for x in bits(o))
        for o in tb.t.opens
    )


def _cotopology_convex(tb: Tables, cotop: Topology) -> bool:
    """Generation test for the upper opens joined with a cotopology."""
    if any(v not in tb.opens_set for v in cotop.opens):
        return False
    minv = tuple(cotop.min_neighborhood(x) for x in range(tb.n))
    return all(
        all(tb.Mup[x] & minv[x] & ~o == 0 for x in bits(o))
        for o in tb.t.opens
    )


def is_hyperconvex(tb: Tables) -> bool:
    return _cotopology_convex(tb, tb.upsilon_dual)


def is_zeta_convex(tb: Tables, zeta: str) -> bool:
    if zeta == "upsilon":
        return is_hyperconvex(tb)
    return _cotopology_convex(tb, td.upset_topology(tb.q2.dual(), zeta))


def hyperconvex_fan_base(tb: Tables) -> bool:
    """Cross-check criterion: the sets U minus an up-closed complement piece
    (U open upper, F finite) form a base of the topology."""
    q2 = tb.q2
    cols = q2.geq
    hx = []
    for x in range(tb.n):
        f = tb.full ^ cols[x]
        hx.append(tb.Mup[x] & ~q2.up(f))
    sub_ok = all(
        tb.full ^ q2.up(1 << y) in tb.opens_set for y in range(tb.n)
    )
    return sub_ok and all(
        all(hx[x] & ~o == 0 for x in bits(o)) for o in tb.t.opens
    )


def convexity_profile(t: OrderedSpace, tables: Tables = None) -> ConvexityProfile:
    tb = tables or Tables(t)
    return ConvexityProfile(
        locally_convex=is_locally_convex(tb),
        strongly_convex=is_strongly_convex(tb),
        hyperconvex=is_hyperconvex(tb),
        sigma_convex=is_zeta_convex(tb, "sigma"),
        alpha_convex=is_zeta_convex(tb, "alpha"),
    )


# ---------------------------------------------------------------- stability

@dataclass(frozen=True)
class StabilityProfile:
    up_stable: bool
    d_stable: bool
    core_stable: bool
    vee_stable: bool
    wedge_stable: bool
    diamond_stable: bool


def is_up_stable(tb: Tables) -> bool:
    return all(tb.q.up(o) in tb.opens_set for o in tb.t.opens)


def is_core_stable(tb: Tables) -> bool:
    """Up-closure of every open is the union of the interiors of the
    principal filters of its elements."""
    for o in tb.t.opens:
        m = 0
        for u in bits(o):
            m |= tb.int_up[u]
        if tb.q.up(o) != m:
            return False
    return True


def is_d_stable(tb: Tables) -> bool:
    """For every filtered set D: the interior of D is covered by interiors of
    principal filters of points in the lower-space closure of D."""
    for d in tb.filtered:
        cl = tb.full ^ tb.int_lower_of[tb.full ^ d]
        m = 0
        for u in bits(cl):
            m |= tb.int_up[u]
        if tb.int_of[d] & ~m:
            return False
    return True


def _family_stable(tb: Tables, family) -> bool:
    """Interior (upper topology) of each family member is the union of the
    upper-topology interiors of the principal filters of its points."""
    for y in family:
        m = 0
        for u in bits(y):
            m |= tb.int_up_upper[u]
        if tb.int_upper_of[y] != m:
            return False
    return True


def vee_family(q: Qoset):
    """Finite unions of principal filters (including the empty union)."""
    return sorted({q.up(f) for f in range(1 << q.n)})


def wedge_family(q: Qoset):
    """Finite intersections of principal filters (including the whole set)."""
    out = set()
    full = (1 << q.n) - 1
    for f in range(1 << q.n):
        m = full
        for x in bits(f):
            m &= q.leq[x]
        out.add(m)
    return sorted(out)


def diamond_family(q: Qoset):
    """Sublattice of upper sets generated by the principal filters together
    with the empty set and the whole set: unions of finite intersections."""
    wedges = wedge_family(q)
    out = {0}
    for w in wedges:
        out |= {m | w for m in out}
    return sorted(out)


def is_vee_stable(tb: Tables) -> bool:
    return _family_stable(tb, vee_family(tb.q))


def is_wedge_stable(tb: Tables) -> bool:
    return _family_stable(tb, wedge_family(tb.q))


def is_diamond_stable(tb: Tables) -> bool:
    return _family_stable(tb, diamond_family(tb.q))


def stability_profile(t: OrderedSpace, tables: Tables = None) -> StabilityProfile:
    tb = tables or Tables(t)
    return StabilityProfile(
        up_stable=is_up_stable(tb),
        d_stable=is_d_stable(tb),
        core_stable=is_core_stable(tb),
        vee_stable=is_vee_stable(tb),
        wedge_stable=is_wedge_stable(tb),
        diamond_stable=is_diamond_stable(tb),
    )


# ---------------------------------------------------------------- webs etc.

@dataclass(frozen=True)
class WebProfile:
    web_ordered: bool
    locally_filtered: bool
    sector_space: bool
    upsilon_sector_space: bool
    fan_space: bool
    mc_ordered: bool
    upper_m_determined: bool


def _neighborhood_base(tb: Tables, pred) -> bool:
    """Every point has a neighborhood base of pred-sets; quantified over
    subsets of the minimal open neighborhood."""
    for x in range(tb.n):
        if not any(
            tb.int_of[w] >> x & 1 and pred(w, x)
            for w in subsets_of(tb.M[x])
        ):
            return False
    return True


def _is_web_around(tb: Tables, w, x) -> bool:
    geq = tb.q.geq
    return w >> x & 1 and all(
        geq[x] & geq[y] & w for y in bits(w)
    )


def _is_filtered_set(tb: Tables, w, _x=None) -> bool:
    pts = list(bits(w))
    geq = tb.q.geq
    return bool(pts) and all(
        geq[a] & geq[b] & w for a in pts for b in pts
    )


def _is_sector(tb: Tables, w, _x=None) -> bool:
    return w != 0 and any(
        w == tb.q.leq[u] & v for u in range(tb.n) for v in tb.lower_opens
    )


def _is_upsilon_sector(tb: Tables, w, _x=None) -> bool:
    return w != 0 and any(
        w == tb.q.leq[u] & v
        for u in range(tb.n)
        for v in tb.upsilon_dual.opens
    )


def _is_fan(tb: Tables, w, _x=None) -> bool:
    return w != 0 and any(
        w == tb.q.leq[u] & ~g
        for u in range(tb.n)
        for g in tb.upper_sets
    )


def is_web_ordered(tb: Tables) -> bool:
    return is_up_stable(tb) and _neighborhood_base(
        tb, lambda w, x: _is_web_around(tb, w, x)
    )


def is_locally_filtered(tb: Tables) -> bool:
    return _neighborhood_base(tb, lambda w, x: _is_filtered_set(tb, w))


def is_sector_space(tb: Tables) -> bool:
    return (
        is_up_stable(tb)
        and is_semi_qospace(tb)
        and _neighborhood_base(tb, lambda w, x: _is_sector(tb, w))
    )


def is_upsilon_sector_space(tb: Tables) -> bool:
    return (
        is_up_stable(tb)
        and is_semi_qospace(tb)
        and _neighborhood_base(tb, lambda w, x: _is_upsilon_sector(tb, w))
    )


def is_fan_space(tb: Tables) -> bool:
    return (
        is_up_stable(tb)
        and is_semi_qospace(tb)
        and _neighborhood_base(tb, lambda w, x: _is_fan(tb, w))
    )


def is_mc_ordered(tb: Tables) -> bool:
    """Every directed subset has a supremum to which it converges as a net."""
    q = tb.q
    for d in tb.directed:
        lubm = td.least_upper_bounds(q, d)
        if not lubm:
            return False
        converges = False
        for lub in bits(lubm):
            if all(
                not (o >> lub & 1)
                or any(q.leq[e] & d & ~o == 0 for e in bits(d))
                for o in tb.t.opens
            ):
                converges = True
                break
        if not converges:
            return False
    return True


def is_upper_m_determined(tb: Tables) -> bool:
    """Every upper set meeting all directed sets whose closure meets it is
    open."""
    for u in tb.upper_sets:
        if u in tb.opens_set:
            continue
        if all(d & u for d in tb.directed if _closure(tb, d) & u):
            return False
    return True


def web_profile(t: OrderedSpace, tables: Tables = None) -> WebProfile:
    tb = tables or Tables(t)
    return WebProfile(
        web_ordered=is_web_ordered(tb),
        locally_filtered=is_locally_filtered(tb),
        sector_space=is_sector_space(tb),
        upsilon_sector_space=is_upsilon_sector_space(tb),
        fan_space=is_fan_space(tb),
        mc_ordered=is_mc_ordered(tb),
        upper_m_determined=is_upper_m_determined(tb),
    )


# ---------------------------------------------------------------- domains

def is_domain(q: Qoset) -> bool:
    """Antisymmetric, and every directed subset has a least upper bound."""
    if not q.is_antisymmetric():
        return False
    return all(td.least_upper_bounds(q, d) for d in td.directed_subsets(q))


def is_continuous_domain(q: Qoset) -> bool:
    """Domain in which each way-below set is directed with join the point."""
    if not is_domain(q):
        return False
    wb = cord.way_below_qoset(q)
    cols = tuple(
        sum(1 << x for x in range(q.n) if wb[x] >> y & 1) for y in range(q.n)
    )
    for y in range(q.n):
        d = cols[y]
        pts = list(bits(d))
        if not pts:
            return False
        if not all(q.leq[a] & q.leq[b] & d for a in pts for b in pts):
            return False
        if not td.least_upper_bounds(q, d) >> y & 1:
            return False
    return True


def is_meet_continuous_domain(q: Qoset) -> bool:
    """Domain whose Scott space is a web space (webs w.r.t. the Scott
    specialization, which is the order itself)."""
    if not is_domain(q):
        return False
    scott = td.scott_topology(q)
    tb = Tables(OrderedSpace(q, scott))
    return _neighborhood_base(tb, lambda w, x: _is_web_around(tb, w, x))


def is_t2_space(t: Topology) -> bool:
    mins = [t.min_neighborhood(x) for x in range(t.n)]
    return all(
        not (mins[x] & mins[y])
        for x in range(t.n) for y in range(t.n) if x != y
    )


# ---------------------------------------------------------------- bundles

@dataclass(frozen=True)
class Bundle:
    which: str
    vector: tuple
    agreement: bool


def thm_4_6_sides(tb: Tables):
    side1 = is_sector_space(tb)
    side2 = (
        is_semi_qospace(tb) and is_strongly_convex(tb) and is_core_stable(tb)
    )
    side3 = (
        is_qospace(tb)
        and is_strongly_convex(tb)
        and is_upper_regular(tb)
        and is_locally_filtered(tb)
        and is_up_stable(tb)
        and is_d_stable(tb)
    )
    return side1, side2, side3


def thm_5_3_sides(tb: Tables):
    side1 = is_fan_space(tb)
    side2 = (
        is_semi_qospace(tb) and is_hyperconvex(tb) and is_core_stable(tb)
    )
    side3 = _is_weak_patch_of_core_space(tb)
    return side1, side2, side3


def _is_weak_patch_of_core_space(tb: Tables):
    """The space equals the weak patch of its upper space, and that upper
    space is locally supercompact."""
    if tb.space.qoset.leq != tb.Mup:
        return False
    patched = generate_topology(
        tb.n, list(tb.upper_opens) + list(tb.upsilon_dual.opens)
    )
    if patched != tb.t:
        return False
    return _upper_space_is_core(tb)


def _upper_space_is_core(tb: Tables) -> bool:
    q2 = tb.q2
    ints = [tb.int_upper_of[q2.leq[b]] for b in range(tb.n)]
    for u in tb.upper_opens:
        for x in bits(u):
            if not any(
                ints[b] >> x & 1 and q2.leq[b] & ~u == 0 for b in range(tb.n)
            ):
                return False
    return True


def thm_6_2_sides(tb: Tables):
    q = tb.q
    poset = q.is_antisymmetric()
    lawson = td.lawson_topology(q) if poset else None
    side1 = poset and is_continuous_domain(q) and tb.t == lawson
    side2 = is_fan_space(tb) and td.is_sober(tb.upper_space)
    side3 = (
        poset
        and is_meet_continuous_domain(q)
        and tb.t == lawson
        and is_wedge_stable(tb)
        and is_t2_space(tb.t)
    )
    side4 = (
        poset
        and is_semi_qospace(tb)
        and is_hyperconvex(tb)
        and is_mc_ordered(tb)
        and is_core_stable(tb)
    )
    side5 = (
        is_hyperconvex(tb)
        and is_mc_ordered(tb)
        and is_up_stable(tb)
        and is_diamond_stable(tb)
        and is_t2_space(tb.t)
    )
    return side1, side2, side3, side4, side5


def thm_7_2_sides(tb: Tables, meet):
    w11 = _is_weak_patch_of(tb, _upper_is_web)
    w12 = is_web_ordered(tb)
    w13 = is_semitopological(tb, meet)
    w21 = _is_weak_patch_of(tb, _upper_is_wide_web)
    w22 = is_locally_filtered(tb) and is_up_stable(tb)
    w23 = is_s_topological(tb, meet)
    w31 = _is_weak_patch_of(tb, lambda t: _upper_space_is_core(t))
    w32 = is_core_stable(tb) and is_qospace(tb) and tb.q.is_antisymmetric()
    w33 = is_s_topological(tb, meet) and _upper_locally_compact(tb)
    return w11, w12, w13, w21, w22, w23, w31, w32, w33


def _is_weak_patch_of(tb: Tables, upper_pred) -> bool:
    if tb.space.qoset.leq != tb.Mup:
        return False
    patched = generate_topology(
        tb.n, list(tb.upper_opens) + list(tb.upsilon_dual.opens)
    )
    return patched == tb.t and upper_pred(tb)


def _upper_is_web(tb: Tables) -> bool:
    q2 = tb.q2
    up_tb = Tables(OrderedSpace(q2, tb.upper_space), tb.int_upper_of)
    return _neighborhood_base(
        up_tb, lambda w, x: _is_web_around(up_tb, w, x)
    )


def _upper_is_wide_web(tb: Tables) -> bool:
    q2 = tb.q2
    up_tb = Tables(OrderedSpace(q2, tb.upper_space), tb.int_upper_of)
    return _neighborhood_base(up_tb, lambda w, x: _is_filtered_set(up_tb, w))


def _upper_locally_compact(tb: Tables) -> bool:
    s = tb.upper_space
    for u in s.opens:
        for x in bits(u):
            if not any(
                tb.int_upper_of[c] >> x & 1
                and td.compactness(s, c, "compact")
                for c in subsets_of(u)
            ):
                return False
    return True


def prop_7_4_sides(tb: Tables):
    q = tb.q
    poset = q.is_antisymmetric()
    side1 = (
        poset
        and is_continuous_domain(q)
        and tb.t == td.lawson_topology(q)
        and td.compactness(tb.t, tb.full, "compact")
    )
    side2 = (
        is_locally_filtered(tb)
        and is_up_stable(tb)
        and td.compactness(tb.t, tb.full, "compact")
        and is_qospace(tb)
        and poset
    )
    return side1, side2


def theorem_bundle(t: OrderedSpace, which: str, tables: Tables = None) -> Bundle:
    tb = tables or Tables(t)
    if which == "thm-4.6":
        vec = thm_4_6_sides(tb)
    elif which == "thm-5.3":
        vec = thm_5_3_sides(tb)
    elif which == "thm-6.2":
        vec = thm_6_2_sides(tb)
    elif which == "thm-7.2":
        meet = meet_table(tb.q)
        if meet is None:
            raise ValidationError("NotASemilattice", ())
        vec = thm_7_2_sides(tb, meet)
        groups = (vec[0:3], vec[3:6], vec[6:9])
        return Bundle(which, vec, all(len(set(g)) == 1 for g in groups))
    elif which == "prop-7.4":
        if meet_table(tb.q) is None:
            raise ValidationError("NotASemilattice", ())
        vec = prop_7_4_sides(tb)
    else:
        raise ValidationError("UnknownSuite", (which,))
    return Bundle(which, vec, len(set(vec)) == 1)


# ---------------------------------------------------------------- semilattices

def meet_table(q: Qoset):
    """Binary meet table of a meet-semilattice poset, or None."""
    if not q.is_antisymmetric():
        return None
    geq = q.geq
    rows = []
    for x in range(q.n):
        row = []
        for y in range(q.n):
            lower = geq[x] & geq[y]
            glbs = [
                z for z in bits(lower)
                if all(q.leq[w] >> z & 1 for w in bits(lower))
            ]
            if not glbs:
                return None
            row.append(glbs[0])
        rows.append(tuple(row))
    return tuple(rows)


@dataclass(frozen=True)
class SemilatticeProfile:
    compatible: bool
    semitopological: bool
    topological: bool
    small_semilattices: bool
    small_convex_semilattices: bool


def is_compatible(tb: Tables) -> bool:
    """The topology lies between the weak and the Alexandroff topology of
    the order."""
    ups = td.weak_upper(tb.q)
    return (
        all(u in tb.opens_set for u in ups.opens)
        and all(tb.q.up(o) == o for o in tb.t.opens)
    )


def is_semitopological(tb: Tables, meet) -> bool:
    """All unary meet operations are continuous."""
    n = tb.n
    for x in range(n):
        for o in tb.t.opens:
            pre = sum(1 << y for y in range(n) if o >> meet[x][y] & 1)
            if pre not in tb.opens_set:
                return False
    return True


def is_topological(tb: Tables, meet) -> bool:
    """The binary meet operation is continuous w.r.t. the product topology:
    every pair with meet in an open set has an open rectangle around it whose
    meet-image stays inside; minimal neighborhoods are optimal witnesses."""
    n = tb.n
    for o in tb.t.opens:
        for u in range(n):
            for v in range(n):
                if o >> meet[u][v] & 1:
                    img = 0
                    for a in bits(tb.M[u]):
                        for b in bits(tb.M[v]):
                            img |= 1 << meet[a][b]
                    if img & ~o:
                        return False
    return True


def is_s_topological(tb: Tables, meet) -> bool:
    """Topological semilattice with small semilattices: the binary meet is
    continuous and every point has a neighborhood base of subsemilattices."""
    return is_topological(tb, meet) and _neighborhood_base(
        tb, lambda w, x: _is_subsemilattice(tb, meet, w)
    )


def _is_subsemilattice(tb: Tables, meet, w) -> bool:
    return w != 0 and all(
        w >> meet[a][b] & 1 for a in bits(w) for b in bits(w)
    )


def semilattice_profile(t: OrderedSpace, tables: Tables = None) -> SemilatticeProfile:
    tb = tables or Tables(t)
    meet = meet_table(tb.q)
    if meet is None:
        raise ValidationError("NotASemilattice", ())
    topo = is_topological(tb, meet)
    small = _neighborhood_base(
        tb, lambda w, x: _is_subsemilattice(tb, meet, w)
    )
    small_convex = _neighborhood_base(
        tb,
        lambda w, x: _is_subsemilattice(tb, meet, w)
        and tb.q.up(w) & tb.q.down(w) == w,
    )
    return SemilatticeProfile(
        compatible=is_compatible(tb),
        semitopological=is_semitopological(tb, meet),
        topological=topo,
        small_semilattices=topo and small,
        small_convex_semilattices=topo and small_convex,
    )
