"""Idempotent ideal relations and the locally-supercompact correspondence:
interior relations, the induced topology O_R, rounded sets and the rounded
ideal completion, the nine-way profile of local supercompactness, core bases,
R-density and cardinal invariants.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from . import latid
from . import topoderive as td
from .finstruct import (
    BinaryRelation,
    Qoset,
    SpaceMap,
    Topology,
    ValidationError,
    bits,
    generate_topology,
    mask_of,
    subsets_of,
    validate_topology,
)

OPERATOR_SCAN_CAP = 5  # carrier size for the operator-equation conditions
BASE_SEARCH_CAP = 6  # carrier size for minimal-base searches


# ------------------------------------------------------------ C-quasi-orders

@dataclass(frozen=True)
class CQuasiOrder:
    """Idempotent relation whose point preimages Ry = {x : x R y} are ideals
    with respect to the lower quasi-order (x below y iff Rx subset of Ry)."""

    n: int
    rel: tuple  # row masks: rel[x] = {y : x R y}

    @property
    def preimages(self):
        """cols[y] = mask of Ry = {x : x R y}."""
        return tuple(
            mask_of(x for x in range(self.n) if self.rel[x] >> y & 1)
            for y in range(self.n)
        )

    def lower_qoset(self) -> Qoset:
        cols = self.preimages
        rows = tuple(
            mask_of(y for y in range(self.n) if cols[x] & ~cols[y] == 0)
            for x in range(self.n)
        )
        return Qoset(self.n, rows)

    def relation(self) -> BinaryRelation:
        return BinaryRelation(self.n, self.rel)


def interior_relation(s: Topology) -> BinaryRelation:
    """x R y iff y lies in the interior of the core (saturation) of x."""
    q = td.specialization(s)
    return BinaryRelation(
        s.n, tuple(td.interior(s, q.leq[x]) for x in range(s.n))
    )


def validate_cquasiorder(n, relation) -> CQuasiOrder:
    rows = relation.rel if isinstance(relation, BinaryRelation) else tuple(relation)
    cols = tuple(mask_of(x for x in range(n) if rows[x] >> y & 1) for y in range(n))
    for y in range(n):
        if not cols[y]:
            raise ValidationError("EmptyPointPreimage", (y,))
    comp = tuple(_compose_row(rows, x) for x in range(n))
    for x in range(n):
        if comp[x] != rows[x]:
            z = next(bits(comp[x] ^ rows[x]))
            raise ValidationError("NotIdempotent", (x, z))
    leq = tuple(
        mask_of(y for y in range(n) if cols[x] & ~cols[y] == 0) for x in range(n)
    )
    for y in range(n):
        for a in bits(cols[y]):
            for b in range(n):
                if leq[b] >> a & 1 and not cols[y] >> b & 1:
                    raise ValidationError("NotDownClosed", (y, a, b))
        for a in bits(cols[y]):
            for b in bits(cols[y]):
                if not any(
                    leq[a] >> c & 1 and leq[b] >> c & 1 for c in bits(cols[y])
                ):
                    raise ValidationError("NotDirected", (y, a, b))
    return CQuasiOrder(n, rows)


def _compose_row(rows, x):
    m = 0
    for y in bits(rows[x]):
        m |= rows[y]
    return m


def relation_image(rows, n, ymask) -> int:
    """YR = {x : exists y in Y with y R x}."""
    m = 0
    for y in bits(ymask):
        m |= rows[y]
    return m


def relation_preimage(rows, n, ymask) -> int:
    """RY = {x : exists y in Y with x R y}."""
    return mask_of(x for x in range(n) if rows[x] & ymask)


def topology_of(r: CQuasiOrder) -> Topology:
    """O_R: all sets YR, i.e. all unions of the point images xR."""
    opens = {0}
    for row in r.rel:
        opens |= {o | row for o in opens}
    return validate_topology(r.n, sorted(opens))


def rounded_sets(r: CQuasiOrder):
    """All fixed points of Y -> RY, ascending as masks."""
    n = r.n
    return [
        y for y in range(1 << n) if relation_preimage(r.rel, n, y) == y
    ]


@dataclass(frozen=True)
class Completion:
    """Rounded ideals by inclusion, with the basis map x -> Rx."""

    domain: Qoset
    ideals: tuple  # masks, ascending; domain element i is ideals[i]
    basis: SpaceMap


def rounded_ideals(r: CQuasiOrder):
    leq = r.lower_qoset().leq
    out = []
    for y in rounded_sets(r):
        pts = list(bits(y))
        if not pts:
            continue
        down = all(
            not (leq[b] >> a & 1 and not y >> b & 1)
            for a in pts for b in range(r.n)
        )
        directed = all(
            any(leq[a] >> c & 1 and leq[b] >> c & 1 for c in pts)
            for a in pts for b in pts
        )
        if down and directed:
            out.append(y)
    return out


def rounded_ideal_completion(r: CQuasiOrder) -> Completion:
    ideals = rounded_ideals(r)
    k = len(ideals)
    rows = tuple(
        mask_of(j for j in range(k) if ideals[i] & ~ideals[j] == 0)
        for i in range(k)
    )
    domain = Qoset(k, rows)
    cols = r.preimages
    basis = SpaceMap(r.n, k, tuple(ideals.index(cols[x]) for x in range(r.n)))
    wb = way_below_qoset(domain)
    for x in range(r.n):
        for y in range(r.n):
            if bool(r.rel[x] >> y & 1) != bool(wb[basis(x)] >> basis(y) & 1):
                raise ValidationError("CompletionMismatch", (x, y))
    return Completion(domain, tuple(ideals), basis)


def way_below_qoset(q: Qoset):
    """Way-below row masks on an arbitrary finite qoset: x wb y iff every
    directed set with a least upper bound dominating y meets the filter of x."""
    rows = [(1 << q.n) - 1] * q.n
    for d in td.directed_subsets(q):
        lubm = td.least_upper_bounds(q, d)
        if not lubm:
            continue
        dominated = q.down(lubm)
        for x in range(q.n):
            if not q.leq[x] & d:
                rows[x] &= ~dominated
    return tuple(rows)


# ------------------------------------------------------ nine-way profile

@dataclass(frozen=True)
class CoreProfile:
    core_base: bool
    locally_supercompact: bool
    open_lattice_supercontinuous: bool
    closed_lattice_supercontinuous: bool
    closed_lattice_continuous: bool
    interior_preserves_upper_unions: bool
    closure_preserves_lower_intersections: bool
    locally_hypercompact_web: bool
    locally_compact_wide_web: bool

    @property
    def flags(self):
        return (
            self.core_base,
            self.locally_supercompact,
            self.open_lattice_supercontinuous,
            self.closed_lattice_supercontinuous,
            self.closed_lattice_continuous,
            self.interior_preserves_upper_unions,
            self.closure_preserves_lower_intersections,
            self.locally_hypercompact_web,
            self.locally_compact_wide_web,
        )

    @property
    def agreement(self) -> bool:
        return len(set(self.flags)) == 1


def is_core_space(s: Topology) -> bool:
    """Every point has a neighborhood base of cores."""
    q = td.specialization(s)
    ints = [td.interior(s, q.leq[b]) for b in range(s.n)]
    for u in s.opens:
        for x in bits(u):
            if not any(
                ints[b] >> x & 1 and q.leq[b] & ~u == 0 for b in range(s.n)
            ):
                return False
    return True


def _local_base(s: Topology, predicate) -> bool:
    """Every point has a neighborhood base of sets satisfying the predicate."""
    for u in s.opens:
        for x in bits(u):
            if not any(
                td.interior(s, c) >> x & 1 and predicate(c)
                for c in subsets_of(u)
            ):
                return False
    return True


def _is_filtered(q: Qoset, mask) -> bool:
    pts = list(bits(mask))
    geq = q.geq
    return bool(pts) and all(
        geq[a] & geq[b] & mask for a in pts for b in pts
    )


def _is_web_space(s: Topology) -> bool:
    lat = latid.open_lattice(s)
    if lat.n <= 10:
        return latid.check_law(lat, "coframe")[0]
    # the subset-quantified dual law folds to the binary case on a finite
    # lattice, so the binary scan decides it
    return latid.check_law(lat.dual(), "distributive")[0]


def core_space_profile(s: Topology) -> CoreProfile:
    q = td.specialization(s)
    open_lat = latid.open_lattice(s)
    closed_lat = latid.closed_lattice(s)
    return CoreProfile(
        core_base=is_core_space(s),
        locally_supercompact=_local_base(
            s, lambda c: td.compactness(s, c, "supercompact")
        ),
        open_lattice_supercontinuous=latid.check_law(
            open_lat, "completely-distributive"
        )[0],
        closed_lattice_supercontinuous=latid.check_law(
            closed_lat, "completely-distributive"
        )[0],
        closed_lattice_continuous=latid.check_law(
            closed_lat, "continuous-lattice"
        )[0],
        interior_preserves_upper_unions=_interior_preserves_upper_unions(s, q),
        closure_preserves_lower_intersections=_closure_preserves_lower_intersections(s, q),
        locally_hypercompact_web=_local_base(
            s, lambda c: td.compactness(s, c, "hypercompact")
        ) and _is_web_space(s),
        locally_compact_wide_web=_local_base(
            s, lambda c: td.compactness(s, c, "compact")
        ) and _local_base(s, lambda c: _is_filtered(q, c)),
    )


def _interior_preserves_upper_unions(s: Topology, q: Qoset) -> bool:
    """int(union of upper sets) = union of interiors; since every upper set
    is the union of the cores of its points, the family identity holds iff
    int(Z) = union{int(core(y)) : y in Z} for every upper set Z."""
    if s.n > OPERATOR_SCAN_CAP:
        raise ValidationError("SizeCapExceeded", ("interior-upper-unions", s.n))
    ints = [td.interior(s, q.leq[y]) for y in range(s.n)]
    for z in q.upper_sets():
        m = 0
        for y in bits(z):
            m |= ints[y]
        if td.interior(s, z) != m:
            return False
    return True


def _closure_preserves_lower_intersections(s: Topology, q: Qoset) -> bool:
    """cl(intersection of lower sets) = intersection of closures; every lower
    set is the intersection of the filter-complements X minus core(y) over
    the points y outside it, which folds the family identity per lower set."""
    if s.n > OPERATOR_SCAN_CAP:
        raise ValidationError("SizeCapExceeded", ("closure-lower-intersections", s.n))
    full = s.full
    cls = [td.closure(s, full ^ q.leq[y]) for y in range(s.n)]
    for z in q.lower_sets():
        m = full
        for y in bits(full ^ z):
            m &= cls[y]
        if td.closure(s, z) != m:
            return False
    return True


# ------------------------------------------------------------ core bases

def core_basis_check(s: Topology, bmask) -> bool:
    """Cores of members of B form neighborhood bases everywhere."""
    q = td.specialization(s)
    ints = [td.interior(s, q.leq[b]) for b in range(s.n)]
    for u in s.opens:
        for y in bits(u):
            if not any(
                ints[b] >> y & 1 and q.leq[b] & ~u == 0
                for b in bits(bmask & u)
            ):
                return False
    return True


def minimal_core_basis(s: Topology) -> int:
    for size in range(s.n + 1):
        for combo in combinations(range(s.n), size):
            b = mask_of(combo)
            if core_basis_check(s, b):
                return b
    raise AssertionError("the whole carrier is a core basis of a finite space")


# ------------------------------------------------------------ density

def r_dense(r: BinaryRelation, bmask) -> bool:
    """x R y implies x R b R y for some b in B."""
    return all(
        not r.rel[x] >> y & 1
        or any(r.rel[x] >> b & 1 and r.rel[b] >> y & 1 for b in bits(bmask))
        for x in range(r.n)
        for y in range(r.n)
    )


def r_cofinal(r: BinaryRelation, bmask) -> bool:
    """x R y implies x below-R b and b R y for some b in B."""
    cols = tuple(
        mask_of(x for x in range(r.n) if r.rel[x] >> y & 1) for y in range(r.n)
    )
    return all(
        not r.rel[x] >> y & 1
        or any(
            cols[x] & ~cols[b] == 0 and r.rel[b] >> y & 1 for b in bits(bmask)
        )
        for x in range(r.n)
        for y in range(r.n)
    )


def cofinality(r: BinaryRelation):
    """Minimal cardinality of an R-cofinal subset, with the lexicographically
    least witness of that size."""
    for size in range(r.n + 1):
        for combo in combinations(range(r.n), size):
            b = mask_of(combo)
            if r_cofinal(r, b):
                return size, b
    raise AssertionError("the whole carrier is R-cofinal")


# ------------------------------------------------------------ invariants

def skula(s: Topology) -> Topology:
    """Topology generated by the opens together with the closeds (coincides
    with the strong patch topology)."""
    return generate_topology(s.n, list(s.opens) + s.closeds())


def prop_9_1_conditions(s: Topology, bmask):
    """The five characterizations of a weight-attaining subset B: R-dense,
    R-cofinal, core basis, dense in the strong patch topology, and point
    closures of B join-dense among closed sets."""
    r = interior_relation(s)
    sk = skula(s)
    dense_skula = td.closure(sk, bmask) == s.full
    cls = [td.closure(s, 1 << b) for b in range(s.n)]
    closeds = s.closeds()
    join_dense = all(
        a == _union_of(cl for b, cl in enumerate(cls)
                       if bmask >> b & 1 and cl & ~a == 0)
        for a in closeds
    )
    return (
        r_dense(r, bmask),
        r_cofinal(r, bmask),
        core_basis_check(s, bmask),
        dense_skula,
        join_dense,
    )


def _union_of(masks) -> int:
    m = 0
    for x in masks:
        m |= x
    return m


def minimal_topology_base(t: Topology):
    """Smallest subfamily of opens from which every open is a union."""
    opens = list(t.opens)
    for size in range(len(opens) + 1):
        for combo in combinations(range(len(opens)), size):
            chosen = [opens[i] for i in combo]
            if all(
                _union_of(b for b in chosen if b & ~u == 0) == u for u in opens
            ):
                return tuple(chosen)
    raise AssertionError("the full family is a base")


@dataclass(frozen=True)
class InvariantBundle:
    c: int
    w_open: int
    w_closed: int
    w_patch: int
    d_patch: int
    c_witness: int  # point mask
    w_open_witness: tuple  # open masks
    w_closed_witness: tuple  # closed masks
    w_patch_witness: tuple  # patch-open masks
    d_patch_witness: int  # point mask

    @property
    def values(self):
        return (self.c, self.w_open, self.w_closed, self.w_patch, self.d_patch)


def cardinal_invariants(s: Topology) -> InvariantBundle:
    if s.n > BASE_SEARCH_CAP:
        raise ValidationError("SizeCapExceeded", ("cardinal-invariants", s.n))
    r = interior_relation(s)
    c, c_witness = cofinality(r)
    w_open_witness = minimal_topology_base(s)
    closed_lat = latid.closed_lattice(s)
    closeds = sorted(s.closeds())
    wres = latid.min_join_dense(closed_lat)
    w_closed_witness = tuple(closeds[i] for i in wres.witness)
    patch_topology = td.patch(s, "upsilon").topology
    w_patch_witness = minimal_topology_base(patch_topology)
    d_patch, d_patch_witness = _minimal_dense(patch_topology)
    if prop_9_1_conditions(s, c_witness) != (True,) * 5:
        raise ValidationError("InvariantDisagreement", (c_witness,))
    return InvariantBundle(
        c=c,
        w_open=len(w_open_witness),
        w_closed=wres.weight,
        w_patch=len(w_patch_witness),
        d_patch=d_patch,
        c_witness=c_witness,
        w_open_witness=w_open_witness,
        w_closed_witness=w_closed_witness,
        w_patch_witness=w_patch_witness,
        d_patch_witness=d_patch_witness,
    )


def _minimal_dense(t: Topology):
    """Minimal subset meeting every nonempty open."""
    nonempty = [u for u in t.opens if u]
    for size in range(t.n + 1):
        for combo in combinations(range(t.n), size):
            d = mask_of(combo)
            if all(d & u for u in nonempty):
                return size, d
    raise AssertionError("the carrier is dense")
