"""Lattice identity checkers, the way-below and superway relations, coprimes,
join-dense sets and lattice weight.

Laws are each implemented from their own defining identity; the distributivity
identity over set collections is written as

    meet{ join(Y) : Y in YY } = join( intersection(YY) )

over collections YY of lower sets (all / finitely generated / ideals, per law).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .finstruct import (
    BinaryRelation,
    Lattice,
    Topology,
    ValidationError,
    bits,
    mask_of,
    mask_to_list,
    validate_lattice,
)
from .topoderive import directed_subsets

LAWS = (
    "frame",
    "coframe",
    "wide-frame",
    "wide-coframe",
    "completely-distributive",
    "meet-continuous",
    "continuous-lattice",
    "distributive",
)

DIRECT_SCAN_CAP = 5  # elements; the collection-quantified laws scan 2^#lowersets


@dataclass(frozen=True)
class WeightResult:
    weight: int
    witness: tuple  # minimal join-dense subset, sorted


# ------------------------------------------------------------ set lattices

def open_lattice(t: Topology) -> Lattice:
    """Lattice of open sets by inclusion; element i is sorted(opens)[i]."""
    return _inclusion_lattice(t.opens)


def closed_lattice(t: Topology) -> Lattice:
    """Lattice of closed sets by inclusion; element i is sorted(closeds)[i]."""
    return _inclusion_lattice(t.closeds())


def _inclusion_lattice(members) -> Lattice:
    ordered = sorted(members)
    k = len(ordered)
    rows = tuple(
        mask_of(j for j in range(k) if ordered[i] & ~ordered[j] == 0)
        for i in range(k)
    )
    return validate_lattice(k, rows)


# ------------------------------------------------------------ set families

def downset_masks(q):
    """All lower sets of a poset, ascending as masks; built by inserting
    elements along a linear extension (avoids the 2^n scan)."""
    order = sorted(range(q.n), key=lambda x: (q.geq[x].bit_count(), x))
    sets = [0]
    for x in order:
        below = q.geq[x] ^ (1 << x)
        sets += [m | (1 << x) for m in sets if below & ~m == 0]
    return sorted(sets)


def lower_set_masks(lat: Lattice):
    """All lower sets of the lattice order, ascending as masks."""
    return downset_masks(lat.poset())


def finitely_generated_lower_sets(lat: Lattice):
    """Down-closures of finite subsets (on a finite carrier: all lower sets,
    but constructed from the generating-set definition)."""
    q = lat.poset()
    return sorted({q.down(f) for f in range(1 << lat.n)})


def ideal_masks(lat: Lattice):
    """Directed lower sets, ascending."""
    q = lat.poset()
    out = []
    for d in downset_masks(q):
        pts = list(bits(d))
        if pts and all(q.leq[a] & q.leq[b] & d for a in pts for b in pts):
            out.append(d)
    return out


# ------------------------------------------------------------ law checking

def check_law(lat: Lattice, law: str, direct: bool = False):
    """Verdict for a lattice law, plus the lexicographically least
    counterexample witness on failure (None on success).

    ``direct=True`` forces the full collection scan for the laws quantified
    over collections of lower sets; it is capped at DIRECT_SCAN_CAP elements.
    """
    if law == "frame":
        return _binary_meet_join_law(lat)
    if law == "coframe":
        return _binary_meet_join_law(lat.dual())
    if law == "distributive":
        return _distributive(lat)
    if law == "meet-continuous":
        return _meet_join_law_over(lat, directed_subsets(lat.poset()))
    if law == "continuous-lattice":
        if direct:
            _check_cap(lat, law)
            return _collection_law(lat, ideal_masks(lat))
        return _pairwise_collection_law(lat, ideal_masks(lat))
    if law == "completely-distributive":
        if direct:
            _check_cap(lat, law)
            return _collection_law(lat, lower_set_masks(lat))
        return _superway_join_test(lat)
    if law == "wide-coframe":
        if direct:
            _check_cap(lat, law)
            return _collection_law(lat, finitely_generated_lower_sets(lat))
        return _pairwise_collection_law(lat, finitely_generated_lower_sets(lat))
    if law == "wide-frame":
        dual = lat.dual()
        if direct:
            _check_cap(lat, law)
            return _collection_law(dual, finitely_generated_lower_sets(dual))
        return _pairwise_collection_law(dual, finitely_generated_lower_sets(dual))
    raise ValidationError("UnknownLaw", (law,))


def _check_cap(lat, law):
    if lat.n > DIRECT_SCAN_CAP:
        raise ValidationError("SizeCapExceeded", (law, lat.n))


def _binary_meet_join_law(lat: Lattice):
    """x meet join(Y) = join{x meet y : y in Y} over all subsets Y."""
    for x in range(lat.n):
        for ymask in range(1 << lat.n):
            lhs = lat.meet[x][lat.join_of(ymask)]
            rhs = lat.join_of(mask_of(lat.meet[x][y] for y in bits(ymask)))
            if lhs != rhs:
                return False, (x, tuple(mask_to_list(ymask)))
    return True, None


def _meet_join_law_over(lat: Lattice, ymasks):
    for x in range(lat.n):
        for ymask in ymasks:
            lhs = lat.meet[x][lat.join_of(ymask)]
            rhs = lat.join_of(mask_of(lat.meet[x][y] for y in bits(ymask)))
            if lhs != rhs:
                return False, (x, tuple(mask_to_list(ymask)))
    return True, None


def _distributive(lat: Lattice):
    for x in range(lat.n):
        for y in range(lat.n):
            for z in range(lat.n):
                lhs = lat.meet[x][lat.join[y][z]]
                rhs = lat.join[lat.meet[x][y]][lat.meet[x][z]]
                if lhs != rhs:
                    return False, (x, y, z)
    return True, None


def _collection_law(lat: Lattice, family):
    """meet{join Y} = join(intersection YY) over all subcollections of the
    given family of lower sets (empty meet = top, empty intersection = all)."""
    fam = list(family)
    full = (1 << lat.n) - 1
    joins = [lat.join_of(y) for y in fam]
    for sel in range(1 << len(fam)):
        lhs = lat.top
        inter = full
        for i in bits(sel):
            lhs = lat.meet[lhs][joins[i]]
            inter &= fam[i]
        if lhs != lat.join_of(inter):
            witness = tuple(tuple(mask_to_list(fam[i])) for i in bits(sel))
            return False, witness
    return True, None


def _pairwise_collection_law(lat: Lattice, family):
    """The collection identity restricted to two-member collections; the
    family is intersection-closed, so the finite identity folds to pairs."""
    fam = list(family)
    joins = [lat.join_of(y) for y in fam]
    for i, y1 in enumerate(fam):
        for j in range(i, len(fam)):
            y2 = fam[j]
            if lat.meet[joins[i]][joins[j]] != lat.join_of(y1 & y2):
                return False, (tuple(mask_to_list(y1)), tuple(mask_to_list(y2)))
    return True, None


def _superway_join_test(lat: Lattice):
    """Every element is the join of the elements superway-below it."""
    rel = below_relation(lat, "superway")
    cols = [mask_of(x for x in range(lat.n) if rel.rel[x] >> y & 1)
            for y in range(lat.n)]
    for y in range(lat.n):
        if lat.join_of(cols[y]) != y:
            return False, (y,)
    return True, None


# ------------------------------------------------------------ below relations

def below_relation(lat: Lattice, kind: str, direct: bool = False) -> BinaryRelation:
    """way-below: x << y iff every directed set whose join dominates y meets
    the principal filter of x.  superway: x sw y iff x lies in the down-closure
    of every subset whose join dominates y."""
    n = lat.n
    q = lat.poset()
    if kind == "way-below":
        rows = [(1 << n) - 1] * n
        for d in directed_subsets(q):
            join = lat.join_of(d)
            if not _is_join_of(lat, q, d, join):
                continue
            dominated = q.geq[join]
            for x in range(n):
                if not q.leq[x] & d:
                    rows[x] &= ~dominated
        return BinaryRelation(n, tuple(rows))
    if kind == "superway":
        if direct:
            rows = [(1 << n) - 1] * n
            for a in range(1 << n):
                dominated = q.geq[lat.join_of(a)]
                below = q.down(a)
                for x in range(n):
                    if not below >> x & 1:
                        rows[x] &= ~dominated
            return BinaryRelation(n, tuple(rows))
        # x sw y iff y is not below the join of the complement of the
        # principal filter of x (the complement is the critical subset)
        full = (1 << n) - 1
        rows = []
        for x in range(n):
            j = lat.join_of(full ^ q.leq[x])
            rows.append(full ^ q.geq[j])
        return BinaryRelation(n, tuple(rows))
    raise ValidationError("UnknownKind", (kind,))


def _is_join_of(lat: Lattice, q, d, join) -> bool:
    ub = (1 << lat.n) - 1
    for x in bits(d):
        ub &= q.leq[x]
    return q.leq[join] == ub and ub >> join & 1


# ------------------------------------------------------------ coprimes

def coprimes(lat: Lattice) -> int:
    """Elements whose principal-filter complement is an ideal, as a mask."""
    q = lat.poset()
    full = (1 << lat.n) - 1
    out = 0
    for x in range(lat.n):
        c = full ^ q.leq[x]
        if c and q.down(c) == c and _is_directed(q, c):
            out |= 1 << x
    return out


def _is_directed(q, mask) -> bool:
    pts = list(bits(mask))
    return all(q.leq[a] & q.leq[b] & mask for a in pts for b in pts)


# ------------------------------------------------------------ weight

def is_join_dense(lat: Lattice, bmask) -> bool:
    return all(lat.join_of(lat.down_mask(y) & bmask) == y for y in range(lat.n))


def min_join_dense(lat: Lattice) -> WeightResult:
    """Smallest join-dense subset (lexicographically least at minimal size)."""
    for size in range(lat.n + 1):
        for combo in combinations(range(lat.n), size):
            if is_join_dense(lat, mask_of(combo)):
                return WeightResult(size, combo)
    raise AssertionError("the whole carrier is join-dense")


def join_irreducibles(lat: Lattice) -> int:
    """Elements that are not the join of the strictly smaller elements."""
    return mask_of(
        y for y in range(lat.n)
        if lat.join_of(lat.down_mask(y) & ~(1 << y)) != y
    )
