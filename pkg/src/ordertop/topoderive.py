"""Derived topologies and space-level constructions.

Specialization, the Alexandroff / weak / Scott / Lawson topologies, patch and
upper/lower space functors, hull and kernel operators, compactness notions,
sobriety, the cocompact topology, and the coarsest quasi-uniformity of a
locally supercompact space.
"""

from __future__ import annotations

from dataclasses import dataclass

from .finstruct import (
    BinaryRelation,
    OrderedSpace,
    Qoset,
    Topology,
    ValidationError,
    bits,
    generate_topology,
    mask_of,
    transpose,
)

COSELECTIONS = ("upsilon", "sigma", "alpha")


class NotCoreSpace(Exception):
    """Unreachable for valid finite input; kept for contract clarity."""


# ----------------------------------------------------------- specialization

def specialization(t: Topology) -> Qoset:
    """x <= y iff every open containing x contains y."""
    full = t.full
    rows = []
    for x in range(t.n):
        m = full
        for u in t.opens:
            if u >> x & 1:
                m &= u
        rows.append(m)
    return Qoset(t.n, tuple(rows))


def directed_subsets(q: Qoset):
    """Nonempty subsets in which every pair has an upper bound inside."""
    out = []
    for d in range(1, 1 << q.n):
        pts = list(bits(d))
        if all(q.leq[x] & q.leq[y] & d for x in pts for y in pts):
            out.append(d)
    return out


def filtered_subsets(q: Qoset):
    geq = q.geq
    out = []
    for d in range(1, 1 << q.n):
        pts = list(bits(d))
        if all(geq[x] & geq[y] & d for x in pts for y in pts):
            out.append(d)
    return out


def upper_bounds(q: Qoset, mask) -> int:
    m = (1 << q.n) - 1
    for x in bits(mask):
        m &= q.leq[x]
    return m


def least_upper_bounds(q: Qoset, mask) -> int:
    """{y : for all z, (mask subset of down z) iff y <= z}, as a mask."""
    ub = upper_bounds(q, mask)
    return mask_of(y for y in range(q.n) if q.leq[y] == ub)


# ----------------------------------------------------------- upset topologies

def alexandroff(q: Qoset) -> Topology:
    return Topology(q.n, tuple(q.upper_sets()))


def weak_upper(q: Qoset) -> Topology:
    full = (1 << q.n) - 1
    return generate_topology(q.n, [full ^ q.down(1 << x) for x in range(q.n)])


def scott_topology(q: Qoset) -> Topology:
    """Upper sets meeting every directed set with a least upper bound inside
    them; computed from the definition, not the finite shortcut."""
    dsets = directed_subsets(q)
    lubs = [(d, least_upper_bounds(q, d)) for d in dsets]
    opens = []
    for u in q.upper_sets():
        if all(d & u for d, lub in lubs if lub & u):
            opens.append(u)
    return Topology(q.n, tuple(sorted(opens)))


def lawson_topology(q: Qoset) -> Topology:
    sigma = scott_topology(q)
    upsdual = weak_upper(q.dual())
    return generate_topology(q.n, list(sigma.opens) + list(upsdual.opens))


def upset_topology(q: Qoset, which: str) -> Topology:
    if which == "alpha":
        return alexandroff(q)
    if which == "upsilon":
        return weak_upper(q)
    if which == "sigma":
        return scott_topology(q)
    if which == "lawson":
        return lawson_topology(q)
    if which == "alpha-dual":
        return alexandroff(q.dual())
    if which == "upsilon-dual":
        return weak_upper(q.dual())
    raise ValidationError("UnknownSelection", (which,))


# ----------------------------------------------------------- hulls & kernels

def up_closure(q: Qoset, mask) -> int:
    return q.up(mask)


def down_closure(q: Qoset, mask) -> int:
    return q.down(mask)


def interior(t: Topology, mask) -> int:
    m = 0
    for u in t.opens:
        if u & ~mask == 0:
            m |= u
    return m


def closure(t: Topology, mask) -> int:
    return t.full ^ interior(t, t.full ^ mask)


def saturation(t: Topology, mask) -> int:
    """Intersection of all open neighborhoods."""
    m = t.full
    for u in t.opens:
        if mask & ~u == 0:
            m &= u
    return m


# ----------------------------------------------------------- patch functors

def coselection_subbase(s: Topology, zeta: str) -> Topology:
    """zeta(S): the chosen cotopology subbase, built on the dual of the
    specialization qoset of S."""
    if zeta not in COSELECTIONS:
        raise ValidationError("UnknownSelection", (zeta,))
    return upset_topology(specialization(s).dual(), zeta)


def patch(s: Topology, zeta: str) -> OrderedSpace:
    q = specialization(s)
    cot = coselection_subbase(s, zeta)
    topo = generate_topology(s.n, list(s.opens) + list(cot.opens))
    return OrderedSpace(q, topo)


def upper_space(t: OrderedSpace) -> Topology:
    opens = [u for u in t.topology.opens if t.qoset.up(u) == u]
    return Topology(t.n, tuple(opens))


def lower_space(t: OrderedSpace) -> Topology:
    opens = [u for u in t.topology.opens if t.qoset.down(u) == u]
    return Topology(t.n, tuple(opens))


# ----------------------------------------------------------- compactness

def compactness(t: Topology, c, kind: str) -> bool:
    if kind == "compact":
        # every subfamily of a finite topology is finite, so any open cover
        # of c is its own finite subcover
        return True
    if kind == "supercompact":
        # a cover without a member containing c exists iff the opens that do
        # not contain c already cover c; the empty set is covered by the
        # empty family, so it is never supercompact
        if c == 0:
            return False
        u = 0
        for o in t.opens:
            if c & ~o:
                u |= o
        return bool(c & ~u)
    if kind == "hypercompact":
        sat = saturation(t, c)
        q = specialization(t)
        minimal = mask_of(
            x for x in bits(sat) if not any(
                y != x and q.leq[y] >> x & 1 and not q.leq[x] >> y & 1
                for y in bits(sat)
            )
        )
        return q.up(minimal) == sat
    raise ValidationError("UnknownKind", (kind,))


# ----------------------------------------------------------- sobriety et al.

def irreducible_closed(t: Topology):
    closeds = t.closeds()
    out = []
    for a in closeds:
        if a == 0:
            continue
        if all(a & ~(b | c) or a & ~b == 0 or a & ~c == 0
               for b in closeds for c in closeds):
            out.append(a)
    return out


def point_closures(t: Topology):
    return {closure(t, 1 << x) for x in range(t.n)}

def is_sober(t: Topology) -> bool:
    if not t.is_t0():
        return False
    pts = point_closures(t)
    return all(a in pts for a in irreducible_closed(t))


def is_dspace(t: Topology) -> bool:
    if not t.is_t0():
        return False
    q = specialization(t)
    pts = point_closures(t)
    return all(closure(t, d) in pts for d in directed_subsets(q))


def cocompact(t: Topology) -> Topology:
    """Generated by complements of compact saturated sets."""
    full = t.full
    compl = [
        full ^ c
        for c in range(full + 1)
        if saturation(t, c) == c and compactness(t, c, "compact")
    ]
    return generate_topology(t.n, compl)


# ----------------------------------------------------------- quasi-uniformity

@dataclass(frozen=True)
class EntourageBase:
    """Finite filter base of reflexive relations, intersection-closed."""

    n: int
    base: tuple

    def __post_init__(self):
        if not self.base:
            raise ValidationError("EmptyBase")
        for r in self.base:
            for x in range(self.n):
                if not r.rel[x] >> x & 1:
                    raise ValidationError("NotReflexive", (x,))


def _interior_relation_rows(s: Topology):
    q = specialization(s)
    return tuple(interior(s, q.leq[x]) for x in range(s.n))


def quasi_uniformity(s: Topology) -> EntourageBase:
    """Coarsest quasi-uniformity inducing s, generated by the entourages
    x'R -> y'R over pairs with y' R x' (R the interior relation)."""
    n = s.n
    full = (1 << n) - 1
    rrows = _interior_relation_rows(s)
    if any(not rrows[x] >> x & 1 for x in range(n)):
        raise NotCoreSpace(s)
    gens = set()
    for xp in range(n):
        for yp in range(n):
            if rrows[yp] >> xp & 1:
                xr, yr = rrows[xp], rrows[yp]
                rows = tuple(yr if xr >> x & 1 else full for x in range(n))
                gens.add(rows)
    closed = set(gens)
    frontier = list(gens)
    while frontier:
        add = []
        for a in frontier:
            for b in closed:
                c = tuple(ra & rb for ra, rb in zip(a, b))
                if c not in closed and c not in add:
                    add.append(c)
        closed.update(add)
        frontier = add
    base = tuple(BinaryRelation(n, rows) for rows in sorted(closed))
    return EntourageBase(n, base)


def _tau_from(n, relations) -> Topology:
    opens = []
    for o in range(1 << n):
        if all(any(r.rel[x] & ~o == 0 for r in relations) for x in bits(o)):
            opens.append(o)
    return Topology(n, tuple(opens))


def tau(e: EntourageBase) -> Topology:
    return _tau_from(e.n, e.base)


def tau_inverse(e: EntourageBase) -> Topology:
    return _tau_from(e.n, [r.transpose() for r in e.base])


def tau_star(e: EntourageBase) -> Topology:
    sym = [
        BinaryRelation(e.n, tuple(a & b for a, b in zip(r.rel, transpose(e.n, r.rel))))
        for r in e.base
    ]
    return _tau_from(e.n, sym)
