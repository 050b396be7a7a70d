"""Exact finite structures: quasi-orders, topologies, lattices, relations, maps.

Every structure lives on a carrier 0..n-1 with n <= 16, so point sets are
single machine words (bitmasks).  All values are immutable after validation
and all operations are pure functions.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import permutations

MAX_POINTS = 16


class ValidationError(Exception):
    """Structure validation failure.  `code` names the violated clause and
    `witness` is the offending tuple (points or sets, per the clause)."""

    def __init__(self, code, witness=()):
        self.code = code
        self.witness = tuple(witness)
        super().__init__(f"{code}{self.witness if self.witness else ''}")


class ParseError(Exception):
    pass


class SchemaError(Exception):
    def __init__(self, field, message=""):
        self.field = field
        super().__init__(f"field {field!r}: {message}" if message else f"field {field!r}")


# ---------------------------------------------------------------- bit helpers

def mask_of(points) -> int:
    m = 0
    for p in points:
        m |= 1 << p
    return m


def bits(mask):
    """Iterate the set bits of a mask in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_to_list(mask):
    return list(bits(mask))


def popcount(mask) -> int:
    return mask.bit_count()


def subsets_of(mask):
    """All submasks of `mask`, ascending as integers, starting with 0."""
    sub = 0
    while True:
        yield sub
        if sub == mask:
            return
        sub = (sub - mask) & mask


def check_carrier(n):
    if not 1 <= n <= MAX_POINTS:
        raise ValidationError("BadCarrier", (n,))


# ---------------------------------------------------------------- structures

@dataclass(frozen=True)
class Qoset:
    """Reflexive transitive relation; leq[x] is the bitmask of {y : x <= y}."""

    n: int
    leq: tuple

    def leq_pair(self, x, y) -> bool:
        return bool(self.leq[x] >> y & 1)

    @property
    def geq(self):
        """Row masks of the dual order: geq[x] = {y : y <= x}."""
        return transpose(self.n, self.leq)

    def dual(self) -> "Qoset":
        return Qoset(self.n, transpose(self.n, self.leq))

    def up(self, mask) -> int:
        m = 0
        for x in bits(mask):
            m |= self.leq[x]
        return m

    def down(self, mask) -> int:
        geq = self.geq
        m = 0
        for x in bits(mask):
            m |= geq[x]
        return m

    def is_antisymmetric(self) -> bool:
        return all(
            not (self.leq[x] >> y & 1 and self.leq[y] >> x & 1)
            for x in range(self.n) for y in range(self.n) if x != y
        )

    def upper_sets(self):
        """All upper sets as masks, ascending."""
        full = (1 << self.n) - 1
        return [m for m in range(full + 1) if self.up(m) == m]

    def lower_sets(self):
        full = (1 << self.n) - 1
        return [m for m in range(full + 1) if self.down(m) == m]

    def matrix(self):
        return [[self.leq[x] >> y & 1 for y in range(self.n)] for x in range(self.n)]


@dataclass(frozen=True)
class Topology:
    """Explicit open-set family; opens are masks sorted ascending."""

    n: int
    opens: tuple

    @property
    def full(self) -> int:
        return (1 << self.n) - 1

    def is_t0(self) -> bool:
        return all(
            any((u >> x & 1) != (u >> y & 1) for u in self.opens)
            for x in range(self.n) for y in range(x + 1, self.n)
        )

    def closeds(self):
        full = self.full
        return sorted(full ^ u for u in self.opens)

    def neighborhoods(self, x):
        return [u for u in self.opens if u >> x & 1]

    def min_neighborhood(self, x) -> int:
        m = self.full
        for u in self.opens:
            if u >> x & 1:
                m &= u
        return m


@dataclass(frozen=True)
class BinaryRelation:
    """Arbitrary relation; rel[x] is the bitmask of {y : x R y}."""

    n: int
    rel: tuple

    def pair(self, x, y) -> bool:
        return bool(self.rel[x] >> y & 1)

    def transpose(self) -> "BinaryRelation":
        return BinaryRelation(self.n, transpose(self.n, self.rel))

    def matrix(self):
        return [[self.rel[x] >> y & 1 for y in range(self.n)] for x in range(self.n)]


@dataclass(frozen=True)
class Lattice:
    """Finite lattice: partial order plus total meet/join tables."""

    n: int
    leq: tuple
    meet: tuple
    join: tuple

    def leq_pair(self, x, y) -> bool:
        return bool(self.leq[x] >> y & 1)

    @property
    def bottom(self) -> int:
        for x in range(self.n):
            if self.leq[x] == (1 << self.n) - 1:
                return x
        raise AssertionError("validated lattice has a bottom")

    @property
    def top(self) -> int:
        for x in range(self.n):
            if self.leq[x] == 1 << x:
                return x
        raise AssertionError("validated lattice has a top")

    def poset(self) -> Qoset:
        return Qoset(self.n, self.leq)

    def dual(self) -> "Lattice":
        return Lattice(self.n, transpose(self.n, self.leq), self.join, self.meet)

    def join_of(self, mask) -> int:
        """Join of a subset mask (empty join = bottom)."""
        acc = self.bottom
        for x in bits(mask):
            acc = self.join[acc][x]
        return acc

    def meet_of(self, mask) -> int:
        acc = self.top
        for x in bits(mask):
            acc = self.meet[acc][x]
        return acc

    def down_mask(self, x) -> int:
        return mask_of(y for y in range(self.n) if self.leq[y] >> x & 1)

    def up_mask(self, x) -> int:
        return self.leq[x]


Lattice.matrix = Qoset.matrix  # identical row representation


@dataclass(frozen=True)
class OrderedSpace:
    qoset: Qoset
    topology: Topology

    def __post_init__(self):
        if self.qoset.n != self.topology.n:
            raise ValidationError("CarrierMismatch", (self.qoset.n, self.topology.n))

    @property
    def n(self) -> int:
        return self.qoset.n


@dataclass(frozen=True)
class SpaceMap:
    n_src: int
    n_dst: int
    value: tuple

    def __post_init__(self):
        if len(self.value) != self.n_src or any(
            not 0 <= v < self.n_dst for v in self.value
        ):
            raise ValidationError("NotTotal", self.value)

    def __call__(self, x):
        return self.value[x]

    def image(self, mask) -> int:
        return mask_of(self.value[x] for x in bits(mask))

    def preimage(self, mask) -> int:
        return mask_of(x for x in range(self.n_src) if mask >> self.value[x] & 1)


def transpose(n, rows):
    return tuple(
        mask_of(x for x in range(n) if rows[x] >> y & 1) for y in range(n)
    )


# ---------------------------------------------------------------- validators

def validate_topology(n, family) -> Topology:
    """Canonicalize a family of point-set masks into a Topology.

    The family must contain the empty set and the carrier and be closed under
    pairwise union and intersection (sufficient on a finite carrier).
    """
    check_carrier(n)
    full = (1 << n) - 1
    fam = list(family)
    seen = set()
    for m in fam:
        if not 0 <= m <= full:
            raise ValidationError("NotASubset", (m,))
        if m in seen:
            raise ValidationError("Duplicate", (m,))
        seen.add(m)
    if 0 not in seen:
        raise ValidationError("MissingEmpty")
    if full not in seen:
        raise ValidationError("MissingFull")
    ordered = sorted(seen)
    for i, a in enumerate(ordered):
        for b in ordered[i + 1:]:
            if a | b not in seen:
                raise ValidationError("NotUnionClosed", (a, b))
            if a & b not in seen:
                raise ValidationError("NotIntersectionClosed", (a, b))
    return Topology(n, tuple(ordered))


def validate_qoset(n, matrix) -> Qoset:
    """Validate an n x n 0/1 matrix (or row-mask tuple) as a quasi-order."""
    check_carrier(n)
    rows = _rows_from(n, matrix)
    for x in range(n):
        if not rows[x] >> x & 1:
            raise ValidationError("NotReflexive", (x,))
    for x in range(n):
        for y in bits(rows[x]):
            if rows[y] & ~rows[x]:
                z = next(bits(rows[y] & ~rows[x]))
                raise ValidationError("NotTransitive", (x, y, z))
    return Qoset(n, rows)


def validate_lattice(n, matrix) -> Lattice:
    """Validate a partial order and derive total meet/join tables."""
    q = validate_qoset(n, matrix)
    rows = q.leq
    for x in range(n):
        for y in range(x + 1, n):
            if rows[x] >> y & 1 and rows[y] >> x & 1:
                raise ValidationError("NotAntisymmetric", (x, y))
    geq = transpose(n, rows)
    meet = []
    join = []
    for x in range(n):
        mrow = []
        jrow = []
        for y in range(n):
            lower = geq[x] & geq[y]
            glbs = [z for z in bits(lower) if all(rows[w] >> z & 1 for w in bits(lower))]
            if not glbs:
                raise ValidationError("NoMeet", (x, y))
            mrow.append(glbs[0])
            upper = rows[x] & rows[y]
            lubs = [z for z in bits(upper) if all(rows[z] >> w & 1 for w in bits(upper))]
            if not lubs:
                raise ValidationError("NoJoin", (x, y))
            jrow.append(lubs[0])
        meet.append(tuple(mrow))
        join.append(tuple(jrow))
    return Lattice(n, rows, tuple(meet), tuple(join))


def _rows_from(n, matrix):
    if matrix and isinstance(matrix[0], int):
        rows = tuple(matrix)
    else:
        if len(matrix) != n or any(len(r) != n for r in matrix):
            raise ValidationError("BadMatrix", (n,))
        rows = tuple(mask_of(y for y in range(n) if matrix[x][y]) for x in range(n))
    if len(rows) != n:
        raise ValidationError("BadMatrix", (n,))
    return rows


def qoset_from_rows(n, rows) -> Qoset:
    return validate_qoset(n, tuple(rows))


def generate_topology(n, subbase) -> Topology:
    """Smallest topology containing the given subbase of masks."""
    check_carrier(n)
    full = (1 << n) - 1
    for m in subbase:
        if not 0 <= m <= full:
            raise ValidationError("NotASubset", (m,))
    # finite intersections of subbase members form a base (X = empty
    # intersection), then the opens are all unions of base members
    base = {full}
    for m in dict.fromkeys(subbase):
        base |= {m & b for b in base}
    opens = {0}
    for b in base:
        opens |= {o | b for o in opens}
    return Topology(n, tuple(sorted(opens)))


# ------------------------------------------------------------- isomorphism

def _kind_of(obj):
    if isinstance(obj, Qoset):
        return "qoset"
    if isinstance(obj, Topology):
        return "topology"
    if isinstance(obj, OrderedSpace):
        return "ordered-space"
    if isinstance(obj, Lattice):
        return "lattice"
    if isinstance(obj, BinaryRelation):
        return "relation"
    raise ValidationError("UnknownKind", (type(obj).__name__,))


def _relation_invariant(n, rows, x):
    cols = transpose(n, rows)
    return (popcount(rows[x]), popcount(cols[x]))


def are_isomorphic(a, b, kind=None):
    """Structure isomorphism test; returns (bool, witness permutation).

    The witness maps points of `a` to points of `b` and is the
    lexicographically least such permutation.
    """
    ka, kb = _kind_of(a), _kind_of(b)
    if ka != kb or (kind is not None and kind not in (ka,)):
        raise ValidationError("KindMismatch", (ka, kb))
    na = a.qoset.n if ka == "ordered-space" else a.n
    nb = b.qoset.n if kb == "ordered-space" else b.n
    if na != nb:
        return False, None
    n = na

    if ka == "topology":
        sa, sb = set(a.opens), set(b.opens)
        if len(sa) != len(sb):
            return False, None
        inv_a = [sum(1 for u in sa if u >> x & 1) for x in range(n)]
        inv_b = [sum(1 for u in sb if u >> x & 1) for x in range(n)]

        def ok(perm):
            return {mask_of(perm[x] for x in bits(u)) for u in sa} == sb
    elif ka in ("qoset", "relation", "lattice"):
        rows_a = a.leq if ka in ("qoset", "lattice") else a.rel
        rows_b = b.leq if ka in ("qoset", "lattice") else b.rel
        inv_a = [_relation_invariant(n, rows_a, x) for x in range(n)]
        inv_b = [_relation_invariant(n, rows_b, x) for x in range(n)]

        def ok(perm):
            return all(
                (rows_a[x] >> y & 1) == (rows_b[perm[x]] >> perm[y] & 1)
                for x in range(n) for y in range(n)
            )
    else:  # ordered-space
        rows_a, rows_b = a.qoset.leq, b.qoset.leq
        sa, sb = set(a.topology.opens), set(b.topology.opens)
        if len(sa) != len(sb):
            return False, None
        inv_a = [_relation_invariant(n, rows_a, x) + (sum(1 for u in sa if u >> x & 1),) for x in range(n)]
        inv_b = [_relation_invariant(n, rows_b, x) + (sum(1 for u in sb if u >> x & 1),) for x in range(n)]

        def ok(perm):
            return all(
                (rows_a[x] >> y & 1) == (rows_b[perm[x]] >> perm[y] & 1)
                for x in range(n) for y in range(n)
            ) and {mask_of(perm[x] for x in bits(u)) for u in sa} == sb

    if sorted(inv_a) != sorted(inv_b):
        return False, None
    # backtracking over images in increasing order gives the lexicographically
    # least witness; the per-point invariants prune the search
    for perm in permutations(range(n)):
        if all(inv_a[x] == inv_b[perm[x]] for x in range(n)) and ok(perm):
            return True, perm
    return False, None


# ------------------------------------------------------------- serialization

def _sets_out(masks):
    return [mask_to_list(m) for m in masks]


def encode(obj) -> str:
    """Canonical one-line text record for any finstruct value."""
    if isinstance(obj, Topology):
        rec = {"kind": "topology", "n": obj.n, "opens": _sets_out(obj.opens)}
    elif isinstance(obj, Qoset):
        rec = {"kind": "qoset", "n": obj.n, "leq": obj.matrix()}
    elif isinstance(obj, OrderedSpace):
        rec = {
            "kind": "ordered_space",
            "n": obj.n,
            "leq": obj.qoset.matrix(),
            "opens": _sets_out(obj.topology.opens),
        }
    elif isinstance(obj, Lattice):
        rec = {"kind": "lattice", "n": obj.n, "leq": obj.matrix()}
    elif isinstance(obj, BinaryRelation):
        rec = {"kind": "relation", "n": obj.n, "rel": obj.matrix()}
    elif isinstance(obj, SpaceMap):
        rec = {
            "kind": "map",
            "n_src": obj.n_src,
            "n_dst": obj.n_dst,
            "value": list(obj.value),
        }
    else:
        raise ValidationError("UnknownKind", (type(obj).__name__,))
    return json.dumps(rec, separators=(",", ":"))


def _field(rec, name, typ):
    if name not in rec:
        raise SchemaError(name, "missing")
    v = rec[name]
    if typ is int and not isinstance(v, int):
        raise SchemaError(name, "expected integer")
    if typ is list and not isinstance(v, list):
        raise SchemaError(name, "expected array")
    return v


def decode(text):
    """Inverse of encode; validation failures propagate as errors."""
    try:
        rec = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(f"position {e.pos}: {e.msg}") from e
    if not isinstance(rec, dict):
        raise SchemaError("kind", "record must be an object")
    kind = _field(rec, "kind", None)
    if kind == "topology":
        n = _field(rec, "n", int)
        opens = [mask_of(s) for s in _field(rec, "opens", list)]
        return validate_topology(n, opens)
    if kind == "qoset":
        return validate_qoset(_field(rec, "n", int), _field(rec, "leq", list))
    if kind == "ordered_space":
        n = _field(rec, "n", int)
        q = validate_qoset(n, _field(rec, "leq", list))
        t = validate_topology(n, [mask_of(s) for s in _field(rec, "opens", list)])
        return OrderedSpace(q, t)
    if kind == "lattice":
        return validate_lattice(_field(rec, "n", int), _field(rec, "leq", list))
    if kind == "relation":
        n = _field(rec, "n", int)
        check_carrier(n)
        return BinaryRelation(n, _rows_from(n, _field(rec, "rel", list)))
    if kind == "map":
        return SpaceMap(
            _field(rec, "n_src", int),
            _field(rec, "n_dst", int),
            tuple(_field(rec, "value", list)),
        )
    raise SchemaError("kind", f"unknown kind {kind!r}")
