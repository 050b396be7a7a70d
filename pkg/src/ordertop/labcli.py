"""Enumeration engines, verification suites, a counterexample hunter, named
fixtures, and the `ordertop` command-line interface.

Enumeration is labeled and lexicographic over canonical encodings, so "first
counterexample" is well defined and independent of worker partitioning.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import random
import sys
import time
from dataclasses import dataclass, field

from . import __version__, cord, latid, morphcat, ospace
from . import topoderive as td
from .finstruct import (
    Lattice,
    OrderedSpace,
    ParseError,
    Qoset,
    SchemaError,
    Topology,
    ValidationError,
    bits,
    decode,
    encode,
    mask_of,
    validate_lattice,
)

BOUNDS = {
    "qoset": 5,
    "partial-order": 6,
    "topology": 5,
    "t0-topology": 5,
    "ordered-space": 5,
    "lattice": 6,
    "semilattice-ordered-space": 5,
}

SUITES = (
    "thm-3.3-roundtrip",
    "thm-4.6",
    "thm-5.3",
    "thm-6.2",
    "thm-7.2",
    "thm-8.4",
    "thm-9.3",
    "prop-3.1",
    "prop-5.5",
    "prop-7.4",
    "prop-9.1",
    "lattice-laws",
    "count-crosscheck",
)


# ---------------------------------------------------------------- enumeration

def posets(n):
    """All labeled partial orders on n points, ascending by row tuple.
    Element k is attached to the order on 0..k-1 by choosing its strict
    up-set and down-set among the earlier elements."""
    out = []

    def extend(k, rows):
        if k == n:
            out.append(tuple(rows))
            return
        for up in range(1 << k):
            # the strict up-set must be up-closed in the existing order
            if any(rows[u] & ~up & ~(1 << u) for u in bits(up)):
                continue
            for down in range(1 << k):
                if up & down:
                    continue
                # the strict down-set must be down-closed
                if any(
                    not down >> x & 1
                    for d in bits(down) for x in range(k)
                    if rows[x] >> d & 1 and x != d
                ):
                    continue
                # transitivity through k: everything below sits below
                # everything above
                if any(
                    not rows[d] >> u & 1
                    for d in bits(down) for u in bits(up)
                ):
                    continue
                new_rows = [
                    rows[x] | (1 << k) if down >> x & 1 else rows[x]
                    for x in range(k)
                ]
                new_rows.append(up | 1 << k)
                extend(k + 1, new_rows)

    extend(0, [])
    return sorted(out)


def set_partitions(n):
    """Restricted-growth strings, lexicographic."""
    out = []

    def grow(prefix, mx):
        if len(prefix) == n:
            out.append(tuple(prefix))
            return
        for v in range(mx + 2):
            grow(prefix + [v], max(mx, v))

    grow([0], 0) if n else out.append(())
    return out


def qosets(n):
    """All labeled qosets: a partition into equivalence blocks plus a partial
    order on the blocks."""
    out = []
    for part in set_partitions(n):
        k = max(part) + 1 if part else 0
        blocks = [mask_of(i for i in range(n) if part[i] == b) for b in range(k)]
        for rows in posets(k):
            leq = tuple(
                mask_of(
                    j for j in range(n) if rows[part[i]] >> part[j] & 1
                ) | blocks[part[i]]
                for i in range(n)
            )
            out.append(leq)
    return sorted(set(out))


def topologies(n):
    """All topologies on n labeled points by direct search over the lattice of
    point-set masks: masks are decided in ascending order, and adding one
    closes the family under union and intersection (pruning on any decision
    conflict)."""
    if n == 0:
        return [(0,)]
    full = (1 << n) - 1
    results = []

    def close(family, m):
        added = {m}
        frontier = [m]
        fam = set(family) | added
        while frontier:
            nxt = []
            for a in frontier:
                for b in list(fam):
                    for c in (a | b, a & b):
                        if c not in fam:
                            fam.add(c)
                            nxt.append(c)
            frontier = nxt
        return fam

    def search(m, family, forbidden):
        if m == full:
            results.append(tuple(sorted(family)))
            return
        search(m + 1, family, forbidden | {m} if m not in family else forbidden)
        if m not in family:
            fam = close(family, m)
            if not fam & forbidden:
                search(m + 1, fam, forbidden)

    search(1, {0, full} if n else {0}, set())
    return sorted(set(results))


def lattices(n):
    """All labeled lattices on n points, via the bounded posets."""
    out = []
    full = (1 << n) - 1
    for rows in posets(n):
        if not any(r == full for r in rows):
            continue
        cols = [mask_of(x for x in range(n) if rows[x] >> y & 1) for y in range(n)]
        if not any(c == full for c in cols):
            continue
        try:
            out.append(validate_lattice(n, rows))
        except ValidationError:
            continue
    return out


def _meet_posets(n):
    return [rows for rows in posets(n) if ospace.meet_table(Qoset(n, rows))]


def enumerate_instances(kind, n):
    """Deterministic lexicographic stream of canonical instances."""
    if kind not in BOUNDS:
        raise ValidationError("UnknownKind", (kind,))
    if n < 0 or n > BOUNDS[kind]:
        raise ValidationError("BoundTooLarge", (kind, n))
    if kind == "qoset":
        return [Qoset(n, rows) for rows in qosets(n)]
    if kind == "partial-order":
        return [Qoset(n, rows) for rows in posets(n)]
    if kind == "topology":
        return [Topology(n, opens) for opens in topologies(n)]
    if kind == "t0-topology":
        return [
            Topology(n, opens) for opens in topologies(n)
            if Topology(n, opens).is_t0()
        ]
    if kind == "ordered-space":
        return [
            OrderedSpace(Qoset(n, rows), Topology(n, opens))
            for rows in posets(n) for opens in topologies(n)
        ]
    if kind == "lattice":
        return lattices(n)
    if kind == "semilattice-ordered-space":
        return [
            OrderedSpace(Qoset(n, rows), Topology(n, opens))
            for rows in _meet_posets(n) for opens in topologies(n)
        ]
    raise ValidationError("UnknownKind", (kind,))


# ---------------------------------------------------------------- registry

def _tb(t: OrderedSpace) -> ospace.Tables:
    return ospace.Tables(t)


PREDICATES = {
    # ordered-space predicates
    "semi-qospace": ("ordered-space", lambda t: ospace.is_semi_qospace(_tb(t))),
    "qospace": ("ordered-space", lambda t: ospace.is_qospace(_tb(t))),
    "pospace": ("ordered-space", lambda t: ospace.is_qospace(_tb(t)) and t.qoset.is_antisymmetric()),
    "t1-ordered": ("ordered-space", lambda t: ospace.is_semi_qospace(_tb(t)) and t.qoset.is_antisymmetric()),
    "t2-ordered": ("ordered-space", lambda t: ospace.is_t2_ordered(_tb(t))),
    "upper-regular": ("ordered-space", lambda t: ospace.is_upper_regular(_tb(t))),
    "lower-regular": ("ordered-space", lambda t: ospace.is_lower_regular(_tb(t))),
    "locally-convex": ("ordered-space", lambda t: ospace.is_locally_convex(_tb(t))),
    "strongly-convex": ("ordered-space", lambda t: ospace.is_strongly_convex(_tb(t))),
    "hyperconvex": ("ordered-space", lambda t: ospace.is_hyperconvex(_tb(t))),
    "up-stable": ("ordered-space", lambda t: ospace.is_up_stable(_tb(t))),
    "d-stable": ("ordered-space", lambda t: ospace.is_d_stable(_tb(t))),
    "core-stable": ("ordered-space", lambda t: ospace.is_core_stable(_tb(t))),
    "vee-stable": ("ordered-space", lambda t: ospace.is_vee_stable(_tb(t))),
    "wedge-stable": ("ordered-space", lambda t: ospace.is_wedge_stable(_tb(t))),
    "diamond-stable": ("ordered-space", lambda t: ospace.is_diamond_stable(_tb(t))),
    "web-ordered": ("ordered-space", lambda t: ospace.is_web_ordered(_tb(t))),
    "locally-filtered": ("ordered-space", lambda t: ospace.is_locally_filtered(_tb(t))),
    "sector-space": ("ordered-space", lambda t: ospace.is_sector_space(_tb(t))),
    "fan-space": ("ordered-space", lambda t: ospace.is_fan_space(_tb(t))),
    "mc-ordered": ("ordered-space", lambda t: ospace.is_mc_ordered(_tb(t))),
    "upper-m-determined": ("ordered-space", lambda t: ospace.is_upper_m_determined(_tb(t))),
    "compact": ("ordered-space", lambda t: td.compactness(t.topology, t.topology.full, "compact")),
    # topology predicates
    "t0": ("topology", lambda s: s.is_t0()),
    "sober": ("topology", td.is_sober),
    "d-space": ("topology", td.is_dspace),
    "core-space": ("topology", cord.is_core_space),
    "web-space": ("topology", lambda s: _is_web_space(s)),
}


def _is_web_space(s: Topology) -> bool:
    tb = ospace.Tables(OrderedSpace(td.specialization(s), s))
    return ospace._neighborhood_base(
        tb, lambda w, x: ospace._is_web_around(tb, w, x)
    )


# ---------------------------------------------------------------- reports

@dataclass
class Report:
    suite: str
    n: int
    instances: int = 0
    passes: int = 0
    failures: int = 0
    counterexamples: list = field(default_factory=list)
    wall_time: float = 0.0
    version: str = __version__
    determinism_hash: str = ""

    def to_dict(self):
        return {
            "suite": self.suite,
            "n": self.n,
            "instances": self.instances,
            "passes": self.passes,
            "failures": self.failures,
            "counterexamples": self.counterexamples,
            "wall_time": self.wall_time,
            "version": self.version,
            "determinism_hash": self.determinism_hash,
        }

    def seal(self):
        payload = self.to_dict()
        payload.pop("wall_time")
        payload.pop("determinism_hash")
        blob = json.dumps(payload, sort_keys=True, separators=(",", ":"))
        self.determinism_hash = hashlib.sha256(blob.encode()).hexdigest()
        return self


@dataclass(frozen=True)
class SuiteSpec:
    suite: str
    n: int
    seed: int = 0
    sample: int = 1000


# Deliberately broken predicate variants for determinism testing: each fault
# drops one conjunct, which creates real (reproducible) counterexamples.
FAULTS = {
    "sector-no-separation": "thm-4.6",
    "fan-no-separation": "thm-5.3",
}


def _suite_cases(spec: SuiteSpec, fault=None):
    """Yield (encoded-instance, ok, detail) in enumeration order."""
    s_id, n = spec.suite, spec.n
    if s_id == "thm-3.3-roundtrip":
        for s in enumerate_instances("topology", n):
            rel = cord.interior_relation(s)
            c = cord.CQuasiOrder(s.n, rel.rel)
            ok = (
                cord.topology_of(c) == s
                and td.alexandroff(td.specialization(s)) == s
            )
            yield encode(s), ok, None
    elif s_id in ("thm-4.6", "thm-5.3"):
        tops = enumerate_instances("topology", n)
        tables = [ospace.interior_table_of(t) for t in tops]
        orders = posets(n)
        for ti, t in enumerate(tops):
            for rows in orders:
                sp = OrderedSpace(Qoset(n, rows), t)
                tb = ospace.Tables(sp, tables[ti])
                if s_id == "thm-4.6":
                    vec = ospace.thm_4_6_sides(tb)
                    if fault == "sector-no-separation":
                        vec = (
                            ospace.is_up_stable(tb)
                            and ospace._neighborhood_base(
                                tb, lambda w, x: ospace._is_sector(tb, w)
                            ),
                        ) + vec[1:]
                else:
                    vec = ospace.thm_5_3_sides(tb)
                    if fault == "fan-no-separation":
                        vec = (
                            ospace.is_up_stable(tb)
                            and ospace._neighborhood_base(
                                tb, lambda w, x: ospace._is_fan(tb, w)
                            ),
                        ) + vec[1:]
                ok = len(set(vec)) == 1
                yield encode(sp), ok, list(vec)
    elif s_id == "thm-6.2":
        orders = posets(n)
        if n >= 5 and len(orders) > spec.sample:
            rng = random.Random(spec.seed)
            orders = sorted(rng.sample(orders, spec.sample))
        for rows in orders:
            q = Qoset(n, rows)
            sp = OrderedSpace(q, td.lawson_topology(q))
            vec = ospace.thm_6_2_sides(ospace.Tables(sp))
            yield encode(sp), all(vec), list(vec)
        if n <= 3:
            for sp in enumerate_instances("ordered-space", n):
                vec = ospace.thm_6_2_sides(ospace.Tables(sp))
                yield encode(sp), vec[3] == vec[4], [vec[3], vec[4]]
    elif s_id == "thm-7.2":
        for rows in _meet_posets(n):
            q = Qoset(n, rows)
            meet = ospace.meet_table(q)
            for opens in topologies(n):
                sp = OrderedSpace(q, Topology(n, opens))
                tb = ospace.Tables(sp)
                if not (ospace.is_hyperconvex(tb) and ospace.is_semi_qospace(tb)):
                    continue
                vec = ospace.thm_7_2_sides(tb, meet)
                ok = all(
                    len(set(vec[i:i + 3])) == 1 for i in (0, 3, 6)
                )
                yield encode(sp), ok, list(vec)
    elif s_id == "prop-7.4":
        for rows in _meet_posets(n):
            q = Qoset(n, rows)
            for opens in topologies(n):
                sp = OrderedSpace(q, Topology(n, opens))
                vec = ospace.prop_7_4_sides(ospace.Tables(sp))
                yield encode(sp), len(set(vec)) == 1, list(vec)
    elif s_id == "thm-8.4":
        for s in enumerate_instances("t0-topology", n):
            if not cord.is_core_space(s):
                continue
            base = morphcat.Representation("t0-core-space", s)
            ok = True
            detail = None
            for a in morphcat.KINDS:
                ra = morphcat.convert(base, a)
                for b in morphcat.KINDS:
                    if a == b:
                        continue
                    back = morphcat.convert(morphcat.convert(ra, b), a)
                    if not morphcat.are_equivalent(ra, back):
                        ok = False
                        detail = [a, b]
            yield encode(s), ok, detail
    elif s_id == "thm-9.3":
        for s in enumerate_instances("topology", n):
            inv = cord.cardinal_invariants(s)
            classes = len(set(td.specialization(s).leq))
            ok = all(v == classes for v in inv.values)
            yield encode(s), ok, list(inv.values)
    elif s_id == "prop-3.1":
        for s in enumerate_instances("topology", n):
            prof = cord.core_space_profile(s)
            ok = prof.agreement and all(prof.flags)
            yield encode(s), ok, list(prof.flags)
    elif s_id == "prop-5.5":
        for s in enumerate_instances("topology", n):
            e = td.quasi_uniformity(s)
            ok = (
                td.tau(e) == s
                and td.tau_inverse(e) == td.weak_upper(td.specialization(s).dual())
                and td.tau_star(e) == td.patch(s, "upsilon").topology
            )
            yield encode(s), ok, None
    elif s_id == "prop-9.1":
        for s in enumerate_instances("topology", n):
            for b in range(s.full + 1):
                conds = cord.prop_9_1_conditions(s, b)
                yield json.dumps({"space": encode(s), "basis": b}), \
                    len(set(conds)) == 1, list(conds)
    elif s_id == "lattice-laws":
        for k in range(1, n + 1):
            for lat in lattices(k):
                verdicts = {law: latid.check_law(lat, law)[0] for law in latid.LAWS}
                collapse = (
                    len({
                        verdicts["frame"], verdicts["coframe"],
                        verdicts["distributive"],
                        verdicts["completely-distributive"],
                        verdicts["wide-frame"], verdicts["wide-coframe"],
                    }) == 1
                    and verdicts["meet-continuous"]
                    and verdicts["continuous-lattice"]
                )
                ok = collapse
                if ok and verdicts["distributive"]:
                    ok = (
                        latid.min_join_dense(lat).weight
                        == latid.min_join_dense(lat.dual()).weight
                    )
                yield encode(lat), ok, verdicts
    elif s_id == "count-crosscheck":
        for k in range(n + 1):
            a = len(topologies(k))
            b = len(qosets(k))
            yield json.dumps({"n": k}), a == b, [a, b]
    else:
        raise ValidationError("UnknownSuite", (s_id,))


def run_suite(spec: SuiteSpec, workers: int = 1, fault: str | None = None) -> Report:
    """Evaluate a suite; workers are logical partitions of the enumeration
    stream (index mod workers) whose merged result is partition-independent."""
    if fault is not None and FAULTS.get(fault) != spec.suite:
        raise ValidationError("UnknownFault", (fault, spec.suite))
    start = time.monotonic()
    cases = list(_suite_cases(spec, fault))
    parts = [[] for _ in range(max(1, workers))]
    for i, case in enumerate(cases):
        parts[i % max(1, workers)].append((i, case))
    report = Report(spec.suite, spec.n)
    merged = []
    for part in parts:
        for i, (inst, ok, detail) in part:
            merged.append((i, inst, ok, detail))
    merged.sort(key=lambda rec: rec[0])
    for _i, inst, ok, detail in merged:
        report.instances += 1
        if ok:
            report.passes += 1
        else:
            report.failures += 1
            report.counterexamples.append({"instance": inst, "detail": detail})
    report.wall_time = time.monotonic() - start
    return report.seal()


# ---------------------------------------------------------------- hunting

@dataclass(frozen=True)
class HypothesisSpec:
    assume: tuple
    refute: str
    kind: str = "ordered-space"
    n: int = 3


def hunt(h: HypothesisSpec):
    """First (lexicographic) instance satisfying every assume tag while
    failing the refute tag, or an exhausted-certificate."""
    for tag in tuple(h.assume) + (h.refute,):
        if tag not in PREDICATES:
            raise ValidationError("UnknownPredicateTag", (tag,))
        if PREDICATES[tag][0] != h.kind:
            raise ValidationError("UnknownPredicateTag", (tag, h.kind))
    count = 0
    for inst in enumerate_instances(h.kind, h.n):
        count += 1
        if all(PREDICATES[tag][1](inst) for tag in h.assume):
            if not PREDICATES[h.refute][1](inst):
                return {"counterexample": encode(inst)}
    return {
        "exhausted": {"kind": h.kind, "n": h.n, "instances": count},
        "assume": list(h.assume),
        "refute": h.refute,
    }


# ---------------------------------------------------------------- fixtures

TRUNCATION_BANNER = (
    "finite truncation: statements about the infinite instance are NOT "
    "asserted for this fixture"
)


def _ex33_truncation(k: int) -> Lattice:
    """Carrier a, b_0..b_{k-1}, top (labeled 0, 1..k, k+1); x <= y iff x = y,
    x = b_0, or y = top."""
    n = k + 2
    top = n - 1
    rows = []
    for x in range(n):
        row = 1 << x | 1 << top
        if x == 1:  # b_0
            row = (1 << n) - 1
        rows.append(row)
    rows[top] = 1 << top
    return validate_lattice(n, tuple(rows))


def fixtures():
    m3 = validate_lattice(5, (0b11111, 0b10010, 0b10100, 0b11000, 0b10000))
    n5 = validate_lattice(5, (0b11111, 0b11010, 0b10100, 0b11000, 0b10000))
    diamond = validate_lattice(4, (0b1111, 0b1010, 0b1100, 0b1000))
    reg = {
        "sierpinski": {
            "object": Topology(2, (0, 2, 3)),
            "note": "two points, one nontrivial open",
        },
        "m3": {"object": m3, "note": "five-element modular non-distributive lattice"},
        "n5": {"object": n5, "note": "five-element non-modular lattice"},
        "2x2": {"object": diamond, "note": "four-element Boolean lattice"},
    }
    for k in (1, 2, 3):
        reg[f"ex33-trunc-{k}"] = {
            "object": _ex33_truncation(k),
            "note": f"{k + 2}-element truncation with b_0..b_{k - 1}",
            "banner": TRUNCATION_BANNER,
        }
    return reg


# ---------------------------------------------------------------- CLI

def _load(path):
    with open(path, encoding="utf-8") as fh:
        return decode(fh.read())


def _emit(text, out):
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def _cmd_check(args):
    if args.cls not in PREDICATES:
        print(f"unknown class tag: {args.cls}", file=sys.stderr)
        return 2
    kind, fn = PREDICATES[args.cls]
    obj = _load(args.infile)
    if kind == "ordered-space" and not isinstance(obj, OrderedSpace):
        print("class tag needs an ordered_space record", file=sys.stderr)
        return 2
    if kind == "topology" and not isinstance(obj, Topology):
        print("class tag needs a topology record", file=sys.stderr)
        return 2
    verdict = fn(obj)
    print(json.dumps({"class": args.cls, "verdict": verdict}))
    return 0 if verdict else 1


def _cmd_derive(args):
    op = args.op.replace("υ", "upsilon").replace("σ", "sigma") \
        .replace("α", "alpha")
    obj = _load(args.infile)
    if op in ("scott", "lawson"):
        q = obj.qoset if isinstance(obj, OrderedSpace) else obj
        res = td.upset_topology(q, "sigma" if op == "scott" else "lawson")
    elif op.startswith("patch:"):
        res = td.patch(obj, op.split(":", 1)[1])
    elif op == "upper":
        res = td.upper_space(obj)
    elif op == "lower":
        res = td.lower_space(obj)
    elif op == "cocompact":
        res = td.cocompact(obj)
    elif op == "interior-relation":
        res = cord.interior_relation(obj)
    elif op == "completion":
        c = cord.validate_cquasiorder(obj.n, obj.rel)
        comp = cord.rounded_ideal_completion(c)
        _emit(json.dumps({
            "domain": json.loads(encode(comp.domain)),
            "ideals": [sorted(bits(i)) for i in comp.ideals],
            "basis": list(comp.basis.value),
        }, sort_keys=True), args.out)
        return 0
    elif op == "quasi-uniformity":
        e = td.quasi_uniformity(obj)
        _emit(json.dumps({
            "n": e.n,
            "base": [json.loads(encode(r)) for r in e.base],
        }, sort_keys=True), args.out)
        return 0
    else:
        print(f"unknown derive op: {args.op}", file=sys.stderr)
        return 2
    _emit(encode(res), args.out)
    return 0


def _cmd_enumerate(args):
    for inst in enumerate_instances(args.kind, args.n):
        print(encode(inst))
    return 0


def _cmd_verify(args):
    if args.suite not in SUITES:
        print(f"unknown suite: {args.suite}", file=sys.stderr)
        return 2
    spec = SuiteSpec(args.suite, args.n, seed=args.seed, sample=args.sample)
    report = run_suite(spec, workers=args.workers, fault=args.fault)
    if args.verbose:
        for rec in report.counterexamples:
            print(json.dumps(rec, sort_keys=True))
    print(json.dumps(report.to_dict(), sort_keys=True))
    return 1 if report.failures else 0


def _cmd_hunt(args):
    assume = tuple(t for t in args.assume.split(",") if t) if args.assume else ()
    result = hunt(HypothesisSpec(assume, args.refute, args.kind, args.n))
    print(json.dumps(result, sort_keys=True))
    return 1 if "counterexample" in result else 0


def _cmd_invariants(args):
    obj = _load(args.infile)
    inv = cord.cardinal_invariants(obj)
    print(json.dumps({
        "c": inv.c, "w_open": inv.w_open, "w_closed": inv.w_closed,
        "w_patch": inv.w_patch, "d_patch": inv.d_patch,
    }, sort_keys=True))
    return 0


def _rep_from_file(kind, path):
    with open(path, encoding="utf-8") as fh:
        raw = json.loads(fh.read())
    payload = decode(json.dumps(raw["payload"]))
    if kind == "c-ordered-set":
        payload = cord.CQuasiOrder(payload.n, payload.rel)
    basis = mask_of(raw["basis"]) if "basis" in raw else None
    return morphcat.Representation(kind, payload, basis)


def rep_to_json(r: morphcat.Representation) -> str:
    payload = r.payload
    if isinstance(payload, cord.CQuasiOrder):
        payload = payload.relation()
    doc = {"kind": r.kind, "payload": json.loads(encode(payload))}
    if r.basis is not None:
        doc["basis"] = sorted(bits(r.basis))
    return json.dumps(doc, sort_keys=True)


def _cmd_convert(args):
    r = _rep_from_file(args.src, args.infile)
    out = morphcat.convert(r, args.dst)
    print(rep_to_json(out))
    return 0


def main(argv=None):
    parser = argparse.ArgumentParser(
        prog="ordertop",
        description="finite order-topology lab: checking, derivation, "
                    "enumeration, suite verification, and hunting",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="evaluate a class predicate on a record")
    p.add_argument("--class", dest="cls", required=True)
    p.add_argument("--in", dest="infile", required=True)
    p.set_defaults(fn=_cmd_check)

    p = sub.add_parser("derive", help="derive a topology/space/relation")
    p.add_argument("--op", required=True)
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--out")
    p.set_defaults(fn=_cmd_derive)

    p = sub.add_parser("enumerate", help="stream canonical instances")
    p.add_argument("--kind", required=True)
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(fn=_cmd_enumerate)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("--suite", required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--verbose", action="store_true")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--sample", type=int, default=1000)
    p.add_argument("--fault", default=None, help="broken-predicate variant")
    p.set_defaults(fn=_cmd_verify)

    p = sub.add_parser("hunt", help="search for a counterexample")
    p.add_argument("--assume", default="")
    p.add_argument("--refute", required=True)
    p.add_argument("--kind", default="ordered-space")
    p.add_argument("--n", type=int, default=3)
    p.set_defaults(fn=_cmd_hunt)

    p = sub.add_parser("invariants", help="cardinal invariants of a space")
    p.add_argument("--in", dest="infile", required=True)
    p.set_defaults(fn=_cmd_invariants)

    p = sub.add_parser("convert", help="convert between representations")
    p.add_argument("--from", dest="src", required=True)
    p.add_argument("--to", dest="dst", required=True)
    p.add_argument("--in", dest="infile", required=True)
    p.set_defaults(fn=_cmd_convert)

    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except (ValidationError, SchemaError, ParseError, FileNotFoundError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
