"""Walkthrough: the six equivalent presentations of a relationally based
structure, converted through the idempotent-relation hub.

Run with: python3 demos/representations.py
"""

from ordertop import cord, morphcat
from ordertop.finstruct import Topology, mask_to_list

sier = Topology(2, (0, 2, 3))
start = morphcat.Representation("t0-core-space", sier)
morphcat.validate_representation(start)

print("starting point: the two-point space with one nontrivial open\n")
for kind in morphcat.KINDS:
    rep = morphcat.convert(start, kind)
    payload = rep.payload
    if kind == "c-ordered-set":
        desc = f"relation rows {payload.rel}"
    elif kind in ("t0-core-space", "core-based-sober-space"):
        desc = f"opens {[mask_to_list(o) for o in payload.opens]}"
    elif kind == "fan-ordered-space":
        desc = (f"opens {[mask_to_list(o) for o in payload.topology.opens]} "
                f"ordered by {payload.qoset.leq}")
    else:
        desc = f"order rows {payload.leq}"
    basis = "" if rep.basis is None else f", basis {mask_to_list(rep.basis)}"
    print(f"  {kind:>30}: {desc}{basis}")

print("\nevery ordered pair of kinds roundtrips up to isomorphism:")
ok = True
for a in morphcat.KINDS:
    ra = morphcat.convert(start, a)
    for b in morphcat.KINDS:
        if a == b:
            continue
        back = morphcat.convert(morphcat.convert(ra, b), a)
        ok = ok and morphcat.are_equivalent(ra, back)
print(f"  all 30 pairs: {ok}")

print("\nlattice-side detail: the open-set lattice of a space is "
      "completely distributive exactly when the space is locally "
      "supercompact; here:", cord.is_core_space(sier))
