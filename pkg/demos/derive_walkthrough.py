"""Walkthrough: from a finite order to its derived topologies and back.

Run with: python3 demos/derive_walkthrough.py
"""

from ordertop import cord, topoderive as td
from ordertop.finstruct import Qoset, Topology, mask_to_list

# the four-element Boolean order 0 < {1, 2} < 3
diamond = Qoset(4, (0b1111, 0b1010, 0b1100, 0b1000))


def show(label, topology):
    sets = [mask_to_list(o) for o in topology.opens]
    print(f"{label:>12}: {sets}")


print("derived topologies of the 2x2 order")
show("weak upper", td.weak_upper(diamond))
show("scott", td.scott_topology(diamond))
show("lawson", td.lawson_topology(diamond))

lawson = td.lawson_topology(diamond)
print("\nlawson specialization order is discrete:",
      td.specialization(lawson).leq == (1, 2, 4, 8))

sier = Topology(2, (0, 2, 3))
print("\ntwo-point space with one nontrivial open")
rel = cord.interior_relation(sier)
print("interior relation rows:", rel.rel)
c = cord.CQuasiOrder(2, rel.rel)
print("rebuilt topology equals original:", cord.topology_of(c) == sier)

comp = cord.rounded_ideal_completion(c)
print("rounded-ideal completion order:", comp.domain.leq,
      "with basis map", comp.basis.value)

patched = td.patch(sier, "upsilon")
print("weak patch is discrete:", len(patched.topology.opens) == 4)
print("patch remembers the order:", patched.qoset.leq)
print("upper space of the patch returns the original:",
      td.upper_space(patched) == sier)
