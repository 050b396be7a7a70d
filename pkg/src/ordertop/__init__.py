"""Finite order-topology lab.

Exact computation on finite quasi-ordered sets, topologies, lattices and
relations: derived topologies (Scott, Lawson, patch, cocompact), core-space
and ordered-space predicate profiles, rounded ideal completions, lattice
distributivity laws, cardinal invariants, representation converters, and
exhaustive verification suites over enumerated small instances.
"""

__version__ = "0.1.0"
