#!/usr/bin/env python3
"""Toric ideals of stable set polytopes.

Each stable set W gives a generator t * prod_{i in W} x_i; the toric ideal
is the kernel of the resulting monomial map, computed exactly by eliminating
the x's and t from the graph of the map.  For the complement of an odd cycle
the kernel has a published closed form, which cross-validates the engine.
"""

from koszulforge.graphs import cycle
from koszulforge.groebner import normal_form, reduced_gb
from koszulforge.polyring import TermOrder
from koszulforge.toric import closed_form_generators, monomial_map, toric_ideal

square = monomial_map(cycle(4))
print("C4 sources:", ", ".join(square.source_labels))
ideal = toric_ideal(square)
print(f"toric ideal of Q_(C4): {len(ideal.presentation.generators)} binomials")
for g in ideal.presentation.generators:
    print("  ", g.to_str(ideal.presentation.labels))

closed = closed_form_generators("cbar", 3)
elim = toric_ideal(closed.map)
print(f"\ncomplement of C7: closed form has "
      f"{len(closed.presentation.generators)} binomials, elimination found "
      f"{len(elim.presentation.generators)} basis elements")

order = TermOrder.grevlex(closed.presentation.width)
gb = reduced_gb(closed.presentation, order)
containments = all(normal_form(p, gb).is_zero()
                   for p in elim.presentation.generators)
print(f"elimination output lies in the closed-form ideal: {containments}")

fibers = closed.map
from koszulforge.toric import fiber_classes
fc = fiber_classes(fibers, 2)
print(f"\ndegree-2 fiber classes: {fc.count} (each a pair of monomials with "
      f"the same image); marking space 2^{fc.count} = {fc.marking_space_size()}")
