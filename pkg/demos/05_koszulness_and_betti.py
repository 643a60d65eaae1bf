#!/usr/bin/env python3
"""Koszulness via graded Betti numbers of the residue field.

A standard graded algebra is Koszul iff the Betti table of K over it is
concentrated on the diagonal.  A quadratic Groebner basis proves Koszulness
outright; otherwise the minimal free resolution of K over the artinian
reduction is built degree by degree with exact linear algebra, and the
first off-diagonal entry refutes it.

The heptagon-complement ring is the smallest stable-set example where this
bites: quadratic, Gorenstein, yet beta_{3,4} = 1.
"""

from koszulforge.betti import betti_table, graded_basis, koszul_verdict
from koszulforge.graphs import cycle
from koszulforge.paper_suite import paper_artinian_reduction
from koszulforge.toric import monomial_map, toric_ideal

art = paper_artinian_reduction(3)
A = graded_basis(art, degree_cap=5)
print(f"artinian reduction of the heptagon ring: dimensions {A.dimensions()}")

table = betti_table(A, 4, 5, stop_at_first_offdiagonal=True)
print("betti table of K (nonzero entries):")
for (i, j), v in sorted(table.entries.items()):
    if v:
        print(f"  beta_{i},{j} = {v}")
print(f"off-diagonal witness: {table.off_diagonal_witness()}")

pentagon = toric_ideal(monomial_map(cycle(5)))
verdict = koszul_verdict(pentagon)
print(f"\nC5 ring verdict: {verdict.status} ({verdict.note})")

# characteristic cross-check: the witness survives mod p
table_p = betti_table(A, 4, 5, characteristic=32003,
                      stop_at_first_offdiagonal=True)
print(f"\nsame table over GF(32003): {table.entries == table_p.entries}")
