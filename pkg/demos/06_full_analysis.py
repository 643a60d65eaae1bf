#!/usr/bin/env python3
"""The full pipeline on one graph, as the CLI's analyze command runs it.

For the complement of C7 this reproduces the headline result: a non-Koszul
quadratic Gorenstein toric ring (that run takes a few minutes because of the
exhaustive marking search; here we analyze the square and the pentagon).
"""

from koszulforge.reports import analyze, render_text

for spec in ("cycle(4)", "cycle(5)"):
    report = analyze(spec)
    print(render_text(report))
    print()

print("for the heptagon-complement headline, run:")
print('  koszul-forge analyze "complement(cycle(7))" --format text')
