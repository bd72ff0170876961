"""Symmetrizing a square-zero quadratic monomial quotient.

A quotient here is the squarefree ring on x_1..x_n modulo a set of
quadratic kill relations x_a x_b = 0.  Its degree-d Hilbert value counts
the d-subsets containing no killed pair.  If the degree-(q+1) piece
vanishes, repeatedly cloning one parallel class into another drives the
kill graph to a disjoint union of cliques without ever decreasing the
degree-r Hilbert value, which proves hilbert(r) <= t_r(n, q) with the
balanced partition structure attaining equality.
"""

from turancover.squarezero import (
    SquareZeroQuotient,
    brute_force_hilbert_turan,
    elem_sym,
    smoothing_step,
    symmetrize,
    terminal_class_sizes,
)
from turancover.hypergraph import turan_count

# ---------------------------------------------------------------------------
# A worked instance on four variables.

A = SquareZeroQuotient(4, [(1, 2), (3, 4), (1, 3)])
print("start:", A)
print("  hilbert(2) =", A.hilbert(2), " degree-3 piece vanishes:", A.top_vanishing(2))

terminal, trace = symmetrize(A, q=2, r=2)
for i, step in enumerate(trace, 1):
    print(f"  step {i}: clone {step['source']} onto {step['target']}"
          f"  (hilbert {step['hilbert_before']} -> {step['hilbert_after']})")
print("terminal:", terminal)

sizes = terminal_class_sizes(terminal)
print("  class sizes:", sizes,
      " hilbert(2) =", terminal.hilbert(2), "= e_2(sizes) =", elem_sym(sizes, 2))
assert terminal.hilbert(2) >= A.hilbert(2)

# ---------------------------------------------------------------------------
# From class sizes to the Turán count: each balancing move (a, b) -> (a-1, b+1)
# raises e_r by exactly (a - b - 1) * e_{r-2} of the remaining entries.

tup = (4, 1, 1)
while True:
    nxt, delta = smoothing_step(tup, 3)
    if nxt == tup:
        break
    print(f"smooth {tup} -> {nxt}: e_3 gains {delta}")
    tup = nxt
print("balanced:", tup, " e_3 =", elem_sym(tup, 3), "= t_3(6,3) =", turan_count(6, 3, 3))

# ---------------------------------------------------------------------------
# Small-n certainty: exhaust every kill graph on [5] and confirm that a
# vanishing degree-3 piece forces hilbert(2) <= t_2(5, 2), sharply.

ok, best = brute_force_hilbert_turan(5, 2, 2)
print(f"exhaustive n=5, q=2, r=2: bound holds and is attained = {ok}, max = {best}")
