"""
Any ratio you want
==================

The area ratio m covers (1, infinity) as d runs from 1 toward n/2, so any
target has a chord system realizing it. On the square there is a closed
form; everywhere else the solver bisects the geometric curve.
"""

from chordal import area_ratio, replicate, solve_d, square_d_for_m, ChordalTriple

# one-seventh of a hexagon
out = solve_d(6, 7.0)
print(f"hexagon, m = 7:  d = {out.d:.12f}  ({out.iterations} iterations, residual {out.residual:.1e})")
print(f"exact answer is 7/3 = {7 / 3:.12f}")
print()

# the same ratio on every n from 3 to 12
print("m = 7 across polygon sizes:")
for n in range(3, 13):
    d = solve_d(n, 7.0).d
    print(f"  n = {n:>2}: d = {d:.9f}   (check: m = {area_ratio(n, d):.9f})")
print()

# on the square the solver only confirms what algebra already knows
for m in (5.0, 41.0, 113.0):
    print(f"square, m = {m:g}: closed form d = {square_d_for_m(m):.12f}, "
          f"solver d = {solve_d(4, m).d:.12f}")
print()

# replication: run the construction inside its own inner polygon and the
# ratios multiply, so one verified triple spawns a whole geometric series
chain = replicate(ChordalTriple(4, 1.5, 5.0), 4)
print("replicating (4, 1.5, 5):")
for t in chain:
    print(f"  m = {t.m:>5g} at d = {t.d:.12f}")
