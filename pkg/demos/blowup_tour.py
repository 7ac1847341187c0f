"""Bookkeeping along a short sequence of point blow-ups.

Tracks multiplicities b, log-discrepancies A and self-intersections, then
shows the skeleton normalization and how the weighted blow-up divisor
of weight (2, 3) retracts onto coarser models.
"""

from katoval.blowup import BlowupSequence, Free, Initial, Satellite, retract, weighted_blowup_divisor
from katoval.dualgraph import log_discrepancies

seq = BlowupSequence([Initial(), Free("E1"), Satellite("E1", "E2")])
print("prime  b  A  self")
for pid in seq.primes:
    r = seq.record(pid)
    print(f"{pid:5}  {r.b}  {r.A}  {r.self_intersection}")

graph = seq.to_dual_graph()
print("\ndual graph edges:", graph.edges)
print("A from M^-1(2g-2+s):", {k: str(v) for k, v in log_discrepancies(graph).items()})

sk = seq.skeleton()
for e, f in graph.edges:
    be, bf = sk.segment(e, f)
    print(f"edge {e}-{f}: r*{be} + s*{bf} = 1, midpoint {sk.point(e, f, 1 / 2)}")

fine = weighted_blowup_divisor(2, 3)
last = fine.primes[-1]
print(f"\nthe divisor of weight (2, 3) is {last} after {len(fine)} blow-ups:")
print(fine.to_script(), end="")
nu = fine.divisorial(last)
for level in range(len(fine), -1, -1):
    print(f"   retracted to level {level}: {retract(nu, fine, level)}")
