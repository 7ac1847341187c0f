"""A strict germ over the cyclic quotient singularity 1/(5k-3) (1, 2k-1).

Walks through the resolution chain, its log-discrepancies, the Jacobian
gap on the first prime, and the compact curves of the resulting surface
before and after blowing down.

    python3 demos/quotient_family.py [k]
"""

import sys

from katoval.dualgraph import inverse_matrix, intersection_matrix, log_discrepancies
from katoval.kato import (
    classify_configuration,
    jacobian_divisor_coeffs,
    jacobian_gap,
    minimal_model,
    quotient_family_datum,
    surface_curves,
)

k = int(sys.argv[1]) if len(sys.argv) > 1 else 4
datum = quotient_family_datum(k)
base = datum.modification.base
p, q = datum.base_type
print(f"1/{p}(1,{q}) resolves to a chain with self-intersections",
      [v.self_intersection for v in base.vertices])

print("\ninverse intersection matrix:")
for row in inverse_matrix(intersection_matrix(base)):
    print("  ", [str(x) for x in row])

print("\nlog-discrepancies:", {e: str(a) for e, a in log_discrepancies(base).items()})

# The germ sends the base chain onto the marked chain of the modification.
print("\nbase prime -> image prime, and the gap A(image) - A(prime):")
for e, img in datum.correspondence().items():
    print(f"   {e} -> {img}: {jacobian_gap(datum, e)}")
gap = jacobian_gap(datum, "E1")
verdict = "positive" if gap > 0 else "zero" if gap == 0 else "negative"
print(f"the gap on E1 is {verdict}, as expected for k={k}")

b1, b3, b = jacobian_divisor_coeffs(k)
print(f"\nJacobian divisor: ({b1}) C1 + ({b3}) C3 + ({b}) D")

curves = surface_curves(datum)
print("\ncurves of the surface:")
print(curves.to_text(), end="")
print("\nafter contracting the (-1)-curves:")
print(minimal_model(curves).to_text(), end="")
print("\nsurface class:", classify_configuration(curves))
