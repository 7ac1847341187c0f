"""The monomial germ (z w, z w^2) and the Inoue surface it builds.

Its eigenvaluation is irrational, with weights along the golden ratio.
Iterating the weight action shows the Fibonacci convergents; the
factorization through blow-ups then yields the cycle of curves.
"""

from katoval.germdyn import Class6, contracted_curves, eigenvaluation, iterate_weights, pushforward_weights
from katoval.kato import classify_configuration, classify_surface, compose, datum_from_class6, surface_curves
from katoval.valuation import MonomialWeights

germ = Class6(1, 1, 1, 2)
report = eigenvaluation(germ)
print("eigenvalue        ", report.eigenvalue, f"(~{float(report.eigenvalue):.6f})")
print("eigen-weights     ", report.normalized_weights.r, ",", report.normalized_weights.s)
print("type              ", report.type)
print("component action  ", report.component_action)

print("\nslopes of f^n_* applied to the weights (1, 1):")
for n, w in enumerate(iterate_weights(germ, MonomialWeights(1, 1), 8)):
    print(f"   n={n}: {w.slope}  (~{float(w.slope):.6f})")

print("\ncontracted curves and their images:")
for tag, w in contracted_curves(germ):
    print(f"   {tag} -> divisor with weights ({w.r}, {w.s})")

datum = datum_from_class6(germ)
print("\nmodification:")
print(datum.to_text(), end="")
curves = surface_curves(datum)
print("\ncurves of the surface:")
print(curves.to_text(), end="")
print("\nclass from the curves:      ", classify_configuration(curves))
print("class from the eigenvaluation:", classify_surface(report))

# Composing the datum with itself factors the second iterate, whose matrix is A^2.
twice = compose(datum, datum)
square = Class6(2, 3, 3, 5)
print(f"\nf o f needs {len(twice.modification)} blow-ups; (1, 1) goes to {MonomialWeights(*twice.push(MonomialWeights(1, 1)))}")
print("the matrix A^2 sends (1, 1) to", pushforward_weights(square, MonomialWeights(1, 1)))
print("class of the iterate:", classify_configuration(surface_curves(twice)))
