import random
from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from katoval.germdyn import (
    Class2,
    Class4,
    Class6,
    InvalidGermError,
    check,
    contracted_curves,
    eigenvaluation,
    iterate_weights,
    parse_germ,
    pushforward_weights,
    shadow_slope,
    topdeg,
    topdeg_fk,
    validate,
)
from katoval.numerics import InvalidInputError, QuadNumber
from katoval.valuation import MonomialWeights, classify, evaluate, normalize

from oracles import compose_support, quad_to_sympy, random_class6, valid_class6_matrices

GOLDEN = Class6(1, 1, 1, 2)


def test_validate_class6():
    assert validate(GOLDEN) == []
    assert validate(Class6(2, 1, 1, 1)) == []
    assert validate(Class6(1, 1, 2, 3)) == []
    errs = validate(Class6(2, 1, 1, 2))
    assert len(errs) == 1 and "det" in errs[0]
    assert any("positive entries" in e for e in validate(Class6(1, 0, 0, 1)))


def test_validate_class4_gcd():
    errs = validate(Class4(4, 3, {2}))
    assert errs == ["gcd of a and P exponents is 2, must be 1"]
    assert validate(Class4(4, 3, {3})) == []


def test_validate_class4_special_and_eps():
    assert validate(Class4(2, 1, {1}, special=True, epsilon_nonzero=True)) == []
    assert any("integral" in e for e in validate(Class4(3, 1, {1}, special=True)))
    assert any("special" in e for e in validate(Class4(2, 1, {1}, epsilon_nonzero=True)))


def test_validate_class2():
    assert validate(Class2(2, {1, 2})) == []
    assert any("1..c" in e for e in validate(Class2(2, {3})))
    assert validate(Class2(1, set(), lambda_modulus_lt_one=False)) == ["|lambda| < 1 is required"]


def test_check_raises_with_every_message():
    with pytest.raises(InvalidGermError, match="det.*positive entries"):
        check(Class6(1, 0, 0, 2))


def test_topdeg():
    assert topdeg_fk(4, 3, 2) == 2
    assert topdeg_fk(4, 3, 5) == 4
    assert topdeg(GOLDEN) == 1
    assert topdeg(Class6(1, 1, 1, 0)) == 1
    assert topdeg(Class4(2, 1, {1})) == 1


def test_pushforward_examples():
    assert pushforward_weights(GOLDEN, MonomialWeights(1, 1)) == MonomialWeights(2, 3)
    assert pushforward_weights(GOLDEN, MonomialWeights(0, 1)) == MonomialWeights(1, 2)
    assert pushforward_weights(Class4(2, 1, {1}), MonomialWeights(1, 1)) == MonomialWeights(2, 1)


def _component_supports(nf):
    """Supports of ``z o f`` and ``w o f`` written out from the normal form."""
    if isinstance(nf, Class6):
        return {(nf.a, nf.b)}, {(nf.c, nf.d)}
    zf = {(1, 0)} if isinstance(nf, Class2) else {(nf.a, 0)}
    wf = {(nf.c, 1)} | {(k, 0) for k in nf.P_support}
    if isinstance(nf, Class4) and nf.epsilon_nonzero:
        wf.add((nf.a * nf.c // (nf.a - 1), 0))
    return zf, wf


def _random_germ(rng):
    kind = rng.choice(["2", "4", "6"])
    if kind == "6":
        return random_class6(rng, 1, 8)[0]
    c = rng.randint(1, 6)
    if kind == "2":
        return Class2(c, set(rng.sample(range(1, c + 1), rng.randint(0, c))))
    while True:
        a = rng.randint(2, 6)
        p = set(rng.sample(range(1, c + 1), rng.randint(0, c)))
        special = (a * c) % (a - 1) == 0 and rng.random() < 0.5
        nf = Class4(a, c, p, special, special and rng.random() < 0.5)
        if not validate(nf):
            return nf


def test_pushforward_matches_term_by_term_evaluation():
    rng = random.Random(8)
    for _ in range(200):
        nf = _random_germ(rng)
        if isinstance(nf, tuple):
            nf = Class6(*nf)
        w = MonomialWeights(rng.randint(1, 20), rng.randint(0, 20))
        zf, wf = _component_supports(nf)
        assert pushforward_weights(nf, w) == MonomialWeights(evaluate(w, zf), evaluate(w, wf))


@settings(max_examples=60)
@given(
    st.sampled_from(valid_class6_matrices(6)),
    st.sets(st.tuples(st.integers(0, 5), st.integers(0, 5)), min_size=1, max_size=6),
    st.integers(1, 30),
    st.integers(1, 30),
)
def test_class6_pushforward_is_exact_on_any_support(m, support, r, s):
    nf = Class6(*m)
    w = MonomialWeights(r, s)
    assert evaluate(w, compose_support(support, *m)) == evaluate(pushforward_weights(nf, w), support)


def test_pushforward_needs_origin_anchor():
    from katoval.blowup import BlowupSequence, Initial, Free

    seq = BlowupSequence([Initial(), Free("E1")])
    with pytest.raises(InvalidInputError):
        pushforward_weights(GOLDEN, MonomialWeights(1, 1, seq.anchor("E1", "E2")))


def test_golden_eigenvaluation():
    rep = eigenvaluation(GOLDEN)
    phi = (QuadNumber(1) + QuadNumber.sqrt(5)) / 2
    assert rep.type == "irrational"
    assert rep.eigenvalue == phi + 1
    assert rep.normalized_weights == MonomialWeights(1, phi)
    assert rep.component_action == "preserves"
    assert rep.shadow_slope == phi
    assert rep.warnings == ()


def test_switching_component_action():
    rep = eigenvaluation(Class6(1, 1, 1, 0))
    assert rep.component_action == "switches"
    assert rep.type == "irrational"


def test_perron_pairs_against_sympy():
    for m in valid_class6_matrices(8):
        nf = Class6(*m)
        rep = eigenvaluation(nf)
        mat = sympy.Matrix([[nf.a, nf.b], [nf.c, nf.d]])
        lam = max(mat.eigenvals(), key=lambda e: float(e))
        assert sympy.simplify(quad_to_sympy(rep.eigenvalue) - lam) == 0
        v = sympy.Matrix([quad_to_sympy(rep.normalized_weights.r), quad_to_sympy(rep.normalized_weights.s)])
        assert sympy.simplify(mat * v - lam * v) == sympy.zeros(2, 1)
        assert min(rep.normalized_weights.r, rep.normalized_weights.s) == 1
        assert rep.type == "irrational"
        assert rep.component_action == ("preserves" if nf.det == 1 else "switches")


def test_eigen_weights_are_a_fixed_point():
    for m in valid_class6_matrices(6):
        nf = Class6(*m)
        w = eigenvaluation(nf).normalized_weights
        seq = iterate_weights(nf, w, 4)
        assert all(x == normalize(w) for x in seq)


def test_class4_and_class2_shadow_slopes():
    rep = eigenvaluation(Class4(2, 1, {1}))
    assert rep.type == "infinitely_singular" and rep.shadow_slope == Fraction(1, 2)
    rep = eigenvaluation(Class2(2, {1}))
    assert rep.type == "curve" and rep.shadow_slope == 1
    # no finite fixed point without a pure-z piece
    assert shadow_slope(Class2(2)) is None
    assert eigenvaluation(Class2(3)).shadow_slope is None


def _slope_map(nf, t):
    w = pushforward_weights(nf, MonomialWeights(1, t))
    return Fraction(w.s.to_fraction(), w.r.to_fraction())


def test_shadow_slope_is_the_limit_of_iteration():
    rng = random.Random(21)
    checked = 0
    while checked < 60:
        nf = _random_germ(rng)
        if isinstance(nf, tuple):
            continue
        t_star = shadow_slope(nf)
        if t_star is None:
            continue
        assert _slope_map(nf, t_star) == t_star
        t = Fraction(1)
        for _ in range(50):
            t = _slope_map(nf, t)
        assert abs(t - t_star) < Fraction(1, 10**6)
        checked += 1


def test_iterate_fibonacci():
    slopes = [w.slope for w in iterate_weights(GOLDEN, MonomialWeights(1, 1), 5)]
    assert slopes == [1, Fraction(3, 2), Fraction(8, 5), Fraction(21, 13), Fraction(55, 34)]


def test_iterate_class4():
    nf = Class4(2, 1, {1})
    ts = [w.slope for w in iterate_weights(nf, MonomialWeights(1, 1), 4)]
    assert ts == [1, Fraction(1, 2), Fraction(1, 2), Fraction(1, 2)]


def test_iterates_approach_the_eigen_slope():
    for m in valid_class6_matrices(5):
        nf = Class6(*m)
        target = float(eigenvaluation(nf).shadow_slope)
        dist = [abs(float(w.slope) - target) for w in iterate_weights(nf, MonomialWeights(1, 1), 8)]
        if nf.det == 1:
            assert all(b < a for a, b in zip(dist, dist[1:]) if a > 1e-12)
        assert dist[-1] < dist[0] or dist[0] < 1e-12


def test_contracted_curves():
    assert contracted_curves(GOLDEN) == [("{z=0}", MonomialWeights(1, 1)), ("{w=0}", MonomialWeights(1, 2))]
    # (1,1;1,0): the image of {w=0} is an axis direction, so it is not contracted
    assert contracted_curves(Class6(1, 1, 1, 0)) == [("{z=0}", MonomialWeights(1, 1))]
    ((tag, w),) = contracted_curves(Class4(2, 1, {1}))
    assert tag == "{z=0}" and w == MonomialWeights(2, 1) and classify(w) == "divisorial"


def test_parse_germ():
    assert parse_germ("class6 1 1 1 2") == GOLDEN
    assert parse_germ("class4 a=2 c=1 P=1 special=yes eps=1") == Class4(2, 1, {1}, True, True)
    assert parse_germ("class2 c=3 P=1,3") == Class2(3, {1, 3})
    assert parse_germ("class2 c=3") == Class2(3)
    for bad in ["", "class6 1 1 1", "class5 1", "class4 a=2", "class2 c=x", "class4 a=2 c=1 eps=maybe"]:
        with pytest.raises(InvalidInputError):
            parse_germ(bad)
