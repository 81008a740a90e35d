import random
from fractions import Fraction

import pytest

from hopfore.errors import GeneratorMismatch
from hopfore.freealg import FreeAlgebra, NCPoly, deglex_key


@pytest.fixture
def A():
    return FreeAlgebra(["y", "z"])


def test_single_word_product(A):
    y, z = A.gen("y"), A.gen("z")
    assert (y * z).terms == {(0, 1): Fraction(1)}


def test_no_commutation(A):
    y, z = A.gen("y"), A.gen("z")
    p = (y + z) * (y - z)
    # yy - yz + zy - zz, nothing collapses in the free algebra
    assert p.terms == {
        (0, 0): Fraction(1),
        (0, 1): Fraction(-1),
        (1, 0): Fraction(1),
        (1, 1): Fraction(-1),
    }


def test_scalar_zero_annihilates(A):
    p = A.gen("y") * A.gen("z") + 3 * A.gen("y")
    assert (p * 0).is_zero()
    assert (0 * p).is_zero()


def test_canonical_zero(A):
    p = A.gen("y") * A.gen("z") - Fraction(1, 2) * A.gen("z")
    assert (p + (-p)).terms == {}


def _random_poly(rng, alg, max_deg=4, max_terms=5):
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        w = tuple(rng.randrange(alg.ngens()) for _ in range(rng.randint(0, max_deg)))
        terms[w] = Fraction(rng.randint(-4, 4), rng.randint(1, 3))
    return NCPoly(alg, terms)


def test_associativity_random(A):
    rng = random.Random(11)
    for _ in range(25):
        a, b, c = (_random_poly(rng, A) for _ in range(3))
        assert (a * b) * c == a * (b * c)


def test_distributivity_and_units(A):
    rng = random.Random(12)
    one = A.one()
    for _ in range(25):
        a, b, c = (_random_poly(rng, A) for _ in range(3))
        assert a * (b + c) == a * b + a * c
        assert (a + b) * c == a * c + b * c
        assert one * a == a == a * one


def test_exact_rational_coefficients(A):
    p = Fraction(1, 3) * A.gen("y") + Fraction(1, 6) * A.gen("y")
    c = p.terms[(0,)]
    assert c == Fraction(1, 2)
    assert c.denominator == 2 and c.numerator == 1  # reduced, positive denominator


def test_generator_mismatch():
    A = FreeAlgebra(["y"])
    B = FreeAlgebra(["z"])
    with pytest.raises(GeneratorMismatch):
        A.gen("y") + B.gen("z")


def test_deglex_order():
    assert deglex_key(()) < deglex_key((0,))
    assert deglex_key((1,)) < deglex_key((0, 0))
    assert deglex_key((0, 1)) < deglex_key((1, 0))


def test_leading_word_and_render(A):
    p = A.gen("z") * A.gen("y") - A.gen("y") * A.gen("z")
    assert p.leading_word() == (1, 0)
    assert repr(A.gen("y") + 1) == "1 + y"
