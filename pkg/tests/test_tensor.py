import random
from fractions import Fraction

import pytest

from hopfore import zoo
from hopfore.errors import ArityError, CarrierMismatch
from hopfore.tensor import TensorElem, merge_slots, slot_map, t_flatten, tensor_of


@pytest.fixture(scope="module")
def heis():
    return zoo.build("heisenberg")


@pytest.fixture(scope="module")
def laur():
    return zoo.build("laurent-q2")


def test_slotwise_product_commutative(heis):
    P = heis.pres
    y, z = P.gen_elem("y"), P.gen_elem("z")
    yz = tensor_of(y, z)
    assert yz * yz == tensor_of(y * y, z * z)
    assert yz * tensor_of(z, y) == tensor_of(y * z, y * z)


def test_slotwise_product_inverse_cancellation(laur):
    P = laur.pres
    g, G = P.gen_elem("g"), P.gen_elem("G")
    assert tensor_of(g, g) * tensor_of(G, P.one()) == tensor_of(P.one(), g)


def test_bilinearity_and_associativity(heis):
    P = heis.pres
    rng = random.Random(3)
    elems = [P.gen_elem("y"), P.gen_elem("z"), P.one(), P.gen_elem("y") + 2]

    def rand_tensor():
        out = TensorElem.zero(P, 2)
        for _ in range(rng.randint(1, 3)):
            out = out + tensor_of(rng.choice(elems), rng.choice(elems)) * Fraction(
                rng.randint(-2, 2)
            )
        return out

    for _ in range(15):
        a, b, c = rand_tensor(), rand_tensor(), rand_tensor()
        assert a * (b + c) == a * b + a * c
        assert (a * b) * c == a * (b * c)


def test_slot_map_comultiplication_raises_arity(heis):
    H = heis.hopf
    P = heis.pres
    y, z = P.gen_elem("y"), P.gen_elem("z")
    out = slot_map(tensor_of(y, z), [H.delta, None])
    assert out == tensor_of(y, P.one(), z) + tensor_of(P.one(), y, z)


def test_slot_map_counit_lowers_arity(laur):
    H = laur.hopf
    P = laur.pres
    g = P.gen_elem("g")
    assert slot_map(tensor_of(g, g), [None, H.counit]) == g


def test_slot_map_antipode_sign(heis):
    H = heis.hopf
    P = heis.pres
    y, z = P.gen_elem("y"), P.gen_elem("z")
    assert slot_map(tensor_of(y, z), [H.antipode, None]) == -tensor_of(y, z)


def test_flatten(heis, laur):
    Ph = heis.pres
    y, z = Ph.gen_elem("y"), Ph.gen_elem("z")
    assert t_flatten(tensor_of(y, z)) == y * z
    Pl = laur.pres
    assert t_flatten(tensor_of(Pl.gen_elem("g"), Pl.gen_elem("G"))) == Pl.one()


def test_antipode_identity_via_flatten(heis):
    H = heis.hopf
    y = heis.pres.gen_elem("y")
    assert t_flatten(slot_map(H.delta(y), [H.antipode, None])).is_zero()


def test_counit_axiom_lifted_to_slots(heis):
    H = heis.hopf
    P = heis.pres
    rng = random.Random(9)
    for _ in range(10):
        t = TensorElem.zero(P, 2)
        for _ in range(rng.randint(1, 3)):
            w1 = tuple(sorted(rng.randrange(2) for _ in range(rng.randint(0, 2))))
            w2 = tuple(sorted(rng.randrange(2) for _ in range(rng.randint(0, 2))))
            t = t + TensorElem(P, 2, {(w1, w2): Fraction(rng.randint(-2, 2))})
        expanded = slot_map(t, [H.delta, None])
        assert slot_map(expanded, [None, H.counit, None]) == t


def test_exact_zero(heis):
    P = heis.pres
    y = P.gen_elem("y")
    t = tensor_of(y, y) - tensor_of(y, y)
    assert t.is_zero() and t.terms == {}


def test_arity_errors(heis):
    H = heis.hopf
    P = heis.pres
    y = P.gen_elem("y")
    cube = tensor_of(y, y, y)
    with pytest.raises(ArityError):
        slot_map(cube, [H.delta, None, None])  # would reach arity 4
    with pytest.raises(ArityError):
        TensorElem(P, 4, {})


def test_carrier_mismatch(heis, laur):
    with pytest.raises(CarrierMismatch):
        tensor_of(heis.pres.gen_elem("y"), laur.pres.gen_elem("g"))


def test_merge_slots(heis):
    P = heis.pres
    y, z = P.gen_elem("y"), P.gen_elem("z")
    t = tensor_of(y, z, y)
    assert merge_slots(t, 0) == tensor_of(y * z, y)
    assert merge_slots(t, 1) == tensor_of(y, z * y)


def test_tensor_over_ore_extension(heis):
    T = heis.ore
    x = T.x()
    y = T.embed(heis.pres.gen_elem("y"))
    t = tensor_of(x, y)
    # slot products reduce through the skew relation (here sigma = id)
    assert t * tensor_of(y, x) == tensor_of(y * x, y * x)
