import random
from fractions import Fraction

import pytest

from hopfore.errors import DegreeBoundExceeded, UnorientableRelation
from hopfore.freealg import FreeAlgebra, NCPoly
from hopfore.rewrite import Presentation, check_confluence, orient_relation


@pytest.fixture
def kyz():
    A = FreeAlgebra(["y", "z"])
    P = Presentation.from_relations(
        A, [(A.gen("z") * A.gen("y"), A.gen("y") * A.gen("z"))], name="k[y,z]"
    )
    check_confluence(P, 8)
    return P


@pytest.fixture
def laurent():
    A = FreeAlgebra(["g", "G"])
    P = Presentation.from_relations(A, [], inverses={0: 1}, name="laurent")
    check_confluence(P, 8)
    return P


def test_commutative_normal_form(kyz):
    A = kyz.alg
    assert kyz.normal_form(A.gen("z") * A.gen("y")) == kyz.normal_form(
        A.gen("y") * A.gen("z")
    )
    assert kyz.normal_form(A.gen("z") * A.gen("y")).terms == {(0, 1): Fraction(1)}


def test_q_commutation_orientation():
    # gh = 2hg with g declared before h orients as hg -> (1/2) gh
    A = FreeAlgebra(["g", "h"])
    P = Presentation.from_relations(
        A, [(A.gen("g") * A.gen("h"), 2 * A.gen("h") * A.gen("g"))], name="q"
    )
    check_confluence(P, 8)
    nf = P.normal_form(A.gen("h") * A.gen("g"))
    assert nf.terms == {(0, 1): Fraction(1, 2)}


def test_inverse_pair_cancels(laurent):
    A = laurent.alg
    assert laurent.normal_form(A.gen("g") * A.gen("G")) == laurent.one()
    assert laurent.normal_form(A.gen("G") * A.gen("g")) == laurent.one()


def test_idempotence_and_linearity(kyz):
    rng = random.Random(5)
    A = kyz.alg
    for _ in range(20):
        terms = {
            tuple(rng.randrange(2) for _ in range(rng.randint(0, 4))): Fraction(
                rng.randint(-3, 3)
            )
            for _ in range(4)
        }
        p = NCPoly(A, terms)
        q = NCPoly(A, {w: c + 1 for w, c in terms.items()})
        nf = kyz.normal_form
        assert nf(nf(p).poly) == nf(p)
        assert nf(p + q) == nf(p) + nf(q)
        assert nf(p * q) == nf(p) * nf(q)  # compatibility with products


def test_confluence_certificates(kyz, laurent):
    assert kyz.confluence_degree >= 6 and kyz.fully_confluent
    assert laurent.confluence_degree >= 6 and laurent.fully_confluent


def test_non_confluent_pair_rejected():
    A = FreeAlgebra(["a", "b", "c"])
    P = Presentation.from_relations(
        A,
        [(A.gen("a") * A.gen("b"), A.one()), (A.gen("b") * A.gen("c"), A.one())],
        name="bad",
    )
    rep = check_confluence(P, 3)
    assert not rep.verdict
    witness = rep.failures()[0].witness
    assert "a*b*c" in witness
    assert ("both c and a" in witness) or ("both a and c" in witness)


def test_unorientable_relation():
    A = FreeAlgebra(["y", "z"])
    with pytest.raises(UnorientableRelation):
        # both sides lead with the same word
        orient_relation(2 * A.gen("y") * A.gen("z"), A.gen("y") * A.gen("z") + A.gen("z"))


def test_relation_forcing_unit_rejected():
    A = FreeAlgebra(["y"])
    with pytest.raises(UnorientableRelation):
        orient_relation(A.one(), A.zero())


def test_rhs_zero_rule_allowed():
    A = FreeAlgebra(["y"])
    P = Presentation.from_relations(A, [(A.gen("y") * A.gen("y"), A.zero())], name="dual")
    check_confluence(P, 8)
    assert P.normal_form(A.gen("y") * A.gen("y")).is_zero()


def test_interreduction_drops_redundant_rules():
    A = FreeAlgebra(["y", "z"])
    zy, yz = A.gen("z") * A.gen("y"), A.gen("y") * A.gen("z")
    # second relation is a consequence of the first up to rewriting
    P = Presentation.from_relations(A, [(zy, yz), (zy * A.gen("y"), yz * A.gen("y"))])
    assert len(P.rules) == 1


def test_degree_guard_on_partial_certificates():
    A = FreeAlgebra(["y"])
    y = A.gen("y")
    P = Presentation.from_relations(A, [(y * y * y, y)], name="cube")
    rep = check_confluence(P, 3)
    assert rep.verdict and not P.fully_confluent  # self-overlaps reach degree 5
    with pytest.raises(DegreeBoundExceeded):
        P.normal_form(y * y * y * y)
    check_confluence(P, 5)
    assert P.fully_confluent
    assert P.normal_form(y * y * y * y) == P.normal_form(y * y)


def test_normal_words_enumeration(kyz):
    words = kyz.normal_words(2)
    rendered = [kyz.alg.render_word(w) for w in words]
    assert rendered == ["1", "y", "z", "y*y", "y*z", "z*z"]


def test_signed_order_treats_inverses(laurent):
    g_word = (0,)
    G_word = (1,)
    assert laurent.signed_order_key(G_word) < laurent.signed_order_key(())
    assert laurent.signed_order_key(()) < laurent.signed_order_key(g_word)
