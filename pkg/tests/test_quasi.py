import random

import pytest

from qvgroups.presentations import evaluate
from qvgroups.quasi import (
    FinitePermutation,
    QElement,
    QuasiError,
    RawQuasiMap,
    abelianization_image,
    apply,
    ball,
    canonicalize,
    format_permutation,
    format_qelement,
    in_commutator,
    in_QF1,
    iota,
    membership,
    nu,
    parity,
    parse_permutation,
    parse_qelement,
    pi,
    theta_shift,
)
from qvgroups.thompson import A, B, C, D, VElement
from qvgroups.words import ZETA, bar

S = QElement.transposition("0", "")
BALL6 = list(ball(6))


def rand_q(rng, symbols="sabcd", n=8):
    alphabet = symbols + symbols.upper()
    return evaluate("".join(rng.choice(alphabet) for _ in range(rng.randint(0, n))))


def test_permutation_basics():
    p = FinitePermutation.cycle("1", "11", "1110")
    assert p("1") == "11" and p("1110") == "1" and p("0") == "0"
    assert p.parity() == 0
    assert FinitePermutation.transposition("0", "").parity() == 1
    assert (p * p * p).is_identity()
    assert p.inverse() * p == FinitePermutation()
    with pytest.raises(QuasiError):
        FinitePermutation.from_map({"0": "1"})
    with pytest.raises(QuasiError):
        FinitePermutation.cycle("0", "0")


def test_permutation_text():
    p = FinitePermutation.cycle("1", "11", "1110")
    assert format_permutation(p) == "(1 11 1110)"
    assert format_permutation(FinitePermutation()) == "()"
    assert parse_permutation("(1 11 1110)") == p
    assert parse_permutation("(0 e)(z 1)") == FinitePermutation.from_map({"0": "", "": "0", ZETA: "1", "1": ZETA})
    with pytest.raises(ValueError):
        parse_permutation("0 e")


def test_iota_and_apply_figures():
    assert iota(VElement.identity()).is_identity()
    a = iota(A)
    assert [apply(a, x) for x in ["", "1", ZETA, "0", "10", "11"]] == ["0", "", ZETA, "00", "01", "1"]
    c = iota(C)
    assert [apply(c, x) for x in ["", ZETA, "1", "0", "10", "11"]] == [ZETA, "1", "", "11", "0", "10"]
    assert apply(iota(B), "110") == "101"
    assert all(apply(QElement(), x) == x for x in BALL6)


def test_apply_bijective_on_balls():
    rng = random.Random(0)
    for _ in range(30):
        q = rand_q(rng)
        assert len({apply(q, x) for x in BALL6}) == len(BALL6)


def test_multiply_is_composition():
    rng = random.Random(1)
    for _ in range(100):
        q1, q2 = rand_q(rng), rand_q(rng)
        q = q1 * q2
        assert all(apply(q, x) == apply(q1, apply(q2, x)) for x in BALL6)


def test_inverse():
    assert (S * S).is_identity()
    assert QElement().inverse().is_identity()
    assert iota(A).inverse() == iota(A.inverse())
    rng = random.Random(2)
    for _ in range(100):
        q = rand_q(rng)
        assert (q * q.inverse()).is_identity()
        assert all(apply(q.inverse(), apply(q, x)) == x for x in BALL6)


def test_pi():
    assert pi(iota(B)) == B
    assert pi(S).is_identity()
    assert pi(QElement(FinitePermutation.cycle("1", "11", "1110"))).is_identity()


def test_canonicalize():
    assert canonicalize(RawQuasiMap({}, A)) == iota(A)
    assert canonicalize(RawQuasiMap({"0": "", "": "0"}, VElement.identity())) == S
    raw = RawQuasiMap({"": ZETA, ZETA: "0"}, A)
    q = canonicalize(raw)
    assert q.v == A
    assert all(apply(q, x) == raw(x) for x in BALL6)
    with pytest.raises(QuasiError):
        canonicalize(RawQuasiMap({"": ZETA}, VElement.identity()))


def test_equality_examples():
    assert S == S
    assert S != iota(A)


def test_nu():
    assert nu(QElement()).is_identity()
    assert nu(iota(A)) == iota(A.inverse())
    rng = random.Random(3)
    for _ in range(100):
        q = rand_q(rng)
        n = nu(q)
        assert all(apply(n, x) == bar(apply(q, bar(x))) for x in BALL6)
        assert nu(n) == q


def test_parity():
    assert parity(QElement()) == 0
    assert parity(S) == 1
    assert parity(FinitePermutation.cycle("1", "11", "1110")) == 0


def test_membership():
    assert membership(iota(A), "QF")
    assert not membership(iota(C), "QV")
    assert membership(iota(C), "tQT") and not membership(iota(D), "tQT")
    assert membership(S, "QF") and membership(S, "SymStar")
    assert not membership(S, "AltStar")
    z = QElement.transposition("", ZETA)
    assert membership(z, "SymZ") and not membership(z, "SymStar")
    assert membership(iota(D), "QV") and not membership(iota(D), "QT")
    with pytest.raises(ValueError):
        membership(S, "QQ")


def test_commutator_and_abelianization():
    assert not in_commutator(S, "QF")
    assert not in_commutator(iota(A), "QF")
    assert in_commutator(iota(A), "tQV")
    assert abelianization_image(QElement(), "QF") == (0, 0, 0)
    assert abelianization_image(iota(A), "QF") == (-1, 1, 0)
    assert abelianization_image(S, "tQV") == (1,)
    with pytest.raises(QuasiError):
        in_commutator(iota(C), "QF")


def test_theta_shift():
    assert theta_shift(QElement()).is_identity()
    assert theta_shift(iota(B)) == iota(A.inverse() * B * A)
    s1 = QElement.transposition("1", "11")
    assert in_QF1(s1)
    assert theta_shift(s1) == iota(A).inverse() * s1 * iota(A)
    assert not in_QF1(iota(A))
    with pytest.raises(QuasiError):
        theta_shift(S)
    rng = random.Random(4)
    pool = [iota(B), iota(A.inverse() * B * A), s1, QElement.transposition("10", "11")]
    for _ in range(50):
        q1 = pool[rng.randrange(4)] * pool[rng.randrange(4)]
        q2 = pool[rng.randrange(4)] * pool[rng.randrange(4)]
        assert in_QF1(q1) and in_QF1(q2)
        assert (theta_shift(q1) == theta_shift(q2)) == (q1 == q2)


def test_qelement_text_round_trip():
    rng = random.Random(5)
    for _ in range(50):
        q = rand_q(rng)
        assert parse_qelement(format_qelement(q)) == q
    assert format_qelement(S) == "sigma=(0 e);v=L=e;R=e;f=0:0"
