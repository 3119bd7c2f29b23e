import random
from fractions import Fraction as F

from gbrauer.diagrams import (
    BrauerAlgebra,
    all_diagrams,
    compose_pairings,
    cup_cap_pairing,
    identity_pairing,
    transposition_pairing,
)
from gbrauer.exactarith import qx_x


def dfact(m):
    out = 1
    while m > 1:
        out *= m
        m -= 2
    return out


def test_diagram_counts():
    for n in range(0, 8):
        want = dfact(2 * n - 1) if n else 1
        assert len(all_diagrams(n)) == want


def _pairing_from_oneindexed(n, pairs):
    out = [-1] * (2 * n)
    for a, b in pairs:
        out[a - 1], out[b - 1] = b - 1, a - 1
    return tuple(out)


def test_worked_composition():
    # the six-strand product from the multiplication figure: one closed loop
    n = 6

    def T(i):  # top point, 1-based
        return i

    def B(i):  # bottom point, 1-based
        return n + i

    d1 = _pairing_from_oneindexed(
        n, [(T(1), T(3)), (T(4), T(5)), (T(2), B(1)), (T(6), B(6)), (B(2), B(3)), (B(4), B(5))]
    )
    d2 = _pairing_from_oneindexed(
        n, [(T(2), T(3)), (B(3), B(6)), (B(1), T(4)), (B(2), T(1)), (B(4), T(6)), (B(5), T(5))]
    )
    want = _pairing_from_oneindexed(
        n, [(T(1), T(3)), (T(4), T(5)), (B(3), B(6)), (B(1), B(5)), (B(2), T(2)), (B(4), T(6))]
    )
    got, loops = compose_pairings(d1, d2, n)
    assert got == want
    assert loops == 1


def test_cup_cap_square_has_loop():
    d, loops = compose_pairings(cup_cap_pairing(3, 1), cup_cap_pairing(3, 1), 3)
    assert d == cup_cap_pairing(3, 1) and loops == 1


def test_identity_composition():
    n = 4
    ident = identity_pairing(n)
    for d in list(all_diagrams(n))[:20]:
        assert compose_pairings(ident, d, n) == (d, 0)
        assert compose_pairings(d, ident, n) == (d, 0)


def test_presentation_relations():
    # inverses, essential idempotent, braid, commutation, tangle, untwisting
    for n in range(2, 6):
        for delta in (F(2), F(0)):
            A = BrauerAlgebra(n, delta)
            one = A.one()
            for k in range(1, n):
                sk, ek = A.s(k), A.e(k)
                assert sk * sk == one
                assert ek * ek == ek.scale(delta)
                assert sk * ek == ek and ek * sk == ek
            for k in range(1, n - 1):
                assert A.s(k) * A.s(k + 1) * A.s(k) == A.s(k + 1) * A.s(k) * A.s(k + 1)
                assert A.e(k) * A.e(k + 1) * A.e(k) == A.e(k)
                assert A.e(k + 1) * A.e(k) * A.e(k + 1) == A.e(k + 1)
                assert A.s(k) * A.e(k + 1) * A.e(k) == A.s(k + 1) * A.e(k)
                assert A.e(k) * A.e(k + 1) * A.s(k) == A.e(k) * A.s(k + 1)
            for k in range(1, n):
                for r in range(k + 2, n):
                    assert A.s(k) * A.e(r) == A.e(r) * A.s(k)
                    assert A.e(k) * A.e(r) == A.e(r) * A.e(k)
                    assert A.s(k) * A.s(r) == A.s(r) * A.s(k)


def test_presentation_generic_scalar():
    for n in (2, 3):
        A = BrauerAlgebra(n, qx_x())
        assert A.e(1) * A.e(1) == A.e(1).scale(qx_x())
        if n == 3:
            assert A.e(1) * A.e(2) * A.e(1) == A.e(1)


def test_jm_elements():
    A = BrauerAlgebra(2, F(2))
    L = A.jm_elements()
    assert L[0] == A.scalar(F(1, 2))
    assert L[1] == A.s(1) - A.e(1) + A.scalar(F(1, 2))


def test_jm_relations():
    for n in range(2, 6):
        A = BrauerAlgebra(n, F(2))
        L = A.jm_elements()
        one = A.one()
        for k in range(1, n):
            sk, ek = A.s(k), A.e(k)
            assert (ek * (L[k - 1] + L[k])).is_zero()
            assert ((L[k - 1] + L[k]) * ek).is_zero()
            assert sk * L[k - 1] - L[k] * sk == ek - one
            assert L[k - 1] * sk - sk * L[k] == ek - one
            for r in range(1, n + 1):
                if r not in (k, k + 1):
                    assert sk * L[r - 1] == L[r - 1] * sk
                    assert ek * L[r - 1] == L[r - 1] * ek
        for a in range(n):
            for b in range(n):
                assert L[a] * L[b] == L[b] * L[a]


def test_star():
    A = BrauerAlgebra(3, F(5))
    assert (A.s(1) * A.s(2)).star() == A.s(2) * A.s(1)
    assert A.e(2).star() == A.e(2)
    rng = random.Random(0)
    ds = all_diagrams(3)
    for _ in range(10):
        x = A.zero()
        for _ in range(4):
            x = x + A.from_diagram(rng.choice(ds)).scale(F(rng.randint(-3, 3)))
        assert x.star().star() == x
        y = A.from_diagram(rng.choice(ds))
        assert (x * y).star() == y.star() * x.star()


def test_words():
    A = BrauerAlgebra(4, F(3))
    assert A.word([]) == A.one()
    assert A.word([("s", 2), ("s", 3), ("s", 2)]) == A.word([("s", 3), ("s", 2), ("s", 3)])
    assert A.word([("e", 1), ("e", 2), ("e", 1)]) == A.e(1)


def test_multiply_associative_random():
    rng = random.Random(5)
    for n in (2, 3, 4, 5):
        A = BrauerAlgebra(n, F(-1))
        ds = all_diagrams(n)

        def rnd():
            x = A.zero()
            for _ in range(3):
                x = x + A.from_diagram(rng.choice(ds)).scale(
                    F(rng.randint(-2, 2), rng.randint(1, 2))
                )
            return x

        for _ in range(4):
            a, b, c = rnd(), rnd(), rnd()
            assert (a * b) * c == a * (b * c)


def test_serialization_order():
    A = BrauerAlgebra(2, F(1))
    x = A.e(1) + A.s(1).scale(F(2))
    items = x.items_sorted()
    assert items == sorted(items)
