"""Ordinal arithmetic checked against sympy's ordinals and frozen identities.

sympy.sets.ordinals supports +, * and comparisons on general CNF values and
powers of omega, so those paths are oracle-compared on random inputs. Its **
does not accept general bases, so general ord_pow is covered by hand-derived
textbook identities plus the exponent laws a^(b+c) = a^b * a^c and
a^(b*c) = (a^b)^c, whose add/mul halves are the oracle-checked operations.
"""

import random

from sympy.sets.ordinals import Ordinal as SymOrd
from sympy.sets.ordinals import OmegaPower, omega, ord0

from surreal.ordinals import (
    OMEGA,
    ONE,
    ZERO,
    Ord,
    is_epsilon_number,
    is_main_ordinal,
    nat_add,
    nat_mul,
    omega_to,
    ord_add,
    ord_cmp,
    ord_mul,
    ord_pow,
)

W = OMEGA


def to_sym(o):
    if o.is_zero:
        return ord0
    return SymOrd(*[OmegaPower(to_sym(e), c) for e, c in o.terms])


class _Key:
    def __init__(self, o):
        self.o = o

    def __lt__(self, other):
        return self.o < other.o


def rand_ord(rng, depth=2):
    if depth == 0 or rng.random() < 0.35:
        return Ord.from_int(rng.randrange(0, 5))
    exps = []
    for _ in range(rng.randrange(1, 4)):
        e = rand_ord(rng, depth - 1)
        if all(e != f for f in exps):
            exps.append(e)
    exps.sort(key=_Key, reverse=True)
    return Ord([(e, rng.randrange(1, 4)) for e in exps])


def test_cmp_examples():
    assert ord_cmp(W, W) == "equal"
    assert ord_cmp(W + 1, W * 2) == "less"
    assert ord_cmp(W**W, W**3) == "greater"
    assert ord_cmp(ZERO, ONE) == "less"


def test_add_mul_examples():
    assert 1 + W == W
    assert W + 1 == Ord(((ZERO, 1),)) + W + 1
    assert ord_add(1, W) == W
    assert ord_mul(W, 2) == Ord(((ONE, 2),))
    assert ord_mul(2, W) == W
    assert ord_pow(W, W) == omega_to(W)


def test_pow_textbook_identities():
    cases = [
        (Ord.from_int(2), W, W),
        (Ord.from_int(2), W + 1, W * 2),
        (Ord.from_int(2), W + 2, W * 4),
        (Ord.from_int(3), W * 2, omega_to(2)),
        (Ord.from_int(2), omega_to(2), W**W),
        (Ord.from_int(2), omega_to(2) + W + 1, omega_to(W + 1) * 2),
        (Ord.from_int(5), omega_to(W), omega_to(omega_to(W))),
        (Ord.from_int(2), omega_to(W + 1), omega_to(omega_to(W + 1))),
        (W + 1, Ord.from_int(2), omega_to(2) + W + 1),
        (W + 1, W, W**W),
        (W + 1, W + 1, omega_to(W + 1) + W**W),
        (W * 2, Ord.from_int(2), omega_to(2) * 2),
        (W * 2, W, W**W),
        (omega_to(2) + 1, W, W**W),
        (omega_to(W) * 3 + W, Ord.from_int(2), omega_to(W * 2) * 3 + omega_to(W + 1)),
    ]
    for a, b, want in cases:
        assert ord_pow(a, b) == want, f"{a} ^ {b}"


def test_pow_zero_one_edges():
    assert ord_pow(W, ZERO) == ONE
    assert ord_pow(ZERO, W) == ZERO
    assert ord_pow(ONE, W) == ONE
    assert ord_pow(ZERO, ZERO) == ONE
    assert ord_pow(Ord.from_int(7), Ord.from_int(5)) == Ord.from_int(16807)


def test_oracle_add_mul_cmp():
    rng = random.Random(101)
    for _ in range(300):
        a, b = rand_ord(rng), rand_ord(rng)
        sa, sb = to_sym(a), to_sym(b)
        assert to_sym(ord_add(a, b)) == sa + sb, f"{a} + {b}"
        assert to_sym(ord_mul(a, b)) == sa * sb, f"{a} * {b}"
        assert (a < b) == (sa < sb) and (a == b) == (sa == sb)


def test_oracle_omega_pow():
    rng = random.Random(202)
    for _ in range(100):
        x = rand_ord(rng)
        assert to_sym(ord_pow(W, x)) == omega**to_sym(x), f"w ^ {x}"


def test_pow_exponent_laws():
    rng = random.Random(303)
    for _ in range(120):
        a = rand_ord(rng, depth=1)
        b, c = rand_ord(rng, depth=1), rand_ord(rng, depth=1)
        assert ord_pow(a, ord_add(b, c)) == ord_mul(ord_pow(a, b), ord_pow(a, c))
        assert ord_pow(a, ord_mul(b, c)) == ord_pow(ord_pow(a, b), c)


def test_associativity_and_distributivity():
    rng = random.Random(404)
    for _ in range(1000):
        a, b, c = (rand_ord(rng, depth=1) for _ in range(3))
        assert ord_add(ord_add(a, b), c) == ord_add(a, ord_add(b, c))
        assert ord_mul(ord_mul(a, b), c) == ord_mul(a, ord_mul(b, c))
        assert ord_mul(a, ord_add(b, c)) == ord_add(ord_mul(a, b), ord_mul(a, c))


def test_successor_order():
    rng = random.Random(505)
    for _ in range(200):
        a = rand_ord(rng)
        assert ord_cmp(a, ord_add(a, 1)) == "less"


def test_main_ordinal():
    assert is_main_ordinal(W) == (True, ZERO)
    assert is_main_ordinal(W**W) == (True, ONE)
    assert is_main_ordinal(omega_to(2)) == (False, None)
    assert is_main_ordinal(Ord.from_int(1)) == (False, None)
    assert is_main_ordinal(W * 2) == (False, None)
    rng = random.Random(606)
    for _ in range(50):
        mu = rand_ord(rng, depth=1)
        ok, back = is_main_ordinal(ord_pow(W, ord_pow(W, mu)))
        assert ok and back == mu


def test_epsilon_number_contrapositive():
    rng = random.Random(707)
    assert not is_epsilon_number(W)
    assert not is_epsilon_number(W**W)
    assert not is_epsilon_number(ZERO)
    for _ in range(100):
        z = rand_ord(rng)
        assert not is_epsilon_number(z)
        assert z.is_zero or ord_cmp(z, ord_pow(W, z)) == "less"
    assert ord_cmp(ZERO, ord_pow(W, ZERO)) == "less"


def test_natural_operations():
    assert nat_add(1, W) == W + 1
    assert nat_add(W, 1) == W + 1
    assert nat_mul(W + 1, W) == omega_to(2) + W
    assert nat_mul(W, W + 1) == omega_to(2) + W
    rng = random.Random(808)
    for _ in range(200):
        a, b = rand_ord(rng), rand_ord(rng)
        assert nat_add(a, b) == nat_add(b, a)
        assert nat_mul(a, b) == nat_mul(b, a)
        assert nat_add(a, b) >= ord_add(a, b)


def test_rendering():
    assert str(ZERO) == "0"
    assert str(Ord.from_int(7)) == "7"
    assert str(W) == "w"
    assert str(W * 3) == "w*3"
    assert str(W + 1) == "w + 1"
    assert str(omega_to(2)) == "w^(2)*1"
    assert str(omega_to(W) * 2 + W * 5 + 3) == "w^(w)*2 + w*5 + 3"
