"""Normal-form tier tests.

Truncated inverses and roots are checked by exact multiply-back (the residual
is recomputed independently from the returned value). The binomial series has
a pure-Fraction oracle, the rational root bracket is cross-checked against a
classical sign-change argument, and constants are compared against both the
game tier and plain Fraction arithmetic.
"""

import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from surreal import games
from surreal.errors import (
    EvenDegree,
    IrrationalLeadingRoot,
    NonPositive,
    NotMainOrdinal,
    PreconditionViolated,
    ZeroInput,
    ZeroLeadingCoefficient,
)
from surreal.normalform import (
    ONE,
    W,
    ZERO,
    NormalForm,
    Polynomial,
    archimedean_witness,
    birthday_nf,
    classify_magnitude,
    commensurate,
    decompose,
    in_field,
    leader,
    least_ordinal_above,
    nf_add,
    nf_cmp,
    nf_inverse,
    nf_mul,
    nf_neg,
    nf_nth_root,
    nf_to_ord,
    odd_poly_root,
    omega_pow,
    ord_to_nf,
    poly_eval,
)
from surreal.ordinals import OMEGA, Ord, omega_to, ord_add, ord_mul

F = Fraction


def con(q):
    return NormalForm.from_rational(F(q))


def mono(e, c=1):
    e = e if isinstance(e, NormalForm) else con(e)
    return NormalForm(((e, F(c)),))


W_HALF = mono(F(1, 2))


def rand_nf(rng, depth=2):
    if depth == 0 or rng.random() < 0.3:
        return con(F(rng.randint(-6, 6), rng.choice((1, 1, 2, 3, 4))))
    terms = []
    for _ in range(rng.randint(1, 3)):
        e = rand_nf(rng, depth - 1)
        c = F(rng.randint(-5, 5), rng.choice((1, 2, 3)))
        if c:
            terms.append((e, c))
    return NormalForm(terms)


def test_cmp_examples():
    assert nf_cmp(W, con(1000)) == "greater"
    for r in (F(1), F(1, 2), F(1, 100), F(3), F(1, 10**6)):
        assert nf_cmp(mono(-1), con(r)) == "less"
    assert nf_cmp(W - 1, W) == "less"
    assert nf_cmp(W - 1, con(1000)) == "greater"
    assert nf_cmp(W_HALF, W_HALF) == "equal"
    assert nf_cmp(mono(2, 3) - W, W_HALF) == "greater"
    assert nf_cmp(nf_neg(mono(-1)), mono(-2)) == "less"


def test_add_mul_examples():
    rng = random.Random(7)
    for _ in range(100):
        x = rand_nf(rng)
        assert nf_add(x, ZERO) == x
    assert nf_mul(W_HALF, W_HALF) == W
    assert nf_add(W + 1, nf_neg(W)) == ONE
    assert (W + 1) * (W - 1) == mono(2) - 1
    assert nf_mul(mono(1, 3), mono(-1, F(1, 3))) == ONE


def test_omega_pow():
    assert omega_pow(ZERO) == ONE
    assert omega_pow(ONE) == W
    assert nf_mul(W, omega_pow(con(-1))) == ONE
    assert omega_pow(con(2)) == mono(2)


def test_leader():
    assert leader(mono(2, 3) - W + 5) == mono(2)
    assert leader(con(7)) == ONE
    assert leader(mono(-2, 5)) == mono(-2)
    with pytest.raises(ZeroInput):
        leader(ZERO)


def test_commensurate():
    ok, n = commensurate(W, mono(1, 3))
    assert ok and n == 4
    assert commensurate(W, mono(2)) == (False, None)
    ok, n = commensurate(con(5), con(7))
    assert ok and n == 2
    with pytest.raises(NonPositive):
        commensurate(ZERO, ONE)
    with pytest.raises(NonPositive):
        commensurate(W, nf_neg(W))
    rng = random.Random(11)
    for _ in range(40):
        x, y = rand_nf(rng), rand_nf(rng)
        if x <= ZERO or y <= ZERO:
            continue
        ok, n = commensurate(x, y)
        if ok:
            assert nf_cmp(x, y.scale(n)) == "less"
            assert nf_cmp(y, x.scale(n)) == "less"


def test_commensurate_equivalence_and_leader_fibers():
    rng = random.Random(13)
    pool = []
    while len(pool) < 50:
        x = rand_nf(rng)
        if x > ZERO:
            pool.append(x)
    for x in pool:
        assert commensurate(x, x)[0]
    for i in range(0, 48, 2):
        x, y = pool[i], pool[i + 1]
        assert commensurate(x, y)[0] == commensurate(y, x)[0]
        assert commensurate(x, y)[0] == (leader(x) == leader(y))
    for i in range(0, 48, 3):
        x, y, z = pool[i], pool[i + 1], pool[i + 2]
        if commensurate(x, y)[0] and commensurate(y, z)[0]:
            assert commensurate(x, z)[0]


def test_birthday_examples():
    assert birthday_nf(W) == (OMEGA, "exact")
    assert birthday_nf(W_HALF) == (omega_to(2), "exact")
    assert birthday_nf(con(5)) == (Ord.from_int(5), "exact")
    assert birthday_nf(ZERO) == (Ord.from_int(0), "exact")
    assert birthday_nf(con(F(1, 3))) == (OMEGA, "exact")
    # day lists: w - 1 appears on day w + 1, and the bound attains it
    assert birthday_nf(W - 1) == (ord_add(OMEGA, 1), "bound")
    assert birthday_nf(mono(1, F(1, 2))) == (ord_mul(OMEGA, 2), "exact")
    assert birthday_nf(mono(F(1, 2), 3)) == (ord_mul(omega_to(2), 3), "exact")
    assert birthday_nf(mono(1, F(1, 3))) == (omega_to(2), "bound")
    value, flag = birthday_nf(omega_pow(W))
    assert value == omega_to(OMEGA) and flag == "bound"


def test_in_field():
    w_to_w = omega_to(OMEGA)
    assert in_field(W, OMEGA) is False
    assert in_field(W, w_to_w) is True
    # birthday of w^(1/2) is w^2, which sits below w^w and below w^(w^2)
    assert in_field(W_HALF, w_to_w) is True
    assert in_field(W_HALF, omega_to(omega_to(2))) is True
    assert in_field(W - 1, w_to_w) is True
    assert in_field(omega_pow(W), w_to_w) is False
    # R_w is the dyadics: non-dyadic rationals are born on day w itself
    assert in_field(con(F(1, 2)), OMEGA) is True
    assert in_field(con(F(1, 3)), OMEGA) is False
    with pytest.raises(NotMainOrdinal):
        in_field(W, omega_to(2))


def test_least_ordinal_above():
    cases = [
        (con(5), Ord.from_int(6)),
        (con(F(7, 2)), Ord.from_int(4)),
        (W, ord_add(OMEGA, 1)),
        (W - 1, OMEGA),
        (W + 5, ord_add(OMEGA, 6)),
        (mono(2) - W, omega_to(2)),
        (W_HALF, OMEGA),
        (mono(1, F(3, 2)), ord_mul(OMEGA, 2)),
        (con(5) + mono(-1), Ord.from_int(6)),
        (ZERO, Ord.from_int(1)),
        (nf_neg(W), Ord.from_int(0)),
    ]
    for v, expected in cases:
        got = least_ordinal_above(v)
        assert got == expected, f"{v}: {got} != {expected}"
        assert ord_to_nf(got) > v
    rng = random.Random(17)
    for _ in range(30):
        q = F(rng.randint(1, 400), rng.randint(1, 40))
        assert least_ordinal_above(con(q)) == Ord.from_int(q.__floor__() + 1)


def test_archimedean_witness():
    assert archimedean_witness(con(F(1, 2)), con(3), OMEGA) == Ord.from_int(16)
    w_plus_1 = ord_add(OMEGA, 1)
    alpha = archimedean_witness(ONE, W, omega_to(OMEGA))
    assert alpha == ord_mul(w_plus_1, w_plus_1)
    assert ord_to_nf(alpha) * ONE > W
    zeta = omega_to(omega_to(2))
    alpha = archimedean_witness(W_HALF, mono(2), zeta)
    assert ord_to_nf(alpha) * W_HALF > mono(2)
    assert alpha < zeta
    with pytest.raises(PreconditionViolated):
        archimedean_witness(con(3), con(3), OMEGA)
    with pytest.raises(PreconditionViolated):
        archimedean_witness(omega_pow(W), omega_pow(W) + 1, omega_to(OMEGA))


def test_inverse_examples():
    r = nf_inverse(W + 1, 3)
    assert r.value == mono(-1) - mono(-2) + mono(-3) - mono(-4)
    assert r.residual == mono(-4, -1)
    assert r.order == con(-4)
    assert nf_mul(W + 1, r.value) - 1 == r.residual

    r = nf_inverse(con(2), 0)
    assert r.exact and r.value == con(F(1, 2)) and r.residual == ZERO

    r = nf_inverse(W, 0)
    assert r.exact and r.value == mono(-1)

    with pytest.raises(ZeroInput):
        nf_inverse(ZERO, 3)


def test_inverse_certificates():
    rng = random.Random(23)
    for _ in range(60):
        x = rand_nf(rng)
        if x.is_zero:
            continue
        k = rng.randint(0, 4)
        r = nf_inverse(x, k)
        check = nf_mul(x, r.value) - 1
        assert check == r.residual if r.residual is not None else check.is_zero
        if r.exact:
            assert check.is_zero
        else:
            assert check.is_zero or nf_cmp(check.leading_exp, r.order) != "greater"


def mul_trunc(a, b, m):
    out = [F(0)] * m
    for i, ai in enumerate(a):
        if not ai:
            continue
        for j, bj in enumerate(b):
            if i + j < m:
                out[i + j] += ai * bj
    return out


def test_binomial_series_oracle():
    # (sum C(1/n, i) t^i)^n == 1 + t up to the truncation order, in plain
    # Fractions, independently of any normal-form code
    from surreal.normalform import _binomial

    m = 7
    for n in (2, 3, 5):
        series = [_binomial(F(1, n), i) for i in range(m)]
        acc = [F(1)] + [F(0)] * (m - 1)
        for _ in range(n):
            acc = mul_trunc(acc, series, m)
        assert acc[0] == 1 and acc[1] == 1
        assert all(c == 0 for c in acc[2:])


def test_nth_root_examples():
    r = nf_nth_root(mono(2), 2, 0)
    assert r.exact and r.value == W

    r = nf_nth_root(mono(2, 4), 2, 0)
    assert r.exact and r.value == mono(1, 2)
    assert nf_mul(r.value, r.value) == mono(2, 4)

    x = W + 1
    r = nf_nth_root(x, 2, 2)
    expected = NormalForm(
        ((con(F(1, 2)), F(1)), (con(F(-1, 2)), F(1, 2)), (con(F(-3, 2)), F(-1, 8)))
    )
    assert r.value == expected
    assert r.residual == r.value**2 - x
    assert r.residual == NormalForm(((con(-2), F(-1, 8)), (con(-3), F(1, 64))))
    assert r.order == con(-2)

    with pytest.raises(NonPositive):
        nf_nth_root(ZERO, 3, 1)
    with pytest.raises(NonPositive):
        nf_nth_root(nf_neg(W), 3, 1)
    with pytest.raises(IrrationalLeadingRoot):
        nf_nth_root(con(2), 2, 0)
    with pytest.raises(IrrationalLeadingRoot):
        nf_nth_root(mono(1, 3), 2, 1)


def test_nth_root_certificates():
    rng = random.Random(29)
    checked = 0
    while checked < 40:
        # constant exponents keep the term grid small under powers; deep
        # exponents are covered by the structured case below
        y = rand_nf(rng, 1)
        if not y > ZERO:
            continue
        n = rng.choice((2, 3))
        k = rng.choice((1, 3))
        x = y**n
        r = nf_nth_root(x, n, k)
        assert r.value > ZERO
        check = r.value**n - x
        assert check == r.residual
        if r.exact:
            assert check.is_zero
        else:
            assert check.is_zero or nf_cmp(check.leading_exp, r.order) != "greater"
        checked += 1
    for _ in range(20):
        x = rand_nf(rng)
        if x > ZERO:
            r = nf_nth_root(x, 1, 2)
            assert r.exact and r.value == x
    deep = omega_pow(W).scale(2) + W
    x = deep**2
    r = nf_nth_root(x, 2, 2)
    assert r.value**2 - x == r.residual
    assert r.exact or nf_cmp(r.residual.leading_exp, r.order) != "greater"


def test_decompose_classify():
    big = mono(2, 3) - W + 5 + mono(-1)
    assert decompose(big) == (mono(2, 3) - W, con(5) + mono(-1))
    assert decompose(con(F(7, 2))) == (ZERO, con(F(7, 2)))
    assert decompose(W_HALF) == (W_HALF, ZERO)
    assert classify_magnitude(W) == "infinite"
    assert classify_magnitude(ONE + mono(-1)) == "finite"
    assert classify_magnitude(omega_pow(nf_neg(W))) == "infinitesimal"
    assert classify_magnitude(ZERO) == "finite"
    rng = random.Random(31)
    for _ in range(100):
        x = rand_nf(rng)
        inf, fin = decompose(x)
        assert inf + fin == x
        assert inf.is_zero or classify_magnitude(inf) == "infinite"
        assert fin.is_zero or classify_magnitude(fin) in ("finite", "infinitesimal")


def test_poly_eval():
    p = Polynomial((ONE, ZERO, nf_neg(W)))
    assert poly_eval(p, W_HALF) == ZERO
    assert poly_eval(Polynomial((ONE, ZERO)), con(5)) == con(5)
    p = Polynomial((con(1), con(0), con(-2), con(-5)))
    assert poly_eval(p, con(2)) == con(-1)


def horner_fraction(coeffs, t):
    out = F(0)
    for c in coeffs:
        out = out * t + c
    return out


def test_odd_poly_root_rational():
    r = odd_poly_root(Polynomial((con(1), con(-5))), 10)
    assert r.exact and r.value == con(5)

    # (x - 1/2)(x^2 + 2) has the single rational root 1/2
    r = odd_poly_root(Polynomial((con(1), con(F(-1, 2)), con(2), con(-1))), 10)
    assert r.exact and r.value == con(F(1, 2))

    r = odd_poly_root(Polynomial((con(1), con(0), con(0), con(0))), 10)
    assert r.exact and r.value == ZERO

    coeffs = [F(1), F(0), F(-2), F(-5)]
    r = odd_poly_root(Polynomial([con(c) for c in coeffs]), 30)
    assert not r.exact
    lo, hi = r.bracket
    width = hi.as_fraction - lo.as_fraction
    assert width <= F(1, 1 << 30)
    assert horner_fraction(coeffs, lo.as_fraction) < 0
    assert horner_fraction(coeffs, hi.as_fraction) > 0
    assert lo.as_fraction < F(20945514816, 10**10)
    assert hi.as_fraction > F(20945514815, 10**10)
    assert r.residual == con(horner_fraction(coeffs, r.value.as_fraction))

    with pytest.raises(EvenDegree):
        odd_poly_root(Polynomial((con(1), con(0), con(-1))), 5)
    with pytest.raises(ZeroLeadingCoefficient):
        odd_poly_root(Polynomial((ZERO, con(1), con(0), con(0))), 5)


def test_odd_poly_root_transfinite():
    p = Polynomial((ONE, ZERO, ZERO, nf_neg(mono(3))))
    r = odd_poly_root(p, 5)
    assert r.exact and r.value == W

    r = odd_poly_root(Polynomial((ONE, nf_neg(W))), 5)
    assert r.exact and r.value == W

    r = odd_poly_root(Polynomial((ONE, ZERO, ZERO, W)), 5)
    assert r.exact and r.value == nf_neg(mono(F(1, 3)))

    p = Polynomial((ONE, ZERO, nf_neg(W), nf_neg(mono(3))))
    r = odd_poly_root(p, 4)
    assert r.residual == poly_eval(p, r.value)
    leads = [e for e in r.trace if e is not None]
    for a, b in zip(leads, leads[1:]):
        assert nf_cmp(b, a) == "less"
    if not r.exact:
        assert nf_cmp(r.residual.leading_exp, ZERO) == "less"


def test_ring_laws():
    rng = random.Random(37)
    for _ in range(500):
        a, b, c = rand_nf(rng), rand_nf(rng), rand_nf(rng)
        assert (a + b) + c == a + (b + c)
        assert a + b == b + a
        assert a * b == b * a
        assert a * (b + c) == a * b + a * c
        assert (a * b) * c == a * (b * c)
        assert a + nf_neg(a) == ZERO
    for _ in range(100):
        a, b, c = rand_nf(rng), rand_nf(rng), rand_nf(rng)
        if a < b:
            assert a + c < b + c
            if c > ZERO:
                assert a * c < b * c


def test_omega_pow_homomorphism():
    rng = random.Random(41)
    for _ in range(200):
        x, y = rand_nf(rng, 1), rand_nf(rng, 1)
        assert omega_pow(x + y) == nf_mul(omega_pow(x), omega_pow(y))


def test_omega_pow_monotone_and_small():
    rng = random.Random(43)
    rationals = [F(1, 10**6), F(1, 7), F(1), F(5, 2), F(1000)]
    for _ in range(100):
        x, y = rand_nf(rng, 1), rand_nf(rng, 1)
        if x < y:
            assert omega_pow(x) < omega_pow(y)
        if x > ZERO:
            assert all(omega_pow(x) > con(r) for r in rationals)
        if x < ZERO:
            assert all(omega_pow(x) < con(r) for r in rationals)


def test_cross_tier_day3():
    day3 = [d.as_fraction for d in games.enumerate_day(3)]
    for a in day3:
        for b in day3:
            assert con(a) + con(b) == con(a + b)
            assert con(a) * con(b) == con(a * b)
            assert nf_neg(con(a)) == con(-a)
            ga, gb = games.from_dyadic(a), games.from_dyadic(b)
            assert games.leq(ga, gb) == (nf_cmp(con(a), con(b)) != "greater")
            s = games.simplify(games.game_add(ga, gb))
            assert con(s.as_fraction) == con(a) + con(b)


@settings(deadline=None, max_examples=60)
@given(
    st.fractions(min_value=-8, max_value=8, max_denominator=16),
    st.fractions(min_value=-8, max_value=8, max_denominator=16),
)
def test_constant_embedding(a, b):
    assert con(a) * con(b) == con(a * b)
    assert con(a) + con(b) == con(a + b)
    assert nf_cmp(con(a), con(b)) == (
        "less" if a < b else "greater" if a > b else "equal"
    )


def test_rendering():
    assert str(ZERO) == "0"
    assert str(W + 1) == "w + 1"
    assert str(mono(2, 3) - W) == "w^(2)*3 + w*-1"
    assert str(mono(F(1, 2)) + mono(-1, F(1, 3))) == "w^(1/2)*1 + w^(-1)*1/3"
    assert str(nf_inverse(W + 1, 1)) == "w^(-1)*1 + w^(-2)*-1 + O(w^(-2))"
