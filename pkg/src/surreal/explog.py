"""Exponentials and logarithms over normal forms.

Powers split the exponent as x = x' + q + delta (infinite part, integer,
infinitesimal) and give a^x = w^(x'/w) * a^q * exp(delta). The infinitesimal
direction uses the plain exp and log1p series with no base-dependent scale
factor, so the two series are exact formal inverses and every round trip
closes to certified order. Bases are positive finite non-units; a base below
one reduces to its reciprocal with the exponent negated.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import (
    InexactRealLog,
    NonPositive,
    NotInfinitesimal,
    OutsideDomain,
    PreconditionViolated,
    UnsupportedFinitePart,
)
from .normalform import (
    ONE,
    W,
    ZERO,
    NormalForm,
    Truncated,
    classify_magnitude,
    decompose,
    nf_inverse,
    omega_pow,
)

_MINUS_ONE = ONE.scale(-1)


def _nf(x):
    if isinstance(x, NormalForm):
        return x
    return NormalForm.from_rational(Fraction(x))


def _check_base(a):
    if not (classify_magnitude(a) == "finite" and a > ZERO and a != ONE):
        raise PreconditionViolated(f"base must be positive, finite and not 1: {a}")


def exp_inf(delta, k):
    """Truncated exponential of an infinitesimal: sum of delta^i / i!, i <= k.

    The defect against the full series has leading exponent at most
    (k+1) times delta's.
    """
    delta = _nf(delta)
    if delta.is_zero:
        return Truncated(ONE, ZERO, None)
    if classify_magnitude(delta) != "infinitesimal":
        raise NotInfinitesimal(f"{delta} is not infinitesimal")
    acc, term, fact = ONE, ONE, 1
    for i in range(1, k + 1):
        term = term * delta
        fact *= i
        acc = acc + term.scale(Fraction(1, fact))
    return Truncated(acc, None, delta.leading_exp.scale(k + 1))


def log1p_inf(delta, k):
    """Truncated log(1 + delta): alternating sum of delta^i / i, 1 <= i <= k."""
    delta = _nf(delta)
    if delta.is_zero:
        return Truncated(ZERO, ZERO, None)
    if classify_magnitude(delta) != "infinitesimal":
        raise NotInfinitesimal(f"{delta} is not infinitesimal")
    acc, term = ZERO, ONE
    for i in range(1, k + 1):
        term = term * delta
        acc = acc + term.scale(Fraction(1 if i % 2 else -1, i))
    return Truncated(acc, None, delta.leading_exp.scale(k + 1))


def pow(a, x, k):
    """a^x for a positive finite base: w^(x'/w) * a^q * exp(delta).

    The finite part of x must be an integer plus an infinitesimal; the
    infinite part's exponents each drop by one to form x'/w. A truncation
    order is reported whenever a series (or a reciprocal of a non-constant
    base) was involved.
    """
    a, x = _nf(a), _nf(x)
    _check_base(a)
    if a < ONE:
        if not a.is_constant:
            raise PreconditionViolated("a base below one must be a rational constant")
        return pow(_nf(1 / a.as_fraction), -x, k)
    inf_part, fin = decompose(x)
    q = Fraction(0)
    for e, c in fin.terms:
        if e.is_zero:
            q = c
    if q.denominator != 1:
        raise UnsupportedFinitePart(f"finite part {q} is not an integer")
    q = int(q)
    delta = fin - _nf(q)
    head = omega_pow(NormalForm(tuple((e - ONE, c) for e, c in inf_part.terms)))
    if q >= 0:
        base_val, base_order = a**q, None
    elif a.is_constant:
        base_val, base_order = _nf(a.as_fraction**q), None
    else:
        inv = nf_inverse(a ** (-q), k)
        base_val, base_order = inv.value, inv.order
    series = exp_inf(delta, k)
    value = head * base_val * series.value
    orders = [o for o in (base_order, series.order) if o is not None]
    if not orders:
        return Truncated(value, ZERO, None)
    return Truncated(value, None, head.leading_exp + max(orders))


def in_X(x):
    """Locate x in the exponential domain: X0, X+, X-, or outside.

    Finite positives are X0. An infinite x is X+ when every exponent in its
    leader's exponent y0 exceeds -1 (checked on y0's own term list, one level
    deep, as the criterion is stated); an infinitesimal is X- when its
    reciprocal is X+.
    """
    x = _nf(x)
    if not x > ZERO:
        raise NonPositive(f"{x} is not positive")
    cls = classify_magnitude(x)
    if cls == "finite":
        return "X0"
    y0 = x.leading_exp
    if cls == "infinitesimal":
        y0 = -y0
        tag = "X-"
    else:
        tag = "X+"
    if all(z > _MINUS_ONE for z, _ in y0.terms):
        return tag
    return "outside"


def _int_log(a, r0):
    """The integer m with a^m = r0 exactly, for a constant base a > 1."""
    if r0 == 1:
        return 0
    if not a.is_constant:
        raise InexactRealLog(f"{r0} is not an integer power of {a}")
    base = a.as_fraction
    target, sign = (r0, 1) if r0 > 1 else (1 / r0, -1)
    acc, m = base, 1
    while acc < target and m < 4096:
        acc *= base
        m += 1
    if acc != target:
        raise InexactRealLog(f"{r0} is not an integer power of {base}")
    return sign * m


def log(a, x, k):
    """log_a x = w*y0 + m + log1p(delta) for x = w^(y0) * r0 * (1 + delta).

    r0 must be an exact integer power of the base; the w*y0 part shifts y0's
    exponents up by one, and the series order is reported as in pow.
    """
    a, x = _nf(a), _nf(x)
    _check_base(a)
    try:
        region = in_X(x)
    except NonPositive as exc:
        raise OutsideDomain(str(exc)) from exc
    if region == "outside":
        raise OutsideDomain(f"{x} lies outside the exponential domain")
    if a < ONE:
        if not a.is_constant:
            raise PreconditionViolated("a base below one must be a rational constant")
        t = log(_nf(1 / a.as_fraction), x, k)
        return Truncated(-t.value, t.residual, t.order)
    y0 = x.leading_exp
    r0 = x.leading_coeff
    delta = (x * omega_pow(-y0)).scale(1 / r0) - ONE
    m = _int_log(a, r0)
    series = log1p_inf(delta, k)
    value = W * y0 + _nf(m) + series.value
    if series.order is None:
        return Truncated(value, ZERO, None)
    return Truncated(value, None, series.order)
