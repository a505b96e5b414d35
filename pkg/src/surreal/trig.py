"""Trigonometry on infinitesimals and the complex field over normal forms.

Angles are measured in turns and kept rational. Quarter turns substitute
their exact values; any other angle stays a symbolic cos/sin token, folded
into the first quadrant and combined by product-to-sum, so the circle
homomorphism and the Pythagorean identity hold syntactically without ever
naming an irrational constant. The winding-degree estimator is the one
deliberately non-exact operation here: it runs in floating point and never
feeds back into the exact types.
"""

from __future__ import annotations

import cmath
import math
from fractions import Fraction

from .errors import (
    DivisionByZero,
    NotInfinitesimal,
    RootOnCircleSuspected,
    UnsupportedAngle,
)
from .normalform import (
    ONE,
    ZERO,
    NormalForm,
    Polynomial,
    Truncated,
    classify_magnitude,
    decompose,
    nf_inverse,
)

_QUARTERS = {
    Fraction(0): (1, 0),
    Fraction(1, 4): (0, 1),
    Fraction(1, 2): (-1, 0),
    Fraction(3, 4): (0, -1),
}

_CONST = ("1", Fraction(0))


def _nf(x):
    if isinstance(x, NormalForm):
        return x
    return NormalForm.from_rational(Fraction(x))


def _bump(entries, key, coeff):
    cur = entries.get(key)
    coeff = coeff if cur is None else cur + coeff
    if coeff.is_zero:
        entries.pop(key, None)
    else:
        entries[key] = coeff


def _add_entry(entries, kind, q, coeff):
    """Fold cos/sin of q turns into the canonical (0, 1/4) range."""
    if coeff.is_zero:
        return
    q = q % 1
    quarter = _QUARTERS.get(q)
    if quarter is not None:
        v = quarter[0] if kind == "c" else quarter[1]
        if v:
            _bump(entries, _CONST, coeff.scale(v))
        return
    sign = 1
    if q > Fraction(1, 2):
        q = 1 - q
        if kind == "s":
            sign = -sign
    if q > Fraction(1, 4):
        q = Fraction(1, 2) - q
        if kind == "c":
            sign = -sign
    # Complementary reflection: cos(q) = sin(1/4 - q). Without this quotient
    # the two sides of an angle-addition identity can land in different bases.
    if q > Fraction(1, 8):
        q = Fraction(1, 4) - q
        kind = "s" if kind == "c" else "c"
    elif q == Fraction(1, 8) and kind == "s":
        kind = "c"
    _bump(entries, (kind, q), coeff if sign == 1 else coeff.scale(-1))


class TrigExpr:
    """A rational-turn trig combination: sum of c*cos(q) and c*sin(q) terms.

    Entries map ("c"|"s"|"1", angle) to normal-form coefficients; angles are
    canonical (first quadrant, quarter turns already substituted), so
    structural equality decides value equality within the span the module
    produces.
    """

    __slots__ = ("entries",)

    def __init__(self, entries=None):
        self.entries = {k: v for k, v in (entries or {}).items() if not v.is_zero}

    @classmethod
    def lift(cls, v):
        if isinstance(v, TrigExpr):
            return v
        return cls({_CONST: _nf(v)})

    @classmethod
    def cos_token(cls, q):
        entries = {}
        _add_entry(entries, "c", Fraction(q), ONE)
        return cls(entries)

    @classmethod
    def sin_token(cls, q):
        entries = {}
        _add_entry(entries, "s", Fraction(q), ONE)
        return cls(entries)

    @property
    def is_plain(self):
        return all(k == _CONST for k in self.entries)

    def plain(self):
        if not self.is_plain:
            raise UnsupportedAngle(f"{self} has no exact rational value")
        return self.entries.get(_CONST, ZERO)

    def __eq__(self, other):
        if not isinstance(other, TrigExpr):
            return NotImplemented
        return self.entries == other.entries

    def __add__(self, other):
        other = TrigExpr.lift(other)
        out = dict(self.entries)
        for k, v in other.entries.items():
            _bump(out, k, v)
        return TrigExpr(out)

    __radd__ = __add__

    def __neg__(self):
        return TrigExpr({k: -v for k, v in self.entries.items()})

    def __sub__(self, other):
        return self + (-TrigExpr.lift(other))

    def __rsub__(self, other):
        return TrigExpr.lift(other) + (-self)

    def __mul__(self, other):
        other = TrigExpr.lift(other)
        out = {}
        half = Fraction(1, 2)
        for (k1, q1), c1 in self.entries.items():
            for (k2, q2), c2 in other.entries.items():
                c = c1 * c2
                if k1 == "1" and k2 == "1":
                    _bump(out, _CONST, c)
                elif k1 == "1":
                    _add_entry(out, k2, q2, c)
                elif k2 == "1":
                    _add_entry(out, k1, q1, c)
                elif k1 == "c" and k2 == "c":
                    _add_entry(out, "c", q1 - q2, c.scale(half))
                    _add_entry(out, "c", q1 + q2, c.scale(half))
                elif k1 == "s" and k2 == "s":
                    _add_entry(out, "c", q1 - q2, c.scale(half))
                    _add_entry(out, "c", q1 + q2, c.scale(-half))
                else:
                    a, b = (q1, q2) if k1 == "s" else (q2, q1)
                    _add_entry(out, "s", a + b, c.scale(half))
                    _add_entry(out, "s", a - b, c.scale(half))
        return TrigExpr(out)

    __rmul__ = __mul__

    def __str__(self):
        if not self.entries:
            return "0"
        parts = []
        for (kind, q), coeff in sorted(self.entries.items()):
            if (kind, q) == _CONST:
                parts.insert(0, str(coeff))
            else:
                name = "cos" if kind == "c" else "sin"
                parts.append(f"{name}({q} turn)*({coeff})")
        return " + ".join(parts)

    __repr__ = __str__


def sin_inf(delta, k):
    """Truncated sine: k alternating terms, highest power 2k - 1."""
    delta = _nf(delta)
    if delta.is_zero:
        return Truncated(ZERO, ZERO, None)
    if classify_magnitude(delta) != "infinitesimal":
        raise NotInfinitesimal(f"{delta} is not infinitesimal")
    acc, term, fact = ZERO, None, 1
    for i in range(k):
        if term is None:
            term = delta
        else:
            term = term * delta * delta
            fact *= (2 * i) * (2 * i + 1)
        acc = acc + term.scale(Fraction(1 if i % 2 == 0 else -1, fact))
    return Truncated(acc, None, delta.leading_exp.scale(2 * k + 1))


def cos_inf(delta, k):
    """Truncated cosine: k + 1 alternating terms, highest power 2k."""
    delta = _nf(delta)
    if delta.is_zero:
        return Truncated(ONE, ZERO, None)
    if classify_magnitude(delta) != "infinitesimal":
        raise NotInfinitesimal(f"{delta} is not infinitesimal")
    acc, term, fact = ONE, ONE, 1
    for i in range(1, k + 1):
        term = term * delta * delta
        fact *= (2 * i - 1) * (2 * i)
        acc = acc + term.scale(Fraction(1 if i % 2 == 0 else -1, fact))
    return Truncated(acc, None, delta.leading_exp.scale(2 * k + 2))


def _split_angle(x):
    """Finite part of x as (turn fraction, infinitesimal); infinite part drops."""
    _, fin = decompose(_nf(x))
    theta = Fraction(0)
    rest = []
    for e, c in fin.terms:
        if e.is_zero:
            theta = c
        else:
            rest.append((e, c))
    return theta % 1, NormalForm(rest)


def _ext(x, k, is_sin):
    theta, delta = _split_angle(x)
    sd = sin_inf(delta, k).value
    cd = cos_inf(delta, k).value
    if is_sin:
        expr = TrigExpr.sin_token(theta) * cd + TrigExpr.cos_token(theta) * sd
    else:
        expr = TrigExpr.cos_token(theta) * cd - TrigExpr.sin_token(theta) * sd
    value = expr.plain() if expr.is_plain else expr
    if delta.is_zero:
        return Truncated(value, ZERO, None)
    return Truncated(value, None, delta.leading_exp.scale(2 * k + 1))


def sin_ext(x, k):
    """sin of the finite part: angle addition over the turn token and series."""
    return _ext(x, k, True)


def cos_ext(x, k):
    """cos of the finite part: angle addition over the turn token and series."""
    return _ext(x, k, False)


class ComplexNF:
    """A complex value with normal-form (or trig-token) components."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = self._component(re)
        self.im = self._component(im)

    @staticmethod
    def _component(v):
        if isinstance(v, TrigExpr):
            return v.plain() if v.is_plain else v
        return _nf(v)

    def __eq__(self, other):
        if not isinstance(other, ComplexNF):
            return NotImplemented
        return self.re == other.re and self.im == other.im

    @property
    def is_zero(self):
        return (
            not isinstance(self.re, TrigExpr)
            and not isinstance(self.im, TrigExpr)
            and self.re.is_zero
            and self.im.is_zero
        )

    def __str__(self):
        return f"({self.re}) + ({self.im})i"

    __repr__ = __str__


def _mix_add(a, b):
    if isinstance(a, TrigExpr) or isinstance(b, TrigExpr):
        return TrigExpr.lift(a) + TrigExpr.lift(b)
    return a + b


def _mix_sub(a, b):
    if isinstance(a, TrigExpr) or isinstance(b, TrigExpr):
        return TrigExpr.lift(a) - TrigExpr.lift(b)
    return a - b


def _mix_mul(a, b):
    if isinstance(a, TrigExpr) or isinstance(b, TrigExpr):
        return TrigExpr.lift(a) * TrigExpr.lift(b)
    return a * b


def c_add(z1, z2):
    return ComplexNF(_mix_add(z1.re, z2.re), _mix_add(z1.im, z2.im))


def c_mul(z1, z2):
    return ComplexNF(
        _mix_sub(_mix_mul(z1.re, z2.re), _mix_mul(z1.im, z2.im)),
        _mix_add(_mix_mul(z1.re, z2.im), _mix_mul(z1.im, z2.re)),
    )


def c_div(z1, z2, k=8):
    """z1 / z2 by the conjugate formula; the squared-modulus inversion is
    truncated at k and the exact residual c_mul(result, z2) - z1 is reported."""
    for z in (z1, z2):
        if isinstance(z.re, TrigExpr) or isinstance(z.im, TrigExpr):
            raise UnsupportedAngle("division needs plain normal-form components")
    if z2.is_zero:
        raise DivisionByZero("complex division by zero")
    den = z2.re * z2.re + z2.im * z2.im
    inv = nf_inverse(den, k)
    re_num = z1.re * z2.re + z1.im * z2.im
    im_num = z1.im * z2.re - z1.re * z2.im
    value = ComplexNF(re_num * inv.value, im_num * inv.value)
    if inv.exact:
        return Truncated(value, ComplexNF(0, 0), None)
    # c_mul(value, z2) = z1 * den * inv.value, so the defect is exactly
    # z1 * inv.residual and inherits its order shifted by z1's magnitude.
    residual = c_add(c_mul(value, z2), ComplexNF(-z1.re, -z1.im))
    shifts = [c.leading_exp for c in (z1.re, z1.im) if not c.is_zero]
    order = inv.order + (max(shifts) if shifts else ZERO)
    return Truncated(value, residual, order)


def ex(x, k=6):
    """cos + i sin of x turns (finite part only): the circle homomorphism."""
    return ComplexNF(cos_ext(x, k).value, sin_ext(x, k).value)


def _horner_c(coeffs, z):
    out = 0j
    for c in coeffs:
        out = out * z + c
    return out


def winding_degree(p, radius, samples):
    """Net winding of p around the circle of the given radius, from equally
    spaced floating-point samples. Diagnostic only: the single non-exact
    operation in the package."""
    seq = p.coefficients if isinstance(p, Polynomial) else list(p)
    coeffs = []
    for c in seq:
        z = c if isinstance(c, ComplexNF) else ComplexNF(c, 0)
        if isinstance(z.re, TrigExpr) or isinstance(z.im, TrigExpr):
            raise UnsupportedAngle("winding needs plain coefficients")
        if not (z.re.is_constant and z.im.is_constant):
            raise ValueError("winding needs constant coefficients")
        coeffs.append(complex(float(z.re.as_fraction), float(z.im.as_fraction)))
    r = float(radius)
    scale = max([abs(c) for c in coeffs] + [1.0])
    tol = 1e-9 * scale * max(1.0, r) ** (len(coeffs) - 1)
    total = 0.0
    prev = first = None
    for j in range(samples):
        z = cmath.rect(r, 2 * math.pi * j / samples)
        v = _horner_c(coeffs, z)
        if abs(v) < tol:
            raise RootOnCircleSuspected(f"|p| = {abs(v):.3e} at sample {j}")
        ph = cmath.phase(v)
        if prev is None:
            first = ph
        else:
            d = ph - prev
            while d > math.pi:
                d -= 2 * math.pi
            while d < -math.pi:
                d += 2 * math.pi
            total += d
        prev = ph
    d = first - prev
    while d > math.pi:
        d -= 2 * math.pi
    while d < -math.pi:
        d += 2 * math.pi
    total += d
    return round(total / (2 * math.pi))
