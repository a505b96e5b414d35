"""Conway normal forms with rational coefficients and recursive exponents.

A value is a finite descending sum w^(y_0)*r_0 + ... + w^(y_m)*r_m whose
exponents y_i are themselves normal forms and whose coefficients are nonzero
rationals. The representation is canonical, so equality is structural. The
field is ordered lexicographically on (exponent, coefficient) term lists.

Division and roots return truncated series wrapped in a Truncated record
carrying the exact residual and a bound on its leading exponent: finite
support is not closed under inversion, so honesty demands certificates.
"""

from __future__ import annotations

from fractions import Fraction

from . import games
from .errors import (
    EvenDegree,
    IrrationalLeadingRoot,
    NonPositive,
    NotMainOrdinal,
    PreconditionViolated,
    ZeroInput,
    ZeroLeadingCoefficient,
)
from .ordinals import OMEGA as ORD_OMEGA
from .ordinals import ONE as ORD_ONE
from .ordinals import ZERO as ORD_ZERO
from .ordinals import Ord, is_main_ordinal, nat_add, nat_mul, omega_to, ord_add, ord_mul


class NormalForm:
    """An immutable normal form; terms is a tuple of (exponent, coefficient)."""

    __slots__ = ("terms", "_hash")

    def __init__(self, terms=()):
        merged = {}
        for e, c in terms:
            c = Fraction(c)
            if not isinstance(e, NormalForm):
                raise TypeError("exponents must be NormalForm values")
            if c:
                q = merged.get(e)
                merged[e] = q + c if q is not None else c
        pairs = [(e, c) for e, c in merged.items() if c]
        pairs.sort(key=_ExpKey, reverse=True)
        self.terms = tuple(pairs)
        self._hash = None

    @classmethod
    def from_rational(cls, q):
        q = Fraction(q)
        return cls(((ZERO, q),)) if q else ZERO

    @property
    def is_zero(self):
        return not self.terms

    @property
    def is_constant(self):
        """A rational constant: zero or a single term with exponent 0."""
        return not self.terms or (len(self.terms) == 1 and self.terms[0][0].is_zero)

    @property
    def as_fraction(self):
        if self.is_zero:
            return Fraction(0)
        if not self.is_constant:
            raise ValueError(f"{self} is not a rational constant")
        return self.terms[0][1]

    @property
    def leading_exp(self):
        return self.terms[0][0]

    @property
    def leading_coeff(self):
        return self.terms[0][1]

    def _cmp(self, other):
        for (ea, ca), (eb, cb) in zip(self.terms, other.terms):
            k = ea._cmp(eb)
            if k:
                # the side with the larger exponent is decided by that coefficient
                return (1 if ca > 0 else -1) if k > 0 else (-1 if cb > 0 else 1)
            if ca != cb:
                return -1 if ca < cb else 1
        if len(self.terms) > len(other.terms):
            return 1 if self.terms[len(other.terms)][1] > 0 else -1
        if len(other.terms) > len(self.terms):
            return -1 if other.terms[len(self.terms)][1] > 0 else 1
        return 0

    def __eq__(self, other):
        if not isinstance(other, NormalForm):
            return NotImplemented
        return self is other or self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.terms)
        return self._hash

    def __lt__(self, other):
        return self._cmp(_coerce(other)) < 0

    def __le__(self, other):
        return self._cmp(_coerce(other)) <= 0

    def __gt__(self, other):
        return self._cmp(_coerce(other)) > 0

    def __ge__(self, other):
        return self._cmp(_coerce(other)) >= 0

    def __add__(self, other):
        return NormalForm(self.terms + _coerce(other).terms)

    __radd__ = __add__

    def __neg__(self):
        return NormalForm(tuple((e, -c) for e, c in self.terms))

    def __sub__(self, other):
        return self + (-_coerce(other))

    def __rsub__(self, other):
        return _coerce(other) + (-self)

    def __mul__(self, other):
        other = _coerce(other)
        out = []
        for e1, c1 in self.terms:
            for e2, c2 in other.terms:
                out.append((e1 + e2, c1 * c2))
        return NormalForm(out)

    __rmul__ = __mul__

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise ValueError("only non-negative integer powers")
        out, acc = ONE, self
        while n:
            if n & 1:
                out = out * acc
            acc = acc * acc
            n >>= 1
        return out

    def scale(self, q):
        q = Fraction(q)
        return NormalForm(tuple((e, c * q) for e, c in self.terms))

    def __str__(self):
        if not self.terms:
            return "0"
        return " + ".join(_render_term(e, c) for e, c in self.terms)

    __repr__ = __str__


class _ExpKey:
    __slots__ = ("e",)

    def __init__(self, pair):
        self.e = pair[0]

    def __lt__(self, other):
        return self.e._cmp(other.e) < 0


def _render_term(e, c):
    if e.is_zero:
        return str(c)
    if e == ONE:
        return "w" if c == 1 else f"w*{c}"
    return f"w^({e})*{c}"


def _coerce(x):
    if isinstance(x, NormalForm):
        return x
    if isinstance(x, (int, Fraction)):
        return NormalForm.from_rational(x)
    raise TypeError(f"cannot treat {x!r} as a normal form")


ZERO = NormalForm()
ONE = NormalForm(((ZERO, Fraction(1)),))
W = NormalForm(((ONE, Fraction(1)),))


def nf_cmp(x, y):
    """Compare two normal forms: 'less', 'equal' or 'greater'."""
    k = _coerce(x)._cmp(_coerce(y))
    return "less" if k < 0 else "greater" if k > 0 else "equal"


def nf_add(x, y):
    return _coerce(x) + _coerce(y)


def nf_neg(x):
    return -_coerce(x)


def nf_mul(x, y):
    return _coerce(x) * _coerce(y)


def omega_pow(x):
    """The monomial w^x."""
    return NormalForm(((_coerce(x), Fraction(1)),))


def leader(x):
    """w^(y_0), the leading monomial with unit coefficient."""
    x = _coerce(x)
    if x.is_zero:
        raise ZeroInput("zero has no leader")
    return omega_pow(x.leading_exp)


def commensurate(x, y):
    """Whether x < n*y and y < n*x for some natural n; returns (bool, n|None)."""
    x, y = _coerce(x), _coerce(y)
    if x <= ZERO or y <= ZERO:
        raise NonPositive("commensurability is defined for positive values")
    if x.leading_exp != y.leading_exp:
        return False, None
    ratio = max(x.leading_coeff / y.leading_coeff, y.leading_coeff / x.leading_coeff)
    n = ratio.__floor__() + 1
    while not (x < y.scale(n) and y < x.scale(n)):
        n += 1
    return True, n


def decompose(x):
    """Split into (terms with positive exponent, the rest); parts sum to x."""
    x = _coerce(x)
    inf = NormalForm(tuple(t for t in x.terms if t[0] > ZERO))
    fin = NormalForm(tuple(t for t in x.terms if not t[0] > ZERO))
    return inf, fin


def classify_magnitude(x):
    x = _coerce(x)
    if x.is_zero or x.leading_exp.is_zero:
        return "finite"
    if x.leading_exp > ZERO:
        return "infinite"
    return "infinitesimal"


def ord_to_nf(o):
    """Embed an ordinal into the normal-form field."""
    return NormalForm(tuple((ord_to_nf(e), Fraction(c)) for e, c in o.terms))


def nf_to_ord(x):
    """Read an ordinal off a normal form; raises ValueError if it is not one."""
    x = _coerce(x)
    terms = []
    for e, c in x.terms:
        if c.denominator != 1 or c < 1:
            raise ValueError(f"{x} is not ordinal-valued")
        terms.append((nf_to_ord(e), int(c)))
    return Ord(terms)


def _is_dyadic(q):
    return q.denominator & (q.denominator - 1) == 0


def _game_birthday(q):
    """Game-tier birthday of a dyadic rational, as an ordinal."""
    return games.birthday(games.from_dyadic(q))


def birthday_nf(x):
    """Birthday of x as (ordinal, flag), flag 'exact' or 'bound'.

    Exact cases: rational constants, and single monomials whose exponent is a
    dyadic constant (the birthday of w^e is w to the birthday of e, scaled by
    the coefficient's game birthday). Everything else combines per-term bounds
    with natural sums and products, which certify an upper bound.
    """
    x = _coerce(x)
    if x.is_zero:
        return ORD_ZERO, "exact"
    if len(x.terms) == 1:
        e, c = x.terms[0]
        if e.is_zero:
            if _is_dyadic(c):
                return _game_birthday(c), "exact"
            return ORD_OMEGA, "exact"
        if e.is_constant and _is_dyadic(e.as_fraction):
            base = omega_to(_game_birthday(e.as_fraction))
            if _is_dyadic(c):
                return ord_mul(base, _game_birthday(c)), "exact"
            return ord_mul(base, ORD_OMEGA), "bound"
    total = ORD_ZERO
    for e, c in x.terms:
        cb = _game_birthday(c) if _is_dyadic(c) else ORD_OMEGA
        if e.is_zero:
            tb = cb
        else:
            eb, _ = birthday_nf(e)
            tb = nat_mul(omega_to(eb), cb)
        total = nat_add(total, tb)
    return total, "bound"


def in_field(x, zeta):
    """Whether every term of x was born before zeta (zeta = w^(w^mu)).

    A bound that is not below zeta counts as rejection: membership is only
    asserted on certified knowledge.
    """
    ok, _ = is_main_ordinal(zeta)
    if not ok:
        raise NotMainOrdinal(f"{zeta} is not of the form w^(w^mu)")
    x = _coerce(x)
    for e, c in x.terms:
        value, _ = birthday_nf(NormalForm(((e, c),)))
        if not value < zeta:
            return False
    return True


def least_ordinal_above(v):
    """The least ordinal strictly greater than v."""
    v = _coerce(v)
    if v <= ZERO:
        return ORD_ZERO if v < ZERO else ORD_ONE
    prefix = []
    for e, c in v.terms:
        eo = None
        try:
            eo = nf_to_ord(e)
        except ValueError:
            pass
        if eo is not None and c.denominator == 1 and c > 0:
            prefix.append((eo, int(c)))
            continue
        if c < 0:
            return Ord(prefix)
        if eo is not None:
            return ord_add(Ord(prefix), omega_to(eo, c.__floor__() + 1))
        return ord_add(Ord(prefix), omega_to(least_ordinal_above(e)))
    return ord_add(Ord(prefix), 1)


def archimedean_witness(x, y, zeta):
    """An ordinal alpha < zeta with alpha * x > y, for 0 < x < y.

    beta is the larger of the least ordinal above 1/x and the least ordinal
    above y; alpha = beta^2. Both defining inequalities are verified exactly.
    """
    x, y = _coerce(x), _coerce(y)
    if not (ZERO < x and x < y):
        raise PreconditionViolated("need 0 < x < y")
    if not (in_field(x, zeta) and in_field(y, zeta)):
        raise PreconditionViolated("arguments must lie in the zeta-field")
    if x.is_constant:
        recip = least_ordinal_above(ONE.scale(1 / x.as_fraction))
    else:
        recip = least_ordinal_above(nf_inverse(x, 4).value)
        bumps = 0
        while not ord_to_nf(recip) * x > ONE:
            recip = ord_add(recip, 1)
            bumps += 1
            if bumps > 4:
                raise PreconditionViolated(f"no ordinal reciprocal bound for {x}")
    above_y = least_ordinal_above(y)
    beta = recip if above_y < recip else above_y
    alpha = ord_mul(beta, beta)
    if not ord_to_nf(alpha) * x > y:
        raise PreconditionViolated("witness construction failed the defining check")
    if not alpha < zeta:
        raise PreconditionViolated(f"witness {alpha} does not stay below {zeta}")
    return alpha


class Truncated:
    """A truncated series value with its exact residual and defect bound.

    residual: the exact defect as a normal form when it is computable, else
    None. order: a bound on the defect's leading exponent, None when the
    value is exact.
    """

    __slots__ = ("value", "residual", "order")

    def __init__(self, value, residual=None, order=None):
        self.value = value
        self.residual = residual
        self.order = order

    @property
    def exact(self):
        return self.order is None

    def __str__(self):
        if self.order is None:
            return str(self.value)
        return f"{self.value} + O(w^({self.order}))"

    __repr__ = __str__


def _split_leader(x):
    """x = w^(y0) * r0 * (1 + delta) with delta infinitesimal or zero."""
    y0, r0 = x.terms[0]
    rest = NormalForm(x.terms[1:])
    delta = (rest * omega_pow(-y0)).scale(1 / r0)
    return y0, r0, delta


def nf_inverse(x, k):
    """Truncated 1/x: the geometric series in the leader's defect.

    Returns w^(-y0)/r0 * sum_{i<=k} (-delta)^i; the residual x*z - 1 is exact
    and its leading exponent is at most (k+1) times delta's.
    """
    x = _coerce(x)
    if x.is_zero:
        raise ZeroInput("cannot invert zero")
    y0, r0, delta = _split_leader(x)
    head = omega_pow(-y0).scale(1 / r0)
    if delta.is_zero:
        return Truncated(head, ZERO, None)
    acc, term = ONE, ONE
    for _ in range(k):
        term = term * (-delta)
        acc = acc + term
    z = head * acc
    residual = x * z - ONE
    order = delta.leading_exp.scale(k + 1)
    return Truncated(z, residual, order)


def _int_nth_root(v, n):
    """Exact integer n-th root, or None."""
    if v < 0:
        return None
    if v < 2:
        return v
    r = round(v ** (1.0 / n))
    for cand in (r - 1, r, r + 1):
        if cand >= 0 and cand**n == v:
            return cand
    return None


def _rational_nth_root(q, n):
    num = _int_nth_root(q.numerator, n)
    den = _int_nth_root(q.denominator, n)
    if num is None or den is None:
        return None
    return Fraction(num, den)


def _binomial(alpha, i):
    out = Fraction(1)
    for j in range(i):
        out *= (alpha - j) / (j + 1)
    return out


def nf_nth_root(x, n, k):
    """Truncated n-th root via the binomial series on the leader's defect.

    y = w^(y0/n) * r0^(1/n) * sum_{i<=k} C(1/n, i) delta^i; the residual
    y^n - x is exact with leading exponent at most e_x + (k+1)*d where d is
    delta's leading exponent.
    """
    x = _coerce(x)
    if n < 1:
        raise ValueError("root index must be at least 1")
    if not x > ZERO:
        raise NonPositive("roots are defined for positive values")
    y0, r0, delta = _split_leader(x)
    root_c = _rational_nth_root(r0, n)
    if root_c is None:
        raise IrrationalLeadingRoot(f"{r0} has no rational {n}-th root")
    head = omega_pow(y0.scale(Fraction(1, n))).scale(root_c)
    if delta.is_zero:
        return Truncated(head, ZERO, None)
    acc, dpow = ONE, ONE
    for i in range(1, k + 1):
        dpow = dpow * delta
        acc = acc + dpow.scale(_binomial(Fraction(1, n), i))
    y = head * acc
    residual = y**n - x
    if residual.is_zero:
        return Truncated(y, ZERO, None)
    order = y0 + delta.leading_exp.scale(k + 1)
    return Truncated(y, residual, order)


class Polynomial:
    """Coefficients in degree-descending order, kept exactly as given."""

    __slots__ = ("coefficients",)

    def __init__(self, coefficients):
        coeffs = tuple(_coerce(c) for c in coefficients)
        if not coeffs:
            raise ValueError("a polynomial needs at least one coefficient")
        self.coefficients = coeffs

    @property
    def degree(self):
        return len(self.coefficients) - 1

    @property
    def is_rational(self):
        return all(c.is_constant for c in self.coefficients)

    def derivative(self):
        n = self.degree
        if n == 0:
            return Polynomial((ZERO,))
        return Polynomial(
            tuple(c.scale(n - i) for i, c in enumerate(self.coefficients[:-1]))
        )

    def __str__(self):
        return " ; ".join(str(c) for c in self.coefficients)

    __repr__ = __str__


def poly_eval(p, x):
    """Horner evaluation."""
    x = _coerce(x)
    out = ZERO
    for c in p.coefficients:
        out = out * x + c
    return out


class Root:
    """Result of odd_poly_root: value, exact residual, optional dyadic
    bracket (lo, hi), and the trace of residual leading exponents per
    correction step (None entries mean residual zero)."""

    __slots__ = ("value", "residual", "bracket", "trace")

    def __init__(self, value, residual, bracket=None, trace=()):
        self.value = value
        self.residual = residual
        self.bracket = bracket
        self.trace = tuple(trace)

    @property
    def exact(self):
        return self.residual.is_zero

    def __str__(self):
        if self.exact:
            return str(self.value)
        if self.bracket:
            return f"{self.value} in [{self.bracket[0]}, {self.bracket[1]}]"
        return f"{self.value} (residual leads w^({self.residual.leading_exp}))"

    __repr__ = __str__


def _rational_roots(coeffs):
    """Exact rational roots of a rational-coefficient polynomial."""
    denoms = 1
    for c in coeffs:
        denoms = denoms * c.denominator // _gcd(denoms, c.denominator)
    ints = [int(c * denoms) for c in coeffs]
    while ints and ints[0] == 0:
        ints = ints[1:]
    if not ints:
        return []
    lead, const = ints[0], ints[-1]
    found = []
    if const == 0:
        found.append(Fraction(0))
        while ints and ints[-1] == 0:
            ints = ints[:-1]
        const = ints[-1]
    for p in _divisors(abs(const)):
        for q in _divisors(abs(lead)):
            for cand in (Fraction(p, q), Fraction(-p, q)):
                if _horner_fr(coeffs, cand) == 0 and cand not in found:
                    found.append(cand)
    return found


def _horner_fr(coeffs, t):
    out = Fraction(0)
    for c in coeffs:
        out = out * t + c
    return out


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


def _divisors(n):
    if n == 0:
        return []
    out = []
    d = 1
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            if d != n // d:
                out.append(n // d)
        d += 1
    return sorted(out)


def _rational_root_search(coeffs, k):
    """Exact root or a width 2^-k bracket for odd-degree rational polys."""
    roots = _rational_roots(coeffs)
    if roots:
        best = min(roots, key=abs)
        v = NormalForm.from_rational(best)
        return Root(v, ZERO)
    sign_hi = 1 if coeffs[0] > 0 else -1

    def f(t):
        return _horner_fr(coeffs, t)

    hi = Fraction(1)
    while not (f(hi) > 0 if sign_hi > 0 else f(hi) < 0):
        hi *= 2
    lo = Fraction(-1)
    while not (f(lo) < 0 if sign_hi > 0 else f(lo) > 0):
        lo *= 2
    if sign_hi < 0:
        lo, hi = hi, lo

    # invariant: f(lo) < 0 < f(hi); lo < hi does not necessarily hold when
    # the leading coefficient is negative, so bisect on the signed pair
    while abs(hi - lo) > Fraction(1, 1 << k):
        mid = (lo + hi) / 2
        fm = f(mid)
        if fm == 0:
            return Root(NormalForm.from_rational(mid), ZERO)
        if fm < 0:
            lo = mid
        else:
            hi = mid
    a, b = min(lo, hi), max(lo, hi)
    mid = (a + b) / 2
    value = NormalForm.from_rational(mid)
    return Root(
        value,
        NormalForm.from_rational(_horner_fr(coeffs, mid)),
        bracket=(NormalForm.from_rational(a), NormalForm.from_rational(b)),
    )


def _newton_polygon_leader(p):
    """Leader w^E * t of a root from the exponent balance of the terms.

    Candidate E values come from pairwise balances of the support points
    (power, coefficient leading exponent); E must make at least two points
    attain the maximum of f_p + p*E. Ties go to the largest E, and t solves
    the balance equation over the attaining set.
    """
    n = p.degree
    pts = []
    for i, c in enumerate(p.coefficients):
        if not c.is_zero:
            pts.append((n - i, c.leading_exp, c.leading_coeff))
    cands = []
    for ai in range(len(pts)):
        for bi in range(ai + 1, len(pts)):
            pa, fa, _ = pts[ai]
            pb, fb, _ = pts[bi]
            e = (fb - fa).scale(Fraction(1, pa - pb))
            if all(e != other for other in cands):
                cands.append(e)
    best = None
    for e in cands:
        heights = [(f + e.scale(power), power, coeff) for power, f, coeff in pts]
        top = heights[0][0]
        for h, _, _ in heights[1:]:
            if h > top:
                top = h
        attain = [(power, coeff) for h, power, coeff in heights if h == top]
        if len(attain) < 2:
            continue
        if best is None or e > best[0]:
            best = (e, attain)
    if best is None:
        return None
    e, attain = best
    deg = max(power for power, _ in attain)
    balance = [Fraction(0)] * (deg + 1)
    for power, coeff in attain:
        balance[deg - power] = coeff
    ts = [t for t in _rational_roots(balance) if t != 0]
    if not ts:
        raise IrrationalLeadingRoot("leading balance has no nonzero rational root")
    return omega_pow(e).scale(min(ts, key=abs))


def odd_poly_root(p, k):
    """A root of an odd-degree polynomial, exact when reachable.

    Rational data: exact rational root when one exists, otherwise exact
    bisection to a dyadic bracket of width 2^-k. Transfinite data: the
    Newton-polygon leader followed by Newton correction steps with truncated
    inversion; each correction keeps only its k+1 leading terms (the tail is
    beyond the certified precision and would otherwise grow geometrically),
    and the residual is recomputed exactly from the truncated iterate. The
    trace records the residual's leading exponent after each step, strictly
    falling until the residual vanishes or k steps pass.
    """
    if p.degree % 2 == 0:
        raise EvenDegree(f"degree {p.degree} is even")
    if p.coefficients[0].is_zero:
        raise ZeroLeadingCoefficient("leading coefficient is zero")
    if p.is_rational:
        return _rational_root_search([c.as_fraction for c in p.coefficients], k)
    if p.coefficients[-1].is_zero:
        return Root(ZERO, ZERO)
    x = _newton_polygon_leader(p)
    if x is None:
        raise IrrationalLeadingRoot("no balanced leader exists")
    dp = p.derivative()
    trace = []
    residual = poly_eval(p, x)
    for _ in range(k):
        if residual.is_zero:
            break
        step = residual * nf_inverse(poly_eval(dp, x), k).value
        if len(step.terms) > k + 1:
            step = NormalForm(step.terms[: k + 1])
        nxt = x - step
        nxt_residual = poly_eval(p, nxt)
        if not nxt_residual.is_zero and not residual.is_zero:
            if not nxt_residual.leading_exp < residual.leading_exp:
                break
        x, residual = nxt, nxt_residual
        trace.append(None if residual.is_zero else residual.leading_exp)
    return Root(x, residual, trace=trace)
