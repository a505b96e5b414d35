"""Ordinal arithmetic below epsilon_0 in Cantor normal form.

An ordinal is a finite descending sum w^(e_1)*c_1 + ... + w^(e_k)*c_k with
ordinal exponents e_i and positive integer coefficients c_i. The
representation is unique, so equality is structural. ord_add, ord_mul and
ord_pow are the standard non-commutative operations; nat_add and nat_mul are
the commutative natural (Hessenberg) operations used for birthday bounds.
"""

from __future__ import annotations


class Ord:
    """An ordinal below epsilon_0 as a tuple of (exponent, coefficient) terms."""

    __slots__ = ("terms", "_hash")

    def __init__(self, terms=()):
        terms = tuple((e, int(c)) for e, c in terms)
        prev = None
        for e, c in terms:
            if not isinstance(e, Ord):
                raise TypeError("exponents must be Ord values")
            if c < 1:
                raise ValueError("coefficients must be positive integers")
            if prev is not None and prev._cmp(e) <= 0:
                raise ValueError("exponents must strictly decrease")
            prev = e
        self.terms = terms
        self._hash = None

    @classmethod
    def from_int(cls, n):
        if n < 0:
            raise ValueError("ordinals are non-negative")
        if n == 0:
            return ZERO
        return cls(((ZERO, n),))

    @property
    def is_zero(self):
        return not self.terms

    @property
    def is_finite(self):
        return not self.terms or (len(self.terms) == 1 and self.terms[0][0].is_zero)

    @property
    def is_limit(self):
        return bool(self.terms) and not self.terms[-1][0].is_zero

    @property
    def leading_exp(self):
        return self.terms[0][0]

    def finite_part(self):
        """The coefficient of w^0, i.e. the finite tail."""
        if self.terms and self.terms[-1][0].is_zero:
            return self.terms[-1][1]
        return 0

    def limit_part(self):
        """Terms with nonzero exponent; zero or a limit ordinal."""
        if self.terms and self.terms[-1][0].is_zero:
            return Ord(self.terms[:-1])
        return self

    def __int__(self):
        if not self.is_finite:
            raise ValueError(f"{self} is not finite")
        return self.terms[0][1] if self.terms else 0

    def _cmp(self, other):
        for (ea, ca), (eb, cb) in zip(self.terms, other.terms):
            k = ea._cmp(eb)
            if k:
                return k
            if ca != cb:
                return -1 if ca < cb else 1
        if len(self.terms) != len(other.terms):
            return -1 if len(self.terms) < len(other.terms) else 1
        return 0

    def __eq__(self, other):
        if not isinstance(other, Ord):
            return NotImplemented
        return self.terms == other.terms

    def __lt__(self, other):
        return self._cmp(_coerce(other)) < 0

    def __le__(self, other):
        return self._cmp(_coerce(other)) <= 0

    def __gt__(self, other):
        return self._cmp(_coerce(other)) > 0

    def __ge__(self, other):
        return self._cmp(_coerce(other)) >= 0

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.terms)
        return self._hash

    def __add__(self, other):
        return ord_add(self, _coerce(other))

    def __radd__(self, other):
        return ord_add(_coerce(other), self)

    def __mul__(self, other):
        return ord_mul(self, _coerce(other))

    def __rmul__(self, other):
        return ord_mul(_coerce(other), self)

    def __pow__(self, other):
        return ord_pow(self, _coerce(other))

    def __rpow__(self, other):
        return ord_pow(_coerce(other), self)

    def __str__(self):
        if not self.terms:
            return "0"
        return " + ".join(_render_term(e, c) for e, c in self.terms)

    __repr__ = __str__


def _render_term(e, c):
    if e.is_zero:
        return str(c)
    if e == ONE:
        return "w" if c == 1 else f"w*{c}"
    return f"w^({e})*{c}"


def _coerce(x):
    if isinstance(x, Ord):
        return x
    if isinstance(x, int):
        return Ord.from_int(x)
    raise TypeError(f"cannot treat {x!r} as an ordinal")


ZERO = Ord()
ONE = Ord(((ZERO, 1),))
OMEGA = Ord(((ONE, 1),))


def omega_to(e, c=1):
    """The ordinal w^e * c."""
    return Ord(((_coerce(e), c),))


def ord_cmp(a, b):
    """Compare two ordinals: 'less', 'equal' or 'greater'."""
    k = _coerce(a)._cmp(_coerce(b))
    return "less" if k < 0 else "greater" if k > 0 else "equal"


def ord_add(a, b):
    a, b = _coerce(a), _coerce(b)
    if b.is_zero:
        return a
    if a.is_zero:
        return b
    e0 = b.terms[0][0]
    keep = tuple(t for t in a.terms if t[0]._cmp(e0) > 0)
    head = b.terms[0]
    for e, c in a.terms:
        if e == e0:
            head = (e0, c + head[1])
            break
    return Ord(keep + (head,) + b.terms[1:])


def ord_mul(a, b):
    a, b = _coerce(a), _coerce(b)
    if a.is_zero or b.is_zero:
        return ZERO
    e1, c1 = a.terms[0]
    out = ZERO
    for f, d in b.terms:
        if f.is_zero:
            piece = Ord(((e1, c1 * d),) + a.terms[1:])
        else:
            piece = Ord(((ord_add(e1, f), d),))
        out = ord_add(out, piece)
    return out


def _left_sub_one(e):
    """The e' with 1 + e' = e, for e >= 1. Finite e decrement, infinite e unchanged."""
    if e.is_finite:
        return Ord.from_int(int(e) - 1)
    return e


def ord_pow(a, b):
    a, b = _coerce(a), _coerce(b)
    if b.is_zero:
        return ONE
    if a.is_zero:
        return ZERO
    if a == ONE:
        return ONE
    if a.is_finite and b.is_finite:
        return Ord.from_int(int(a) ** int(b))
    if a.is_finite:
        # n^(w^e * c + ...) = w^(w^(e') * c + ...) * n^m with 1 + e' = e.
        n = int(a)
        exp = ZERO
        for e, c in b.terms:
            if not e.is_zero:
                exp = ord_add(exp, omega_to(_left_sub_one(e), c))
        return ord_mul(omega_to(exp), Ord.from_int(n ** b.finite_part()))
    lim = b.limit_part()
    head = omega_to(ord_mul(a.leading_exp, lim)) if not lim.is_zero else ONE
    return ord_mul(head, _pow_finite(a, b.finite_part()))


def _pow_finite(a, m):
    out = ONE
    acc = a
    while m:
        if m & 1:
            out = ord_mul(out, acc)
        acc = ord_mul(acc, acc)
        m >>= 1
    return out


def nat_add(a, b):
    """Natural (Hessenberg) sum: merge terms, adding equal-exponent coefficients."""
    a, b = _coerce(a), _coerce(b)
    merged = {}
    for e, c in a.terms + b.terms:
        merged[e] = merged.get(e, 0) + c
    return Ord(sorted(merged.items(), key=lambda t: _SortKey(t[0]), reverse=True))


def nat_mul(a, b):
    """Natural product: termwise, with natural sums of exponents."""
    a, b = _coerce(a), _coerce(b)
    merged = {}
    for e, c in a.terms:
        for f, d in b.terms:
            g = nat_add(e, f)
            merged[g] = merged.get(g, 0) + c * d
    return Ord(sorted(merged.items(), key=lambda t: _SortKey(t[0]), reverse=True))


class _SortKey:
    __slots__ = ("o",)

    def __init__(self, o):
        self.o = o

    def __lt__(self, other):
        return self.o._cmp(other.o) < 0


def is_main_ordinal(z):
    """Whether z = w^(w^mu); returns (True, mu) or (False, None)."""
    z = _coerce(z)
    if len(z.terms) == 1 and z.terms[0][1] == 1:
        e = z.terms[0][0]
        if len(e.terms) == 1 and e.terms[0][1] == 1:
            return True, e.terms[0][0]
    return False, None


def is_epsilon_number(z):
    """Whether w^z = z. Constantly false below epsilon_0."""
    z = _coerce(z)
    return ord_pow(OMEGA, z) == z
