"""Finite game forms {L|R}, their order, arithmetic, and dyadic values.

A form is a pair of finite sets of earlier forms satisfying the number
condition (no left option >= any right option). Every form here has finite
birthday, so its value is a dyadic rational. The order and the arithmetic
are the structural recursions on options; simplify maps a form to its value,
the unique simplest number lying strictly between the option values.

The recursions are memoized; set_cache_enabled(False) clears the tables and
turns memoization off, with identical results either way. Addition and
multiplication identify their arguments with the canonical forms of their
values before recursing (the option formulas applied to raw intermediate
forms blow up exponentially); negation is literal, an involution on forms.
"""

from __future__ import annotations

from fractions import Fraction
from functools import cmp_to_key

from .errors import NonPositive, NotANumber
from .ordinals import Ord


class Dyadic:
    """num / 2**exp in lowest terms; num is odd unless exp is zero."""

    __slots__ = ("num", "exp")

    def __init__(self, num, exp=0):
        num = int(num)
        exp = int(exp)
        if exp < 0:
            raise ValueError("exponent must be non-negative")
        while exp > 0 and num % 2 == 0:
            num //= 2
            exp -= 1
        self.num = num
        self.exp = exp

    @classmethod
    def from_fraction(cls, q):
        q = Fraction(q)
        den = q.denominator
        if den & (den - 1):
            raise ValueError(f"{q} is not dyadic")
        return cls(q.numerator, den.bit_length() - 1)

    @property
    def as_fraction(self):
        return Fraction(self.num, 1 << self.exp)

    @property
    def is_integer(self):
        return self.exp == 0

    def __add__(self, other):
        return Dyadic.from_fraction(self.as_fraction + other.as_fraction)

    def __sub__(self, other):
        return Dyadic.from_fraction(self.as_fraction - other.as_fraction)

    def __mul__(self, other):
        return Dyadic.from_fraction(self.as_fraction * other.as_fraction)

    def __neg__(self):
        return Dyadic(-self.num, self.exp)

    def __eq__(self, other):
        if isinstance(other, Dyadic):
            return self.num == other.num and self.exp == other.exp
        return self.as_fraction == other

    def __lt__(self, other):
        other = other.as_fraction if isinstance(other, Dyadic) else other
        return self.as_fraction < other

    def __le__(self, other):
        other = other.as_fraction if isinstance(other, Dyadic) else other
        return self.as_fraction <= other

    def __gt__(self, other):
        return not self <= other

    def __ge__(self, other):
        return not self < other

    def __hash__(self):
        return hash(self.as_fraction)

    def __str__(self):
        if self.exp == 0:
            return str(self.num)
        return f"{self.num}/{1 << self.exp}"

    __repr__ = __str__


class Game:
    """An immutable form; build through make_number or from_dyadic only."""

    __slots__ = ("left", "right", "_hash", "_height")

    def __init__(self, left, right):
        self.left = left
        self.right = right
        self._hash = hash((left, right))
        self._height = None

    def __eq__(self, other):
        if not isinstance(other, Game):
            return NotImplemented
        return self is other or (self.left == other.left and self.right == other.right)

    def __hash__(self):
        return self._hash

    def __str__(self):
        ls = ", ".join(str(g) for g in self.left)
        rs = ", ".join(str(g) for g in self.right)
        return "{" + ls + " | " + rs + "}"

    __repr__ = __str__


_cache_on = True
_leq_memo = {}
_add_memo = {}
_neg_memo = {}
_mul_memo = {}
_simp_memo = {}


def set_cache_enabled(flag):
    """Toggle memoization; tables are cleared either way."""
    global _cache_on
    _cache_on = bool(flag)
    for table in (_leq_memo, _add_memo, _neg_memo, _mul_memo, _simp_memo):
        table.clear()


def leq(x, y):
    """x <= y: no left option of x is >= y, and no right option of y is <= x."""
    key = (x, y)
    hit = _leq_memo.get(key)
    if hit is not None:
        return hit
    out = not any(leq(y, xl) for xl in x.left) and not any(
        leq(yr, x) for yr in y.right
    )
    if _cache_on:
        _leq_memo[key] = out
    return out


def geq(x, y):
    return leq(y, x)


def eq(x, y):
    return leq(x, y) and leq(y, x)


def lt(x, y):
    return leq(x, y) and not leq(y, x)


def gt(x, y):
    return lt(y, x)


def _order_options(options):
    """Sort by value; collapse value-equal duplicates keeping the simplest."""
    options = list(options)
    options.sort(key=cmp_to_key(lambda a, b: -1 if lt(a, b) else (1 if lt(b, a) else 0)))
    out = []
    for g in options:
        if out and eq(out[-1], g):
            if (_height(g), str(g)) < (_height(out[-1]), str(out[-1])):
                out[-1] = g
        else:
            out.append(g)
    return tuple(out)


def make_number(left, right):
    """Build {left | right}, raising NotANumber unless every l < every r."""
    left = _order_options(left)
    right = _order_options(right)
    for l in left:
        for r in right:
            if leq(r, l):
                raise NotANumber(f"left option {l} >= right option {r}")
    return Game(left, right)


ZERO = make_number((), ())


def game_neg(x):
    hit = _neg_memo.get(x)
    if hit is not None:
        return hit
    out = make_number(
        tuple(game_neg(r) for r in x.right), tuple(game_neg(l) for l in x.left)
    )
    if _cache_on:
        _neg_memo[x] = out
    return out


def game_add(x, y):
    """Sum per the option formula, computed on canonical representatives.

    Arguments are first identified with the canonical forms of their values;
    otherwise the recursion tree over structurally distinct intermediates is
    exponential in the value heights.
    """
    key = (simplify(x), simplify(y))
    hit = _add_memo.get(key)
    if hit is not None:
        return hit
    x, y = from_dyadic(key[0]), from_dyadic(key[1])
    left = [game_add(xl, y) for xl in x.left] + [game_add(x, yl) for yl in y.left]
    right = [game_add(xr, y) for xr in x.right] + [game_add(x, yr) for yr in y.right]
    out = make_number(left, right)
    if _cache_on:
        _add_memo[key] = out
    return out


def game_mul(x, y):
    """Product per the option formula, computed on canonical representatives."""
    key = (simplify(x), simplify(y))
    hit = _mul_memo.get(key)
    if hit is not None:
        return hit
    x, y = from_dyadic(key[0]), from_dyadic(key[1])

    def part(a, b):
        # x*b + a*y - a*b, the common shape of all four option families
        s = game_add(game_mul(a, y), game_mul(x, b))
        return game_add(s, game_neg(game_mul(a, b)))

    left = [part(xl, yl) for xl in x.left for yl in y.left]
    left += [part(xr, yr) for xr in x.right for yr in y.right]
    right = [part(xl, yr) for xl in x.left for yr in y.right]
    right += [part(xr, yl) for xr in x.right for yl in y.left]
    out = make_number(left, right)
    if _cache_on:
        _mul_memo[key] = out
    return out


def _height(x):
    """Birthday of the form as a plain integer."""
    if x._height is None:
        x._height = 1 + max((_height(g) for g in x.left + x.right), default=-1)
    return x._height


def birthday(x):
    """Birthday of the form: (sup of option birthdays) + 1, empty form 0."""
    return Ord.from_int(_height(x))


def simplest_between(lo, hi):
    """The minimal-birthday dyadic strictly between lo and hi (None = open end)."""
    if lo is not None and hi is not None and lo >= hi:
        raise ValueError("empty interval")
    if lo is None and hi is None:
        return Dyadic(0)
    if lo is None:
        if hi > 0:
            return Dyadic(0)
        fl = hi.__floor__()
        return Dyadic(fl if fl < hi else fl - 1)
    if hi is None:
        if lo < 0:
            return Dyadic(0)
        return Dyadic(lo.__floor__() + 1)
    if lo < 0 < hi:
        return Dyadic(0)
    if hi <= 0:
        return -simplest_between(-hi, -lo)
    n = lo.__floor__() + 1
    if n < hi:
        return Dyadic(n)
    # no integer inside: bisect the fractional parts
    base = lo.__floor__()
    lo2, hi2 = lo - base, hi - base
    k = 1
    while True:
        m = (lo2 * (1 << k)).__floor__() + 1
        cand = Fraction(m, 1 << k)
        if cand < hi2:
            return Dyadic(base * (1 << k) + m, k)
        k += 1


def simplify(x):
    """The dyadic value of the form."""
    hit = _simp_memo.get(x)
    if hit is not None:
        return hit
    lo = max((simplify(l).as_fraction for l in x.left), default=None)
    hi = min((simplify(r).as_fraction for r in x.right), default=None)
    out = simplest_between(lo, hi)
    if _cache_on:
        _simp_memo[x] = out
    return out


def from_dyadic(d):
    """The canonical (birthday-minimal) form of a dyadic value."""
    if not isinstance(d, Dyadic):
        d = Dyadic.from_fraction(d)
    if d.is_integer:
        if d.num == 0:
            return ZERO
        if d.num > 0:
            return make_number((from_dyadic(Dyadic(d.num - 1)),), ())
        return make_number((), (from_dyadic(Dyadic(d.num + 1)),))
    step = Fraction(1, 1 << d.exp)
    v = d.as_fraction
    return make_number((from_dyadic(v - step),), (from_dyadic(v + step),))


def enumerate_day(n):
    """All dyadic values with birthday <= n, in increasing order."""
    vals = [Fraction(0)]
    for day in range(n):
        nxt = [vals[0] - 1]
        for a, b in zip(vals, vals[1:]):
            nxt.append(a)
            nxt.append((a + b) / 2)
        nxt.append(vals[-1])
        nxt.append(vals[-1] + 1)
        vals = nxt
    return [Dyadic.from_fraction(v) for v in vals]


def reciprocal_enum(x, depth):
    """Options for 1/x generated from the self-referential recipe, cut off
    after `depth` rounds.

    Option values are exact rationals; a non-dyadic value is rounded outward
    (left down, right up) to granularity 2**-(2*depth+4) before the form is
    built, which preserves the number condition and the bracketing width.
    """
    if not lt(ZERO, x):
        raise NonPositive("reciprocal needs x > 0")
    xv = simplify(x).as_fraction
    xls = [simplify(g).as_fraction for g in x.left]
    xls = [v for v in xls if v > 0]
    xrs = [simplify(g).as_fraction for g in x.right]
    lo, hi = {Fraction(0)}, set()
    for _ in range(depth):
        new_lo, new_hi = set(), set()
        for yl in lo:
            for xr in xrs:
                new_lo.add((1 + (xr - xv) * yl) / xr)
            for xl in xls:
                new_hi.add((1 + (xl - xv) * yl) / xl)
        for yr in hi:
            for xl in xls:
                new_lo.add((1 + (xl - xv) * yr) / xl)
            for xr in xrs:
                new_hi.add((1 + (xr - xv) * yr) / xr)
        lo |= new_lo
        hi |= new_hi
    grain = 1 << (2 * depth + 4)

    def round_down(v):
        return Fraction((v * grain).__floor__(), grain)

    def round_up(v):
        return Fraction(-((-v * grain).__floor__()), grain)

    left = [from_dyadic(round_down(v)) for v in lo]
    right = [from_dyadic(round_up(v)) for v in hi]
    return make_number(left, right)
