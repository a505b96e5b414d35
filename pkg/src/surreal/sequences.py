"""Ordinal-indexed sequences as symbolic generators.

A sequence of type zeta has class-many entries, so nothing here stores
values: a generator is a closed form (constant, a + c/index, geometric
partial sum, eventually-constant, identity, or a pointwise combination)
and every decider reasons about tails symbolically. Sampling is never
used to verify anything, only closed forms are trusted.

zeta may also be the symbolic class token OMEGA_TOKEN standing for the
order type of all ordinals; in that mode limits are never certified in
the field and verified-Cauchy sections are reported as first-kind gaps.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import (
    IndexOutOfRange,
    NoLowerBound,
    NotCauchy,
    NotMainOrdinal,
    PreconditionViolated,
    UndecidableKind,
    UnsupportedExpression,
)
from .normalform import (
    ONE,
    ZERO,
    NormalForm,
    Polynomial,
    is_main_ordinal,
    nf_cmp,
    nf_inverse,
    ord_to_nf,
    poly_eval,
)
from .ordinals import OMEGA as ORD_OMEGA
from .ordinals import Ord


class _OmegaToken:
    """Stands for the order type of the class of all ordinals."""

    __slots__ = ()

    def __str__(self):
        return "Omega"

    __repr__ = __str__


OMEGA_TOKEN = _OmegaToken()


def _nf(x):
    if isinstance(x, NormalForm):
        return x
    return NormalForm.from_rational(Fraction(x))


def _check_zeta(zeta):
    if isinstance(zeta, _OmegaToken):
        return zeta
    if isinstance(zeta, int):
        zeta = Ord.from_int(zeta)
    ok, _ = is_main_ordinal(zeta)
    if not ok:
        raise NotMainOrdinal(f"{zeta} is not a main ordinal")
    return zeta


class SequenceGen:
    """One symbolic generator; build through the module constructors."""

    __slots__ = (
        "kind",
        "zeta",
        "value",
        "early",
        "switch",
        "a",
        "c",
        "base",
        "op",
        "left",
        "right",
        "r_bound",
    )

    def __init__(self, kind, zeta, **fields):
        self.kind = kind
        self.zeta = zeta
        for name in self.__slots__[2:]:
            setattr(self, name, fields.get(name))

    def __str__(self):
        if self.kind == "constant":
            body = f"constant {self.value}"
        elif self.kind == "recip":
            body = f"{self.a} + ({self.c})/a"
        elif self.kind == "geosum":
            body = f"sum of ({self.base})^b for b < a"
        elif self.kind == "evconst":
            body = f"{self.early} until {self.switch}, then {self.value}"
        elif self.kind == "ident":
            body = "a"
        else:
            body = f"({self.left}) {self.op} ({self.right})"
        return f"<seq {body} | zeta={self.zeta}>"

    __repr__ = __str__


def constant(value, zeta=ORD_OMEGA):
    return SequenceGen("constant", _check_zeta(zeta), value=_nf(value))


def recip(a=0, c=1, zeta=ORD_OMEGA):
    """x_alpha = a + c/alpha."""
    return SequenceGen("recip", _check_zeta(zeta), a=_nf(a), c=Fraction(c))


def geosum(base, zeta=ORD_OMEGA):
    """Partial sums of the geometric series: x_alpha = sum of base^beta
    for beta < alpha. The base is a rational or a monomial normal form."""
    if isinstance(base, NormalForm) and not base.is_constant:
        if len(base.terms) != 1:
            raise ValueError("geometric base must be rational or a monomial")
    else:
        base = Fraction(base.as_fraction if isinstance(base, NormalForm) else base)
    return SequenceGen("geosum", _check_zeta(zeta), base=base)


def evconst(switch, value, early=0, zeta=ORD_OMEGA):
    """Eventually constant: early below the switch ordinal, value from it on.
    This is also the reindexing device that pads a shorter sequence out to
    type zeta."""
    if isinstance(switch, int):
        switch = Ord.from_int(switch)
    return SequenceGen(
        "evconst", _check_zeta(zeta), switch=switch, value=_nf(value), early=_nf(early)
    )


def ident(zeta=ORD_OMEGA):
    """x_alpha = alpha."""
    return SequenceGen("ident", _check_zeta(zeta))


def _exact_recip(x):
    """1/x when x has finite support closed under inversion: a nonzero
    rational or a single monomial. None otherwise."""
    if x.is_zero:
        return None
    if x.is_constant:
        return NormalForm.from_rational(1 / x.as_fraction)
    if len(x.terms) == 1:
        e, c = x.terms[0]
        return NormalForm(((-e, 1 / c),))
    return None


def eval_seq(s, alpha):
    """The generator's value at index alpha (0 < alpha < zeta)."""
    if isinstance(alpha, int):
        alpha = Ord.from_int(alpha)
    if alpha.is_zero:
        raise IndexOutOfRange("indices start at 1")
    if not isinstance(s.zeta, _OmegaToken) and not alpha < s.zeta:
        raise IndexOutOfRange(f"{alpha} is not below zeta = {s.zeta}")
    if s.kind == "constant":
        return s.value
    if s.kind == "recip":
        if alpha.is_finite:
            return s.a + _nf(s.c / int(alpha))
        if len(alpha.terms) == 1:
            e, m = alpha.terms[0]
            return s.a + NormalForm(((-ord_to_nf(e), s.c / m),))
        raise IndexOutOfRange(
            f"{alpha} has no exact reciprocal: only finite and monomial indices"
        )
    if s.kind == "geosum":
        if not alpha.is_finite:
            raise IndexOutOfRange("partial sums evaluate at finite indices only")
        n = int(alpha)
        if isinstance(s.base, Fraction):
            acc, p = Fraction(0), Fraction(1)
            for _ in range(n):
                acc += p
                p *= s.base
            return _nf(acc)
        acc, p = ZERO, ONE
        for _ in range(n):
            acc = acc + p
            p = p * s.base
        return acc
    if s.kind == "evconst":
        return s.value if alpha >= s.switch else s.early
    if s.kind == "ident":
        return ord_to_nf(alpha)
    l = eval_seq(s.left, alpha)
    r = eval_seq(s.right, alpha)
    if s.op == "add":
        return l + r
    if s.op == "mul":
        return l * r
    rec = _exact_recip(r)
    if rec is None:
        rec = nf_inverse(r, 8).value
    return l * rec


def _base_is_small(base):
    """|base| < 1: the geometric sums settle."""
    if isinstance(base, Fraction):
        return abs(base) < 1
    e, c = base.terms[0]
    return e < ZERO


def _limit_core(s):
    """("value", nf) | ("no-limit-in-field", None) | ("undecided", None)."""
    if s.kind == "constant":
        return ("value", s.value)
    if s.kind == "evconst":
        return ("value", s.value)
    if s.kind == "recip":
        return ("value", s.a)
    if s.kind == "ident":
        return ("no-limit-in-field", None)
    if s.kind == "geosum":
        if isinstance(s.base, Fraction) and abs(s.base) < 1:
            return ("value", _nf(1 / (1 - s.base)))
        return ("no-limit-in-field", None)
    lstat, l = _limit_core(s.left)
    rstat, r = _limit_core(s.right)
    if lstat == "value" and rstat == "value":
        if s.op == "add":
            return ("value", l + r)
        if s.op == "mul":
            return ("value", l * r)
        rec = _exact_recip(r)
        if rec is None:
            return ("undecided", None)
        return ("value", l * rec)
    if _great(s):
        return ("no-limit-in-field", None)
    return ("undecided", None)


def limit(s):
    """Exact limit when one exists in the field. Under the class token no
    limit is ever certified: every sequence reports no-limit-in-field and
    its section is read as a gap."""
    if isinstance(s.zeta, _OmegaToken):
        return ("no-limit-in-field", None)
    return _limit_core(s)


def _bounded(s):
    """True / False / None: |x_alpha| stays below some field element."""
    if s.kind in ("constant", "recip", "evconst"):
        return True
    if s.kind == "ident":
        return False
    if s.kind == "geosum":
        if _base_is_small(s.base):
            return True
        return isinstance(s.base, Fraction) and s.base == -1
    lb, rb = _bounded(s.left), _bounded(s.right)
    if s.op in ("add", "mul"):
        if lb and rb:
            return True
        if s.op == "add" and (lb is False) != (rb is False) and (lb or rb):
            return False
        return None
    if lb and s.r_bound is not None:
        return True
    return None


def _nonvanishing(s):
    """True when |x_alpha| is eventually nonzero; None when unknown."""
    if s.kind == "constant":
        return True if not s.value.is_zero else False
    if s.kind == "evconst":
        return True if not s.value.is_zero else False
    if s.kind == "recip":
        if s.a.is_zero:
            return True if s.c != 0 else False
        if not s.a.is_constant:
            return True
        hit = -s.c / s.a.as_fraction
        return not (hit.denominator == 1 and hit > 0)
    if s.kind == "ident":
        return True
    if s.kind == "geosum":
        if isinstance(s.base, Fraction):
            return True if s.base >= 0 else None
        return True if s.base.terms[0][1] > 0 else None
    return None


def _inf(s):
    """Infinitesimal sequence: True / False / None."""
    if s.kind == "constant":
        return s.value.is_zero
    if s.kind == "evconst":
        return s.value.is_zero
    if s.kind == "recip":
        return s.a.is_zero
    if s.kind == "ident":
        return False
    if s.kind == "geosum":
        return False
    li, ri = _inf(s.left), _inf(s.right)
    if s.op == "add":
        if li and ri:
            return True
        lstat, l = _limit_core(s.left)
        rstat, r = _limit_core(s.right)
        if lstat == "value" and rstat == "value":
            return (l + r).is_zero
        return None
    if s.op == "mul":
        if (li and _bounded(s.right)) or (ri and _bounded(s.left)):
            return True
        lstat, l = _limit_core(s.left)
        rstat, r = _limit_core(s.right)
        if lstat == "value" and rstat == "value":
            return (l * r).is_zero
        return None
    if li and s.r_bound is not None:
        return True
    if _bounded(s.left) and _great(s.right):
        return True
    return None


def _great(s):
    """Infinitely great sequence: True / False / None."""
    if s.kind in ("constant", "recip", "evconst"):
        return False
    if s.kind == "ident":
        return True
    if s.kind == "geosum":
        if _base_is_small(s.base):
            return False
        if isinstance(s.base, Fraction):
            return s.base == 1 or abs(s.base) > 1
        return True
    lg, rg = _great(s.left), _great(s.right)
    if s.op == "add":
        if lg and _bounded(s.right):
            return True
        if rg and _bounded(s.left):
            return True
        if _bounded(s.left) and _bounded(s.right):
            return False
        return None
    if s.op == "mul":
        if lg and rg:
            return True
        for g, other in ((lg, s.right), (rg, s.left)):
            if g:
                stat, v = _limit_core(other)
                if stat == "value" and not v.is_zero:
                    return True
        if _bounded(s.left) and _bounded(s.right):
            return False
        return None
    lstat, l = _limit_core(s.left)
    if lstat == "value" and not l.is_zero and _inf(s.right) and _nonvanishing(s.right):
        return True
    if lg and _bounded(s.right) and s.r_bound is not None:
        return True
    if _bounded(s.left) and s.r_bound is not None:
        return False
    return None


def is_infinitesimal_seq(s):
    got = _inf(s)
    if got is None:
        raise UndecidableKind(f"{s} is outside the decision fragment")
    return got


def is_infinitely_great_seq(s):
    got = _great(s)
    if got is None:
        raise UndecidableKind(f"{s} is outside the decision fragment")
    return got


def _check_probes(probes):
    for p in probes:
        if not isinstance(p, NormalForm) or nf_cmp(p, ZERO) != "greater":
            raise PreconditionViolated(f"probe {p} is not a positive value")


def is_cauchy(s, probes=()):
    """("verified", None) | ("refuted", (eps, a1, a2)) | ("undecided", None).

    Verification is symbolic per kind; a refutation names an eps and an
    adjacent index pair whose gap never shrinks below it. Anything outside
    the closed-form fragment stays undecided: sampling never verifies.
    """
    _check_probes(probes)
    if s.kind in ("constant", "evconst", "recip"):
        return ("verified", None)
    if s.kind == "geosum":
        if _base_is_small(s.base):
            return ("verified", None)
        return ("refuted", (ONE, Ord.from_int(1), Ord.from_int(2)))
    if s.kind == "ident":
        return ("refuted", (ONE, Ord.from_int(1), Ord.from_int(2)))
    lstat = is_cauchy(s.left)[0]
    rstat = is_cauchy(s.right)[0]
    if lstat == "verified" and rstat == "verified":
        if s.op != "div" or s.r_bound is not None:
            return ("verified", None)
    return ("undecided", None)


def seq_equivalent(s1, s2, probes=()):
    """Difference-is-infinitesimal, decided through limits and the
    infinitesimal fragment."""
    _check_probes(probes)
    if not _same_zeta(s1, s2):
        raise PreconditionViolated("sequences of different type")
    l1, v1 = _limit_core(s1)
    l2, v2 = _limit_core(s2)
    if l1 == "value" and l2 == "value":
        d = v1 - v2
        if d.is_zero:
            return ("verified", None)
        eps = d.scale(Fraction(1, 2)) if nf_cmp(d, ZERO) == "greater" else d.scale(
            Fraction(-1, 2)
        )
        return ("refuted", eps)
    diff = SequenceGen(
        "combine",
        s1.zeta,
        op="add",
        left=s1,
        right=SequenceGen(
            "combine", s1.zeta, op="mul", left=constant(-1, s1.zeta), right=s2
        ),
    )
    got = _inf(diff)
    if got is True:
        return ("verified", None)
    if got is False:
        return ("refuted", ONE)
    return ("undecided", None)


def _same_zeta(s1, s2):
    if isinstance(s1.zeta, _OmegaToken) or isinstance(s2.zeta, _OmegaToken):
        return isinstance(s1.zeta, _OmegaToken) and isinstance(s2.zeta, _OmegaToken)
    return s1.zeta == s2.zeta


def seq_combine(op, s1, s2, r=None):
    """Pointwise sum, product, or quotient. A quotient needs a certified
    positive lower bound r on the denominator's tail."""
    if op not in ("add", "mul", "div"):
        raise ValueError(f"unknown op {op!r}")
    if not _same_zeta(s1, s2):
        raise PreconditionViolated("sequences of different type")
    if op == "div":
        if r is None:
            # Without a bound the quotient is only admitted through
            # reciprocal duality: a nonvanishing infinitesimal or great
            # denominator flips magnitude, though fundamentality is then
            # not claimed for the quotient.
            if _nonvanishing(s2) and (_inf(s2) is True or _great(s2) is True):
                return SequenceGen(
                    "combine", s1.zeta, op=op, left=s1, right=s2, r_bound=None
                )
            raise NoLowerBound("a positive lower bound on the denominator is needed")
        r = _nf(r)
        if nf_cmp(r, ZERO) != "greater":
            raise NoLowerBound("the lower bound must be positive")
        stat, v = _limit_core(s2)
        ok = False
        if stat == "value":
            mag = v if nf_cmp(v, ZERO) != "less" else -v
            ok = nf_cmp(mag, r) != "less"
        if not ok and _great(s2) is True:
            ok = True
        if not ok:
            raise NoLowerBound(f"cannot certify |denominator| >= {r}")
    return SequenceGen("combine", s1.zeta, op=op, left=s1, right=s2, r_bound=r)


class SectionResult:
    """Probe classification plus the verdict of the section construction."""

    __slots__ = ("lower", "upper", "verdict", "value")

    def __init__(self, lower, upper, verdict, value=None):
        self.lower = tuple(lower)
        self.upper = tuple(upper)
        self.verdict = verdict
        self.value = value

    def __str__(self):
        tail = f" {self.value}" if self.value is not None else ""
        return f"<section {self.verdict}{tail}>"

    __repr__ = __str__


def _approach_dir(s):
    """Eventual sign of x_alpha - limit: -1 below, 1 above, 0 at or mixed."""
    if s.kind in ("constant", "evconst"):
        return 0
    if s.kind == "recip":
        return 1 if s.c > 0 else (-1 if s.c < 0 else 0)
    if s.kind == "geosum" and isinstance(s.base, Fraction):
        if 0 < s.base < 1:
            return -1
        if s.base == 0:
            return 0
    return 0


def _classify_by_value(probes, v, direction):
    lower, upper = [], []
    for p in probes:
        c = nf_cmp(p, v)
        if c == "less":
            lower.append(p)
        elif c == "greater":
            upper.append(p)
        elif direction > 0:
            lower.append(p)
        else:
            upper.append(p)
    return lower, upper


def _classify_monomial_sums(s, probes):
    """Tail comparison against increasing partial sums with an exact
    remainder bound: remainder past n is below 2*base^n."""
    lower, upper = [], []
    for p in probes:
        placed = False
        for n in range(1, len(p.terms) + 5):
            sn = eval_seq(s, n)
            if nf_cmp(p, sn) == "less":
                lower.append(p)
                placed = True
                break
            bound = sn + (s.base ** n).scale(2)
            if nf_cmp(p, bound) != "less":
                upper.append(p)
                placed = True
                break
        if not placed:
            raise UndecidableKind(f"probe {p} resists tail comparison")
    return lower, upper


def dedekind_section(s, probes=()):
    """Classify probes below/above the tail and name the section.

    A sequence with an in-field limit yields number-with-extremum at that
    limit. Increasing monomial partial sums with no finite-support limit
    yield irrational-section. Under the class token every verified sequence
    is reported as a first-kind gap.
    """
    probes = tuple(probes)
    if isinstance(s.zeta, _OmegaToken):
        # Class-length sequences induce proper-class sections: every one is
        # read as a first-kind gap, and the Cauchy gate does not apply (the
        # identity sequence names the gap past all ordinals).
        stat, v = _limit_core(s)
        if stat == "value":
            lower, upper = _classify_by_value(probes, v, _approach_dir(s))
        elif s.kind == "ident":
            lower, upper = probes, ()
        else:
            lower, upper = (), ()
        return SectionResult(lower, upper, "gap-first-kind")
    if is_cauchy(s)[0] != "verified":
        raise NotCauchy(f"{s} is not a verified Cauchy sequence")
    stat, v = _limit_core(s)
    if stat == "value":
        lower, upper = _classify_by_value(probes, v, _approach_dir(s))
        return SectionResult(lower, upper, "number-with-extremum", v)
    if stat == "no-limit-in-field":
        if s.kind == "geosum" and not isinstance(s.base, Fraction):
            e, c = s.base.terms[0]
            if c > 0:
                lower, upper = _classify_monomial_sums(s, probes)
                return SectionResult(lower, upper, "irrational-section")
        return SectionResult((), (), "undecided")
    return SectionResult((), (), "undecided")


class StepFn:
    """Piecewise-constant probe map: below under the threshold, at_or_above
    from it on."""

    __slots__ = ("threshold", "below", "at_or_above")

    def __init__(self, threshold, below, at_or_above):
        self.threshold = _nf(threshold)
        self.below = _nf(below)
        self.at_or_above = _nf(at_or_above)


def _apply_fn(f, x):
    if isinstance(f, Polynomial):
        return poly_eval(f, x)
    if isinstance(f, StepFn):
        return f.below if nf_cmp(x, f.threshold) == "less" else f.at_or_above
    raise UnsupportedExpression(f"cannot apply {f!r}")


def _poly_compose_limit(f, s):
    """Limit of f(x_alpha) through limit arithmetic on the composite
    generator, not by assuming continuity."""
    acc = constant(0, s.zeta)
    power = constant(1, s.zeta)
    coeffs = list(f.coefficients)
    for c in reversed(coeffs):
        if not c.is_zero:
            term = SequenceGen(
                "combine", s.zeta, op="mul", left=constant(c, s.zeta), right=power
            )
            acc = SequenceGen("combine", s.zeta, op="add", left=acc, right=term)
        power = SequenceGen("combine", s.zeta, op="mul", left=power, right=s)
    return _limit_core(acc)


def check_continuity(f, x0, seqs):
    """Push each generator through f and compare limits with f(x0)."""
    x0 = _nf(x0)
    if not isinstance(f, (Polynomial, StepFn)):
        raise UnsupportedExpression(f"cannot apply {f!r}")
    f0 = _apply_fn(f, x0)
    for i, s in enumerate(seqs):
        stat, v = _limit_core(s)
        if stat != "value" or v != x0:
            raise PreconditionViolated(f"sequence {i} does not converge to {x0}")
        if isinstance(f, Polynomial):
            stat, fv = _poly_compose_limit(f, s)
            if stat != "value":
                raise UnsupportedExpression("composite limit is undecided")
        else:
            side = nf_cmp(x0, f.threshold)
            if side == "less":
                fv = f.below
            elif side == "greater":
                fv = f.at_or_above
            else:
                fv = f.below if _approach_dir(s) < 0 else f.at_or_above
        if fv != f0:
            return ("violated", (i, fv, f0))
    return ("consistent", None)
