"""Calculator front end: expression evaluation, REPL, and batch mode.

Values stay in their tier: game forms, normal forms, rational constants,
trig tokens, and the winding integer never convert into each other behind
the user's back. Rational literals are shared substrate (a dyadic literal
may be a game option, a rational is a constant normal form), but a game
form meeting w in arithmetic is an error, not a coercion. Commands like
:nf are the explicit conversions.

Angles for sin/cos are in turns. Truncated results render their
certificate as a trailing O(w^(e)) term using the session truncation
depth (:set trunc, --trunc).
"""

from __future__ import annotations

import argparse
import os
import sys
from fractions import Fraction

from . import explog, games, trig
from .errors import EngineError, EvalError, NotMainOrdinal, ParseError
from .normalform import (
    ONE,
    W,
    ZERO,
    NormalForm,
    Polynomial,
    birthday_nf,
    commensurate,
    in_field,
    is_main_ordinal,
    nf_cmp,
    nf_inverse,
    nf_nth_root,
    nf_to_ord,
    omega_pow,
)
from .ordinals import OMEGA as ORD_OMEGA
from .ordinals import Ord, omega_to
from .parse import _Parser, parse
from .sequences import (
    OMEGA_TOKEN,
    SequenceGen,
    constant,
    dedekind_section,
    evconst,
    eval_seq,
    geosum,
    ident,
    is_cauchy,
    limit,
    recip,
    seq_combine,
)
from .trig import ComplexNF, TrigExpr


class Val:
    """A tiered value: const (Fraction), nf, game, trig, poly, or int."""

    __slots__ = ("tier", "value", "order")

    def __init__(self, tier, value, order=None):
        self.tier = tier
        self.value = value
        self.order = order


class Session:
    def __init__(self, trunc=8, zeta=None, fmt="human", history=None):
        self.trunc = trunc
        self.zeta = zeta if zeta is not None else omega_to(ORD_OMEGA)
        self.fmt = fmt
        self.history = history
        self.history_ok = history is not None
        self.ans = None


def _err(span, exc):
    name = type(exc).__name__
    return EvalError(f"at {span[0]}-{span[1]}: {name}: {exc}")


def _as_nf(v, span):
    if v.tier == "nf":
        return v.value
    if v.tier == "const":
        return NormalForm.from_rational(v.value)
    raise EvalError(f"at {span[0]}-{span[1]}: expected a normal-form value, got {v.tier}")


def _as_game(v, span):
    if v.tier == "game":
        return v.value
    if v.tier == "const":
        try:
            return games.from_dyadic(v.value)
        except ValueError as e:
            raise _err(span, e) from e
    raise EvalError(f"at {span[0]}-{span[1]}: expected a game form, got {v.tier}")


def _max_order(*orders):
    live = [o for o in orders if o is not None]
    if not live:
        return None
    out = live[0]
    for o in live[1:]:
        if o > out:
            out = o
    return out


def _mul_order(l, r):
    """Defect bound for a product from the factors' bounds."""
    parts = []
    if l.order is not None and not _is_zero(r):
        parts.append(l.order + _lead(r))
    if r.order is not None and not _is_zero(l):
        parts.append(r.order + _lead(l))
    if l.order is not None and r.order is not None:
        parts.append(l.order + r.order)
    return _max_order(*parts)


def _is_zero(v):
    return v.tier in ("nf", "const") and _as_nf(v, (0, 0)).is_zero


def _lead(v):
    return _as_nf(v, (0, 0)).leading_exp


def _poly_coeffs(v, span):
    """Ascending coefficient list for the poly tier."""
    if v.tier == "poly":
        return v.value
    return [_as_nf(v, span)]


def _poly_trim(c):
    while len(c) > 1 and c[-1].is_zero:
        c.pop()
    return c


def _ev_poly(op, l, r, span):
    a = _poly_coeffs(l, span)
    b = _poly_coeffs(r, span)
    if op in "+-":
        n = max(len(a), len(b))
        out = []
        for i in range(n):
            x = a[i] if i < len(a) else ZERO
            y = b[i] if i < len(b) else ZERO
            out.append(x + y if op == "+" else x - y)
        return Val("poly", _poly_trim(out))
    if op == "*":
        out = [ZERO] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            for j, y in enumerate(b):
                out[i + j] = out[i + j] + x * y
        return Val("poly", _poly_trim(out))
    if op == "^":
        if r.tier != "const" or r.value.denominator != 1 or r.value < 0:
            raise EvalError(f"at {span[0]}-{span[1]}: polynomial powers take"
                            " non-negative integers")
        out = Val("poly", [ONE])
        for _ in range(int(r.value)):
            out = _ev_poly("*", out, Val("poly", a), span)
        return out
    raise EvalError(f"at {span[0]}-{span[1]}: {op!r} is not defined for polynomials")


def _ev_game(op, l, r, span):
    a = _as_game(l, span)
    b = _as_game(r, span)
    try:
        if op == "+":
            return Val("game", games.game_add(a, b))
        if op == "-":
            return Val("game", games.game_add(a, games.game_neg(b)))
        if op == "*":
            return Val("game", games.game_mul(a, b))
    except EngineError as e:
        raise _err(span, e) from e
    raise EvalError(f"at {span[0]}-{span[1]}: {op!r} is not defined for game forms")


def _ev_trig(op, l, r, span):
    def lift(v):
        if v.tier == "trig":
            return v.value
        return TrigExpr.lift(_as_nf(v, span))

    if op == "+":
        expr = lift(l) + lift(r)
    elif op == "-":
        expr = lift(l) - lift(r)
    elif op == "*":
        expr = lift(l) * lift(r)
    else:
        raise EvalError(f"at {span[0]}-{span[1]}: {op!r} is not defined for"
                        " trig tokens")
    order = _max_order(l.order, r.order)
    if expr.is_plain:
        return Val("nf", expr.plain(), order)
    return Val("trig", expr, order)


def _div_nf(l, r, span, cfg):
    num = _as_nf(l, span)
    den = _as_nf(r, span)
    if den.is_zero:
        raise EvalError(f"at {span[0]}-{span[1]}: division by zero")
    if num.is_zero:
        return Val("nf", ZERO)
    if l.tier == "const" and r.tier == "const":
        return Val("const", l.value / r.value)
    if den.is_constant:
        return Val("nf", num.scale(1 / den.as_fraction), l.order)
    if len(den.terms) == 1:
        e, c = den.terms[0]
        recip = NormalForm(((-e, 1 / c),))
        return Val("nf", num * recip, _max_order(
            l.order + -e if l.order is not None else None))
    inv = nf_inverse(den, cfg.trunc)
    order = _max_order(
        inv.order + num.leading_exp if inv.order is not None else None,
        l.order + -den.leading_exp if l.order is not None else None,
    )
    return Val("nf", num * inv.value, order)


def _pow_nf(l, r, span, cfg):
    base = _as_nf(l, span)
    if base == W:
        if r.order is not None:
            raise EvalError(f"at {span[0]}-{span[1]}: w^x needs an exact exponent")
        return Val("nf", omega_pow(_as_nf(r, span)))
    if r.tier == "const" and r.value.denominator == 1:
        n = int(r.value)
        if l.tier == "const":
            if l.value == 0 and n < 0:
                raise EvalError(f"at {span[0]}-{span[1]}: division by zero")
            return Val("const", l.value ** n)
        if base.is_zero:
            if n < 0:
                raise EvalError(f"at {span[0]}-{span[1]}: division by zero")
            return Val("nf", ONE if n == 0 else ZERO)
        if n >= 0:
            order = None
            if l.order is not None and n > 0:
                order = l.order + base.leading_exp.scale(n - 1)
            return Val("nf", base ** n, order)
        p = Val("nf", base ** (-n), None if l.order is None else l.order)
        return _div_nf(Val("const", Fraction(1)), p, span, cfg)
    if base.is_constant:
        try:
            got = explog.pow(base, _as_nf(r, span), cfg.trunc)
        except EngineError as e:
            raise _err(span, e) from e
        return Val("nf", got.value, got.order)
    raise EvalError(f"at {span[0]}-{span[1]}: unsupported power base")


def _ev_bin(op, l, r, span, cfg):
    if l.tier == "poly" or r.tier == "poly":
        return _ev_poly(op, l, r, span)
    if l.tier == "game" or r.tier == "game":
        return _ev_game(op, l, r, span)
    if l.tier == "trig" or r.tier == "trig":
        return _ev_trig(op, l, r, span)
    if l.tier == "int" or r.tier == "int":
        raise EvalError(f"at {span[0]}-{span[1]}: winding counts do not"
                        " join arithmetic")
    if op == "+" or op == "-":
        if l.tier == "const" and r.tier == "const":
            return Val("const", l.value + r.value if op == "+" else l.value - r.value)
        a, b = _as_nf(l, span), _as_nf(r, span)
        return Val("nf", a + b if op == "+" else a - b, _max_order(l.order, r.order))
    if op == "*":
        if l.tier == "const" and r.tier == "const":
            return Val("const", l.value * r.value)
        return Val("nf", _as_nf(l, span) * _as_nf(r, span), _mul_order(l, r))
    if op == "/":
        return _div_nf(l, r, span, cfg)
    return _pow_nf(l, r, span, cfg)


def _call(name, args, span, cfg):
    try:
        if name == "root":
            if len(args) != 2 or args[1].tier != "const":
                raise EvalError("root(x, n) takes a value and an integer")
            got = nf_nth_root(_as_nf(args[0], span), int(args[1].value), cfg.trunc)
            return Val("nf", got.value, got.order)
        if name == "exp":
            if len(args) != 2:
                raise EvalError("exp(a, x) takes a base and an exponent")
            got = explog.pow(_as_nf(args[0], span), _as_nf(args[1], span), cfg.trunc)
            return Val("nf", got.value, got.order)
        if name == "log":
            if len(args) != 2:
                raise EvalError("log(a, x) takes a base and an argument")
            got = explog.log(_as_nf(args[0], span), _as_nf(args[1], span), cfg.trunc)
            return Val("nf", got.value, got.order)
        if name in ("sin", "cos"):
            if len(args) != 1:
                raise EvalError(f"{name}(x) takes one argument")
            fn = trig.sin_ext if name == "sin" else trig.cos_ext
            got = fn(_as_nf(args[0], span), cfg.trunc)
            if isinstance(got.value, TrigExpr):
                return Val("trig", got.value, got.order)
            return Val("nf", got.value, got.order)
        if name == "winding":
            if len(args) != 3:
                raise EvalError("winding(P, radius, samples) takes three arguments")
            coeffs = list(reversed(_poly_coeffs(args[0], span)))
            radius = _as_nf(args[1], span)
            if not radius.is_constant:
                raise EvalError("the radius must be rational")
            if args[2].tier != "const" or args[2].value.denominator != 1:
                raise EvalError("the sample count must be an integer")
            got = trig.winding_degree(
                Polynomial(coeffs), radius.as_fraction, int(args[2].value)
            )
            return Val("int", got)
    except EvalError:
        raise
    except (EngineError, ValueError) as e:
        raise _err(span, e) from e
    raise EvalError(f"at {span[0]}-{span[1]}: unknown function {name}")


def evaluate(node, cfg):
    kind = node[0]
    span = node[1]
    if kind == "num":
        return Val("const", node[2])
    if kind == "w":
        return Val("nf", W)
    if kind == "omega":
        raise EvalError(
            f"at {span[0]}-{span[1]}: OMEGA is only a zeta parameter"
        )
    if kind == "z":
        return Val("poly", [ZERO, ONE])
    if kind == "ans":
        if cfg.ans is None:
            raise EvalError(f"at {span[0]}-{span[1]}: no previous value")
        return cfg.ans
    if kind == "neg":
        v = evaluate(node[2], cfg)
        if v.tier == "const":
            return Val("const", -v.value)
        if v.tier == "game":
            return Val("game", games.game_neg(v.value))
        if v.tier == "trig":
            return Val("trig", -v.value, v.order)
        if v.tier == "poly":
            return Val("poly", [-c for c in v.value])
        if v.tier == "int":
            raise EvalError(f"at {span[0]}-{span[1]}: winding counts do not"
                            " join arithmetic")
        return Val("nf", -v.value, v.order)
    if kind == "bin":
        l = evaluate(node[3], cfg)
        r = evaluate(node[4], cfg)
        return _ev_bin(node[2], l, r, span, cfg)
    if kind == "game":
        lo = tuple(_as_game(evaluate(x, cfg), x[1]) for x in node[2])
        hi = tuple(_as_game(evaluate(x, cfg), x[1]) for x in node[3])
        try:
            return Val("game", games.make_number(lo, hi))
        except EngineError as e:
            raise _err(span, e) from e
    if kind == "call":
        args = [evaluate(a, cfg) for a in node[3]]
        return _call(node[2], args, span, cfg)
    raise EvalError(f"at {span[0]}-{span[1]}: cannot evaluate {kind}")


def _render_trig(expr):
    """Trig values in re-parseable syntax (angles in turns)."""
    parts = []
    for (kind, q), coeff in sorted(
        expr.entries.items(), key=lambda kv: (kv[0][0] != "1", kv[0][1])
    ):
        if kind == "1":
            parts.append(str(coeff))
        else:
            name = "cos" if kind == "c" else "sin"
            parts.append(f"{name}({q})*({coeff})")
    return " + ".join(parts) if parts else "0"


def _render_poly(coeffs):
    parts = []
    for i in range(len(coeffs) - 1, -1, -1):
        c = coeffs[i]
        if c.is_zero and len(coeffs) > 1:
            continue
        if i == 0:
            parts.append(f"({c})")
        elif i == 1:
            parts.append(f"z*({c})")
        else:
            parts.append(f"z^{i}*({c})")
    return " + ".join(parts) if parts else "0"


def render_value(v):
    """(value text, residual text) for a tiered value."""
    res = "-" if v.order is None else f"O(w^({v.order}))"
    if v.tier == "game":
        return str(games.simplify(v.value).as_fraction), res
    if v.tier == "trig":
        return _render_trig(v.value), res
    if v.tier == "poly":
        return _render_poly(v.value), res
    return str(v.value), res


def _parse_two(text):
    p = _Parser(text)
    a = p.expr()
    b = p.expr()
    kind, val, at = p.peek()
    if kind != "end":
        raise ParseError(at, f"unexpected {val!r}")
    return a, b


def _seq_value(text, cfg):
    return evaluate(parse(text), cfg)


def _seq_nf(text, cfg):
    return _as_nf(_seq_value(text, cfg), (0, len(text)))


def parse_seq(spec, cfg):
    """The sequence mini-grammar: seq <kind> [key=value | value]..."""
    words = spec.split()
    if not words or words[0] != "seq":
        raise ParseError(0, "expected 'seq <kind> ...'")
    if len(words) < 2:
        raise ParseError(0, "expected a sequence kind after 'seq'")
    kind = words[1]
    kv = {}
    positional = []
    for word in words[2:]:
        if "=" in word:
            key, _, raw = word.partition("=")
            kv[key] = raw
        else:
            positional.append(word)
    zeta = cfg.zeta
    if kind in ("const", "constant"):
        raw = kv.get("value") or (positional[0] if positional else None)
        if raw is None:
            raise ParseError(0, "seq const needs a value")
        return constant(_seq_nf(raw, cfg), zeta)
    if kind == "recip":
        a = _seq_nf(kv.get("a", "0"), cfg)
        c_val = _seq_value(kv.get("c", "1"), cfg)
        if c_val.tier == "nf" and c_val.value.is_constant:
            c = c_val.value.as_fraction
        elif c_val.tier == "const":
            c = c_val.value
        else:
            raise ParseError(0, "seq recip needs a rational c")
        return recip(a, c, zeta)
    if kind == "geosum":
        raw = kv.get("base") or (positional[0] if positional else None)
        if raw is None:
            raise ParseError(0, "seq geosum needs base=...")
        base = _seq_value(raw, cfg)
        if base.tier not in ("const", "nf"):
            raise ParseError(0, "seq geosum needs a rational or monomial base")
        return geosum(base.value, zeta)
    if kind == "evconst":
        if "switch" not in kv or "value" not in kv:
            raise ParseError(0, "seq evconst needs switch=... value=...")
        switch = nf_to_ord(_seq_nf(kv["switch"], cfg))
        value = _seq_nf(kv["value"], cfg)
        early = _seq_nf(kv.get("early", "0"), cfg)
        return evconst(switch, value, early, zeta)
    if kind == "ident":
        return ident(zeta)
    raise ParseError(0, f"unknown sequence kind {kind!r}")


def _cmd_limit(rest, cfg):
    status, v = limit(parse_seq(rest, cfg))
    return ("seq", str(v) if status == "value" else status, "-")


def _cmd_cauchy(rest, cfg):
    status, witness = is_cauchy(parse_seq(rest, cfg))
    if status == "refuted":
        eps, a1, a2 = witness
        return ("seq", f"refuted eps={eps} at=({a1},{a2})", "-")
    return ("seq", status, "-")


def _cmd_section(rest, cfg):
    spec, _, probe_part = rest.partition(" probes ")
    probes = []
    if probe_part:
        for chunk in probe_part.split(","):
            probes.append(_seq_nf(chunk.strip(), cfg))
    got = dedekind_section(parse_seq(spec.strip(), cfg), probes)
    lower = ", ".join(str(p) for p in got.lower)
    upper = ", ".join(str(p) for p in got.upper)
    text = f"{got.verdict}"
    if got.value is not None:
        text += f" value={got.value}"
    text += f" lower=[{lower}] upper=[{upper}]"
    return ("seq", text, "-")


def _cmd_set(rest, cfg):
    words = rest.split(None, 1)
    if len(words) != 2:
        raise EvalError("usage: :set trunc <k> | :set zeta <expr>")
    key, raw = words
    if key == "trunc":
        try:
            k = int(raw)
        except ValueError:
            raise EvalError(f"trunc needs an integer, got {raw!r}") from None
        if k < 1:
            raise EvalError("trunc must be at least 1")
        cfg.trunc = k
        return ("config", f"trunc={k}", "-")
    if key == "zeta":
        cfg.zeta = _parse_zeta(raw, cfg)
        return ("config", f"zeta={cfg.zeta}", "-")
    raise EvalError(f"unknown setting {key!r}")


def _parse_zeta(raw, cfg):
    raw = raw.strip()
    if raw == "OMEGA":
        return OMEGA_TOKEN
    z = nf_to_ord(_seq_nf(raw, cfg))
    ok, _ = is_main_ordinal(z)
    if not ok:
        raise NotMainOrdinal(f"{z} is not a main ordinal")
    return z


def _cmd_birthday(rest, cfg):
    v = _seq_value(rest, cfg)
    if v.tier == "game":
        return ("ordinal", str(games.birthday(v.value)), "-")
    o, tag = birthday_nf(_as_nf(v, (0, len(rest))))
    return ("ordinal", f"{o} ({tag})", "-")


def _cmd_cmp(rest, cfg):
    na, nb = _parse_two(rest)
    a = evaluate(na, cfg)
    b = evaluate(nb, cfg)
    if a.tier == "game" or b.tier == "game":
        ga, gb = _as_game(a, na[1]), _as_game(b, nb[1])
        if games.eq(ga, gb):
            return ("game", "equal", "-")
        return ("game", "less" if games.lt(ga, gb) else "greater", "-")
    return ("nf", nf_cmp(_as_nf(a, na[1]), _as_nf(b, nb[1])), "-")


def _cmd_commensurate(rest, cfg):
    na, nb = _parse_two(rest)
    a = _as_nf(evaluate(na, cfg), na[1])
    b = _as_nf(evaluate(nb, cfg), nb[1])
    ok, n = commensurate(a, b)
    return ("nf", f"true n={n}" if ok else "false", "-")


def _cmd_infield(rest, cfg):
    x = _seq_nf(rest, cfg)
    if cfg.zeta is OMEGA_TOKEN:
        # every finite-support form is born before the class of ordinals
        return ("nf", "true", "-")
    return ("nf", "true" if in_field(x, cfg.zeta) else "false", "-")


def process_line(line, cfg):
    """One input line -> (tier, value text, residual text, exit code)."""
    line = line.strip()
    if line.startswith(":"):
        head, _, rest = line.partition(" ")
        rest = rest.strip()
        try:
            if head == ":quit":
                return ("config", "bye", "-", 0)
            if head == ":nf":
                v = _seq_value(rest, cfg)
                if v.tier == "game":
                    frac = games.simplify(v.value).as_fraction
                    v = Val("nf", NormalForm.from_rational(frac))
                elif v.tier == "const":
                    v = Val("nf", NormalForm.from_rational(v.value))
                elif v.tier == "trig":
                    v = Val("nf", v.value.plain(), v.order)
                elif v.tier == "int":
                    v = Val("nf", NormalForm.from_rational(Fraction(v.value)))
                cfg.ans = v
                text, res = render_value(v)
                return ("nf", text, res, 0)
            if head == ":birthday":
                return _cmd_birthday(rest, cfg) + (0,)
            if head == ":cmp":
                return _cmd_cmp(rest, cfg) + (0,)
            if head == ":commensurate":
                return _cmd_commensurate(rest, cfg) + (0,)
            if head == ":infield":
                return _cmd_infield(rest, cfg) + (0,)
            if head == ":limit":
                return _cmd_limit(rest, cfg) + (0,)
            if head == ":cauchy":
                return _cmd_cauchy(rest, cfg) + (0,)
            if head == ":section":
                return _cmd_section(rest, cfg) + (0,)
            if head == ":set":
                try:
                    return _cmd_set(rest, cfg) + (0,)
                except (EngineError, ValueError) as e:
                    return ("error", f"{type(e).__name__}: {e}", "-", 3)
            return ("error", f"unknown command {head}", "-", 2)
        except ParseError as e:
            return ("error", f"ParseError: {e}", "-", 2)
        except (EngineError, ValueError) as e:
            return ("error", f"{type(e).__name__}: {e}", "-", 1)
    try:
        v = evaluate(parse(line), cfg)
        cfg.ans = v
        text, res = render_value(v)
        return (v.tier, text, res, 0)
    except ParseError as e:
        return ("error", f"ParseError: {e}", "-", 2)
    except (EngineError, ValueError) as e:
        return ("error", f"{type(e).__name__}: {e}", "-", 1)


def render_line(line, tier, text, res, fmt):
    if fmt == "structured":
        return f"input={line}\tvalue={text}\tresidual={res}\ttier={tier}"
    if tier == "error":
        return f"error: {text}"
    if res != "-":
        return f"= {text} + {res}"
    return f"= {text}"


def _write_history(cfg, line):
    if not cfg.history_ok:
        return
    try:
        with open(cfg.history, "a", encoding="utf-8") as fh:
            fh.write(line + "\n")
    except OSError as e:
        print(f"history file {cfg.history}: {e}", file=sys.stderr)
        cfg.history_ok = False


def run_batch(path, cfg, out=None):
    out = out or sys.stdout
    try:
        with open(path, "r", encoding="utf-8") as fh:
            lines = fh.read().splitlines()
    except OSError as e:
        print(f"batch file {path}: {e}", file=sys.stderr)
        return 3
    code = 0
    for line in lines:
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        _write_history(cfg, line)
        tier, text, res, line_code = process_line(line, cfg)
        print(render_line(line.strip(), tier, text, res, cfg.fmt), file=out)
        if line_code and not code:
            code = line_code
        if line.strip() == ":quit":
            break
    return code


def repl(cfg):
    print("surreal calculator (:quit to leave)")
    while True:
        try:
            line = input("surreal> ")
        except EOFError:
            print()
            return 0
        if not line.strip():
            continue
        _write_history(cfg, line)
        tier, text, res, _ = process_line(line, cfg)
        print(render_line(line.strip(), tier, text, res, cfg.fmt))
        if line.strip() == ":quit":
            return 0


def build_parser():
    p = argparse.ArgumentParser(
        prog="surreal",
        description="Exact calculator for surreal-number normal forms."
        " Angles are in turns; OMEGA is the class token for zeta.",
    )
    p.add_argument("--trunc", type=int, default=8, help="series truncation depth")
    p.add_argument("--zeta", default="w^(w)", help="field parameter (or OMEGA)")
    p.add_argument("--format", choices=("human", "structured"), default="human")
    p.add_argument("--batch", help="evaluate lines from a file and exit")
    p.add_argument("--history", help="append inputs to this file")
    return p


def main(argv=None):
    args = build_parser().parse_args(argv)
    history = args.history
    if history is None and not args.batch:
        history = os.path.expanduser("~/.surreal_history")
    cfg = Session(fmt=args.format, history=history)
    if args.trunc < 1:
        print("--trunc must be at least 1", file=sys.stderr)
        return 3
    cfg.trunc = args.trunc
    try:
        cfg.zeta = _parse_zeta(args.zeta, cfg)
    except (EngineError, ValueError) as e:
        print(f"--zeta: {type(e).__name__}: {e}", file=sys.stderr)
        return 3
    if args.batch:
        return run_batch(args.batch, cfg, sys.stdout)
    return repl(cfg)


if __name__ == "__main__":
    sys.exit(main())
