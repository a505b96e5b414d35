"""Tokenizer and recursive-descent parser for the calculator grammar.

expr   := term (('+'|'-') term)*
term   := factor (('*'|'/') factor)*
factor := atom ('^' atom)?
atom   := number | 'w' | game | call | '(' expr ')' | '-' atom
game   := '{' list? '|' list? '}'

Numbers are integers or decimals (kept exact); rationals arrive through the
division operator. Every node carries its (start, end) source span. The 'z'
variable is only admitted inside the first argument of winding(...); OMEGA
only parses as a bare atom so commands can treat it as the class token.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import ParseError

_CALLS = ("root", "exp", "log", "sin", "cos", "winding")
_SYMBOLS = "+-*/^(){}|,"


def tokenize(text):
    out = []
    i = 0
    n = len(text)
    while i < n:
        ch = text[i]
        if ch in " \t":
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            if j < n and text[j] == "." and j + 1 < n and text[j + 1].isdigit():
                j += 1
                while j < n and text[j].isdigit():
                    j += 1
            out.append(("num", Fraction(text[i:j]), i))
            i = j
            continue
        if ch.isalpha() or ch == "_":
            j = i
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            out.append(("name", text[i:j], i))
            i = j
            continue
        if ch in _SYMBOLS:
            out.append(("sym", ch, i))
            i += 1
            continue
        raise ParseError(i, f"unexpected character {ch!r}")
    out.append(("end", "", n))
    return out


class _Parser:
    def __init__(self, text):
        self.text = text
        self.toks = tokenize(text)
        self.pos = 0
        self.z_depth = 0

    def peek(self):
        return self.toks[self.pos]

    def take(self):
        tok = self.toks[self.pos]
        self.pos += 1
        return tok

    def expect(self, ch):
        kind, val, at = self.peek()
        if kind == "sym" and val == ch:
            return self.take()
        found = repr(val) if kind != "end" else "end of input"
        raise ParseError(at, f"expected {ch!r}, found {found}")

    def parse(self):
        node = self.expr()
        kind, val, at = self.peek()
        if kind != "end":
            raise ParseError(at, f"unexpected {val!r}")
        return node

    def expr(self):
        node = self.term()
        while True:
            kind, val, at = self.peek()
            if kind == "sym" and val in "+-":
                self.take()
                rhs = self.term()
                node = ("bin", (node[1][0], rhs[1][1]), val, node, rhs)
            else:
                return node

    def term(self):
        node = self.factor()
        while True:
            kind, val, at = self.peek()
            if kind == "sym" and val in "*/":
                self.take()
                rhs = self.factor()
                node = ("bin", (node[1][0], rhs[1][1]), val, node, rhs)
            else:
                return node

    def factor(self):
        node = self.atom()
        kind, val, at = self.peek()
        if kind == "sym" and val == "^":
            self.take()
            rhs = self.atom()
            node = ("bin", (node[1][0], rhs[1][1]), "^", node, rhs)
        return node

    def atom(self):
        kind, val, at = self.peek()
        if kind == "sym" and val == "-":
            self.take()
            inner = self.atom()
            return ("neg", (at, inner[1][1]), inner)
        if kind == "num":
            self.take()
            return ("num", (at, at + 1), val)
        if kind == "name":
            self.take()
            if val == "w":
                return ("w", (at, at + 1))
            if val == "OMEGA":
                return ("omega", (at, at + len(val)))
            if val == "ans":
                return ("ans", (at, at + len(val)))
            if val == "z":
                if self.z_depth == 0:
                    raise ParseError(
                        at, "'z' is only allowed inside winding(...)"
                    )
                return ("z", (at, at + 1))
            if val in _CALLS:
                return self.call(val, at)
            raise ParseError(at, f"unknown name {val!r}")
        if kind == "sym" and val == "(":
            self.take()
            inner = self.expr()
            end = self.expect(")")[2]
            return (inner[0], (at, end + 1)) + tuple(inner[2:])
        if kind == "sym" and val == "{":
            return self.game(at)
        found = repr(val) if kind != "end" else "end of input"
        raise ParseError(at, f"expected a value, found {found}")

    def call(self, name, at):
        self.expect("(")
        args = []
        first = name == "winding"
        while True:
            if first:
                self.z_depth += 1
            args.append(self.expr())
            if first:
                self.z_depth -= 1
                first = False
            kind, val, pos = self.peek()
            if kind == "sym" and val == ",":
                self.take()
                continue
            end = self.expect(")")[2]
            return ("call", (at, end + 1), name, tuple(args))

    def game(self, at):
        self.expect("{")
        left = self.options(("|",))
        self.expect("|")
        right = self.options(("}",))
        end = self.expect("}")[2]
        return ("game", (at, end + 1), tuple(left), tuple(right))

    def options(self, stops):
        kind, val, at = self.peek()
        if kind == "sym" and val in stops:
            return []
        out = [self.expr()]
        while True:
            kind, val, at = self.peek()
            if kind == "sym" and val == ",":
                self.take()
                out.append(self.expr())
            else:
                return out


def parse(text):
    """Parse one expression; raises ParseError with a position."""
    return _Parser(text).parse()
