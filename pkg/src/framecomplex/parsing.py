"""Readers for the polynomial text syntax and the form JSON document.

Expression grammar (whitespace-insensitive)::

    expr   := ["+"|"-"] term (("+"|"-") term)*
    term   := factor ("*" factor)*
    factor := atom ("^" nat)*
    atom   := rational | coord | "(" expr ")"
    coord  := "u[" alpha ";" direction* "]"

Directions list the base derivative directions in any order, so ``u[1;1 2]``
and ``u[1;2 1]`` both denote u^1 with multi-index (1,1) when m = 2.
"""

import json
import re
from fractions import Fraction

from .errors import DomainError, ParseError
from .forms import ScalarForm, VectorForm
from .geometry import BundleContext
from .multiindex import MultiIndex
from .symexpr import PolyExpr, coord

__all__ = ["parse_expr", "parse_form", "parse_document"]

_TOKEN = re.compile(
    r"\s*(?:(?P<num>\d+(?:/\d+)?)|(?P<coord>u\[[^\]]*\])|(?P<op>[-+*^()]))"
)
_COORD = re.compile(r"u\[\s*(\d+)\s*;([\d\s,]*)\]")


class _Parser:
    def __init__(self, text, ctx):
        self.text = text
        self.ctx = ctx
        self.tokens = []
        pos = 0
        while True:
            while pos < len(text) and text[pos].isspace():
                pos += 1
            if pos >= len(text):
                break
            match = _TOKEN.match(text, pos)
            if match is None:
                raise ParseError(f"unexpected character {text[pos]!r}", pos)
            kind = match.lastgroup
            start = match.start(kind)
            self.tokens.append((kind, match.group(kind), start))
            pos = match.end()
        self.i = 0

    def peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else (None, None, len(self.text))

    def take(self):
        tok = self.peek()
        self.i += 1
        return tok

    def expect(self, value):
        kind, text, pos = self.take()
        if text != value:
            raise ParseError(f"expected {value!r}, found {text!r}" if text else f"expected {value!r}", pos)

    def parse(self):
        result = self.expr()
        kind, text, pos = self.peek()
        if kind is not None:
            raise ParseError(f"unexpected {text!r}", pos)
        return result

    def expr(self):
        sign = 1
        kind, text, _ = self.peek()
        if text in ("+", "-"):
            self.take()
            sign = -1 if text == "-" else 1
        result = self.term() * sign
        while self.peek()[1] in ("+", "-"):
            op = self.take()[1]
            rhs = self.term()
            result = result + rhs if op == "+" else result - rhs
        return result

    def term(self):
        result = self.factor()
        while self.peek()[1] == "*":
            self.take()
            result = result * self.factor()
        return result

    def factor(self):
        base = self.atom()
        while self.peek()[1] == "^":
            self.take()
            kind, text, pos = self.take()
            if kind != "num" or "/" in text:
                raise ParseError("exponent must be a natural number", pos)
            base = base ** int(text)
        return base

    def atom(self):
        kind, text, pos = self.take()
        if kind == "num":
            if "/" in text:
                num, den = text.split("/")
                if int(den) == 0:
                    raise ParseError("zero denominator", pos)
                return PolyExpr.constant(Fraction(int(num), int(den)))
            return PolyExpr.constant(int(text))
        if kind == "coord":
            return PolyExpr.variable(self.coordinate(text, pos))
        if text == "(":
            inner = self.expr()
            self.expect(")")
            return inner
        if kind is None:
            raise ParseError("unexpected end of input", pos)
        raise ParseError(f"unexpected {text!r}", pos)

    def coordinate(self, text, pos):
        match = _COORD.fullmatch(text)
        if match is None:
            raise ParseError(f"malformed coordinate {text!r}", pos)
        alpha = int(match.group(1))
        dirs = [int(t) for t in re.split(r"[\s,]+", match.group(2).strip()) if t]
        if not 1 <= alpha <= self.ctx.n:
            raise DomainError(f"fiber index {alpha} out of range 1..{self.ctx.n} at position {pos}")
        for i in dirs:
            if not 1 <= i <= self.ctx.m:
                raise DomainError(f"direction {i} out of range 1..{self.ctx.m} at position {pos}")
        return coord(alpha, MultiIndex.from_directions(self.ctx.m, dirs))


def parse_expr(text, ctx):
    """Parse the text syntax into a canonical :class:`PolyExpr`."""
    return _Parser(text, ctx).parse()


def _int(value, what):
    if not isinstance(value, int) or isinstance(value, bool):
        raise ParseError(f"{what} must be an integer, got {value!r}")
    return value


def parse_document(doc):
    """Build a :class:`VectorForm` from an already-decoded JSON document."""
    if not isinstance(doc, dict):
        raise ParseError("form document must be a JSON object")
    missing = [k for k in ("m", "n", "r", "s", "components") if k not in doc]
    if missing:
        raise ParseError(f"form document is missing {', '.join(missing)}")
    ctx = BundleContext(_int(doc["m"], "m"), _int(doc["n"], "n"))
    r, s = _int(doc["r"], "r"), _int(doc["s"], "s")
    if r < 0:
        raise DomainError(f"form degree must be non-negative, got {r}")
    if not 0 <= s <= ctx.m:
        raise DomainError(f"covalence {s} out of range 0..{ctx.m}")
    if not isinstance(doc["components"], list):
        raise ParseError("components must be a list")
    components = {}
    for comp in doc["components"]:
        if not isinstance(comp, dict) or "dt" not in comp or "terms" not in comp:
            raise ParseError("each component needs 'dt' and 'terms'")
        dt = tuple(_int(i, "dt entry") for i in comp["dt"])
        if len(dt) != s:
            raise ParseError(f"dt tuple {list(dt)} does not have length {s}")
        if any(a >= b for a, b in zip(dt, dt[1:])):
            raise ParseError(f"dt tuple {list(dt)} must be strictly increasing")
        for i in dt:
            ctx.check_frame_index(i)
        if dt in components:
            raise ParseError(f"duplicate component {list(dt)}")
        theta = ScalarForm.zero(ctx, r)
        for term in comp["terms"]:
            if not isinstance(term, dict) or "coeff" not in term or "du" not in term:
                raise ParseError("each term needs 'coeff' and 'du'")
            coeff = term["coeff"]
            if isinstance(coeff, int) and not isinstance(coeff, bool):
                poly = PolyExpr.constant(coeff)
            elif isinstance(coeff, str):
                poly = parse_expr(coeff, ctx)
            else:
                raise ParseError(f"coefficient must be an expression string, got {coeff!r}")
            labels = []
            for entry in term["du"]:
                if not (isinstance(entry, list) and len(entry) == 2 and isinstance(entry[1], list)):
                    raise ParseError(f"du entry must be [alpha, [counts]], got {entry!r}")
                alpha = _int(entry[0], "alpha")
                counts = [_int(c, "multi-index count") for c in entry[1]]
                if len(counts) != ctx.m:
                    raise DomainError(f"multi-index {counts} does not have width {ctx.m}")
                c = coord(alpha, MultiIndex(counts))
                ctx.check_coordinate(c)
                labels.append(c)
            if len(labels) != r:
                raise ParseError(f"du list has {len(labels)} entries, expected {r}")
            if any(a >= b for a, b in zip(labels, labels[1:])):
                raise ParseError("du entries must be strictly increasing in coordinate order")
            theta = theta + ScalarForm.from_coefficients(ctx, r, {tuple(labels): poly})
        components[dt] = theta
    return VectorForm(ctx, r, s, components)


def parse_form(document):
    """Parse a form JSON document (text) into a canonical :class:`VectorForm`."""
    try:
        doc = json.loads(document)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc.msg}", exc.pos) from None
    return parse_document(doc)
