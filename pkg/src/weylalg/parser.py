"""Expression front-end: parsing, normalization, canonical printing.

Grammar (whitespace-insensitive, '*' mandatory between factors):

    expr     := ('+'|'-')? term (('+'|'-') term)*
    term     := factor ('*' factor)*
    factor   := base ('^' nat)?
    base     := 'X' | 'Y' | 'H' | rational | '(' expr ')'
    rational := int ('/' posint)?

Products are noncommutative and keep their factor order in the tree.

normalize() rewrites a free expression to graded normal form using only the
elementary moves: letters commute past H-coefficients through the shift, and
the adjacent pairs YX, XY collapse to H and H - 1.  It deliberately does not
use the closed-form structure constants, so it serves as an independent
oracle for the product in :mod:`weylalg.weyl`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import ParseError
from .polynomials import Poly
from .weyl import WeylElement

MAX_EXPONENT = 10_000


# ----------------------------------------------------------------------
# free expression trees
# ----------------------------------------------------------------------

@dataclass(frozen=True)
class Sum:
    terms: tuple


@dataclass(frozen=True)
class Product:
    factors: tuple


@dataclass(frozen=True)
class Power:
    base: object
    exponent: int


@dataclass(frozen=True)
class Neg:
    arg: object


@dataclass(frozen=True)
class Sym:
    name: str  # "X", "Y" or "H"


@dataclass(frozen=True)
class Lit:
    value: Fraction


# ----------------------------------------------------------------------
# lexer / parser
# ----------------------------------------------------------------------

_PUNCT = {"+", "-", "*", "^", "(", ")", "/"}


def _tokenize(text):
    tokens = []
    i = 0
    n = len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch in _PUNCT:
            tokens.append((ch, ch, i))
            i += 1
            continue
        if ch in "XYH":
            tokens.append(("sym", ch, i))
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            tokens.append(("int", text[i:j], i))
            i = j
            continue
        raise ParseError(f"unexpected character {ch!r}", i)
    tokens.append(("end", "", n))
    return tokens


class _Parser:
    def __init__(self, text):
        self.tokens = _tokenize(text)
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos]

    def advance(self):
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect(self, kind):
        tok = self.advance()
        if tok[0] != kind:
            raise ParseError(f"expected {kind!r}, found {tok[1]!r}", tok[2])
        return tok

    def parse_expr(self):
        terms = []
        sign = 1
        if self.peek()[0] in ("+", "-"):
            sign = -1 if self.advance()[0] == "-" else 1
        term = self.parse_term()
        terms.append(Neg(term) if sign < 0 else term)
        while self.peek()[0] in ("+", "-"):
            op = self.advance()[0]
            term = self.parse_term()
            terms.append(Neg(term) if op == "-" else term)
        if len(terms) == 1:
            return terms[0]
        return Sum(tuple(terms))

    def parse_term(self):
        factors = [self.parse_factor()]
        while self.peek()[0] == "*":
            self.advance()
            factors.append(self.parse_factor())
        if len(factors) == 1:
            return factors[0]
        return Product(tuple(factors))

    def parse_factor(self):
        base = self.parse_base()
        if self.peek()[0] == "^":
            self.advance()
            tok = self.expect("int")
            exponent = int(tok[1])
            if exponent > MAX_EXPONENT:
                raise ParseError(f"exponent {exponent} exceeds the limit {MAX_EXPONENT}", tok[2])
            return Power(base, exponent)
        return base

    def parse_base(self):
        tok = self.advance()
        kind, value, pos = tok
        if kind == "sym":
            return Sym(value)
        if kind == "int":
            numerator = int(value)
            if self.peek()[0] == "/":
                self.advance()
                dtok = self.expect("int")
                denominator = int(dtok[1])
                if denominator == 0:
                    raise ParseError("zero denominator", dtok[2])
                return Lit(Fraction(numerator, denominator))
            return Lit(Fraction(numerator))
        if kind == "(":
            inner = self.parse_expr()
            self.expect(")")
            return inner
        raise ParseError(f"unexpected token {value!r}", pos)


def parse(text: str):
    """Parse expression text into a free expression tree."""
    parser = _Parser(text)
    expr = parser.parse_expr()
    parser.expect("end")
    return expr


# ----------------------------------------------------------------------
# elementary rewriting to normal form
# ----------------------------------------------------------------------

def _times_x(comp):
    """Right-multiply a normal form by the letter X."""
    out = {}
    for k, f in comp.items():
        if k >= 0:
            g = f
        else:
            # (f Y^m) X = f (H + m - 1) Y^(m-1): collapse one YX to H
            g = f * Poly.linear(-k - 1)
        if g:
            key = k + 1
            out[key] = out[key] + g if key in out else g
    return {k: v for k, v in out.items() if v}


def _times_y(comp):
    """Right-multiply a normal form by the letter Y."""
    out = {}
    for k, f in comp.items():
        if k <= 0:
            g = f
        else:
            # (f X^k) Y = f (H - k) X^(k-1): collapse one XY to H - 1
            g = f * Poly.linear(-k)
        if g:
            key = k - 1
            out[key] = out[key] + g if key in out else g
    return {k: v for k, v in out.items() if v}


def _mul_rewrite(a, b):
    """Product of two normal-form component maps by elementary moves only."""
    result = {}
    for l, g in b.items():
        partial = {}
        for k, f in a.items():
            term = f * g.sigma(k)
            if term:
                partial[k] = partial.get(k, Poly.zero()) + term
        partial = {k: v for k, v in partial.items() if v}
        step = _times_x if l > 0 else _times_y
        for _ in range(abs(l)):
            partial = step(partial)
        for k, v in partial.items():
            w = result.get(k, Poly.zero()) + v
            if w:
                result[k] = w
            elif k in result:
                del result[k]
    return result


def _add_comp(a, b):
    out = dict(a)
    for k, v in b.items():
        w = out.get(k, Poly.zero()) + v
        if w:
            out[k] = w
        elif k in out:
            del out[k]
    return out


_ATOMS = {
    "X": {1: Poly.one()},
    "Y": {-1: Poly.one()},
    "H": {0: Poly.gen()},
}


def _rewrite(expr, strategy):
    if isinstance(expr, Sym):
        return dict(_ATOMS[expr.name])
    if isinstance(expr, Lit):
        return {0: Poly.constant(expr.value)} if expr.value else {}
    if isinstance(expr, Neg):
        return {k: -v for k, v in _rewrite(expr.arg, strategy).items()}
    if isinstance(expr, Sum):
        out = {}
        for term in expr.terms:
            out = _add_comp(out, _rewrite(term, strategy))
        return out
    if isinstance(expr, Power):
        base = _rewrite(expr.base, strategy)
        out = {0: Poly.one()}
        for _ in range(expr.exponent):
            out = _mul_rewrite(out, base)
        return out
    if isinstance(expr, Product):
        parts = [_rewrite(f, strategy) for f in expr.factors]
        if strategy == "left":
            out = parts[0]
            for p in parts[1:]:
                out = _mul_rewrite(out, p)
            return out
        if strategy == "tree":
            while len(parts) > 1:
                paired = []
                for i in range(0, len(parts) - 1, 2):
                    paired.append(_mul_rewrite(parts[i], parts[i + 1]))
                if len(parts) % 2:
                    paired.append(parts[-1])
                parts = paired
            return parts[0]
        raise ValueError(f"unknown strategy {strategy!r}")
    raise TypeError(f"not a free expression node: {type(expr).__name__}")


def normalize(expr, strategy: str = "left") -> WeylElement:
    """Rewrite a free expression to graded normal form.

    The two strategies differ only in the association order of products and
    must agree; both exist so confluence can be tested.
    """
    return WeylElement(_rewrite(expr, strategy))


def normalize_text(text: str, strategy: str = "left") -> WeylElement:
    return normalize(parse(text), strategy)


# ----------------------------------------------------------------------
# printing
# ----------------------------------------------------------------------

def print_canonical(a: WeylElement) -> str:
    """Canonical text form: components ascending, each coefficient in parens."""
    comps = a.components()
    if not comps:
        return "0"
    parts = []
    for i, f in comps:
        poly = f.format()
        if i == 0:
            parts.append(f"({poly})")
        elif i > 0:
            parts.append(f"({poly})*X^{i}")
        else:
            parts.append(f"({poly})*Y^{-i}")
    return " + ".join(parts)


def format_pretty(a: WeylElement) -> str:
    """Friendlier rendering for CLI text output; still parseable."""
    comps = a.components()
    if not comps:
        return "0"
    if len(comps) == 1:
        i, f = comps[0]
        if i == 0:
            return f.format()
        power = f"X^{i}" if i > 0 else f"Y^{-i}"
        if f == Poly.one():
            return power
        if f.is_constant():
            return f"{f.format()}*{power}"
    return print_canonical(a)
