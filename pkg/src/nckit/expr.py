"""Expression language over the deformed algebra.

A small, deterministic surface syntax so results can travel through a
terminal: parse a string, evaluate it against a deformation context, and
render the canonical answer back as a string that re-parses to the same
object.

Grammar (left associative; '*' and '.' share one precedence level):

    expr    := term (('+' | '-') term)*
    term    := unary (('*' | '.') unary)*
    unary   := '-' unary | conjed
    conjed  := '~' conjed | power
    power   := atom ('^' INT)*
    atom    := INT ('/' INT)?            exact rational
             | 'i'                        imaginary unit
             | 't' | 'x1' | 'x2' | 'x3'  coordinates
             | 'eps'                      formal expansion marker
             | 'dt' | 'dx1' | 'dx2' | 'dx3'
             | ('D0'|'D1'|'D2'|'D3') '(' expr ')'
             | 'd' '(' expr ')'
             | '(' expr ')'

'*' is the deformed (star) product; '.' is the plain commutative product
and only accepts scalar functions.  '~' conjugates, 'd' is the exterior
derivative, 'Dmu' the coordinate derivative (0 = time).  '^' is the
pointwise power of a scalar.  Basis one-forms multiply with '*', so
"x2*dx1*dx2" is a two-form with its coefficient already moved to the
left.  Misusing grades (a pointwise product or a power of a form, Dmu of
a form) raises GradingError; malformed input raises ParseError with the
line and column.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .forms import DifferentialForm, d as exterior_d, form_conj, form_mul
from .poly import Poly
from .rationals import CRat
from .star import StarContext, star

Value = Union[Poly, DifferentialForm]


class ParseError(Exception):
    def __init__(self, msg: str, line: int, col: int):
        super().__init__(f"line {line}, column {col}: {msg}")
        self.msg = msg
        self.line = line
        self.col = col


class GradingError(Exception):
    """An operation was applied across incompatible form degrees."""


# -- lexer ----------------------------------------------------------------

_PUNCT = set("+-*./()^~")


@dataclass(frozen=True)
class _Tok:
    kind: str  # NUM, NAME, one of _PUNCT, EOF
    text: str
    line: int
    col: int


def _tokenize(src: str) -> list[_Tok]:
    toks: list[_Tok] = []
    line, col = 1, 1
    i, n = 0, len(src)
    while i < n:
        ch = src[i]
        if ch == "\n":
            line += 1
            col = 1
            i += 1
            continue
        if ch in " \t\r":
            i += 1
            col += 1
            continue
        start_col = col
        if ch.isdigit():
            j = i
            while j < n and src[j].isdigit():
                j += 1
            if j < n - 1 and src[j] == "." and src[j + 1].isdigit():
                raise ParseError(
                    "decimal literals are not supported; write p/q", line, start_col)
            toks.append(_Tok("NUM", src[i:j], line, start_col))
            col += j - i
            i = j
            continue
        if ch.isalpha():
            j = i
            while j < n and (src[j].isalnum() or src[j] == "_"):
                j += 1
            toks.append(_Tok("NAME", src[i:j], line, start_col))
            col += j - i
            i = j
            continue
        if ch in _PUNCT:
            toks.append(_Tok(ch, ch, line, start_col))
            i += 1
            col += 1
            continue
        raise ParseError(f"unexpected character {ch!r}", line, start_col)
    toks.append(_Tok("EOF", "", line, col))
    return toks


# -- syntax tree ------------------------------------------------------------

@dataclass(frozen=True)
class Num:
    value: Fraction
    line: int
    col: int


@dataclass(frozen=True)
class Sym:
    name: str  # i, t, x1..x3, eps, dt, dx1..dx3
    line: int
    col: int


@dataclass(frozen=True)
class Un:
    op: str  # '-', '~'
    arg: "Node"
    line: int
    col: int


@dataclass(frozen=True)
class Bin:
    op: str  # '+', '-', '*', '.'
    left: "Node"
    right: "Node"
    line: int
    col: int


@dataclass(frozen=True)
class Pow:
    base: "Node"
    exponent: int
    line: int
    col: int


@dataclass(frozen=True)
class Call:
    fn: str  # 'd', 'D0'..'D3'
    arg: "Node"
    line: int
    col: int


Node = Union[Num, Sym, Un, Bin, Pow, Call]

_ATOMS = {"i", "t", "x1", "x2", "x3", "eps", "dt", "dx1", "dx2", "dx3"}
_CALLS = {"d", "D0", "D1", "D2", "D3"}


class _Parser:
    def __init__(self, toks: list[_Tok]):
        self.toks = toks
        self.pos = 0

    def peek(self) -> _Tok:
        return self.toks[self.pos]

    def next(self) -> _Tok:
        tok = self.toks[self.pos]
        self.pos += 1
        return tok

    def expect(self, kind: str) -> _Tok:
        tok = self.peek()
        if tok.kind != kind:
            what = tok.text or "end of input"
            raise ParseError(f"expected {kind!r}, found {what!r}",
                             tok.line, tok.col)
        return self.next()

    def parse(self) -> Node:
        node = self.expr()
        tok = self.peek()
        if tok.kind != "EOF":
            raise ParseError(f"unexpected trailing input {tok.text!r}",
                             tok.line, tok.col)
        return node

    def expr(self) -> Node:
        node = self.term()
        while self.peek().kind in ("+", "-"):
            op = self.next()
            node = Bin(op.kind, node, self.term(), op.line, op.col)
        return node

    def term(self) -> Node:
        node = self.unary()
        while self.peek().kind in ("*", "."):
            op = self.next()
            node = Bin(op.kind, node, self.unary(), op.line, op.col)
        return node

    def unary(self) -> Node:
        tok = self.peek()
        if tok.kind == "-":
            self.next()
            return Un("-", self.unary(), tok.line, tok.col)
        return self.conjed()

    def conjed(self) -> Node:
        tok = self.peek()
        if tok.kind == "~":
            self.next()
            return Un("~", self.conjed(), tok.line, tok.col)
        return self.power()

    def power(self) -> Node:
        node = self.atom()
        while self.peek().kind == "^":
            op = self.next()
            num = self.expect("NUM")
            node = Pow(node, int(num.text), op.line, op.col)
        return node

    def atom(self) -> Node:
        tok = self.peek()
        if tok.kind == "NUM":
            self.next()
            numer = int(tok.text)
            if self.peek().kind == "/":
                self.next()
                den_tok = self.expect("NUM")
                denom = int(den_tok.text)
                if denom == 0:
                    raise ParseError("zero denominator",
                                     den_tok.line, den_tok.col)
                return Num(Fraction(numer, denom), tok.line, tok.col)
            return Num(Fraction(numer), tok.line, tok.col)
        if tok.kind == "NAME":
            self.next()
            if tok.text in _CALLS:
                self.expect("(")
                arg = self.expr()
                self.expect(")")
                return Call(tok.text, arg, tok.line, tok.col)
            if tok.text in _ATOMS:
                return Sym(tok.text, tok.line, tok.col)
            raise ParseError(f"unknown symbol {tok.text!r}", tok.line, tok.col)
        if tok.kind == "(":
            self.next()
            node = self.expr()
            self.expect(")")
            return node
        what = tok.text or "end of input"
        raise ParseError(f"expected a value, found {what!r}", tok.line, tok.col)


def parse_expression(src: str) -> Node:
    return _Parser(_tokenize(src)).parse()


# -- evaluation --------------------------------------------------------------

def _promote(v: Value) -> DifferentialForm:
    if isinstance(v, Poly):
        return DifferentialForm.from_function(v)
    return v


def evaluate(node: Node, ctx: StarContext) -> Value:
    if isinstance(node, Num):
        return Poly.const(Fraction(node.value))
    if isinstance(node, Sym):
        name = node.name
        if name == "i":
            return Poly.const(CRat(0, 1))
        if name in ("t", "x1", "x2", "x3", "eps"):
            return Poly.variable(name)
        mu = 0 if name == "dt" else int(name[2])
        return DifferentialForm.basis(mu)
    if isinstance(node, Un):
        v = evaluate(node.arg, ctx)
        if node.op == "-":
            return -v
        if isinstance(v, Poly):
            return v.conj()
        return form_conj(v, ctx)
    if isinstance(node, Pow):
        v = evaluate(node.base, ctx)
        if isinstance(v, DifferentialForm):
            raise GradingError(
                f"line {node.line}, column {node.col}: "
                "power of a differential form")
        return v ** node.exponent
    if isinstance(node, Call):
        v = evaluate(node.arg, ctx)
        if node.fn == "d":
            return exterior_d(_promote(v), ctx)
        if isinstance(v, DifferentialForm):
            raise GradingError(
                f"line {node.line}, column {node.col}: "
                f"{node.fn} needs a scalar function; use d for forms")
        return v.partial(int(node.fn[1]))
    if isinstance(node, Bin):
        a = evaluate(node.left, ctx)
        b = evaluate(node.right, ctx)
        if node.op in ("+", "-"):
            if isinstance(a, Poly) and isinstance(b, Poly):
                return a + b if node.op == "+" else a - b
            fa, fb = _promote(a), _promote(b)
            return fa + fb if node.op == "+" else fa - fb
        if node.op == "*":
            if isinstance(a, Poly) and isinstance(b, Poly):
                return star(a, b, ctx)
            return form_mul(_promote(a), _promote(b), ctx)
        # pointwise product
        if isinstance(a, Poly) and isinstance(b, Poly):
            return a * b
        raise GradingError(
            f"line {node.line}, column {node.col}: "
            "pointwise product is only defined for scalar functions")
    raise TypeError(f"not a syntax node: {node!r}")


# -- rendering ---------------------------------------------------------------

def _coeff_text(c: CRat) -> tuple[bool, str]:
    """Split a sign off and print the magnitude in re-parseable form."""
    neg = c.re < 0 or (c.re == 0 and c.im < 0)
    if neg:
        c = -c
    return neg, str(c)


def _mono_text(exps, names) -> str:
    return ".".join(f"{v}^{e}" if e > 1 else v
                    for v, e in zip(names, exps) if e)


def poly_to_expr(p: Poly) -> str:
    if p.is_zero():
        return "0"
    chunks: list[str] = []
    for exps, c in p.sorted_terms():
        neg, coeff = _coeff_text(c)
        mono = _mono_text(exps, Poly.VARS)
        if not mono:
            body = coeff
        elif coeff == "1":
            body = mono
        else:
            body = f"{coeff}*{mono}"
        if not chunks:
            chunks.append(f"-{body}" if neg else body)
        else:
            chunks.append(f" - {body}" if neg else f" + {body}")
    return "".join(chunks)


_BASIS_NAMES = ("dt", "dx1", "dx2", "dx3")


def _wedge_text(mask: int) -> str:
    return "*".join(_BASIS_NAMES[mu] for mu in range(4) if mask >> mu & 1)


def form_to_expr(w: DifferentialForm) -> str:
    if w.is_zero():
        return "0"
    parts = sorted(w.items(), key=lambda kv: (bin(kv[0]).count("1"), kv[0]))
    chunks: list[str] = []
    for mask, f in parts:
        if mask == 0:
            body = poly_to_expr(f)
            neg = False
        else:
            wedge = _wedge_text(mask)
            terms = f.sorted_terms()
            if len(terms) == 1:
                exps, c = terms[0]
                neg, coeff = _coeff_text(c)
                mono = _mono_text(exps, Poly.VARS)
                if not mono and coeff == "1":
                    body = wedge
                else:
                    scalar = mono if coeff == "1" else (
                        f"{coeff}*{mono}" if mono else coeff)
                    body = f"{scalar}*{wedge}"
            else:
                neg = False
                body = f"({poly_to_expr(f)})*{wedge}"
        if not chunks:
            chunks.append(f"-{body}" if neg else body)
        else:
            chunks.append(f" - {body}" if neg else f" + {body}")
    return "".join(chunks)


def value_to_expr(v: Value) -> str:
    if isinstance(v, Poly):
        return poly_to_expr(v)
    return form_to_expr(v)


def reduce_expression(src: str, ctx: StarContext) -> str:
    """Parse, evaluate against ctx, and render the canonical form.

    The context's eps cutoff is applied to the result, so a truncation
    order behaves the same whether the dropped terms were produced by a
    product or typed directly.
    """
    v = evaluate(parse_expression(src), ctx)
    if isinstance(v, Poly):
        return poly_to_expr(ctx.reduce(v))
    return form_to_expr(DifferentialForm(
        {m: ctx.reduce(f) for m, f in v.items()}))
