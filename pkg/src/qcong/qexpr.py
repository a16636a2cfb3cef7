"""A small expression language for q-series.

Grammar (``*`` is mandatory, there is no juxtaposition)::

    expr   := term (('+'|'-') term)*
    term   := factor ('*' factor | '/' factor)*
    factor := atom ('^' signed_int)?
    atom   := '(' expr ')' | '-' atom | int | 'q' ('^' int)?
            | 'P' '(' int ')'                        (q^k;q^k)_inf
            | 'PG' '(' sign ',' int ',' int ')'      (sign*q^r; q^step)_inf
            | 'phi' '(' sign? 'q' ('^' int)? ')'
            | 'f' '(' sign? 'q' ('^' int)? ',' sign? 'q' ('^' int)? ')'
            | 'S' '(' expr ',' int ')'               expr with q -> q^k

Unary minus lives at the atom level, so ``-P(1)^2`` is ``(-P(1))^2``.
Write ``0 - P(1)^2`` or ``-(P(1)^2)`` for the other reading.

Templates carry ``{...}`` placeholders holding integer arithmetic over bound
names (``+ - * ^`` and parentheses); :func:`parametrize` fills them in.
"""

from __future__ import annotations

import ast
import re
from dataclasses import dataclass, field
from typing import Mapping, Union

from qcong import products
from qcong.series import NonUnitError, TruncatedSeries, divide, make_monomial, mul, one, power, scale, substitute_power

MAX_LITERAL = 2**63 - 1

Span = tuple[int, int]


class QExprError(ValueError):
    pass


class QExprSyntaxError(QExprError):
    def __init__(self, message: str, offset: int, expected: frozenset[str] = frozenset()):
        self.offset = offset
        self.expected = expected
        detail = f" (expected one of: {', '.join(sorted(expected))})" if expected else ""
        super().__init__(f"{message} at byte {offset}{detail}")


class QExprNonUnitError(NonUnitError):
    def __init__(self, message: str, span: Span | None):
        self.span = span
        super().__init__(f"{message} at bytes {span}" if span else message)


class TemplateError(QExprError):
    pass


# --- AST -------------------------------------------------------------------

def _span():
    return field(default=None, compare=False, repr=False)


@dataclass(frozen=True)
class IntLiteral:
    value: int
    span: Span | None = _span()


@dataclass(frozen=True)
class Monomial:
    c: int
    e: int
    span: Span | None = _span()


@dataclass(frozen=True)
class PochSimple:
    k: int
    span: Span | None = _span()


@dataclass(frozen=True)
class Poch:
    sign: int
    r: int
    s: int
    span: Span | None = _span()


@dataclass(frozen=True)
class Phi:
    sign: int
    scale: int
    span: Span | None = _span()


@dataclass(frozen=True)
class Theta:
    a_sign: int
    a_exp: int
    b_sign: int
    b_exp: int
    span: Span | None = _span()


@dataclass(frozen=True)
class Neg:
    operand: "QExpr"
    span: Span | None = _span()


@dataclass(frozen=True)
class Add:
    left: "QExpr"
    right: "QExpr"
    span: Span | None = _span()


@dataclass(frozen=True)
class Sub:
    left: "QExpr"
    right: "QExpr"
    span: Span | None = _span()


@dataclass(frozen=True)
class Mul:
    left: "QExpr"
    right: "QExpr"
    span: Span | None = _span()


@dataclass(frozen=True)
class Div:
    left: "QExpr"
    right: "QExpr"
    span: Span | None = _span()


@dataclass(frozen=True)
class Pow:
    base: "QExpr"
    exponent: int
    span: Span | None = _span()


@dataclass(frozen=True)
class Subst:
    operand: "QExpr"
    k: int
    span: Span | None = _span()


QExpr = Union[IntLiteral, Monomial, PochSimple, Poch, Phi, Theta, Neg, Add, Sub, Mul, Div, Pow, Subst]


# --- tokenizer ---------------------------------------------------------------

_TOKEN_RE = re.compile(r"\s*(?:(?P<int>\d+)|(?P<name>[A-Za-z_]+)|(?P<sym>[()+\-*/^,]))")
_NAMES = {"q", "P", "PG", "phi", "f", "S"}


@dataclass(frozen=True)
class _Token:
    kind: str  # 'int', 'name', 'sym', 'eof'
    text: str
    start: int
    end: int


def _tokenize(text: str) -> list[_Token]:
    tokens = []
    pos = 0
    # byte offsets of each char, so errors report positions in the UTF-8 encoding
    offsets = [0]
    for ch in text:
        offsets.append(offsets[-1] + len(ch.encode("utf-8")))
    while True:
        while pos < len(text) and text[pos].isspace():
            pos += 1
        if pos >= len(text):
            break
        m = _TOKEN_RE.match(text, pos)
        if not m or m.end() == pos:
            raise QExprSyntaxError(f"unexpected character {text[pos]!r}", offsets[pos])
        kind = m.lastgroup
        start = m.start(kind)
        tokens.append(_Token(kind, m.group(kind), offsets[start], offsets[m.end()]))
        pos = m.end()
    tokens.append(_Token("eof", "", offsets[-1], offsets[-1]))
    return tokens


# --- parser ------------------------------------------------------------------

class _Parser:
    def __init__(self, text: str):
        self.tokens = _tokenize(text)
        self.i = 0

    @property
    def tok(self) -> _Token:
        return self.tokens[self.i]

    def _fail(self, expected: set[str], message: str | None = None):
        t = self.tok
        found = "end of input" if t.kind == "eof" else repr(t.text)
        raise QExprSyntaxError(message or f"unexpected {found}", t.start, frozenset(expected))

    def _is(self, text: str) -> bool:
        return self.tok.kind in ("sym", "name") and self.tok.text == text

    def _expect(self, text: str) -> _Token:
        if not self._is(text):
            self._fail({repr(text)})
        t = self.tok
        self.i += 1
        return t

    def _int(self) -> tuple[int, _Token]:
        t = self.tok
        if t.kind != "int":
            self._fail({"integer"})
        value = int(t.text)
        if value > MAX_LITERAL:
            raise QExprSyntaxError("integer literal too large", t.start)
        self.i += 1
        return value, t

    def _signed_int(self) -> tuple[int, int]:
        neg = False
        if self._is("-"):
            neg = True
            self.i += 1
        elif self._is("+"):
            self.i += 1
        value, t = self._int()
        return (-value if neg else value), t.end

    def _sign(self, optional: bool) -> int:
        if self._is("-"):
            self.i += 1
            return -1
        if self._is("+"):
            self.i += 1
            return 1
        if optional:
            return 1
        self._fail({"'+'", "'-'"})

    def _q_power(self) -> tuple[int, int]:
        t = self._expect("q")
        if self._is("^"):
            self.i += 1
            e, et = self._int()
            return e, et.end
        return 1, t.end

    def _positive(self, value: int, t: _Token, what: str) -> int:
        if value < 1:
            raise QExprSyntaxError(f"{what} must be >= 1", t.start)
        return value

    def parse(self) -> QExpr:
        node = self.expr()
        if self.tok.kind != "eof":
            self._fail({"'+'", "'-'", "'*'", "'/'", "'^'", "end of input"})
        return node

    def expr(self) -> QExpr:
        node = self.term()
        while self._is("+") or self._is("-"):
            op = self.tok.text
            self.i += 1
            right = self.term()
            cls = Add if op == "+" else Sub
            node = cls(node, right, span=(node.span[0], right.span[1]))
        return node

    def term(self) -> QExpr:
        node = self.factor()
        while self._is("*") or self._is("/"):
            op = self.tok.text
            self.i += 1
            right = self.factor()
            cls = Mul if op == "*" else Div
            node = cls(node, right, span=(node.span[0], right.span[1]))
        return node

    def factor(self) -> QExpr:
        node = self.atom()
        if self._is("^"):
            self.i += 1
            e, end = self._signed_int()
            node = Pow(node, e, span=(node.span[0], end))
        return node

    def atom(self) -> QExpr:
        t = self.tok
        if self._is("("):
            self.i += 1
            inner = self.expr()
            self._expect(")")
            return inner
        if self._is("-"):
            self.i += 1
            operand = self.atom()
            return Neg(operand, span=(t.start, operand.span[1]))
        if t.kind == "int":
            value, _ = self._int()
            return IntLiteral(value, span=(t.start, t.end))
        if t.kind == "name" and t.text in _NAMES:
            return getattr(self, f"_atom_{t.text}")()
        self._fail({"'('", "'-'", "integer", "'q'", "'P'", "'PG'", "'phi'", "'f'", "'S'"})

    def _atom_q(self) -> QExpr:
        start = self.tok.start
        e, end = self._q_power()
        return Monomial(1, e, span=(start, end))

    def _atom_P(self) -> QExpr:
        start = self._expect("P").start
        self._expect("(")
        k, kt = self._int()
        self._positive(k, kt, "P step")
        end = self._expect(")").end
        return PochSimple(k, span=(start, end))

    def _atom_PG(self) -> QExpr:
        start = self._expect("PG").start
        self._expect("(")
        sign = self._sign(optional=False)
        self._expect(",")
        r, rt = self._int()
        self._positive(r, rt, "PG offset")
        self._expect(",")
        s, st = self._int()
        self._positive(s, st, "PG step")
        end = self._expect(")").end
        return Poch(sign, r, s, span=(start, end))

    def _atom_phi(self) -> QExpr:
        start = self._expect("phi").start
        self._expect("(")
        sign = self._sign(optional=True)
        tq = self.tok
        scale_, _ = self._q_power()
        self._positive(scale_, tq, "phi scale")
        end = self._expect(")").end
        return Phi(sign, scale_, span=(start, end))

    def _atom_f(self) -> QExpr:
        start = self._expect("f").start
        self._expect("(")
        a_sign = self._sign(optional=True)
        a_exp, _ = self._q_power()
        self._expect(",")
        b_sign = self._sign(optional=True)
        b_exp, _ = self._q_power()
        end = self._expect(")").end
        if a_exp + b_exp == 0:
            raise QExprSyntaxError("f(a, b) needs a*b to carry a positive power of q", start)
        return Theta(a_sign, a_exp, b_sign, b_exp, span=(start, end))

    def _atom_S(self) -> QExpr:
        start = self._expect("S").start
        self._expect("(")
        operand = self.expr()
        self._expect(",")
        k, kt = self._int()
        self._positive(k, kt, "substitution power")
        end = self._expect(")").end
        return Subst(operand, k, span=(start, end))


def parse(text: str) -> QExpr:
    return _Parser(text).parse()


# --- rendering ---------------------------------------------------------------

def _sgn(s: int) -> str:
    return "-" if s < 0 else ""


def _qpow(e: int) -> str:
    return "q" if e == 1 else f"q^{e}"


def render(node: QExpr) -> str:
    """Fully parenthesised text that parses back to an equal tree."""
    if isinstance(node, IntLiteral):
        return str(node.value)
    if isinstance(node, Monomial):
        body = _qpow(node.e)
        return body if node.c == 1 else f"({node.c}*{body})"
    if isinstance(node, PochSimple):
        return f"P({node.k})"
    if isinstance(node, Poch):
        return f"PG({'-' if node.sign < 0 else '+'},{node.r},{node.s})"
    if isinstance(node, Phi):
        return f"phi({_sgn(node.sign)}{_qpow(node.scale)})"
    if isinstance(node, Theta):
        return f"f({_sgn(node.a_sign)}{_qpow(node.a_exp)},{_sgn(node.b_sign)}{_qpow(node.b_exp)})"
    if isinstance(node, Neg):
        return f"-({render(node.operand)})"
    if isinstance(node, Pow):
        return f"({render(node.base)})^{node.exponent}"
    if isinstance(node, Subst):
        return f"S({render(node.operand)},{node.k})"
    op = {Add: "+", Sub: "-", Mul: "*", Div: "/"}[type(node)]
    return f"({render(node.left)} {op} {render(node.right)})"


# --- evaluation --------------------------------------------------------------

def _flatten(node: QExpr, exponent: int, out: list[tuple[QExpr, int]]) -> None:
    if isinstance(node, Mul):
        _flatten(node.left, exponent, out)
        _flatten(node.right, exponent, out)
    elif isinstance(node, Div):
        _flatten(node.left, exponent, out)
        _flatten(node.right, -exponent, out)
    elif isinstance(node, Pow):
        _flatten(node.base, exponent * node.exponent, out)
    else:
        out.append((node, exponent))


class _Evaluator:
    def __init__(self, order: int):
        self.order = order
        self.cache: dict[QExpr, TruncatedSeries] = {}

    def atom(self, node: QExpr) -> TruncatedSeries:
        hit = self.cache.get(node)
        if hit is None:
            hit = self._atom(node)
            self.cache[node] = hit
        return hit

    def _atom(self, node: QExpr) -> TruncatedSeries:
        n = self.order
        if isinstance(node, IntLiteral):
            return make_monomial(node.value, 0, n)
        if isinstance(node, Monomial):
            if node.e > n:
                return make_monomial(0, 0, n)
            return make_monomial(node.c, node.e, n)
        if isinstance(node, PochSimple):
            return products.pochhammer_simple(node.k, n)
        if isinstance(node, Poch):
            return products.pochhammer_general(products.PochhammerFactor(node.sign, node.r, node.s), n)
        if isinstance(node, Phi):
            return products.phi(node.sign, node.scale, n)
        if isinstance(node, Theta):
            return products.theta_f(node.a_sign, node.a_exp, node.b_sign, node.b_exp, n)
        if isinstance(node, Neg):
            return -self.eval(node.operand)
        if isinstance(node, Add):
            return self.eval(node.left) + self.eval(node.right)
        if isinstance(node, Sub):
            return self.eval(node.left) - self.eval(node.right)
        if isinstance(node, Subst):
            return substitute_power(self.eval(node.operand), node.k)
        raise TypeError(f"not an expression node: {node!r}")

    def eval(self, node: QExpr) -> TruncatedSeries:
        if not isinstance(node, (Mul, Div, Pow)):
            return self.atom(node)
        factors: list[tuple[QExpr, int]] = []
        _flatten(node, 1, factors)
        n = self.order
        acc = one(n)
        # numerators first, then divide out denominators; sparse factors are applied one copy at a time
        for sub, e in factors:
            if e <= 0:
                continue
            if isinstance(sub, IntLiteral):
                acc = scale(acc, sub.value**e)
                continue
            s = self.atom(sub)
            if e * len(s.nonzero()) <= 2 * (n + 1):
                for _ in range(e):
                    acc = mul(acc, s)
            else:
                acc = mul(acc, power(s, e))
        for sub, e in factors:
            if e >= 0:
                continue
            s = self.atom(sub)
            if s.coeffs[0] not in (1, -1):
                raise QExprNonUnitError(
                    f"denominator has constant term {s.coeffs[0]}, not +-1", sub.span
                )
            e = -e
            if e * len(s.nonzero()) <= 2 * (n + 1):
                for _ in range(e):
                    acc = divide(acc, s)
            else:
                acc = divide(acc, power(s, e))
        return acc


def evaluate(node: QExpr | str, order: int) -> TruncatedSeries:
    """Evaluate an expression (or its text) to a series of the given order."""
    if order < 0:
        raise QExprError(f"order must be non-negative, got {order}")
    if isinstance(node, str):
        node = parse(node)
    return _Evaluator(order).eval(node)


# --- templates ---------------------------------------------------------------

_PLACEHOLDER = re.compile(r"\{([^{}]*)\}")
_ALLOWED_BINOPS = (ast.Add, ast.Sub, ast.Mult, ast.Pow)


def eval_int_expr(text: str, bindings: Mapping[str, int]) -> int:
    """Integer arithmetic (``+ - * ^`` and parentheses) over bound names."""
    try:
        tree = ast.parse(text.replace("^", "**"), mode="eval")
    except SyntaxError as exc:
        raise TemplateError(f"bad placeholder arithmetic {text!r}") from exc

    def walk(node) -> int:
        if isinstance(node, ast.Expression):
            return walk(node.body)
        if isinstance(node, ast.Constant) and type(node.value) is int:
            return node.value
        if isinstance(node, ast.Name):
            if node.id not in bindings:
                raise TemplateError(f"unbound placeholder name {node.id!r} in {{{text}}}")
            return int(bindings[node.id])
        if isinstance(node, ast.UnaryOp) and isinstance(node.op, (ast.USub, ast.UAdd)):
            v = walk(node.operand)
            return -v if isinstance(node.op, ast.USub) else v
        if isinstance(node, ast.BinOp) and isinstance(node.op, _ALLOWED_BINOPS):
            left, right = walk(node.left), walk(node.right)
            if isinstance(node.op, ast.Add):
                return left + right
            if isinstance(node.op, ast.Sub):
                return left - right
            if isinstance(node.op, ast.Mult):
                return left * right
            if right < 0 or right > 4096:
                raise TemplateError(f"exponent {right} out of range in {{{text}}}")
            return left**right
        raise TemplateError(f"unsupported construct in placeholder {{{text}}}")

    return walk(tree)


def parametrize(template: str, bindings: Mapping[str, int]) -> str:
    def fill(m: re.Match) -> str:
        value = eval_int_expr(m.group(1), bindings)
        if value < 1:
            raise TemplateError(f"placeholder {{{m.group(1)}}} evaluated to {value}; must be positive")
        return str(value)

    return _PLACEHOLDER.sub(fill, template)
