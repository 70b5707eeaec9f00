"""Expression language for elements of either Weil algebra.

Grammar (whitespace-insensitive):

    expr    := term (('+' | '-') term)*
    term    := factor (('*' | tensor sign) factor)*
    factor  := '-' factor | atom ('^' INT)?
    atom    := RATIONAL | MATRIX | GENERATOR | NAME | CALL | '(' expr ')'

    RATIONAL  := INT ('/' INT)?
    MATRIX    := '[' '[' signed (',' signed)* ']' (',' '[' ... ']')* ']'
    GENERATOR := v<i> y<i>          (classical)   u<i> x<i>   (quantum)
    NAME      := C | QC | gamma | Dirac | I
    CALL      := d(e) | L(i, e) | iota(i, e) | comm(e, e) | tau(i)

Hand-written recursive descent; errors carry (line, column) and what was
expected.  Parsing is context-free; whether a generator or named element
is legal in the session's algebra is decided at evaluation time.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from . import classical as cw
from . import quantum as qw
from .linalg import Matrix


class ExprError(Exception):
    """Parse or evaluation error with a source position."""

    def __init__(self, message, pos=None):
        self.message = message
        self.pos = pos  # (line, column), 1-based
        super().__init__(str(self))

    def __str__(self):
        if self.pos:
            return f"{self.pos[0]}:{self.pos[1]}: {self.message}"
        return self.message


# -- AST ---------------------------------------------------------------------

@dataclass
class Node:
    pos: tuple


@dataclass
class Lit(Node):
    value: Fraction


@dataclass
class MatLit(Node):
    rows: list


@dataclass
class Gen(Node):
    letter: str
    index: int  # 1-based as written


@dataclass
class Name(Node):
    name: str  # C, QC, gamma, Dirac, I


@dataclass
class Tau(Node):
    index: int


@dataclass
class Neg(Node):
    arg: Node


@dataclass
class BinOp(Node):
    op: str  # '+', '-', '*'
    left: Node
    right: Node


@dataclass
class Pow(Node):
    base: Node
    exponent: int


@dataclass
class Comm(Node):
    left: Node
    right: Node


@dataclass
class OpApply(Node):
    op: str  # 'd', 'L', 'iota'
    index: int | None
    arg: Node


# -- lexer --------------------------------------------------------------------

_TOKEN = re.compile(
    r"""(?P<ws>\s+)
      | (?P<int>\d+)
      | (?P<ident>[A-Za-z]+\d*)
      | (?P<op>⊗|−|[-+*/^(),\[\]])
    """,
    re.VERBOSE,
)

_GEN = re.compile(r"([vyux])(\d+)$")
_NAMES = ("C", "QC", "gamma", "Dirac", "I")
_CALLS = ("d", "L", "iota", "comm", "tau")


@dataclass
class Token:
    kind: str  # 'int', 'ident', or the operator character
    text: str
    pos: tuple


def tokenize(src):
    tokens = []
    line, col = 1, 1
    i = 0
    while i < len(src):
        m = _TOKEN.match(src, i)
        if not m:
            raise ExprError(f"unexpected character {src[i]!r}", (line, col))
        text = m.group(0)
        kind = m.lastgroup
        if kind != "ws":
            if kind == "op":
                ch = text
                if ch == "−":
                    ch = "-"
                if ch == "⊗":
                    ch = "*"
                tokens.append(Token(ch, text, (line, col)))
            else:
                tokens.append(Token(kind, text, (line, col)))
        for ch in text:
            if ch == "\n":
                line += 1
                col = 1
            else:
                col += 1
        i = m.end()
    tokens.append(Token("eof", "", (line, col)))
    return tokens


# -- parser --------------------------------------------------------------------

class Parser:
    def __init__(self, src):
        self.tokens = tokenize(src)
        self.i = 0

    @property
    def cur(self) -> Token:
        return self.tokens[self.i]

    def advance(self) -> Token:
        tok = self.cur
        self.i += 1
        return tok

    def expect(self, kind, what=None):
        if self.cur.kind != kind:
            want = what or repr(kind)
            got = self.cur.text or "end of input"
            raise ExprError(f"expected {want}, got {got!r}", self.cur.pos)
        return self.advance()

    def parse(self) -> Node:
        e = self.expr()
        if self.cur.kind != "eof":
            raise ExprError(
                f"expected '+', '-', '*', or end of input, got {self.cur.text!r}",
                self.cur.pos,
            )
        return e

    def expr(self) -> Node:
        node = self.term()
        while self.cur.kind in ("+", "-"):
            op = self.advance()
            node = BinOp(op.pos, op.kind, node, self.term())
        return node

    def term(self) -> Node:
        node = self.factor()
        while self.cur.kind == "*":
            op = self.advance()
            node = BinOp(op.pos, "*", node, self.factor())
        return node

    def factor(self) -> Node:
        if self.cur.kind == "-":
            tok = self.advance()
            return Neg(tok.pos, self.factor())
        node = self.atom()
        if self.cur.kind == "^":
            self.advance()
            exp = self.expect("int", "a non-negative integer exponent")
            node = Pow(node.pos, node, int(exp.text))
        return node

    def atom(self) -> Node:
        tok = self.cur
        if tok.kind == "int":
            self.advance()
            num = int(tok.text)
            if self.cur.kind == "/":
                self.advance()
                den = self.expect("int", "a denominator")
                return Lit(tok.pos, Fraction(num, int(den.text)))
            return Lit(tok.pos, Fraction(num))
        if tok.kind == "[":
            return self.matrix()
        if tok.kind == "(":
            self.advance()
            node = self.expr()
            self.expect(")")
            return node
        if tok.kind == "ident":
            return self.ident()
        raise ExprError(
            f"expected a number, generator, call, '(', or '[', got {tok.text or 'end of input'!r}",
            tok.pos,
        )

    def ident(self) -> Node:
        tok = self.advance()
        name = tok.text
        m = _GEN.match(name)
        if m:
            return Gen(tok.pos, m.group(1), int(m.group(2)))
        if name in _NAMES:
            return Name(tok.pos, name)
        if name == "tau":
            self.expect("(")
            idx = self.expect("int", "a generator index")
            self.expect(")")
            return Tau(tok.pos, int(idx.text))
        if name == "comm":
            self.expect("(")
            left = self.expr()
            self.expect(",")
            right = self.expr()
            self.expect(")")
            return Comm(tok.pos, left, right)
        if name == "d":
            self.expect("(")
            arg = self.expr()
            self.expect(")")
            return OpApply(tok.pos, "d", None, arg)
        if name in ("L", "iota"):
            self.expect("(")
            idx = self.expect("int", "a generator index")
            self.expect(",")
            arg = self.expr()
            self.expect(")")
            return OpApply(tok.pos, name, int(idx.text), arg)
        raise ExprError(f"unknown identifier {name!r}", tok.pos)

    def matrix(self) -> Node:
        start = self.expect("[")
        rows = []
        while True:
            rows.append(self.matrix_row())
            if self.cur.kind == ",":
                self.advance()
                continue
            break
        self.expect("]")
        return MatLit(start.pos, rows)

    def matrix_row(self):
        self.expect("[", "'[' opening a matrix row")
        row = [self.signed_scalar()]
        while self.cur.kind == ",":
            self.advance()
            row.append(self.signed_scalar())
        self.expect("]")
        return row

    def signed_scalar(self) -> Fraction:
        neg = False
        while self.cur.kind == "-":
            self.advance()
            neg = not neg
        tok = self.expect("int", "a rational matrix entry")
        num = int(tok.text)
        val = Fraction(num)
        if self.cur.kind == "/":
            self.advance()
            den = self.expect("int", "a denominator")
            val = Fraction(num, int(den.text))
        return -val if neg else val


def parse(src: str) -> Node:
    return Parser(src).parse()


# -- evaluator ------------------------------------------------------------------

class Evaluator:
    """Evaluate an AST in one algebra session: (lie, rep, context)."""

    def __init__(self, lie, rep, context):
        if context not in ("classical", "quantum"):
            raise ValueError(f"context must be classical or quantum, not {context!r}")
        self.lie = lie
        self.rep = rep
        self.context = context
        self.mod = cw if context == "classical" else qw

    def _check_index(self, idx, pos):
        if not 1 <= idx <= self.lie.dim:
            raise ExprError(f"generator index {idx} out of range 1..{self.lie.dim}", pos)
        return idx - 1

    def eval(self, node):
        method = getattr(self, f"_eval_{type(node).__name__.lower()}")
        return method(node)

    def _eval_lit(self, node):
        return self.mod.scalar(self.lie, self.rep, node.value)

    def _eval_matlit(self, node):
        widths = {len(r) for r in node.rows}
        if len(widths) != 1:
            raise ExprError("matrix rows have unequal lengths", node.pos)
        mat = Matrix.from_rows(node.rows)
        if mat.rows != self.rep.dim or mat.cols != self.rep.dim:
            raise ExprError(
                f"matrix literal is {mat.rows}x{mat.cols}; the representation "
                f"needs {self.rep.dim}x{self.rep.dim}",
                node.pos,
            )
        return self.mod.endo(self.lie, self.rep, mat)

    def _eval_gen(self, node):
        a = self._check_index(node.index, node.pos)
        table = {
            ("classical", "v"): lambda: cw.sym_gen(self.lie, self.rep, a),
            ("classical", "y"): lambda: cw.ext_gen(self.lie, self.rep, a),
            ("quantum", "u"): lambda: qw.u_gen(self.lie, self.rep, a),
            ("quantum", "x"): lambda: qw.x_gen(self.lie, self.rep, a),
        }
        make = table.get((self.context, node.letter))
        if make is None:
            raise ExprError(
                f"generator {node.letter}{node.index} is not part of the "
                f"{self.context} algebra",
                node.pos,
            )
        return make()

    def _eval_name(self, node):
        name = node.name
        if name == "I":
            return self.mod.unit(self.lie, self.rep)
        if name == "C":
            if self.context != "classical":
                raise ExprError("C is the classical curvature; use QC here", node.pos)
            return cw.curvature(self.lie, self.rep)
        if self.context != "quantum":
            raise ExprError(f"{name} only exists in the quantum algebra", node.pos)
        if name == "QC":
            return qw.curvature(self.lie, self.rep)
        if name == "gamma":
            return qw.distinguished(self.lie, self.rep).gamma
        return qw.distinguished(self.lie, self.rep).dirac

    def _eval_tau(self, node):
        a = self._check_index(node.index, node.pos)
        return self.mod.tau(self.lie, self.rep, a)

    def _eval_neg(self, node):
        return -self.eval(node.arg)

    def _eval_binop(self, node):
        left = self.eval(node.left)
        right = self.eval(node.right)
        if node.op == "+":
            return left + right
        if node.op == "-":
            return left - right
        return left * right

    def _eval_pow(self, node):
        base = self.eval(node.base)
        out = self.mod.unit(self.lie, self.rep)
        for _ in range(node.exponent):
            out = out * base
        return out

    def _eval_comm(self, node):
        return self.mod.supercommutator(self.eval(node.left), self.eval(node.right))

    def _eval_opapply(self, node):
        arg = self.eval(node.arg)
        if node.op == "d":
            return self.mod.differential(arg)
        a = self._check_index(node.index, node.pos)
        if node.op == "L":
            return self.mod.lie_derivative(a, arg)
        return self.mod.contraction(a, arg)


def evaluate(src_or_node, lie, rep, context):
    node = parse(src_or_node) if isinstance(src_or_node, str) else src_or_node
    return Evaluator(lie, rep, context).eval(node)


def render(element) -> str:
    from .render import render_classical, render_quantum

    if isinstance(element, cw.ClassicalElement):
        return render_classical(element)
    return render_quantum(element)
