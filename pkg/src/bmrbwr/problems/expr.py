"""User-defined problems from a plain-text definition file.

File format (one ``key: value`` per line, ``#`` starts a comment)::

    name: my-problem
    dimension: 2
    lower: -5            # one value for all variables, or comma-separated list
    upper: 5, 10
    sense: minimize      # optional, minimize | maximize
    objective: (x1 - 1)^2 + 3*x2^2
    ineq: x1 + x2 - 1    # g(x) <= 0, repeatable
    eq: x1 - 2*x2        # h(x) = 0, repeatable
    known_best: 0        # optional
    note: free text      # optional

Expression grammar (variables ``x1`` .. ``xm``)::

    expr   := term (('+' | '-') term)*
    term   := factor (('*' | '/') factor)*
    factor := ('+' | '-') factor | power
    power  := atom (('^' | '**') factor)?
    atom   := number | variable | constant | func '(' expr ')' | '(' expr ')'

Constants: ``pi``, ``e``. Functions: sin cos tan asin acos atan sinh cosh
tanh exp log log10 sqrt abs. ``^`` is exponentiation. Expressions are parsed
by this module's own recursive-descent parser, never by ``eval``.
"""

from __future__ import annotations

import re
from pathlib import Path

import numpy as np

from ..core import Bounds
from ..penalty import check_sense
from .base import ConstraintSet, ProblemSpec

FUNCTIONS = {
    "sin": np.sin, "cos": np.cos, "tan": np.tan, "asin": np.arcsin, "acos": np.arccos,
    "atan": np.arctan, "sinh": np.sinh, "cosh": np.cosh, "tanh": np.tanh, "exp": np.exp,
    "log": np.log, "log10": np.log10, "sqrt": np.sqrt, "abs": np.abs,
}
CONSTANTS = {"pi": np.pi, "e": np.e}

_TOKEN = re.compile(r"\s*(?:(\d+\.?\d*(?:[eE][+-]?\d+)?|\.\d+(?:[eE][+-]?\d+)?)|([A-Za-z_]\w*)|(\*\*|[-+*/^()]))")


class ExpressionError(ValueError):
    pass


def _tokenize(text: str):
    pos, tokens = 0, []
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ExpressionError(f"unexpected character at {pos} in {text!r}")
        num, name, op = m.groups()
        if num is not None:
            tokens.append(("num", float(num)))
        elif name is not None:
            tokens.append(("name", name))
        else:
            tokens.append(("op", "^" if op == "**" else op))
        pos = m.end()
    return tokens


class _Parser:
    """Builds a tree of tuples: ('num', v) ('var', j) ('neg', a) ('bin', op, a, b) ('call', f, a)."""

    def __init__(self, text, dimension):
        self.text = text
        self.tokens = _tokenize(text)
        self.i = 0
        self.dimension = dimension

    def peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else (None, None)

    def take(self, kind=None, value=None):
        tok = self.peek()
        if tok[0] is None or (kind and tok[0] != kind) or (value and tok[1] != value):
            want = value or kind or "token"
            raise ExpressionError(f"expected {want} in {self.text!r}, got {tok[1]!r}")
        self.i += 1
        return tok

    def parse(self):
        node = self.expr()
        if self.i != len(self.tokens):
            raise ExpressionError(f"trailing input {self.peek()[1]!r} in {self.text!r}")
        return node

    def expr(self):
        node = self.term()
        while self.peek() in (("op", "+"), ("op", "-")):
            op = self.take()[1]
            node = ("bin", op, node, self.term())
        return node

    def term(self):
        node = self.factor()
        while self.peek() in (("op", "*"), ("op", "/")):
            op = self.take()[1]
            node = ("bin", op, node, self.factor())
        return node

    def factor(self):
        if self.peek() == ("op", "-"):
            self.take()
            return ("neg", self.factor())
        if self.peek() == ("op", "+"):
            self.take()
            return self.factor()
        return self.power()

    def power(self):
        base = self.atom()
        if self.peek() == ("op", "^"):
            self.take()
            return ("bin", "^", base, self.factor())
        return base

    def atom(self):
        kind, value = self.peek()
        if kind == "num":
            self.take()
            return ("num", value)
        if kind == "name":
            self.take()
            if value in FUNCTIONS:
                self.take("op", "(")
                arg = self.expr()
                self.take("op", ")")
                return ("call", value, arg)
            if value in CONSTANTS:
                return ("num", CONSTANTS[value])
            m = re.fullmatch(r"x(\d+)", value)
            if m:
                j = int(m.group(1))
                if not 1 <= j <= self.dimension:
                    raise ExpressionError(f"variable {value} outside x1..x{self.dimension}")
                return ("var", j - 1)
            raise ExpressionError(f"unknown name {value!r} in {self.text!r}")
        if (kind, value) == ("op", "("):
            self.take()
            node = self.expr()
            self.take("op", ")")
            return node
        raise ExpressionError(f"unexpected {value!r} in {self.text!r}")


def _eval(node, X):
    tag = node[0]
    if tag == "num":
        return np.full(X.shape[0], node[1])
    if tag == "var":
        return X[:, node[1]]
    if tag == "neg":
        return -_eval(node[1], X)
    if tag == "call":
        return FUNCTIONS[node[1]](_eval(node[2], X))
    op, a, b = node[1], _eval(node[2], X), _eval(node[3], X)
    with np.errstate(all="ignore"):
        if op == "+":
            return a + b
        if op == "-":
            return a - b
        if op == "*":
            return a * b
        if op == "/":
            return a / b
        return np.power(a, b)


class Expression:
    """Compiled expression callable on a batch ``X`` of shape ``(n, m)``.

    Picklable: only the source text and dimension are stored.
    """

    def __init__(self, source: str, dimension: int):
        self.source = source
        self.dimension = dimension
        self._tree = _Parser(source, dimension).parse()

    def __call__(self, X):
        X = np.asarray(X, dtype=float)
        with np.errstate(all="ignore"):
            return _eval(self._tree, X)

    def __getstate__(self):
        return {"source": self.source, "dimension": self.dimension}

    def __setstate__(self, state):
        self.__init__(state["source"], state["dimension"])

    def __repr__(self):
        return f"Expression({self.source!r})"


def _floats(text: str, m: int, key: str):
    vals = [float(v) for v in text.split(",") if v.strip()]
    if len(vals) == 1:
        return vals * m
    if len(vals) != m:
        raise ValueError(f"{key}: expected 1 or {m} values, got {len(vals)}")
    return vals


def parse_problem(text: str) -> ProblemSpec:
    fields: dict[str, str] = {}
    ineqs, eqs = [], []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if ":" not in line:
            raise ValueError(f"line {lineno}: expected 'key: value'")
        key, value = (part.strip() for part in line.split(":", 1))
        key = key.lower()
        if key == "ineq":
            ineqs.append(value)
        elif key == "eq":
            eqs.append(value)
        elif key in {"name", "dimension", "lower", "upper", "sense", "objective",
                     "known_best", "note"}:
            fields[key] = value
        else:
            raise ValueError(f"line {lineno}: unknown key {key!r}")
    for required in ("name", "dimension", "lower", "upper", "objective"):
        if required not in fields:
            raise ValueError(f"problem file is missing '{required}'")
    m = int(fields["dimension"])
    bounds = Bounds(np.array(_floats(fields["lower"], m, "lower")),
                    np.array(_floats(fields["upper"], m, "upper")))
    cons = ConstraintSet(tuple(Expression(s, m) for s in ineqs),
                         tuple(Expression(s, m) for s in eqs), len(ineqs), len(eqs))
    known = fields.get("known_best")
    return ProblemSpec(
        name=fields["name"], dimension=m, bounds=bounds,
        objective=Expression(fields["objective"], m), constraints=cons,
        sense=check_sense(fields.get("sense", "minimize").lower()),
        known_best=float(known) if known not in (None, "") else None,
        source_note=fields.get("note", "user-defined problem file"),
        suite="engineering" if (ineqs or eqs) else "unconstrained",
    )


def load_problem(path) -> ProblemSpec:
    return parse_problem(Path(path).read_text())
