"""Text forms for the core objects.

Function literals:
    poly: n^2 + 3*n
    pw mod 2 { r0: 1/2*n; r1: n - 1 }
    fzip(poly: n, poly: n^2)
    exp(3, 2)
    shift(poly: n^2, 4)

Pipeline literals (operations joined by '|'):
    drop 2 | add {0}%2 3 | merge [[1,0],[1,1,0]] | select {0}%2

Weight tuples are JSON lists of rows, each row the coefficients
followed by the constant; non-integer entries are "p/q" strings.
Certificates are JSON objects over those forms.

str() on the corresponding objects produces these literals back.
"""
from __future__ import annotations

import json
import re

from .blockops import (
    AddZeros,
    DivBlock,
    DropBlocks,
    MergeWeights,
    MulBlock,
    Pipeline,
    PrependBlocks,
    SelectResidues,
    SubZeros,
)
from .piecewise import BlockFunction, Exponential, Fzip, PiecewisePoly, shifted
from .polynomials import Polynomial, X
from .weights import Certificate, Weight, WeightTuple


class LiteralError(ValueError):
    def __init__(self, message, text, pos):
        self.pos = pos
        super().__init__(f"{message}\n  {text}\n  {' ' * pos}^")


_TOKEN = re.compile(r"(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(\S)")


def _tokenize(text):
    out = []
    for m in _TOKEN.finditer(text):
        if m.group(1):
            out.append(("int", m.group(1), m.start()))
        elif m.group(2):
            out.append(("name", m.group(2), m.start()))
        else:
            out.append(("sym", m.group(3), m.start()))
    return out


class _Parser:
    def __init__(self, text):
        self.text = text
        self.toks = _tokenize(text)
        self.i = 0

    def error(self, message, pos=None):
        if pos is None:
            pos = self.peek()[2]
        raise LiteralError(message, self.text, pos)

    def peek(self):
        if self.i < len(self.toks):
            return self.toks[self.i]
        return ("end", "", len(self.text))

    def take(self):
        tok = self.peek()
        if tok[0] != "end":
            self.i += 1
        return tok

    def accept(self, kind, value=None):
        k, v, _ = self.peek()
        if k == kind and (value is None or v == value):
            return self.take()
        return None

    def expect(self, kind, value=None, what=None):
        tok = self.accept(kind, value)
        if tok is None:
            self.error(f"expected {what or value or kind}")
        return tok

    def expect_int(self) -> int:
        return int(self.expect("int", what="a number")[1])

    def expect_end(self):
        if self.peek()[0] != "end":
            self.error("unexpected trailing input")

    # -- function literals -------------------------------------------------

    def function(self) -> BlockFunction:
        k, v, _ = self.peek()
        if k != "name":
            self.error("expected a function literal (poly/pw/fzip/exp/shift)")
        if v == "poly":
            self.take()
            self.expect("sym", ":")
            return PiecewisePoly.from_poly(self.expr())
        if v == "pw":
            self.take()
            if self.expect("name", what="'mod'")[1] != "mod":
                self.error("expected 'mod'")
            n = self.expect_int()
            if n < 1:
                self.error("modulus must be >= 1")
            self.expect("sym", "{")
            pieces = []
            for r in range(n):
                label = self.expect("name", what=f"label r{r}")
                if label[1] != f"r{r}":
                    self.error(f"expected label r{r}", label[2])
                self.expect("sym", ":")
                pieces.append(self.expr())
                if r + 1 < n:
                    self.expect("sym", ";")
            self.expect("sym", "}")
            return PiecewisePoly(pieces)
        if v == "fzip":
            self.take()
            self.expect("sym", "(")
            left = self.function()
            self.expect("sym", ",")
            right = self.function()
            self.expect("sym", ")")
            return Fzip(left, right)
        if v == "exp":
            self.take()
            self.expect("sym", "(")
            a = self.expect_int()
            self.expect("sym", ",")
            b = self.expect_int()
            self.expect("sym", ")")
            return Exponential(a, b)
        if v == "shift":
            self.take()
            self.expect("sym", "(")
            f = self.function()
            self.expect("sym", ",")
            s = self.expect_int()
            self.expect("sym", ")")
            return shifted(f, s)
        self.error(f"unknown function form '{v}'")

    def expr(self) -> Polynomial:
        t = self.term()
        while True:
            if self.accept("sym", "+"):
                t = t + self.term()
            elif self.accept("sym", "-"):
                t = t - self.term()
            else:
                return t

    def term(self) -> Polynomial:
        f = self.factor()
        while True:
            if self.accept("sym", "*"):
                f = f * self.factor()
            elif self.accept("sym", "/"):
                pos = self.peek()[2]
                d = self.factor()
                if not d.is_constant:
                    self.error("divisor must be a constant", pos)
                if d.constant == 0:
                    self.error("division by zero", pos)
                f = f / d.constant
            else:
                return f

    def factor(self) -> Polynomial:
        if self.accept("sym", "-"):
            return -self.factor()
        if self.accept("sym", "+"):
            return self.factor()
        base = self.atom()
        if self.accept("sym", "^"):
            e = self.expect_int()
            out = Polynomial.const(1)
            for _ in range(e):
                out = out * base
            return out
        return base

    def atom(self) -> Polynomial:
        k, v, _ = self.peek()
        if k == "int":
            self.take()
            return Polynomial.const(int(v))
        if k == "name" and v == "n":
            self.take()
            return X
        if self.accept("sym", "("):
            e = self.expr()
            self.expect("sym", ")")
            return e
        self.error("expected a number, n, or a parenthesized expression")

    # -- pipeline literals ---------------------------------------------------

    def pipeline(self) -> Pipeline:
        ops = [self.op()]
        while self.accept("sym", "|"):
            ops.append(self.op())
        return Pipeline(tuple(ops))

    def op(self):
        tok = self.expect("name", what="an operation name")
        name = tok[1]
        if name == "drop":
            return DropBlocks(self.expect_int())
        if name == "prepend":
            return PrependBlocks(tuple(self.int_list()))
        if name == "add":
            rs, n = self.residues()
            return AddZeros(rs, n, self.expect_int())
        if name == "sub":
            rs, n = self.residues()
            return SubZeros(rs, n, self.expect_int())
        if name == "mul":
            rs, n = self.residues()
            return MulBlock(rs, n, self.expect_int())
        if name == "div":
            rs, n = self.residues()
            return DivBlock(rs, n, self.expect_int())
        if name == "select":
            rs, n = self.residues()
            return SelectResidues(rs, n)
        if name == "merge":
            pos = self.peek()[2]
            rows = self.int_rows()
            if not rows or any(len(row) < 2 for row in rows):
                self.error("each merge row needs coefficients and a constant", pos)
            return MergeWeights(
                WeightTuple([Weight(row[:-1], row[-1]) for row in rows])
            )
        self.error(f"unknown operation '{name}'", tok[2])

    def residues(self):
        self.expect("sym", "{")
        rs = {self.expect_int()}
        while self.accept("sym", ","):
            rs.add(self.expect_int())
        self.expect("sym", "}")
        self.expect("sym", "%")
        return frozenset(rs), self.expect_int()

    def signed_int(self) -> int:
        neg = self.accept("sym", "-")
        v = self.expect_int()
        return -v if neg else v

    def int_list(self) -> list[int]:
        self.expect("sym", "[")
        if self.accept("sym", "]"):
            return []
        vals = [self.signed_int()]
        while self.accept("sym", ","):
            vals.append(self.signed_int())
        self.expect("sym", "]")
        return vals

    def int_rows(self) -> list[list[int]]:
        self.expect("sym", "[")
        if self.accept("sym", "]"):
            return []
        rows = [self.int_list()]
        while self.accept("sym", ","):
            rows.append(self.int_list())
        self.expect("sym", "]")
        return rows


def parse_function(text: str) -> BlockFunction:
    p = _Parser(text)
    f = p.function()
    p.expect_end()
    return f


def parse_pipeline(text: str) -> Pipeline:
    p = _Parser(text)
    pl = p.pipeline()
    p.expect_end()
    return pl


# -- weight tuples and certificates as JSON --------------------------------


def _entry_to_json(e):
    return int(e) if e.denominator == 1 else f"{e.numerator}/{e.denominator}"


def _entry_from_json(x):
    if isinstance(x, bool) or not isinstance(x, (int, str)):
        raise ValueError(f"weight entries must be integers or 'p/q' strings: {x!r}")
    return x


def format_weight_tuple(ws: WeightTuple) -> str:
    rows = [[_entry_to_json(e) for e in w.entries()] for w in ws]
    return json.dumps(rows, separators=(",", ":"))


def parse_weight_tuple(text: str) -> WeightTuple:
    try:
        rows = json.loads(text)
    except json.JSONDecodeError as e:
        raise ValueError(f"weight tuple is not valid JSON: {e}") from None
    if not isinstance(rows, list) or not all(isinstance(r, list) for r in rows):
        raise ValueError("weight tuple must be a JSON list of rows")
    for row in rows:
        if len(row) < 2:
            raise ValueError("each row needs coefficients and a constant")
        for x in row:
            _entry_from_json(x)
    return WeightTuple([Weight([str(c) for c in row[:-1]], str(row[-1])) for row in rows])


def certificate_to_json(cert: Certificate) -> str:
    doc = {
        "source": str(cert.source),
        "target": str(cert.target),
        "weights": json.loads(format_weight_tuple(cert.weights)),
        "m0": cert.m0,
        "n0": cert.n0,
        "depth": cert.depth,
    }
    return json.dumps(doc, indent=2)


def certificate_from_json(text: str) -> Certificate:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise ValueError(f"certificate is not valid JSON: {e}") from None
    if not isinstance(doc, dict):
        raise ValueError("certificate must be a JSON object")
    for key in ("source", "target", "weights"):
        if key not in doc:
            raise ValueError(f"certificate is missing '{key}'")
    ws = parse_weight_tuple(json.dumps(doc["weights"]))
    m0 = doc.get("m0", 0)
    n0 = doc.get("n0", 0)
    depth = doc.get("depth", 256)
    for name, v in (("m0", m0), ("n0", n0), ("depth", depth)):
        if not isinstance(v, int) or v < 0:
            raise ValueError(f"'{name}' must be a natural number")
    return Certificate(
        source=parse_function(doc["source"]),
        target=parse_function(doc["target"]),
        weights=ws,
        m0=m0,
        n0=n0,
        depth=depth,
    )
