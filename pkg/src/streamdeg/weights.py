"""Weighted block sums and their exact closure on piecewise polynomials.

A weight <a0,...,a_{k-1}, b> sends k consecutive values of a function to
sum(a_i * f(i)) + b.  A tuple of weights is applied cyclically, each
application advancing the argument by the weight's span (its coefficient
count), so outputs n..n+m-1 together consume norm-many consecutive
inputs.  That bookkeeping is what both the numeric recursion and the
symbolic closure below implement.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd, lcm

from .polynomials import Polynomial, Q, _as_q, _frac_str
from .piecewise import BlockFunction, PiecewisePoly, pw_equal, pw_shift, shifted


class Weight:
    """Coefficients (each >= 0, at least one entry) plus a constant."""

    __slots__ = ("coeffs", "const")

    def __init__(self, coeffs, const=0):
        cs = tuple(_as_q(c) for c in coeffs)
        if not cs:
            raise ValueError("a weight needs at least one coefficient")
        if any(c < 0 for c in cs):
            raise ValueError("weight coefficients must be nonnegative")
        object.__setattr__(self, "coeffs", cs)
        object.__setattr__(self, "const", _as_q(const))

    def __setattr__(self, name, value):
        raise AttributeError("Weight is immutable")

    @property
    def span(self) -> int:
        """Inputs consumed per application (entry count minus one)."""
        return len(self.coeffs)

    @property
    def is_constant(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def apply(self, values) -> Fraction:
        vals = tuple(values)
        if len(vals) != self.span:
            raise ValueError(f"weight of span {self.span} applied to {len(vals)} values")
        return sum((c * _as_q(v) for c, v in zip(self.coeffs, vals)), self.const)

    def entries(self) -> tuple[Fraction, ...]:
        return self.coeffs + (self.const,)

    def __eq__(self, other):
        if not isinstance(other, Weight):
            return NotImplemented
        return self.entries() == other.entries()

    def __hash__(self):
        return hash(self.entries())

    def __repr__(self):
        return f"Weight({[str(c) for c in self.coeffs]}, {self.const})"

    def __str__(self):
        return "<" + ",".join(_frac_str(e) for e in self.entries()) + ">"


class WeightTuple:
    __slots__ = ("weights",)

    def __init__(self, weights):
        ws = tuple(w if isinstance(w, Weight) else Weight(w[:-1], w[-1]) for w in weights)
        if not ws:
            raise ValueError("a weight tuple needs at least one weight")
        if all(w.is_constant for w in ws):
            raise ValueError("all-constant weight tuple: product degenerates")
        object.__setattr__(self, "weights", ws)

    def __setattr__(self, name, value):
        raise AttributeError("WeightTuple is immutable")

    def __len__(self):
        return len(self.weights)

    def __iter__(self):
        return iter(self.weights)

    def __getitem__(self, i):
        return self.weights[i]

    @property
    def norm(self) -> int:
        return sum(w.span for w in self.weights)

    @property
    def is_natural(self) -> bool:
        return all(e.denominator == 1 for w in self.weights for e in w.entries())

    def spans(self) -> tuple[int, ...]:
        return tuple(w.span for w in self.weights)

    def __eq__(self, other):
        if not isinstance(other, WeightTuple):
            return NotImplemented
        return self.weights == other.weights

    def __hash__(self):
        return hash(self.weights)

    def __repr__(self):
        return f"WeightTuple({list(self.weights)!r})"

    def __str__(self):
        return "<" + ", ".join(str(w) for w in self.weights) + ">"

    def to_lists(self):
        return [[e for e in w.entries()] for w in self.weights]


def tuple_norm(ws: WeightTuple) -> int:
    """Total input consumption per cycle: sum of (size - 1) over weights."""
    return ws.norm


def naturalize(ws: WeightTuple) -> tuple[WeightTuple, int]:
    """Scale to integer entries by the lcm of all denominators.

    Returns (scaled tuple, scale).  Scaling multiplies every output of
    the product by the scale, which a DivBlock can undo block-wise.
    """
    scale = 1
    for w in ws.weights:
        for e in w.entries():
            scale = lcm(scale, e.denominator)
    if scale == 1:
        return ws, 1
    scaled = WeightTuple(
        [Weight([c * scale for c in w.coeffs], w.const * scale) for w in ws.weights]
    )
    return scaled, scale


def _fval(f, n: int):
    return f.value(n) if hasattr(f, "value") else f(n)


def weight_product_numeric(ws: WeightTuple, f, n: int) -> Fraction:
    """(ws (x) f)(n) by the defining recursion, unrolled iteratively.

    Each step peels the leading weight and shifts the argument by its
    span; after n steps the head weight is applied directly.
    """
    if n < 0:
        raise ValueError("index must be a natural number")
    m = len(ws.weights)
    base = 0
    for step in range(n):
        base += ws.weights[step % m].span
    w = ws.weights[n % m]
    return w.apply([_fval(f, base + t) for t in range(w.span)])


def weight_product_values(ws: WeightTuple, f, count: int) -> list[Fraction]:
    """First `count` outputs, sharing the consumption bookkeeping."""
    out = []
    base = 0
    m = len(ws.weights)
    for n in range(count):
        w = ws.weights[n % m]
        out.append(w.apply([_fval(f, base + t) for t in range(w.span)]))
        base += w.span
    return out


def weight_product_form(ws: WeightTuple, n: int):
    """Output n of the product as a linear form over source values.

    Returns ({source index: coefficient}, constant); zero coefficients
    are kept so the consumed window is visible.
    """
    if n < 0:
        raise ValueError("index must be a natural number")
    m = len(ws.weights)
    base = sum(ws.weights[s % m].span for s in range(n))
    w = ws.weights[n % m]
    return {base + t: w.coeffs[t] for t in range(w.span)}, w.const


def weight_product_symbolic(ws: WeightTuple, f: PiecewisePoly) -> PiecewisePoly:
    """Exact piecewise form of the product of ws with a piecewise f.

    Output index n = q*m + i applies weight i at base q*L + c_i, with
    L the tuple norm and c_i the spans before i.  Which piece of f each
    consumed slot lands in depends on q only through q mod N/gcd(L, N),
    so modulus m * N/gcd(L, N) suffices; the constructor then minimizes
    it.  Rational tuples can yield rational-valued output classes, so
    the integrality check is deliberately skipped here.
    """
    if not isinstance(f, PiecewisePoly):
        raise TypeError("symbolic product needs a PiecewisePoly argument")
    m = len(ws.weights)
    big_l = ws.norm
    n_mod = f.modulus
    period = n_mod // gcd(big_l, n_mod)
    out_mod = m * period
    prefix_spans = [0]
    for w in ws.weights:
        prefix_spans.append(prefix_spans[-1] + w.span)
    pieces = []
    for rho in range(out_mod):
        i = rho % m
        q0 = rho // m
        c_i = prefix_spans[i]
        w = ws.weights[i]
        acc = Polynomial.const(w.const)
        for t in range(w.span):
            if w.coeffs[t] == 0:
                continue
            src = f.pieces[(big_l * q0 + c_i + t) % n_mod]
            arg = src.compose_affine(Q(big_l, m), c_i + t - Q(big_l * i, m))
            acc = acc + w.coeffs[t] * arg
        pieces.append(acc)
    return PiecewisePoly(pieces, check_integrality=False)


# -- certificates ----------------------------------------------------------


@dataclass(frozen=True)
class ProvedSymbolic:
    detail: str = "piecewise forms coincide"


@dataclass(frozen=True)
class VerifiedToDepth:
    depth: int


@dataclass(frozen=True)
class Refuted:
    index: int


@dataclass(frozen=True)
class Certificate:
    """Claim: shift(target, n0) == weights (x) shift(source, m0)."""

    source: BlockFunction
    target: BlockFunction
    weights: WeightTuple
    m0: int = 0
    n0: int = 0
    depth: int = 256


def certificate_check(cert: Certificate, depth: int | None = None):
    """Decide a certificate: symbolically when both sides are symbolic,
    otherwise pointwise to the requested depth.

    Returns ProvedSymbolic, VerifiedToDepth or Refuted carrying the
    least failing index.
    """
    depth = cert.depth if depth is None else depth
    if cert.m0 < 0 or cert.n0 < 0:
        raise ValueError("shifts must be natural numbers")
    if cert.source.is_symbolic and cert.target.is_symbolic:
        lhs = pw_shift(cert.target.as_piecewise(), cert.n0)
        rhs = weight_product_symbolic(
            cert.weights, pw_shift(cert.source.as_piecewise(), cert.m0)
        )
        if pw_equal(lhs, rhs):
            return ProvedSymbolic()
        # distinct piecewise forms must differ within one period of
        # degree+1 class points; scan for the least witness
        m = lcm(lhs.modulus, rhs.modulus)
        deg = max(
            max(p.degree for p in lhs.pieces), max(p.degree for p in rhs.pieces), 0
        )
        horizon = m * (deg + 2)
        for n in range(horizon):
            if lhs.pieces[n % lhs.modulus](n) != rhs.pieces[n % rhs.modulus](n):
                return Refuted(n)
        raise AssertionError("unequal piecewise forms with no pointwise witness")
    src = shifted(cert.source, cert.m0)
    for n in range(depth):
        want = _fval(shifted(cert.target, cert.n0), n)
        got = weight_product_numeric(cert.weights, src, n)
        if got != want:
            return Refuted(n)
    return VerifiedToDepth(depth)
