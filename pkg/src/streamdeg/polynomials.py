"""Exact univariate polynomials over the rationals.

Coefficients are ascending (coeffs[i] multiplies n**i), stored as
Fractions with trailing zeros stripped, so equal polynomials compare
equal structurally.  The zero polynomial is the empty tuple and has
degree -1 by convention.
"""
from __future__ import annotations

from fractions import Fraction
from math import ceil

Q = Fraction


def _as_q(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"not an exact rational: {x!r}")


class Polynomial:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [_as_q(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("Polynomial is immutable")

    # -- construction helpers -------------------------------------------

    @classmethod
    def const(cls, c) -> "Polynomial":
        return cls((_as_q(c),))

    @classmethod
    def x(cls) -> "Polynomial":
        return cls((0, 1))

    # -- basic queries ---------------------------------------------------

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    @property
    def leading(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Q(0)

    @property
    def constant(self) -> Fraction:
        return self.coeffs[0] if self.coeffs else Q(0)

    def __call__(self, n) -> Fraction:
        acc = Q(0)
        x = _as_q(n)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    # -- algebra ----------------------------------------------------------

    def __add__(self, other) -> "Polynomial":
        if not isinstance(other, Polynomial):
            other = Polynomial.const(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Polynomial(out)

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial(tuple(-c for c in self.coeffs))

    def __sub__(self, other) -> "Polynomial":
        if not isinstance(other, Polynomial):
            other = Polynomial.const(other)
        return self + (-other)

    def __rsub__(self, other) -> "Polynomial":
        return (-self) + other

    def __mul__(self, other) -> "Polynomial":
        if not isinstance(other, Polynomial):
            k = _as_q(other)
            return Polynomial(tuple(c * k for c in self.coeffs))
        if self.is_zero or other.is_zero:
            return Polynomial()
        out = [Q(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Polynomial(out)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "Polynomial":
        k = _as_q(other)
        if k == 0:
            raise ZeroDivisionError("polynomial divided by zero constant")
        return self * (Q(1) / k)

    def compose_affine(self, a, b) -> "Polynomial":
        """p(a*n + b), exact, via Horner in the affine argument."""
        arg = Polynomial((_as_q(b), _as_q(a)))
        acc = Polynomial()
        for c in reversed(self.coeffs):
            acc = acc * arg + c
        return acc

    def shift_arg(self, k) -> "Polynomial":
        """p(n + k)."""
        return self.compose_affine(1, k)

    def derivative(self) -> "Polynomial":
        return Polynomial(tuple(c * i for i, c in enumerate(self.coeffs) if i))

    def min_arg_bound(self) -> int:
        """Integer B such that p is nondecreasing on [B, oo).

        Requires positive leading coefficient (or a constant).  Uses the
        Cauchy root bound of the derivative, so the exact minimum of p
        over any arithmetic progression of naturals is attained at an
        argument below B (or at the progression start).
        """
        if self.is_constant:
            return 0
        if self.leading <= 0:
            raise ValueError("unbounded below: leading coefficient not positive")
        d = self.derivative()
        lead = d.leading
        bound = 1 + max(abs(c / lead) for c in d.coeffs)
        return max(0, ceil(bound))

    # -- comparisons / hashing / display ----------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"Polynomial({list(self.coeffs)!r})"

    def __str__(self):
        if self.is_zero:
            return "0"
        parts = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            if i == 0:
                term = _frac_str(c)
            else:
                var = "n" if i == 1 else f"n^{i}"
                if c == 1:
                    term = var
                elif c == -1:
                    term = f"-{var}"
                else:
                    term = f"{_frac_str(c)}*{var}"
            parts.append(term)
        out = parts[0]
        for term in parts[1:]:
            out += " - " + term[1:] if term.startswith("-") else " + " + term
        return out


def _frac_str(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


ZERO = Polynomial()
X = Polynomial.x()
