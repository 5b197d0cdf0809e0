"""Block functions: the integer sequences whose values become block sizes.

The workhorse is PiecewisePoly: one rational-coefficient polynomial per
residue class mod N, integer-valued on its class, canonicalized to the
least modulus.  Exponential, Fzip and Shifted wrap the evaluation-only
variants; where both halves of an Fzip (or the base of a Shifted) are
symbolic the wrapper converts to a PiecewisePoly on demand.
"""
from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm

from .polynomials import Polynomial, Q, _frac_str


class NotSymbolicError(TypeError):
    """Raised when an exact piecewise form is requested but none exists."""


class BlockFunction:
    """Abstract integer sequence n -> value, evaluated exactly."""

    def value(self, n: int) -> int:
        raise NotImplementedError

    def __call__(self, n: int) -> int:
        return self.value(n)

    @property
    def is_symbolic(self) -> bool:
        return False

    def as_piecewise(self) -> "PiecewisePoly":
        raise NotSymbolicError(f"{self!r} has no exact piecewise form")


class PiecewisePoly(BlockFunction):
    """f(n) = pieces[n mod modulus](n), canonical minimal modulus.

    Every piece must take integer values on its whole residue class;
    this is checked at construction on degree+1 points per class, which
    pins the Newton coefficients and hence decides integrality for the
    entire class.
    """

    __slots__ = ("modulus", "pieces")

    def __init__(self, pieces, check_integrality: bool = True):
        ps = tuple(p if isinstance(p, Polynomial) else Polynomial(p) for p in pieces)
        if not ps:
            raise ValueError("need at least one piece")
        n = len(ps)
        # canonical form: least divisor d of n with pieces repeating mod d
        for d in sorted(_divisors(n)):
            if all(ps[r] == ps[r % d] for r in range(n)):
                ps = ps[:d]
                n = d
                break
        object.__setattr__(self, "modulus", n)
        object.__setattr__(self, "pieces", ps)
        if check_integrality:
            bad = self._integrality_witness()
            if bad is not None:
                raise ValueError(
                    f"piece for class {bad[0]} (mod {n}) is not integer-valued: "
                    f"value {bad[2]} at n={bad[1]}"
                )

    def __setattr__(self, name, value):
        raise AttributeError("PiecewisePoly is immutable")

    def _integrality_witness(self):
        for r, p in enumerate(self.pieces):
            for t in range(p.degree + 2):
                v = p(r + self.modulus * t)
                if v.denominator != 1:
                    return (r, r + self.modulus * t, v)
        return None

    @classmethod
    def from_poly(cls, p) -> "PiecewisePoly":
        return cls((p if isinstance(p, Polynomial) else Polynomial(p),))

    def piece_for(self, n: int) -> Polynomial:
        return self.pieces[n % self.modulus]

    def value(self, n: int) -> int:
        v = self.pieces[n % self.modulus](n)
        if v.denominator != 1:
            raise ValueError(f"non-integer value {v} at n={n}")
        return int(v)

    def value_exact(self, n: int) -> Fraction:
        """Evaluate without the integrality requirement."""
        return self.pieces[n % self.modulus](n)

    @property
    def is_symbolic(self) -> bool:
        return True

    def as_piecewise(self) -> "PiecewisePoly":
        return self

    def refined(self, m: int) -> tuple[Polynomial, ...]:
        """Pieces replicated to modulus m (m a multiple of modulus)."""
        if m % self.modulus:
            raise ValueError("refinement modulus must be a multiple")
        return tuple(self.pieces[r % self.modulus] for r in range(m))

    def map_pieces(self, fn) -> "PiecewisePoly":
        """New function with piece r replaced by fn(r, piece), modulus kept."""
        return PiecewisePoly(
            tuple(fn(r, p) for r, p in enumerate(self.pieces)),
            check_integrality=False,
        )

    def __eq__(self, other):
        if not isinstance(other, PiecewisePoly):
            return NotImplemented
        return self.modulus == other.modulus and self.pieces == other.pieces

    def __hash__(self):
        return hash((self.modulus, self.pieces))

    def __repr__(self):
        return f"PiecewisePoly({[str(p) for p in self.pieces]!r})"

    def __str__(self):
        if self.modulus == 1:
            return f"poly: {self.pieces[0]}"
        body = "; ".join(f"r{r}: {p}" for r, p in enumerate(self.pieces))
        return f"pw mod {self.modulus} {{ {body} }}"


class Exponential(BlockFunction):
    """f(n) = a * b**n with a >= 1 and b >= 2.  Evaluation only."""

    __slots__ = ("a", "b")

    def __init__(self, a: int, b: int):
        if not (isinstance(a, int) and a >= 1):
            raise ValueError("a must be a positive integer")
        if not (isinstance(b, int) and b >= 2):
            raise ValueError("b must be an integer >= 2")
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)

    def __setattr__(self, name, value):
        raise AttributeError("Exponential is immutable")

    def value(self, n: int) -> int:
        return self.a * self.b**n

    def __eq__(self, other):
        if not isinstance(other, Exponential):
            return NotImplemented
        return (self.a, self.b) == (other.a, other.b)

    def __hash__(self):
        return hash(("exp", self.a, self.b))

    def __repr__(self):
        return f"Exponential({self.a}, {self.b})"

    def __str__(self):
        return f"exp({self.a}, {self.b})"


class Fzip(BlockFunction):
    """Interleave: even indices read f, odd indices read g."""

    __slots__ = ("left", "right")

    def __init__(self, left: BlockFunction, right: BlockFunction):
        object.__setattr__(self, "left", left)
        object.__setattr__(self, "right", right)

    def __setattr__(self, name, value):
        raise AttributeError("Fzip is immutable")

    def value(self, n: int) -> int:
        if n % 2 == 0:
            return self.left.value(n // 2)
        return self.right.value((n - 1) // 2)

    @property
    def is_symbolic(self) -> bool:
        return self.left.is_symbolic and self.right.is_symbolic

    def as_piecewise(self) -> PiecewisePoly:
        return pw_from_fzip(self.left.as_piecewise(), self.right.as_piecewise())

    def __repr__(self):
        return f"Fzip({self.left!r}, {self.right!r})"

    def __str__(self):
        return f"fzip({self.left}, {self.right})"


class Shifted(BlockFunction):
    """f(n + k) for a nonnegative shift k."""

    __slots__ = ("base", "k")

    def __init__(self, base: BlockFunction, k: int):
        if k < 0:
            raise ValueError("shift must be a natural number")
        object.__setattr__(self, "base", base)
        object.__setattr__(self, "k", k)

    def __setattr__(self, name, value):
        raise AttributeError("Shifted is immutable")

    def value(self, n: int) -> int:
        return self.base.value(n + self.k)

    @property
    def is_symbolic(self) -> bool:
        return self.base.is_symbolic

    def as_piecewise(self) -> PiecewisePoly:
        return pw_shift(self.base.as_piecewise(), self.k)

    def __repr__(self):
        return f"Shifted({self.base!r}, {self.k})"

    def __str__(self):
        return f"shift({self.base}, {self.k})"


def fzip(left: BlockFunction, right: BlockFunction) -> Fzip:
    return Fzip(left, right)


def shifted(base: BlockFunction, k: int) -> BlockFunction:
    if k == 0:
        return base
    if isinstance(base, PiecewisePoly):
        return pw_shift(base, k)
    return Shifted(base, k)


# -- operations on piecewise polynomials ---------------------------------


def pw_eval(f: PiecewisePoly, n: int) -> int:
    return f.value(n)


def pw_shift(f: PiecewisePoly, k: int) -> PiecewisePoly:
    """g with g(n) = f(n + k): classes rotate by k, arguments shift."""
    if k < 0:
        raise ValueError("shift must be a natural number")
    n = f.modulus
    return PiecewisePoly(
        tuple(f.pieces[(r + k) % n].shift_arg(k) for r in range(n)),
        check_integrality=False,
    )


def pw_equal(f: PiecewisePoly, g: PiecewisePoly) -> bool:
    m = lcm(f.modulus, g.modulus)
    return f.refined(m) == g.refined(m)


def pw_from_fzip(f: PiecewisePoly, g: PiecewisePoly) -> PiecewisePoly:
    """Exact piecewise form of fzip(f, g).

    Even classes get f's pieces composed with n/2, odd classes g's
    composed with (n-1)/2; modulus 2*lcm before canonicalization.
    """
    m = lcm(f.modulus, g.modulus)
    pieces = []
    for r in range(2 * m):
        if r % 2 == 0:
            pieces.append(f.piece_for(r // 2).compose_affine(Q(1, 2), 0))
        else:
            pieces.append(g.piece_for((r - 1) // 2).compose_affine(Q(1, 2), Q(-1, 2)))
    return PiecewisePoly(tuple(pieces), check_integrality=False)


def pw_subsample(f: PiecewisePoly, a: int, r: int) -> PiecewisePoly:
    """g with g(n) = f(a*n + r) for integers a >= 1, r >= 0.

    a*(N/gcd(a, N)) is a multiple of N, so classes of g repeat with
    modulus N/gcd(a, N).
    """
    if a < 1 or r < 0:
        raise ValueError("need a >= 1 and r >= 0")
    n_mod = f.modulus
    m = n_mod // gcd(a, n_mod)
    return PiecewisePoly(
        tuple(f.pieces[(a * s + r) % n_mod].compose_affine(a, r) for s in range(m)),
        check_integrality=False,
    )


def class_min(f: PiecewisePoly, r: int) -> Fraction:
    """Exact minimum of f over the residue class r (mod modulus).

    The piece restricted to the class, P(t) = piece(r + N*t), must have
    positive leading coefficient or be constant; past the Cauchy bound
    of P' the values increase, so a finite scan is exact.
    """
    p = f.pieces[r % f.modulus]
    restricted = p.compose_affine(f.modulus, r % f.modulus)
    if restricted.is_constant:
        return restricted.constant
    if restricted.leading < 0:
        raise ValueError(f"class {r} is unbounded below")
    bound = restricted.min_arg_bound()
    return min(restricted(t) for t in range(bound + 1))


def restricted_violations(restricted: Polynomial, c: int, cap: int = 1_000_000):
    """Arguments t >= 0 with restricted(t) < c, in order.

    Finite when the leading coefficient is positive; the scan walks past
    the monotone bound and then stops at the first ok value.  Constant
    polynomials below c and unbounded-below ones raise, since their
    violation sets are infinite.
    """
    out = []
    if restricted.is_constant:
        if restricted.constant < c:
            raise ValueError(f"constant {restricted.constant} < {c} everywhere")
        return out
    if restricted.leading < 0:
        raise ValueError("unbounded below")
    bound = restricted.min_arg_bound()
    t = 0
    while t <= bound or restricted(t) < c:
        if restricted(t) < c:
            out.append(t)
        t += 1
        if t > cap:
            raise ValueError("violation scan exceeded cap")
    return out


def class_violations(f: PiecewisePoly, r: int, c: int, cap: int = 1_000_000):
    """Indices n in class r (mod modulus) with f(n) < c, in order."""
    r = r % f.modulus
    restricted = f.pieces[r].compose_affine(f.modulus, r)
    try:
        ts = restricted_violations(restricted, c, cap)
    except ValueError as e:
        raise ValueError(f"class {r}: {e}") from None
    return [r + f.modulus * t for t in ts]


def pw_normalize(f: PiecewisePoly) -> tuple[PiecewisePoly, int]:
    """Least constant offset making all values nonnegative.

    Returns (f + offset, offset).  Pieces whose restriction to their
    class has negative leading coefficient are rejected: such a stream
    is eventually undefined and no offset repairs it.
    """
    lo = min(class_min(f, r) for r in range(f.modulus))
    offset = max(0, -lo)
    if offset == 0:
        return f, 0
    if offset != int(offset):
        raise AssertionError("integer-valued function with non-integer minimum")
    offset = int(offset)
    return f.map_pieces(lambda r, p: p + offset), offset


def _divisors(n: int):
    out = []
    d = 1
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            out.append(n // d)
        d += 1
    return out


def _pw_literal(f) -> str:
    return str(f)
