"""Derived weight tuples and pipelines for comparing stream degrees.

Three canonical base functions organize everything here: the identity
n, the square n^2, and their interleaving pair(n) = fzip(n, n^2).  The
builders produce, with exact rational arithmetic, the weights that map
a base onto a given function and the block pipelines that map the
function's stream back onto a base.  Each claim is packaged as a
Certificate or a Pipeline so it can be checked independently.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import ceil, floor, lcm

from .blockops import (
    AddZeros,
    BlockOp,
    DivBlock,
    DropBlocks,
    MergeWeights,
    MulBlock,
    Pipeline,
    PipelineError,
    PrependBlocks,
    SelectResidues,
    SubZeros,
    pipeline_symbolic,
)
from .piecewise import PiecewisePoly, pw_equal, pw_from_fzip, pw_shift
from .polynomials import Polynomial, Q
from .weights import Certificate, Weight, WeightTuple, certificate_check

BASE_LINEAR = PiecewisePoly.from_poly(Polynomial((0, 1)))
BASE_SQUARE = PiecewisePoly.from_poly(Polynomial((0, 0, 1)))
BASE_PAIR = pw_from_fzip(BASE_LINEAR, BASE_SQUARE)


def quad_poly(a: int, b: int) -> PiecewisePoly:
    """a*n^2 + b*n as a one-piece function."""
    return PiecewisePoly.from_poly(Polynomial((0, b, a)))


# -- quadratics from the square base ---------------------------------------


def quad_to_weight(a: int, b: int) -> tuple[WeightTuple, int]:
    """Weight alpha and shift k with (alpha (x) S^k n^2)(n) = a n^2 + b n.

    k = floor(b/a) splits b between the two consecutive squares so both
    coefficients stay nonnegative:

        c0 (2n+k)^2 + c1 (2n+k+1)^2 + d  =  a n^2 + b n.
    """
    if a < 1 or b < 1:
        raise ValueError("need a >= 1 and b >= 1")
    k = b // a
    c0 = Q(a * (1 + k) - b, 4)
    c1 = Q(b - a * k, 4)
    d = -(c0 * k * k + c1 * (k + 1) ** 2)
    return WeightTuple([Weight((c0, c1), d)]), k


def quad_to_weight_certificate(a: int, b: int) -> Certificate:
    ws, k = quad_to_weight(a, b)
    return Certificate(source=BASE_SQUARE, target=quad_poly(a, b), weights=ws, m0=k)


def quad_const_floor_form(a: int, b: int) -> Fraction:
    """Alternative closed form for the constant in quad_to_weight.

    Kept for comparison only: it does NOT satisfy the identity (first
    failure at a=1, b=1, n=0, where it gives -1/2 instead of -1/4).
    """
    k = b // a
    return -Q(2 * b * k + b - a * k * k, 4)


def quad_inverse_weight(a: int, b: int) -> WeightTuple:
    """Weight alpha with (alpha (x) S^1(a n^2 + b n))(n) = (n+1)^2.

    Needs 2a > b > 0 so both coefficients are positive.  Together
    with quad_to_weight this puts every a n^2 + b n in the same degree
    as n^2 itself.
    """
    if not (0 < b < 2 * a):
        raise ValueError("need 2a > b > 0")
    den = 8 * a * a
    a0 = Q(b, den)
    a1 = Q(2 * a - b, den)
    d = Q(b * (b - a), den)
    return WeightTuple([Weight((a0, a1), d)])


def quad_inverse_certificate(a: int, b: int) -> Certificate:
    return Certificate(
        source=quad_poly(a, b),
        target=BASE_SQUARE,
        weights=quad_inverse_weight(a, b),
        m0=1,
        n0=1,
    )


def quad_inverse_coeff_shift_form(a: int, b: int) -> Fraction:
    """Alternative closed form for the first inverse coefficient.

    Kept for comparison only: it does NOT satisfy the identity (first
    failure at a=1, b=1, n=0, where it gives 9/8 instead of 1/8).
    """
    return Q(b * b + a * b + 6 * a * a + 1, 8 * a * a)


# -- degree-preserving block pipelines -------------------------------------

ALL = frozenset({0})


def scale_sizes(a: int) -> tuple[Pipeline, Pipeline]:
    """f -> a*f and back: every block size multiplied / divided by a."""
    return (
        Pipeline((MulBlock(ALL, 1, a),)),
        Pipeline((DivBlock(ALL, 1, a),)),
    )


def drop_leading(f, count: int) -> tuple[Pipeline, Pipeline]:
    """f -> S^count f and back; the inverse replays the dropped sizes."""
    vals = tuple(int(f.value(i) if hasattr(f, "value") else f(i)) for i in range(count))
    return (
        Pipeline((DropBlocks(count),)),
        Pipeline((PrependBlocks(vals),)),
    )


def pad_sizes(c: int) -> tuple[Pipeline, Pipeline]:
    """f -> f + c and back: c zeros appended to / removed from each block."""
    return (
        Pipeline((AddZeros(ALL, 1, c),)),
        Pipeline((SubZeros(ALL, 1, c),)),
    )


def keep_multiples(a: int) -> Pipeline:
    """f -> f(a*n): only blocks at multiples of a survive."""
    return Pipeline((SelectResidues(frozenset({0}), a),))


def merge_pairs(a: int, b: int) -> Pipeline:
    """f -> a*f(2n) + b*f(2n+1): consecutive pairs merged with weights."""
    return Pipeline((MergeWeights(WeightTuple([Weight((a, b), 0)])),))


# -- interleaving ----------------------------------------------------------


def fzip_rotate() -> Pipeline:
    """fzip(f, g) -> fzip(g, S^1 f): one dropped block swaps the roles."""
    return Pipeline((DropBlocks(1),))


def fzip_swap_linear(a: int, b: int) -> tuple[Pipeline, Pipeline]:
    """Swap the halves of fzip(f, g) when f(n) = a*n + b.

    After the rotating drop the odd blocks carry f(n+1) = f(n) + a, so
    removing a zeros from them restores f; the inverse adds them back
    and replays f(0) = b.
    """
    if a < 0 or b < 0:
        raise ValueError("need a >= 0 and b >= 0")
    fwd: list[BlockOp] = [DropBlocks(1)]
    bwd: list[BlockOp] = []
    if a:
        fwd.append(SubZeros(frozenset({1}), 2, a))
        bwd.append(AddZeros(frozenset({1}), 2, a))
    bwd.append(PrependBlocks((b,)))
    return Pipeline(tuple(fwd)), Pipeline(tuple(bwd))


def fzip_swap_exponential(a: int, b: int) -> tuple[Pipeline, Pipeline]:
    """Swap the halves of fzip(f, g) when f(n) = a * b**n.

    Here f(n+1) = b * f(n), so the odd blocks shrink by the factor b
    instead of by a constant.
    """
    if a < 1 or b < 1:
        raise ValueError("need a >= 1 and b >= 1")
    fwd: list[BlockOp] = [DropBlocks(1)]
    bwd: list[BlockOp] = []
    if b > 1:
        fwd.append(DivBlock(frozenset({1}), 2, b))
        bwd.append(MulBlock(frozenset({1}), 2, b))
    bwd.append(PrependBlocks((a,)))
    return Pipeline(tuple(fwd)), Pipeline(tuple(bwd))


def interleave_weights(alpha: WeightTuple, beta: WeightTuple) -> WeightTuple:
    """Tuple gamma acting as alpha on even outputs and beta on odd ones.

    Requires equal length and indexwise equal spans, so that all three
    tuples consume source blocks at the same positions.  Odd lengths
    double: the parity of the acting index must follow the output's.
    """
    m = len(alpha)
    if len(beta) != m:
        raise ValueError("weight tuples must have equal length")
    if alpha.spans() != beta.spans():
        raise ValueError("weight spans must agree at every index")
    length = m if m % 2 == 0 else 2 * m
    return WeightTuple(
        [alpha[j % m] if j % 2 == 0 else beta[j % m] for j in range(length)]
    )


# -- reductions to the canonical bases -------------------------------------


@dataclass(frozen=True)
class DiamondReport:
    """Outcome of relating a function to one of the canonical bases."""

    case: str
    verdict: str
    details: str
    weights: WeightTuple | None = None
    certificate: Certificate | None = None
    check: object | None = None
    pipeline: Pipeline | None = None
    reverse: Pipeline | None = None
    final_shift: int = 0
    result: PiecewisePoly | None = None

    @property
    def proved(self) -> bool:
        return self.verdict == "proved"

    def to_text(self) -> str:
        lines = [f"case: {self.case}", f"verdict: {self.verdict}", self.details]
        if self.weights is not None:
            lines.append(f"weights: {self.weights}")
        if self.certificate is not None:
            c = self.certificate
            lines.append(
                f"claim: S^{c.n0}(target) = weights (x) S^{c.m0}(source)"
            )
        if self.check is not None:
            lines.append(f"check: {self.check}")
        if self.pipeline is not None:
            lines.append(f"pipeline: {self.pipeline.literal()}")
        if self.reverse is not None:
            lines.append(f"reverse: {self.reverse.literal()}")
        if self.final_shift:
            lines.append(f"absorbed shift: {self.final_shift}")
        return "\n".join(lines)


def _failed(case: str, details: str) -> DiamondReport:
    return DiamondReport(case=case, verdict="failed", details=details)


def diamond_linear_weights(g: PiecewisePoly) -> DiamondReport:
    """Weights putting an all-linear g below the identity base, plus the
    pipeline taking its stream back to the identity."""
    n = g.modulus
    ws_rows = []
    for r, p in enumerate(g.pieces):
        if p.degree > 1:
            return _failed("linear", f"class {r} has degree {p.degree}")
        slope = p.coeffs[1] if p.degree == 1 else Q(0)
        if slope < 0:
            return _failed("linear", f"class {r} has negative slope")
        ws_rows.append(Weight((slope,), p.constant))
    try:
        ws = WeightTuple(ws_rows)
    except ValueError:
        return _failed("linear", "every class is constant")

    ops: list[BlockOp] = []
    pick = None
    for r, p in enumerate(g.pieces):
        lead = int(g.value(r + n) - g.value(r))  # slope * n over one period
        base_val = int(g.value(r))
        if base_val:
            ops.append(SubZeros(frozenset({r}), n, base_val))
        if lead:
            if lead > 1:
                ops.append(DivBlock(frozenset({r}), n, lead))
            if pick is None:
                pick = r
    if pick is None:
        return _failed("linear", "every class is constant")
    if n > 1:
        ops.append(SelectResidues(frozenset({pick}), n))
    reverse = Pipeline(tuple(ops))

    cert = Certificate(source=BASE_LINEAR, target=g, weights=ws)
    return DiamondReport(
        case="linear",
        verdict="proved",
        details=f"{n} classes, one span-1 weight per class",
        weights=ws,
        certificate=cert,
        check=certificate_check(cert),
        reverse=reverse,
    )


def diamond_n2_weights(g: PiecewisePoly) -> DiamondReport:
    """Weights putting an all-quadratic g below the square base.

    One span-2 weight per class, all sharing the source shift m0; m0
    must land in [max(b/a) - 1, min(b/a)] for the classwise coefficient
    pairs to stay nonnegative, and a target shift n0 absorbs negative
    windows.  When that window holds no integer the construction fails.
    """
    for r, p in enumerate(g.pieces):
        if p.degree != 2:
            return _failed("square", f"class {r} has degree {p.degree}")
        if p.leading <= 0:
            return _failed("square", f"class {r} has nonpositive leading term")
    ratios = [p.coeffs[1] / p.coeffs[2] for p in g.pieces]
    lo = max(ratios) - 1
    hi = min(ratios)
    m = floor(hi)
    if m < lo:
        return _failed(
            "square",
            f"no integer source shift in [{lo}, {hi}]: "
            "the classwise linear/quadratic ratios spread too far",
        )
    n0 = max(0, ceil(Q(-m, 2)))
    m0 = m + 2 * n0
    gh = pw_shift(g, n0) if n0 else g
    rows = []
    for p in gh.pieces:
        a2, b1, c0 = p.coeffs[2], p.coeffs[1], p.constant
        w0 = (a2 * (1 + m0) - b1) / 4
        w1 = (b1 - a2 * m0) / 4
        d = c0 - (w0 * m0 * m0 + w1 * (m0 + 1) ** 2)
        rows.append(Weight((w0, w1), d))
    ws = WeightTuple(rows)
    cert = Certificate(source=BASE_SQUARE, target=g, weights=ws, m0=m0, n0=n0)
    return DiamondReport(
        case="square",
        verdict="proved",
        details=f"{gh.modulus} classes, shared source shift {m0}, target shift {n0}",
        weights=ws,
        certificate=cert,
        check=certificate_check(cert),
    )


def pair_base_projections() -> tuple[Pipeline, Pipeline]:
    """Pipelines from the pair base onto the identity and the square."""
    return (
        Pipeline((SelectResidues(frozenset({0}), 2),)),
        Pipeline((SelectResidues(frozenset({1}), 2),)),
    )


def diamond_n_pipeline(g: PiecewisePoly) -> DiamondReport:
    """Block pipeline taking a mixed-degree g back to the pair base.

    Shape: align the phase so class 0 is linear, fold every cycle to
    two blocks (linear even, quadratic odd), then solve for a span-3
    weight turning consecutive odd values into exact squares.  All
    coefficients come from the symbolic state, and the final state must
    equal the pair base outright.
    """
    case = "mixed"
    n = g.modulus
    if n == 1:
        return _failed(case, "a single class cannot mix degrees")

    d = next((d for d in range(n) if g.pieces[d].degree == 1), None)
    if d is None:
        return _failed(case, "no class is nonconstant linear")
    ops: list[BlockOp] = []
    if d:
        ops.append(DropBlocks(d))
    if n > 2:
        ops.append(
            MergeWeights(
                WeightTuple([Weight((1,), 0), Weight((1,) * (n - 1), 0)])
            )
        )
    state = pipeline_symbolic(g, ops)
    h2 = state.core
    if state.prefix or h2.modulus != 2:
        return _failed(case, f"folding left modulus {h2.modulus}, expected 2")
    pe, po = h2.pieces
    if pe.degree != 1 or pe.leading <= 0 or po.degree != 2 or po.leading <= 0:
        return _failed(
            case,
            f"after folding: even degree {pe.degree}, odd degree {po.degree};"
            " expected increasing linear even and quadratic odd classes",
        )

    ebar = pe.compose_affine(2, 0)  # even values by class position
    qbar = po.compose_affine(2, 1)  # odd values by class position
    atil, btil = ebar.coeffs[1], ebar.constant
    qa, qb = qbar.coeffs[2], qbar.coeffs[1]

    # phase j and square root offset gamma: gamma must be an integer in
    # [B/(4A), B/(4A) + 1/2] where B grows by 2A per dropped pair
    j = 0
    limit = max(0, ceil(-qb / (2 * qa))) + 3
    while True:
        bj = qb + 2 * qa * j
        gamma = ceil(bj / (4 * qa))
        if gamma >= 0 and Q(gamma) <= bj / (4 * qa) + Q(1, 2):
            break
        j += 1
        if j > limit:
            return _failed(case, "no phase admits an integral square offset")
    if j:
        ops.append(DropBlocks(2 * j))

    cj = qbar(j)
    alpha2 = (2 * gamma - bj / (2 * qa)) / (4 * qa)
    alpha1 = (1 - 2 * gamma + bj / (2 * qa)) / (4 * qa)
    beta = gamma * gamma - (alpha1 * cj + alpha2 * (qa + bj + cj))
    s = lcm(alpha1.denominator, alpha2.denominator, beta.denominator)

    odd_const = s * beta if beta >= 0 else 0
    ops.append(
        MergeWeights(
            WeightTuple(
                [
                    Weight((s,), 0),
                    Weight((s * alpha1, 0, s * alpha2), odd_const),
                ]
            )
        )
    )
    odd = frozenset({1})
    even = frozenset({0})
    if beta < 0:
        ops.append(SubZeros(odd, 2, int(-s * beta)))
    even_const = int(s * (btil + atil * j))
    if even_const:
        ops.append(SubZeros(even, 2, even_const))
    even_div = int(2 * atil * s)
    if even_div > 1:
        ops.append(DivBlock(even, 2, even_div))
    if gamma:
        ops.append(AddZeros(even, 2, gamma))
    if s > 1:
        ops.append(DivBlock(odd, 2, s))
    if gamma:
        ops.append(PrependBlocks(tuple(BASE_PAIR.value(t) for t in range(2 * gamma))))

    try:
        final = pipeline_symbolic(g, ops)
    except PipelineError as e:
        return _failed(case, f"derived pipeline is not applicable: {e}")
    if final.prefix or not pw_equal(final.core, BASE_PAIR):
        return _failed(
            case,
            "pipeline did not land on the pair base; the input is not an"
            " image of it under the expected family",
        )
    return DiamondReport(
        case=case,
        verdict="proved",
        details=f"phase {d}+{2 * j}, scale {s}, square offset {gamma}",
        pipeline=Pipeline(tuple(ops)),
        final_shift=2 * gamma,
        result=final.core,
    )
