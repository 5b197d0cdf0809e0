"""Block-level stream transformations, their FST compilations, and an
exact symbolic engine for chaining them.

Every operation acts on a stream of blocks (block i = '1' followed by
size-many '0's).  Each one compiles to a small total transducer, and
each has an exact action on a symbolic stream description, so pipelines
can be validated and their results computed in closed form before any
bits are produced.

The symbolic description is a SymbolicState: finitely many explicit
leading block sizes (the prefix) followed by a piecewise-polynomial
tail.  PrependBlocks and MergeWeights create prefixes; folding tries to
absorb them back into the tail whenever the tail's natural backward
extension matches.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import ceil, lcm

from .fst import Fst, fst_compose
from .piecewise import PiecewisePoly, pw_shift, restricted_violations
from .polynomials import Polynomial, Q
from .weights import WeightTuple, weight_product_symbolic


class BlockOp:
    """Base for the operation dataclasses below."""

    def literal(self) -> str:
        raise NotImplementedError


def _residue_literal(residues, modulus) -> str:
    inner = ",".join(str(r) for r in sorted(residues))
    return "{" + inner + "}%" + str(modulus)


def _check_residues(residues, modulus):
    if modulus < 1:
        raise ValueError("modulus must be >= 1")
    if not residues:
        raise ValueError("residue set must be nonempty")
    if any(not (0 <= r < modulus) for r in residues):
        raise ValueError(f"residues must lie in range(0, {modulus})")


@dataclass(frozen=True)
class DropBlocks(BlockOp):
    count: int

    def __post_init__(self):
        if self.count < 0:
            raise ValueError("count must be a natural number")

    def literal(self) -> str:
        return f"drop {self.count}"


@dataclass(frozen=True)
class PrependBlocks(BlockOp):
    values: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(self.values))
        if any(not isinstance(v, int) or v < 0 for v in self.values):
            raise ValueError("prepended sizes must be natural numbers")

    def literal(self) -> str:
        return "prepend [" + ",".join(str(v) for v in self.values) + "]"


@dataclass(frozen=True)
class AddZeros(BlockOp):
    residues: frozenset[int]
    modulus: int
    count: int

    def __post_init__(self):
        object.__setattr__(self, "residues", frozenset(self.residues))
        _check_residues(self.residues, self.modulus)
        if self.count < 1:
            raise ValueError("count must be >= 1")

    def literal(self) -> str:
        return f"add {_residue_literal(self.residues, self.modulus)} {self.count}"


@dataclass(frozen=True)
class SubZeros(BlockOp):
    residues: frozenset[int]
    modulus: int
    count: int

    def __post_init__(self):
        object.__setattr__(self, "residues", frozenset(self.residues))
        _check_residues(self.residues, self.modulus)
        if self.count < 1:
            raise ValueError("count must be >= 1")

    def literal(self) -> str:
        return f"sub {_residue_literal(self.residues, self.modulus)} {self.count}"


@dataclass(frozen=True)
class MulBlock(BlockOp):
    residues: frozenset[int]
    modulus: int
    factor: int

    def __post_init__(self):
        object.__setattr__(self, "residues", frozenset(self.residues))
        _check_residues(self.residues, self.modulus)
        if self.factor < 1:
            raise ValueError("factor must be >= 1")

    def literal(self) -> str:
        return f"mul {_residue_literal(self.residues, self.modulus)} {self.factor}"


@dataclass(frozen=True)
class DivBlock(BlockOp):
    residues: frozenset[int]
    modulus: int
    divisor: int

    def __post_init__(self):
        object.__setattr__(self, "residues", frozenset(self.residues))
        _check_residues(self.residues, self.modulus)
        if self.divisor < 1:
            raise ValueError("divisor must be >= 1")

    def literal(self) -> str:
        return f"div {_residue_literal(self.residues, self.modulus)} {self.divisor}"


@dataclass(frozen=True)
class SelectResidues(BlockOp):
    residues: frozenset[int]
    modulus: int

    def __post_init__(self):
        object.__setattr__(self, "residues", frozenset(self.residues))
        _check_residues(self.residues, self.modulus)

    def literal(self) -> str:
        return f"select {_residue_literal(self.residues, self.modulus)}"


@dataclass(frozen=True)
class MergeWeights(BlockOp):
    """Cyclic weighted merge of consecutive blocks.

    A transducer can only ever append zeros it has not yet emitted, so
    entries must be integers with nonnegative constants; rational or
    negative-constant tuples are realized by composing with DivBlock or
    SubZeros afterwards.
    """

    weights: WeightTuple

    def __post_init__(self):
        ws = self.weights
        if not isinstance(ws, WeightTuple):
            ws = WeightTuple(ws)
            object.__setattr__(self, "weights", ws)
        for w in ws:
            for e in w.entries():
                if e.denominator != 1:
                    raise ValueError("merge weights must be integers")
            if w.const < 0:
                raise ValueError("merge constants must be nonnegative")

    def literal(self) -> str:
        rows = ",".join(
            "[" + ",".join(str(int(e)) for e in w.entries()) + "]"
            for w in self.weights
        )
        return f"merge [{rows}]"


@dataclass(frozen=True)
class Pipeline:
    ops: tuple[BlockOp, ...]

    def __post_init__(self):
        object.__setattr__(self, "ops", tuple(self.ops))

    def __iter__(self):
        return iter(self.ops)

    def __len__(self):
        return len(self.ops)

    def __getitem__(self, i):
        return self.ops[i]

    def literal(self) -> str:
        return " | ".join(op.literal() for op in self.ops)

    def compile(self) -> Fst:
        return compile_pipeline(self.ops)


# -- transducer compilation ------------------------------------------------


def compile_block_op(op: BlockOp) -> Fst:
    if isinstance(op, DropBlocks):
        return _compile_drop(op)
    if isinstance(op, PrependBlocks):
        return _compile_prepend(op)
    if isinstance(op, AddZeros):
        return _compile_add(op)
    if isinstance(op, SubZeros):
        return _compile_sub(op)
    if isinstance(op, MulBlock):
        return _compile_mul(op)
    if isinstance(op, DivBlock):
        return _compile_div(op)
    if isinstance(op, SelectResidues):
        return _compile_select(op)
    if isinstance(op, MergeWeights):
        return _compile_merge(op)
    raise TypeError(f"not a block operation: {op!r}")


def compile_pipeline(ops) -> Fst:
    acc = Fst.identity()
    for op in ops:
        acc = fst_compose(compile_block_op(op), acc)
    return acc


def _compile_drop(op: DropBlocks) -> Fst:
    k = op.count
    if k == 0:
        return Fst.identity()
    # states 0..k-1: s markers consumed, still dropping; k: inside the
    # last dropped block; k+1: verbatim copy
    trans = {}
    for s in range(k):
        trans[(s, 0)] = ("", s)
        trans[(s, 1)] = ("", s + 1)
    trans[(k, 0)] = ("", k)
    trans[(k, 1)] = ("1", k + 1)
    trans[(k + 1, 0)] = ("0", k + 1)
    trans[(k + 1, 1)] = ("1", k + 1)
    return Fst.from_map(k + 2, trans)


def _compile_prepend(op: PrependBlocks) -> Fst:
    if not op.values:
        return Fst.identity()
    word = "".join("1" + "0" * v for v in op.values)
    trans = {
        (0, 0): (word + "0", 1),
        (0, 1): (word + "1", 1),
        (1, 0): ("0", 1),
        (1, 1): ("1", 1),
    }
    return Fst.from_map(2, trans)


def _compile_add(op: AddZeros) -> Fst:
    n = op.modulus
    pad = "0" * op.count
    trans = {}
    for j in range(n):
        trans[(j, 0)] = ("0", j)
        trans[(j, 1)] = ("1" + pad if j in op.residues else "1", (j + 1) % n)
    return Fst.from_map(n, trans)


def _compile_sub(op: SubZeros) -> Fst:
    # base state j: the next marker opens block j; countdown (r, d):
    # inside an affected block of residue r with d zeros left to swallow
    n, c = op.modulus, op.count
    rs = sorted(op.residues)
    pos = {r: i for i, r in enumerate(rs)}

    def cd(r, d):
        return n + pos[r] * c + (c - d)

    def opened(j):
        # posture after emitting the marker of block j
        return cd(j, c) if j in op.residues else (j + 1) % n

    trans = {}
    for j in range(n):
        trans[(j, 0)] = ("0", j)
        trans[(j, 1)] = ("1", opened(j))
    for r in rs:
        for d in range(c, 0, -1):
            trans[(cd(r, d), 0)] = ("", cd(r, d - 1) if d > 1 else (r + 1) % n)
            # short block on malformed input: open the next one anyway
            trans[(cd(r, d), 1)] = ("1", opened((r + 1) % n))
    return Fst.from_map(n + len(rs) * c, trans)


def _compile_mul(op: MulBlock) -> Fst:
    n = op.modulus
    trans = {}
    for j in range(n):
        inside = (j - 1) % n in op.residues
        trans[(j, 0)] = ("0" * op.factor if inside else "0", j)
        trans[(j, 1)] = ("1", (j + 1) % n)
    return Fst.from_map(n, trans)


def _compile_div(op: DivBlock) -> Fst:
    n, q = op.modulus, op.divisor
    if q == 1:
        return Fst.identity()
    rs = sorted(op.residues)
    pos = {r: i for i, r in enumerate(rs)}

    def cnt(r, d):
        return n + pos[r] * q + d

    def opened(j):
        return cnt(j, 0) if j in op.residues else (j + 1) % n

    trans = {}
    for j in range(n):
        trans[(j, 0)] = ("0", j)
        trans[(j, 1)] = ("1", opened(j))
    for r in rs:
        for d in range(q):
            if d + 1 == q:
                trans[(cnt(r, d), 0)] = ("0", cnt(r, 0))
            else:
                trans[(cnt(r, d), 0)] = ("", cnt(r, d + 1))
            trans[(cnt(r, d), 1)] = ("1", opened((r + 1) % n))
    return Fst.from_map(n + len(rs) * q, trans)


def _compile_select(op: SelectResidues) -> Fst:
    n = op.modulus
    trans = {}
    for j in range(n):
        trans[(j, 0)] = ("0" if (j - 1) % n in op.residues else "", j)
        trans[(j, 1)] = ("1" if j in op.residues else "", (j + 1) % n)
    return Fst.from_map(n, trans)


def _compile_merge(op: MergeWeights) -> Fst:
    ws = op.weights
    m = len(ws)
    spans = ws.spans()
    starts = [0]
    for s in spans:
        starts.append(starts[-1] + s)

    def slot(i, t):
        return 1 + starts[i] + t

    trans = {(0, 0): ("", 0), (0, 1): ("1", slot(0, 0))}
    for i, w in enumerate(ws):
        for t in range(w.span):
            trans[(slot(i, t), 0)] = ("0" * int(w.coeffs[t]), slot(i, t))
            if t + 1 < w.span:
                trans[(slot(i, t), 1)] = ("", slot(i, t + 1))
            else:
                nxt = (i + 1) % m
                trans[(slot(i, t), 1)] = ("0" * int(w.const) + "1", slot(nxt, 0))
    return Fst.from_map(1 + starts[-1], trans)


# -- symbolic action -------------------------------------------------------


class PipelineError(ValueError):
    def __init__(self, op_index, op, reason):
        self.op_index = op_index
        self.op = op
        self.reason = reason
        where = "result" if op is None else f"op {op_index} ({op.literal()})"
        super().__init__(f"{where}: {reason}")


@dataclass(frozen=True)
class Violation:
    op_index: int
    op: BlockOp
    reason: str
    indices: tuple[int, ...] = ()
    suggestion: BlockOp | None = None


@dataclass(frozen=True)
class SymbolicState:
    """Stream with explicit leading sizes and a piecewise tail."""

    prefix: tuple[int, ...]
    core: PiecewisePoly

    def value(self, n: int) -> int:
        if n < len(self.prefix):
            return self.prefix[n]
        return self.core.value(n - len(self.prefix))

    def __call__(self, n: int) -> int:
        return self.value(n)

    @property
    def is_pure(self) -> bool:
        return not self.prefix

    def finalize(self) -> PiecewisePoly:
        if self.prefix:
            raise PipelineError(
                None, None, f"{len(self.prefix)} leading blocks do not fold into the tail"
            )
        return self.core

    def __str__(self):
        if not self.prefix:
            return str(self.core)
        return f"[{', '.join(map(str, self.prefix))}] ++ {self.core}"


def state_of(f) -> SymbolicState:
    if isinstance(f, SymbolicState):
        return f
    if isinstance(f, PiecewisePoly):
        return SymbolicState((), f)
    if hasattr(f, "as_piecewise"):
        return SymbolicState((), f.as_piecewise())
    raise TypeError(f"no symbolic form for {f!r}")


def _fold(state: SymbolicState) -> SymbolicState:
    """Absorb prefix entries matched by the tail's backward extension."""
    prefix = list(state.prefix)
    core = state.core
    while prefix:
        nc = core.modulus
        cand = PiecewisePoly(
            tuple(core.pieces[(r - 1) % nc].shift_arg(-1) for r in range(nc)),
            check_integrality=False,
        )
        if cand.value_exact(0) != prefix[-1]:
            break
        prefix.pop()
        core = cand
    return SymbolicState(tuple(prefix), core)


def _refit(core: PiecewisePoly, modulus: int) -> list[Polynomial]:
    """Pieces of core replicated to the given modulus (a multiple)."""
    return [core.pieces[r % core.modulus] for r in range(modulus)]


def _apply_entrywise(state: SymbolicState, op, op_index):
    """Shared step for AddZeros / SubZeros / MulBlock / DivBlock."""
    p = len(state.prefix)
    violations = []

    new_prefix = []
    for j, v in enumerate(state.prefix):
        if j % op.modulus in op.residues:
            if isinstance(op, AddZeros):
                v = v + op.count
            elif isinstance(op, SubZeros):
                if v < op.count:
                    violations.append((j, f"block {j} has size {v} < {op.count}"))
                v = v - op.count
            elif isinstance(op, MulBlock):
                v = v * op.factor
            else:
                if v % op.divisor:
                    violations.append(
                        (j, f"block {j} has size {v} not divisible by {op.divisor}")
                    )
                v = v // op.divisor
        new_prefix.append(v)

    m = lcm(state.core.modulus, op.modulus)
    base = _refit(state.core, m)
    pieces = []
    for i0 in range(m):
        piece = base[i0]
        if (p + i0) % op.modulus in op.residues:
            if isinstance(op, AddZeros):
                piece = piece + op.count
            elif isinstance(op, SubZeros):
                piece = piece - op.count
            elif isinstance(op, MulBlock):
                piece = piece * op.factor
            else:
                piece = piece / op.divisor
        pieces.append(piece)

    if isinstance(op, SubZeros):
        for i0 in range(m):
            if (p + i0) % op.modulus not in op.residues:
                continue
            restricted = base[i0].compose_affine(m, i0)
            try:
                for t in restricted_violations(restricted, op.count):
                    j = p + i0 + m * t
                    violations.append(
                        (j, f"block {j} has size {restricted(t)} < {op.count}")
                    )
            except ValueError as e:
                violations.append((None, f"tail class {i0} (mod {m}): {e}"))
    elif isinstance(op, DivBlock) and op.divisor > 1:
        for i0 in range(m):
            if (p + i0) % op.modulus not in op.residues:
                continue
            restricted = base[i0].compose_affine(m, i0)
            for t in range(restricted.degree + 2):
                v = restricted(t)
                if v.denominator != 1 or int(v) % op.divisor:
                    violations.append(
                        (
                            p + i0 + m * t,
                            f"block {p + i0 + m * t} has size {v} not divisible"
                            f" by {op.divisor}",
                        )
                    )
                    break

    state = _fold(
        SymbolicState(
            tuple(new_prefix), PiecewisePoly(pieces, check_integrality=False)
        )
    )
    return state, _package(op_index, op, violations)


def _package(op_index, op, raw):
    if not raw:
        return []
    indices = tuple(sorted({j for j, _ in raw if j is not None}))
    reason = "; ".join(msg for _, msg in raw[:4])
    if len(raw) > 4:
        reason += f"; ... ({len(raw)} findings)"
    suggestion = None
    if isinstance(op, SubZeros) and indices and all(j is not None for j, _ in raw):
        suggestion = DropBlocks(max(indices) + 1)
    return [Violation(op_index, op, reason, indices, suggestion)]


def _apply_select(state: SymbolicState, op: SelectResidues, op_index):
    p = len(state.prefix)
    kept_prefix = [v for j, v in enumerate(state.prefix) if j % op.modulus in op.residues]
    w = lcm(state.core.modulus, op.modulus)
    base = _refit(state.core, w)
    kept = [i0 for i0 in range(w) if (p + i0) % op.modulus in op.residues]
    if not kept:
        return state, [
            Violation(op_index, op, "selection keeps no blocks of the tail")
        ]
    k = len(kept)
    pieces = [
        base[kept[j]].compose_affine(Q(w, k), kept[j] - Q(w * j, k)) for j in range(k)
    ]
    state = _fold(
        SymbolicState(
            tuple(kept_prefix), PiecewisePoly(pieces, check_integrality=False)
        )
    )
    return state, []


def _apply_merge(state: SymbolicState, op: MergeWeights, op_index):
    ws = op.weights
    m = len(ws)
    big_l = ws.norm
    p = len(state.prefix)
    q0 = ceil(p / big_l)
    head = []
    pos = 0
    for n in range(q0 * m):
        w = ws[n % m]
        head.append(int(w.apply([state.value(pos + t) for t in range(w.span)])))
        pos += w.span
    core = weight_product_symbolic(ws, pw_shift(state.core, q0 * big_l - p))
    return _fold(SymbolicState(tuple(head), core)), []


def apply_op_symbolic(state: SymbolicState, op: BlockOp, op_index: int = 0):
    """One symbolic step.  Returns (new state, violations)."""
    if isinstance(op, DropBlocks):
        k, p = op.count, len(state.prefix)
        if k <= p:
            new = SymbolicState(state.prefix[k:], state.core)
        else:
            new = SymbolicState((), pw_shift(state.core, k - p))
        return _fold(new), []
    if isinstance(op, PrependBlocks):
        return _fold(SymbolicState(op.values + state.prefix, state.core)), []
    if isinstance(op, (AddZeros, SubZeros, MulBlock, DivBlock)):
        return _apply_entrywise(state, op, op_index)
    if isinstance(op, SelectResidues):
        return _apply_select(state, op, op_index)
    if isinstance(op, MergeWeights):
        return _apply_merge(state, op, op_index)
    raise TypeError(f"not a block operation: {op!r}")


def pipeline_symbolic(f, ops) -> SymbolicState:
    """Run the pipeline symbolically; raise PipelineError when an
    operation is not applicable to the stream it receives."""
    state = state_of(f)
    for i, op in enumerate(ops):
        state, violations = apply_op_symbolic(state, op, i)
        if violations:
            v = violations[0]
            raise PipelineError(v.op_index, v.op, v.reason)
    return state


def pipeline_result(f, ops) -> PiecewisePoly:
    """Symbolic run whose outcome must be a pure piecewise function."""
    state = pipeline_symbolic(f, ops)
    if state.prefix:
        raise PipelineError(
            None,
            None,
            f"{len(state.prefix)} leading blocks do not fold into the tail",
        )
    return state.core


def pipeline_validate(f, ops) -> list[Violation]:
    """Check applicability op by op; stop at the first violation.

    Returns [] when every step is applicable.  The state after a
    violating step is unreliable, which is why the walk stops.
    """
    state = state_of(f)
    for i, op in enumerate(ops):
        state, violations = apply_op_symbolic(state, op, i)
        if violations:
            return violations
    return []
