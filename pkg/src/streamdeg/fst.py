"""Finite-state transducers over the binary alphabet.

Deterministic Mealy style: output is attached to transitions only,
states carry nothing, the initial state is always 0, every state is
total on both input bits.  Outputs are bit words (str), possibly empty,
so a machine can only append to what it has already emitted.
"""
from __future__ import annotations

from . import _kernel


class Fst:
    """Tables: delta[2q+b] = next state, out[2q+b] = emitted word."""

    __slots__ = ("n_states", "delta", "out", "_handle")

    def __init__(self, n_states: int, delta, out):
        delta = tuple(delta)
        out = tuple(out)
        if n_states < 1:
            raise ValueError("a transducer needs at least one state")
        if len(delta) != 2 * n_states or len(out) != 2 * n_states:
            raise ValueError("tables must cover every (state, bit) pair")
        for q in delta:
            if not (0 <= q < n_states):
                raise ValueError(f"transition target {q} out of range")
        for w in out:
            if w.strip("01"):
                raise ValueError(f"output word {w!r} is not binary")
        object.__setattr__(self, "n_states", n_states)
        object.__setattr__(self, "delta", delta)
        object.__setattr__(self, "out", out)
        object.__setattr__(self, "_handle", None)

    def __setattr__(self, name, value):
        raise AttributeError("Fst is immutable")

    @classmethod
    def identity(cls) -> "Fst":
        return cls(1, (0, 0), ("0", "1"))

    @classmethod
    def from_map(cls, n_states: int, trans) -> "Fst":
        """trans[(q, b)] = (out_word, next_state); must be total."""
        delta = []
        out = []
        for q in range(n_states):
            for b in (0, 1):
                if (q, b) not in trans:
                    raise ValueError(f"missing transition ({q}, {b})")
                w, nq = trans[(q, b)]
                delta.append(nq)
                out.append(w)
        return cls(n_states, delta, out)

    def step(self, q: int, bit: int) -> tuple[int, str]:
        i = 2 * q + bit
        return self.delta[i], self.out[i]

    def walk(self, word: str, start: int = 0) -> tuple[str, int]:
        """Extended transition/output on a word, pure Python (no kernel)."""
        q = start
        pieces = []
        for ch in word:
            i = 2 * q + (1 if ch == "1" else 0)
            pieces.append(self.out[i])
            q = self.delta[i]
        return "".join(pieces), q

    def run(self, word: str, start: int = 0, out_limit: int = -1) -> str:
        """Transduce a bit word through the kernel backend."""
        data = word.encode("ascii") if isinstance(word, str) else word
        if data.translate(None, b"01"):
            raise ValueError("input must be a word over 0/1")
        handle = self._handle
        if handle is None:
            handle = _kernel.prepare(self.delta, tuple(w.encode("ascii") for w in self.out))
            object.__setattr__(self, "_handle", handle)
        out, _ = _kernel.run(handle, data, start, out_limit)
        return out.decode("ascii")

    def to_dot(self) -> str:
        lines = [
            "digraph fst {",
            "  rankdir=LR;",
            '  node [shape=circle];',
            '  0 [shape=doublecircle];',
        ]
        for q in range(self.n_states):
            for b in (0, 1):
                i = 2 * q + b
                label = f"{b}/{self.out[i] or 'e'}"
                lines.append(f'  {q} -> {self.delta[i]} [label="{label}"];')
        lines.append("}")
        return "\n".join(lines)

    def __eq__(self, other):
        if not isinstance(other, Fst):
            return NotImplemented
        return (self.n_states, self.delta, self.out) == (
            other.n_states,
            other.delta,
            other.out,
        )

    def __hash__(self):
        return hash((self.n_states, self.delta, self.out))

    def __repr__(self):
        return f"Fst(states={self.n_states})"


def fst_run(t: Fst, word: str, out_limit: int = -1) -> str:
    return t.run(word, out_limit=out_limit)


def fst_compose(outer: Fst, inner: Fst) -> Fst:
    """Machine equivalent to feeding inner's output into outer.

    Product construction restricted to reachable pairs: on input bit b
    the inner machine emits a word, the outer machine consumes it whole
    (extended transition), and the pair advances.
    """
    index: dict[tuple[int, int], int] = {(0, 0): 0}
    order = [(0, 0)]
    delta = []
    out = []
    k = 0
    while k < len(order):
        qi, qo = order[k]
        k += 1
        for b in (0, 1):
            i = 2 * qi + b
            w = inner.out[i]
            nqi = inner.delta[i]
            emitted, nqo = outer.walk(w, qo)
            key = (nqi, nqo)
            if key not in index:
                index[key] = len(order)
                order.append(key)
            delta.append(index[key])
            out.append(emitted)
    return Fst(len(order), delta, out)
