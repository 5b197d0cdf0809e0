"""Pure-Python transducer stepping kernel.

Same interface as the compiled _bitkernel; selected by _kernel when the
extension is unavailable.  Bits travel as ASCII bytes (48/49).
"""
from __future__ import annotations

BACKEND = "python"


def prepare(delta, outs):
    """Pack transition tables.  delta[2q+b] = next state, outs[2q+b] = output."""
    return (tuple(delta), tuple(outs))


def run(handle, inp: bytes, start: int = 0, out_limit: int = -1):
    """Feed `inp` through the machine; returns (output bytes, end state).

    With out_limit >= 0 the run stops once the output reaches the limit
    (truncated exactly); the returned state then corresponds to the
    consumed input prefix.
    """
    delta, outs = handle
    q = start
    parts = []
    if out_limit < 0:
        for c in inp:
            i = 2 * q + c - 48
            w = outs[i]
            if w:
                parts.append(w)
            q = delta[i]
        return b"".join(parts), q
    total = 0
    for c in inp:
        if total >= out_limit:
            break
        i = 2 * q + c - 48
        w = outs[i]
        if w:
            parts.append(w)
            total += len(w)
        q = delta[i]
    return b"".join(parts)[:out_limit], q
