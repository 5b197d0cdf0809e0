"""Kernel selection: compiled extension when built, pure Python otherwise."""
try:
    from . import _bitkernel as _impl
except ImportError:
    from . import _bitkernel_py as _impl

BACKEND = _impl.BACKEND
prepare = _impl.prepare
run = _impl.run
