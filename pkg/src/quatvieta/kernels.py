"""Kernel backend selection.

The compiled ``_ckernels`` extension is used when it was built; otherwise the
pure-Python ``_pykernels`` module is used. Both expose the same functions.
"""

from . import _pykernels

try:
    from . import _ckernels as _active
    BACKEND = "cython"
except ImportError:  # extension not built
    _active = _pykernels
    BACKEND = "python"

qp_sums = _active.qp_sums
aberth = _active.aberth
horner_real = _active.horner_real


def available_backends():
    """Map backend name to kernel module for every importable backend."""
    found = {"python": _pykernels}
    try:
        from . import _ckernels
    except ImportError:
        pass
    else:
        found["cython"] = _ckernels
    return found


def set_backend(name: str) -> str:
    """Route the package's kernel calls to ``name``; returns the previous backend."""
    global qp_sums, aberth, horner_real, BACKEND
    backends = available_backends()
    if name not in backends:
        raise ValueError("kernel backend %r is not available (have %s)"
                         % (name, ", ".join(sorted(backends))))
    mod = backends[name]
    previous = BACKEND
    qp_sums, aberth, horner_real = mod.qp_sums, mod.aberth, mod.horner_real
    BACKEND = name
    return previous
