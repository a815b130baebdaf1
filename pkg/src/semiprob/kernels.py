"""Backend selection for the hot loops.

The compiled ``_speedups`` extension is used when it imports; otherwise the
pure-Python ``_purekernels`` module.  Set ``SEMIPROB_PURE_PYTHON=1`` to force
the fallback.  ``BACKEND`` names the module in use.
"""
import os

from . import _purekernels as pure

try:
    from . import _speedups as compiled
except ImportError:
    compiled = None

if compiled is not None and not os.environ.get("SEMIPROB_PURE_PYTHON"):
    _impl, BACKEND = compiled, "cython"
else:
    _impl, BACKEND = pure, "python"

first_nonassociative = _impl.first_nonassociative
enumerate_tables = _impl.enumerate_tables


def available_backends():
    """``{name: module}`` for every backend importable in this process."""
    found = {"python": pure}
    if compiled is not None:
        found["cython"] = compiled
    return found
