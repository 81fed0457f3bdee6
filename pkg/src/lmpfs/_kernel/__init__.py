"""Kernel selection: compiled extension when available, pure Python otherwise.

``enumerate_masks`` is the single kernel entry point; ``IMPLEMENTATION`` names
the active backend ("compiled" or "pure").
"""

from . import pure

try:
    from . import _ckernel as _active
except ImportError:
    _active = pure

IMPLEMENTATION = _active.IMPLEMENTATION
enumerate_masks = _active.enumerate_masks
