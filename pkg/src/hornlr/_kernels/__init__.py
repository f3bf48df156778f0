"""Kernel backend selection.

The compiled extension is preferred when it imported cleanly; setting
the environment variable ``HORNLR_PURE=1`` forces the pure-Python
kernels. ``char_poly`` transparently falls back to arbitrary precision
when the 64-bit compiled path reports overflow, so results are always
exact regardless of backend.
"""

from __future__ import annotations

import os
from typing import Sequence

from . import pure

_impl = pure
if not os.environ.get("HORNLR_PURE"):
    try:
        from . import _speedups as _impl  # type: ignore[no-redef]
    except ImportError:
        _impl = pure

BACKEND: str = _impl.BACKEND


def char_poly(rows: Sequence[Sequence[int]]) -> list[int]:
    if _impl is not pure:
        try:
            return _impl.char_poly(rows)
        except OverflowError:
            pass
    return pure.char_poly(rows)


def lr_count(
    gamma: Sequence[int],
    inner: Sequence[int],
    content: Sequence[int],
    limit: int = 0,
) -> int:
    return _impl.lr_count(gamma, inner, content, limit)
