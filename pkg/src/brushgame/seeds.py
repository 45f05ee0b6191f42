"""Deterministic seed derivation.

All randomness in the package flows from a single 64-bit root seed.  Tasks
derive their own seeds by mixing a label path into the root with SHA-256,
so runs are reproducible across platforms and Python versions (the builtin
`hash` is salted and never used for this).
"""

from __future__ import annotations

import hashlib

_MASK = (1 << 63) - 1


def derive(root: int, *parts: int | str) -> int:
    """Derive a child seed from `root` and a label path, stable across runs."""
    text = ":".join([str(int(root))] + [str(p) for p in parts])
    digest = hashlib.sha256(text.encode("utf-8")).digest()
    return int.from_bytes(digest[:8], "big") & _MASK
