"""Central size caps keeping every operation at desk scale.

Caps are enforced where the combinatorics explode (function enumeration,
vertex enumeration for locality LPs, automorphism backtracking).  The expert
escape hatch is :func:`override`, wired to the CLI flag ``--cap-override``.
"""

from __future__ import annotations

import os
from contextlib import contextmanager

COMBINATORIAL_N_MAX = 8      # n**n function scans
LP_GENERAL_N_MAX = 4         # (n**n)**2 vertex pairs
LP_SYNCHRONOUS_N_MAX = 6     # n**n synchronous vertices
LP_BISYNCHRONOUS_N_MAX = 7   # n! permutation vertices
GROUP_N_MAX = 10             # plain BFS closure, worst case 10!
CONFIG_AUTO_N_MAX = 8        # automorphism backtracking
DIM_MAX = 64                 # quantum strategy block dimension

_override_active = False


@contextmanager
def override():
    """Temporarily lift all size caps (expert use)."""
    global _override_active
    previous = _override_active
    _override_active = True
    try:
        yield
    finally:
        _override_active = previous


def check(value: int, cap: int, what: str, error_cls) -> None:
    if not _override_active and value > cap:
        raise error_cls(f"{what}: size {value} exceeds cap {cap} "
                        f"(use the cap override only if you know the cost)")


def thread_limit() -> int:
    """Worker bound from NGL_THREADS; operations are currently single-threaded."""
    raw = os.environ.get("NGL_THREADS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1
