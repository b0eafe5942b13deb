"""Size caps shared by the exact routines.

Every cap can be overridden through an environment variable with the
``CRITGRAPH_`` prefix, read once at import time, or by assigning to the
attributes of :data:`LIMITS` at run time.
"""

from __future__ import annotations

import os
from dataclasses import dataclass

from .errors import SizeCapError


def _env_int(name: str, default: int) -> int:
    raw = os.environ.get(f"CRITGRAPH_{name}")
    return int(raw) if raw else default


@dataclass
class Limits:
    alpha_max_n: int = _env_int("ALPHA_MAX_N", 40)
    enumerate_max_n: int = _env_int("ENUMERATE_MAX_N", 24)
    oracle_max_nodes: int = _env_int("ORACLE_MAX_NODES", 10)
    basis_max_n: int = _env_int("BASIS_MAX_N", 12)


LIMITS = Limits()


def check_cap(n: int, cap: int, what: str) -> None:
    if n > cap:
        raise SizeCapError(f"{what}: size {n} exceeds cap {cap}")
