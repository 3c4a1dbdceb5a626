"""Closed-form ``f(n, k, q)`` and the per-direction loss accounting behind it."""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from .constructions import ConstructionSpec, allowed_edges
from .errors import CggError


class Clause(enum.Enum):
    Q_LE_N_MINUS_2K = 1
    MIDDLE = 2
    Q_GE_N_MINUS_K = 3


@dataclass(frozen=True)
class FmaxResult:
    value: int
    clause: Clause
    ell: int = 0


def check_params(n: int, k: int, q: int) -> None:
    if not isinstance(n, int) or n < 4:
        raise CggError(f"n must be an integer >= 4, got {n!r}")
    if not isinstance(k, int) or not 1 <= k <= n // 2 - 1:
        raise CggError(f"k must satisfy 1 <= k <= {n // 2 - 1} for n={n}, got {k!r}")
    if not isinstance(q, int) or not 1 <= q <= n - 1:
        raise CggError(f"q must satisfy 1 <= q <= {n - 1}, got {q!r}")


def valid_params(n: int, k: int, q: int) -> bool:
    try:
        check_params(n, k, q)
    except CggError:
        return False
    return True


def f_max(n: int, k: int, q: int) -> FmaxResult:
    """Maximum edges of an I_{k+1}-free convex graph on ``n`` vertices with a free arc of order ``q``."""
    check_params(n, k, q)
    if q <= n - 2 * k:
        return FmaxResult(k * n, Clause.Q_LE_N_MINUS_2K)
    if q < n - k:
        ell = q - (n - 2 * k)
        return FmaxResult(k * n - math.comb(ell + 1, 2), Clause.MIDDLE, ell)
    return FmaxResult(math.comb(n, 2) - math.comb(q, 2), Clause.Q_GE_N_MINUS_K)


def loss_formula(k: int, ell: int, j: int) -> int:
    if not 0 <= ell < k:
        raise CggError(f"need 0 <= ell < k, got ell={ell}, k={k}")
    j = abs(j)
    return math.ceil((ell - j) / 2) if j <= ell else 0


def loss_direct(spec: ConstructionSpec, j: int) -> int:
    """Edges short of ``k`` in direction ``j``, by counting allowed edges."""
    return max(0, spec.k - len(allowed_edges(spec, j)))


@dataclass(frozen=True)
class LossProfile:
    per_direction: dict[int, int]
    total: int


def loss_profile(spec: ConstructionSpec) -> LossProfile:
    """Direct losses over one full turn of directions, keyed by the representative in ``(-n/2, n/2]``."""
    n = spec.n
    per = {}
    for d in range(n):
        j = d if d <= n // 2 else d - n
        per[j] = loss_direct(spec, j)
    return LossProfile(per, sum(per.values()))


def triangular_identity(n: int) -> bool:
    """``ceil(n/2) + 2 * sum(ceil(i/2) for i < n) == C(n+1, 2)``."""
    if n < 1:
        raise CggError("n must be >= 1")
    lhs = (n + 1) // 2 + 2 * sum((i + 1) // 2 for i in range(1, n))
    return lhs == math.comb(n + 1, 2)
