"""Closed-form minimum genus bounds and their number-theoretic helpers.

All arithmetic is exact integer arithmetic.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass
from math import gcd
from typing import Any

from .errors import DomainError, InfeasibleError
from .voltage import zn_order

# Branch tags for the symmetric combinatorial bound.
EVEN = "even"
MOD3_DISTINCT = "3mod4-two-prime-factors"
MOD3_SQUARE_OR_PRIME = "3mod4-square-or-prime"
MOD1_DIV3 = "1mod4-div3-not-div9"
OTHERWISE = "otherwise"


def smallest_prime_divisor(n: int) -> int:
    if n < 2:
        raise DomainError(f"smallest prime divisor needs n >= 2, got {n}")
    if n % 2 == 0:
        return 2
    p = 3
    while p * p <= n:
        if n % p == 0:
            return p
        p += 2
    return n


def is_prime(n: int) -> bool:
    return n >= 2 and smallest_prime_divisor(n) == n


def l_c_branch(n: int) -> str:
    """Which case of the symmetric combinatorial bound applies to ``n``."""
    if n < 3:
        raise DomainError(f"the symmetric combinatorial bound needs n >= 3, got {n}")
    if n % 2 == 0:
        return EVEN
    if n % 4 == 3:
        p1 = smallest_prime_divisor(n)
        if p1 != n and n % (p1 * p1) != 0:
            return MOD3_DISTINCT
        return MOD3_SQUARE_OR_PRIME
    if n % 3 == 0 and n % 9 != 0:
        return MOD1_DIV3
    return OTHERWISE


def l_c(n: int) -> int:
    """Minimum genus of a cyclically symmetric K_{n,n} embedding with a Hamiltonian face."""
    branch = l_c_branch(n)
    base = n * (n - 1) // 4
    if branch == EVEN:
        return n * (n - 2) // 4
    if branch == MOD3_DISTINCT:
        p1 = smallest_prime_divisor(n)
        return base + 1 - (n // p1 + p1) // 2
    if branch == MOD3_SQUARE_OR_PRIME:
        p1 = smallest_prime_divisor(n)
        return base + 1 - (n // p1 + 1) // 2
    if branch == MOD1_DIV3:
        return base - 1
    return base


def l_c_star(n: int) -> int:
    """Lower bound for the three-dimensional rotationally symmetric genus."""
    if n < 2:
        raise DomainError(f"the three-dimensional bound needs n >= 2, got {n}")
    r = n % 4
    if r == 0:
        return n * n // 4 - 1
    if r == 1:
        return n * (n - 1) // 4
    if r == 2:
        return n * (n - 2) // 4
    return n * (n + 1) // 4 - 1


def l_c_star_attainable(n: int) -> int:
    """Attainable three-dimensional minimum; differs from the bound only at n = 4."""
    return 4 if n == 4 else l_c_star(n)


def l_c_star_tilde(n: int) -> int:
    """Three-dimensional bound when the surface need not contain a fixed point."""
    if n < 2:
        raise DomainError(f"the fixed-point-free bound needs n >= 2, got {n}")
    r = n % 4
    if r == 0:
        return (n - 2) ** 2 // 4
    if r == 1:
        return n * (n - 1) // 4
    if r == 2:
        return n * (n - 2) // 4
    return (n * n - 3 * n + 4) // 4


def face_excess(size: int, voltage: int, n: int) -> int:
    """Excess contributed to the lift by a base face of ``size`` and net ``voltage``."""
    if size < 2 or size % 2:
        raise DomainError(f"face size must be even and at least 2, got {size}")
    return n * size - 4 * n // zn_order(voltage, n)


def choose_pq(n: int) -> tuple[int, int]:
    """Orders of the two extra 2-face voltages used for n = 3 (mod 4), composite."""
    if n % 4 != 3:
        raise DomainError(f"choose_pq needs n = 3 (mod 4), got {n}")
    p1 = smallest_prime_divisor(n)
    if p1 == n:
        raise DomainError(f"choose_pq needs composite n, got prime {n}")
    if n % (p1 * p1):
        return p1, n // p1
    return p1, n


def solve_g1g2(n: int, p: int, q: int) -> tuple[int, int]:
    """Smallest g1 of order p with g2 = -1 - g1 of order q."""
    if n < 1 or p < 1 or q < 1 or n % p or n % q:
        raise DomainError(f"p={p} and q={q} must divide n={n}")
    if gcd(n // p, n // q) != 1:
        raise DomainError(f"gcd(n/p, n/q) must be 1 for n={n}, p={p}, q={q}")
    step = n // p
    for g1 in range(0, n, step):
        if zn_order(g1, n) == p and zn_order(-1 - g1, n) == q:
            return g1, (-1 - g1) % n
    raise InfeasibleError(f"no g1, g2 with orders ({p}, {q}) modulo {n}")


@dataclass(frozen=True)
class BoundsReport:
    n: int
    l_c: int | None
    l_c_star: int
    l_c_star_attainable: int
    l_c_star_tilde: int
    branch_l_c: str | None
    p1: int | None
    pq: tuple[int, int] | None
    g1g2: tuple[int, int] | None

    def to_dict(self) -> dict[str, Any]:
        d = asdict(self)
        d["pq"] = list(self.pq) if self.pq else None
        d["g1g2"] = list(self.g1g2) if self.g1g2 else None
        return d


def bounds_report(n: int) -> BoundsReport:
    """Evaluate every bound for ``n``; the combinatorial one is left empty below 3."""
    if n < 2:
        raise DomainError(f"bounds are defined for n >= 2, got {n}")
    lc = branch = pq = g1g2 = None
    if n >= 3:
        lc, branch = l_c(n), l_c_branch(n)
        if branch == MOD3_DISTINCT or (branch == MOD3_SQUARE_OR_PRIME and not is_prime(n)):
            pq = choose_pq(n)
            g1g2 = solve_g1g2(n, *pq)
        elif branch == MOD1_DIV3:
            pq = (3, n // 3)
            g1g2 = solve_g1g2(n, *pq)
    return BoundsReport(
        n=n,
        l_c=lc,
        l_c_star=l_c_star(n),
        l_c_star_attainable=l_c_star_attainable(n),
        l_c_star_tilde=l_c_star_tilde(n),
        branch_l_c=branch,
        p1=smallest_prime_divisor(n),
        pq=pq,
        g1g2=g1g2,
    )
