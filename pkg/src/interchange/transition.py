"""Transition graphs and the optimal cyclically symmetric constructions.

A transition graph on Z_n is a pair of directed Hamiltonian cycles: the solid
cycle C1 and the dotted cycle C2.  It encodes the embedded voltage dipole with
``alpha(e_i) = i`` whose black rotation is C1 and whose white rotation is C2.
Its alternating cycles ``v1 => v2 -> v3 => v4 -> ... -> v1`` are exactly the
base faces, and the net transition ``-v1 + v2 - v3 + ... + vk`` is the
negated net voltage of the matching face.
"""

from __future__ import annotations

import json
from collections.abc import Iterator, Mapping, Sequence
from dataclasses import dataclass
from typing import Any

from .bounds import choose_pq, is_prime, smallest_prime_divisor, solve_g1g2
from .embedding import EmbeddedGraph, canonical_cycle
from .errors import DomainError, InfeasibleError, InternalError, ValidationError
from .voltage import VoltageGraph, zn_order


@dataclass(frozen=True)
class TransitionGraph:
    n: int
    solid: tuple[int, ...]
    dotted: tuple[int, ...]

    def __post_init__(self) -> None:
        n = self.n
        if n < 1:
            raise DomainError("transition graph order must be at least 1")
        solid = tuple(int(v) % n for v in self.solid)
        dotted = tuple(int(v) % n for v in self.dotted)
        for name, cyc in (("solid", solid), ("dotted", dotted)):
            if sorted(cyc) != list(range(n)):
                raise ValidationError(f"{name} cycle is not a Hamiltonian cycle on Z_{n}: {cyc}")
        object.__setattr__(self, "solid", solid)
        object.__setattr__(self, "dotted", dotted)

    @property
    def solid_successor(self) -> list[int]:
        return _successor(self.solid)

    @property
    def dotted_successor(self) -> list[int]:
        return _successor(self.dotted)

    def to_dict(self) -> dict[str, Any]:
        return {"n": self.n, "solid": list(self.solid), "dotted": list(self.dotted)}

    @classmethod
    def from_dict(cls, data: Mapping[str, Any]) -> TransitionGraph:
        try:
            return cls(int(data["n"]), tuple(data["solid"]), tuple(data["dotted"]))
        except (KeyError, TypeError) as exc:
            raise ValidationError(f"malformed transition graph: {exc}") from exc

    def to_json(self, **kw: Any) -> str:
        return json.dumps(self.to_dict(), **kw)


def _successor(cycle: Sequence[int]) -> list[int]:
    succ = [0] * len(cycle)
    for i, x in enumerate(cycle):
        succ[x] = cycle[(i + 1) % len(cycle)]
    return succ


@dataclass(frozen=True)
class AlternatingCycle:
    """Vertices ``v1 => v2 -> v3 => ...``; odd positions start solid edges."""

    vertices: tuple[int, ...]
    net: int

    @property
    def length(self) -> int:
        return len(self.vertices)


def alternating_cycles(tg: TransitionGraph) -> list[AlternatingCycle]:
    """Partition of all edges into alternating cycles, ordered by smallest solid source."""
    n = tg.n
    s, d = tg.solid_successor, tg.dotted_successor
    seen = [False] * n
    out = []
    for x in range(n):
        if seen[x]:
            continue
        verts: list[int] = []
        v = x
        while not seen[v]:
            seen[v] = True
            w = s[v]
            verts += [v, w]
            v = d[w]
        if v != x:
            raise InternalError("alternating walk did not close")
        net = sum(verts[1::2]) - sum(verts[0::2])
        out.append(AlternatingCycle(tuple(verts), net % n))
    return out


def cycle_profile(tg: TransitionGraph) -> list[tuple[int, int]]:
    """Sorted multiset of (length, order of net transition) over alternating cycles."""
    return sorted((c.length, zn_order(c.net, tg.n)) for c in alternating_cycles(tg))


def genus_from_cycles(tg: TransitionGraph) -> int:
    """Derived genus computed from the alternating-cycle profile alone."""
    n = tg.n
    faces = sum(n // zn_order(c.net, n) for c in alternating_cycles(tg))
    return (2 - 2 * n + n * n - faces) // 2


def tg_to_voltage(tg: TransitionGraph) -> VoltageGraph:
    """Embedded voltage dipole encoded by ``tg``."""
    base = EmbeddedGraph.dipole(tg.dotted, tg.solid)
    return VoltageGraph(base, tg.n, tuple(range(tg.n)))


def voltage_to_tg(vg: VoltageGraph) -> TransitionGraph:
    """Inverse of :func:`tg_to_voltage` for dipoles with bijective voltages."""
    if not vg.is_dipole() or not vg.is_bijective():
        raise DomainError("only dipoles with bijective voltages are transition graphs")
    w, b = vg.base.rotations
    return TransitionGraph(vg.modulus, tuple(vg.alpha[h >> 1] for h in b), tuple(vg.alpha[h >> 1] for h in w))


def same_transition_graph(a: TransitionGraph, b: TransitionGraph) -> bool:
    return (
        a.n == b.n
        and canonical_cycle(list(a.solid)) == canonical_cycle(list(b.solid))
        and canonical_cycle(list(a.dotted)) == canonical_cycle(list(b.dotted))
    )


# ---------------------------------------------------------------------------
# Even n


def construct_even(n: int) -> TransitionGraph:
    """Two Hamiltonian 2-cycles and quadrangles elsewhere: genus n(n-2)/4."""
    if n < 2 or n % 2:
        raise DomainError(f"construct_even needs even n >= 2, got {n}")
    h = n // 2
    solid = list(range(h, 0, -1)) + list(range(h + 1, n)) + [0]
    if n == 2:
        return TransitionGraph(2, tuple(solid), (1, 0))
    first = [1]
    for m in range(2, h, 2):
        first += [m, -m]
    second = [0, -1]
    for m in range(3, h, 2):
        second += [m, -m]
    if h % 2 == 0:
        first.append(h)
    else:
        second.append(h)
    return TransitionGraph(n, tuple(solid), tuple(first + second))


# ---------------------------------------------------------------------------
# Odd n with every extra face quadrangular or a single hexagon


def construct_odd(n: int) -> TransitionGraph:
    """Genus floor(n(n-1)/4) with a Hamiltonian face generated by a 2-face."""
    if n < 3 or n % 2 == 0:
        raise DomainError(f"construct_odd needs odd n >= 3, got {n}")
    h = (n - 1) // 2
    if n % 4 == 3:
        solid = list(range(0, h + 1)) + list(range(n - 1, h, -1))
        dotted: list[int] = []
        for j in range(0, (n - 3) // 2 + 1, 2):
            dotted += [j, h + 1 + j]
        for j in range(0, (n - 3) // 2 - 1, 2):
            dotted += [h - j, n - 2 - j]
        dotted.append(1)
        return TransitionGraph(n, tuple(solid), tuple(dotted))
    solid = list(range(h, 0, -1)) + list(range(h + 1, n)) + [0]
    bigs = list(range(n - 1, h + 1, -2))
    smalls = list(range(h - 2, 1, -2))
    odds = list(range(1, h, 2))
    highs = list(range(h + 3, n - 1, 2))
    dotted = [h + 1, 0] + _interleave(bigs, smalls) + _interleave(odds, highs) + [h]
    return TransitionGraph(n, tuple(solid), tuple(dotted))


def _interleave(longer: list[int], shorter: list[int]) -> list[int]:
    out = []
    for i, x in enumerate(longer):
        out.append(x)
        if i < len(shorter):
            out.append(shorter[i])
    return out


# ---------------------------------------------------------------------------
# Three 2-faces with nets 1, g1, g2


def _abcde_ok(n: int, vals: Sequence[int]) -> bool:
    pool = [v % n for v in vals] + [(-v) % n for v in vals]
    return len(set(pool)) == 10 and not set(pool) & {0, 1, n - 1}


def solve_abcde(n: int, g1: int, g2: int, *, halving_first: bool = True) -> tuple[int, int, int, int, int]:
    """Solve a = g1 - b, d = g2 - c, e = b + c with ten distinct values avoiding 0, +-1.

    The halving choice a = (g1-1)/2, b = a+1, c = (g2-1)/2, d = c+1 is tried
    first; otherwise the lexicographically smallest feasible (b, c) is returned.
    """
    if n % 2 == 0 or n < 3:
        raise DomainError(f"solve_abcde needs odd n >= 3, got {n}")
    g1, g2 = g1 % n, g2 % n
    if g1 == 0 or g2 == 0 or (g1 + g2 + 1) % n:
        raise DomainError(f"need nonzero g1, g2 with g1 + g2 + 1 = 0 (mod {n})")
    if halving_first:
        inv2 = (n + 1) // 2
        b = ((g1 - 1) * inv2 + 1) % n
        c = ((g2 - 1) * inv2) % n
        cand = ((g1 - b) % n, b, c, (g2 - c) % n, (b + c) % n)
        if _abcde_ok(n, cand):
            return cand
    for b in range(n):
        for c in range(n):
            cand = ((g1 - b) % n, b, c, (g2 - c) % n, (b + c) % n)
            if _abcde_ok(n, cand):
                return cand
    raise InfeasibleError(f"no admissible (a, b, c, d, e) for n={n}, g1={g1}, g2={g2}")


def _class_rep(x: int, n: int) -> int:
    x %= n
    return min(x, n - x)


def _assemble(n: int, seq: Sequence[int], k: int, l: int, twisted: int | None = None) -> TransitionGraph | None:
    """Solid paths P1..P4 and dotted edges from the 2-cycle, 4-cycle and closing rules.

    ``twisted`` is a position m whose quadrangle is replaced by the 2-cycles
    (v_m, v_{m+1}) and (-v_m, -v_{m+1}).  Returns None when the dotted edges
    do not close into a single Hamiltonian cycle.
    """
    t = len(seq) - 1
    v = [x % n for x in seq]
    neg = [(-x) % n for x in seq]
    solid = (
        v[0 : k + 1]
        + neg[1 : k + 1] + v[k + 1 : l + 1]
        + neg[k + 1 : l + 1] + v[l + 1 : t + 1]
        + neg[l + 1 : t + 1]
    )
    a, b, c, d, e = v[k], v[k + 1], v[l], v[l + 1], v[t]
    dot: dict[int, int] = {}

    def add(x: int, y: int) -> None:
        if x in dot:
            raise InternalError(f"dotted edge from {x} added twice")
        dot[x] = y

    add(b, (-a) % n)
    add(d, (-c) % n)
    add(v[1], v[0])
    for i in range(1, t):
        if i in (k, l):
            continue
        if i == twisted:
            add(v[i + 1], v[i])
            add(neg[i + 1], neg[i])
        else:
            add(v[i + 1], neg[i])
            add(neg[i + 1], v[i])
    add((-b) % n, (-e) % n)
    add(0, c)
    add((-d) % n, a)
    add((n - 1) % n, e)
    if sorted(dot) != list(range(n)) or sorted(dot.values()) != list(range(n)):
        raise InternalError("dotted edges do not form a permutation")
    dotted = [0]
    while len(dotted) < n:
        nxt = dot[dotted[-1]]
        if nxt == 0:
            return None
        dotted.append(nxt)
    if dot[dotted[-1]] != 0 or sorted(solid) != list(range(n)):
        return None
    return TransitionGraph(n, tuple(solid), tuple(dotted))


def _base_sequence(n: int, abcde: Sequence[int], fixed: Mapping[int, int]) -> list[int] | None:
    """s_1 with v0=0, v1=1, v2..v5=a,b,c,d, v_t=e plus ``fixed`` positions; rest ascending."""
    t = (n - 1) // 2
    a, b, c, d, e = abcde
    pos = {0: 0, 1: 1, 2: a, 3: b, 4: c, 5: d, t: e}
    pos.update(fixed)
    if len(pos) != 7 + len(fixed):
        return None
    used = {_class_rep(x, n) for x in pos.values()}
    if len(used) != len(pos):
        return None
    free = [x for x in range(1, t + 1) if x not in used]
    seq = []
    it = iter(free)
    for i in range(t + 1):
        seq.append(pos[i] if i in pos else next(it))
    return seq


def construct_g1g2(n: int, g1: int, g2: int) -> TransitionGraph:
    """Alternating 2-cycles with nets 1, g1, g2; every other cycle a net-zero quadrangle."""
    if n % 4 != 3:
        raise DomainError(f"construct_g1g2 needs n = 3 (mod 4), got {n}")
    if n < 15:
        raise DomainError(f"construct_g1g2 needs n >= 15, got {n}")
    abcde = solve_abcde(n, g1, g2)
    seq = _base_sequence(n, abcde, {})
    if seq is None:
        raise InternalError("could not place a, b, c, d, e")
    tg = _assemble(n, seq, 2, 4)
    if tg is None:
        raise InternalError(f"dotted edges are not a Hamiltonian cycle for n={n}")
    return tg


def construct_1mod4_div3(n: int) -> TransitionGraph:
    """n = 1 (mod 4), 3 | n, 9 does not divide n: extra 2-cycles with nets +-n/3."""
    if n % 4 != 1 or n % 3 or n % 9 == 0 or n < 21:
        raise DomainError(f"construct_1mod4_div3 needs n = 1 (mod 4), 3 | n, 9 not dividing n, n >= 21; got {n}")
    if n == 21:
        return fixture_21()
    third = n // 3
    g1, g2 = solve_g1g2(n, 3, third)
    abcde = solve_abcde(n, g1, g2)
    t = (n - 1) // 2
    taken = {0, 1} | {x % n for x in abcde}
    for f in range(n):
        forbidden = {y % n for x in taken for y in (x, -x, x - third, -x - third)}
        if f in forbidden or (-f) % n == (f + third) % n:
            continue
        for m in range(6, t - 1):
            seq = _base_sequence(n, abcde, {m: f, m + 1: (f + third) % n})
            if seq is None:
                continue
            tg = _assemble(n, seq, 2, 4, twisted=m)
            if tg is not None:
                return tg
    raise InfeasibleError(f"no admissible f, m for n={n}")


# ---------------------------------------------------------------------------
# Literal small cases


_FIXTURE_15 = (
    (0, 1, 2, -1, -2, 3, 4, -3, -4, 5, 6, 7, -5, -6, -7),
    (7, -6, 5, -4, 3, -2, 1, 0, 4, -3, -7, 6, -5, 2, -1),
)
_FIXTURE_21 = (
    (0, 1, 5, -1, -5, 9, 7, 6, 8, -9, -7, -6, -8, -2, 3, 10, -4, 2, -3, -10, 4),
    (4, 10, 3, 2, 5, -1, -4, -10, -3, -2, -8, 6, -7, 9, -5, 1, 0, 8, -6, 7, -9),
)


def fixture_15() -> TransitionGraph:
    return TransitionGraph(15, *_FIXTURE_15)


def fixture_21() -> TransitionGraph:
    return TransitionGraph(21, *_FIXTURE_21)


# ---------------------------------------------------------------------------
# Dispatcher


def optimal_transition_graph(n: int) -> TransitionGraph:
    """Transition graph whose lift has the minimum symmetric genus and a Hamiltonian face."""
    if n < 3:
        raise DomainError(f"optimal construction needs n >= 3, got {n}")
    if n % 2 == 0:
        return construct_even(n)
    if n % 4 == 3:
        if is_prime(n):
            return construct_odd(n)
        p, q = choose_pq(n)
        return construct_g1g2(n, *solve_g1g2(n, p, q))
    if n % 3 == 0 and n % 9:
        return construct_1mod4_div3(n)
    return construct_odd(n)


def construct_optimal_symmetric(n: int) -> VoltageGraph:
    return tg_to_voltage(optimal_transition_graph(n))


def two_cycle_nets(tg: TransitionGraph) -> list[int]:
    return sorted(c.net for c in alternating_cycles(tg) if c.length == 2)


def iter_constructions(lo: int, hi: int) -> Iterator[tuple[int, TransitionGraph]]:
    for n in range(lo, hi + 1):
        yield n, optimal_transition_graph(n)


__all__ = [
    "AlternatingCycle",
    "TransitionGraph",
    "alternating_cycles",
    "construct_1mod4_div3",
    "construct_even",
    "construct_g1g2",
    "construct_odd",
    "construct_optimal_symmetric",
    "cycle_profile",
    "fixture_15",
    "fixture_21",
    "genus_from_cycles",
    "optimal_transition_graph",
    "same_transition_graph",
    "smallest_prime_divisor",
    "solve_abcde",
    "tg_to_voltage",
    "two_cycle_nets",
    "voltage_to_tg",
]
