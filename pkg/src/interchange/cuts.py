"""Cut systems: the combinatorial model of three-dimensional rotational symmetry.

A cut system lives on an embedded dipole.  Each cut curve is an arc (with a
start face and an end face) or a loop, and carries a signed crossing count
with every edge.  Voltages are crossing totals modulo n, and the genus of the
symmetric surface follows from Riemann-Hurwitz.

Sign conventions: the crossing net of curve ``c`` around face ``F`` is
``sum(s * crossings(e, c))`` over the boundary darts ``(e, s)``.  An arc
contributes +1 at its start face and -1 at its end face; loops contribute 0.
"""

from __future__ import annotations

import itertools
import json
from collections import deque
from collections.abc import Mapping, Sequence
from dataclasses import dataclass, field
from typing import Any

import numpy as np

from .bounds import l_c_star
from .embedding import EmbeddedGraph, Face, euler_genus, trace_faces
from .errors import DomainError, InfeasibleError, InternalError, ValidationError
from .voltage import VoltageGraph

ARC = "arc"
LOOP = "loop"


def rh_genus(base_genus: int, n: int, t: int) -> int:
    """Riemann-Hurwitz genus of an n-fold cover branched at the ends of t arcs."""
    if base_genus < 0 or n < 1 or t < 0:
        raise DomainError("need base_genus >= 0, n >= 1 and t >= 0")
    g = n * base_genus + (n - 1) * (t - 1)
    if g < 0:
        raise InfeasibleError(f"no surface: genus {g} for base genus {base_genus}, n={n}, t={t}")
    return g


@dataclass(frozen=True)
class CutCurve:
    kind: str
    endpoints: tuple[int, int] | None = None

    def __post_init__(self) -> None:
        if self.kind == ARC:
            if self.endpoints is None or len(self.endpoints) != 2:
                raise ValidationError("an arc needs exactly two endpoint faces")
            object.__setattr__(self, "endpoints", (int(self.endpoints[0]), int(self.endpoints[1])))
        elif self.kind == LOOP:
            if self.endpoints is not None:
                raise ValidationError("a loop has no endpoints")
        else:
            raise ValidationError(f"curve kind must be 'arc' or 'loop', got {self.kind!r}")

    def to_dict(self) -> dict[str, Any]:
        if self.kind == ARC:
            return {"kind": ARC, "endpoints": list(self.endpoints or ())}
        return {"kind": LOOP}


@dataclass(frozen=True)
class CutSystem:
    base: EmbeddedGraph
    modulus: int
    curves: tuple[CutCurve, ...]
    crossings: tuple[tuple[tuple[int, int], int], ...] = field(default=())

    def __post_init__(self) -> None:
        items = self.crossings.items() if isinstance(self.crossings, Mapping) else self.crossings
        clean = {}
        E, C = self.base.graph.edge_count, len(self.curves)
        for (e, c), s in items:
            e, c, s = int(e), int(c), int(s)
            if not (0 <= e < E and 0 <= c < C):
                raise ValidationError(f"crossing ({e}, {c}) names an unknown edge or curve")
            if s:
                clean[(e, c)] = s
        object.__setattr__(self, "crossings", tuple(sorted(clean.items())))
        object.__setattr__(self, "curves", tuple(self.curves))
        if self.modulus < 1:
            raise DomainError("modulus must be at least 1")

    @property
    def arc_count(self) -> int:
        return sum(1 for c in self.curves if c.kind == ARC)

    def crossing_table(self) -> np.ndarray:
        """Array ``[edge, curve]`` of signed crossing counts."""
        tab = np.zeros((self.base.graph.edge_count, len(self.curves)), dtype=np.int64)
        for (e, c), s in self.crossings:
            tab[e, c] = s
        return tab

    def to_dict(self) -> dict[str, Any]:
        d = self.base.to_dict()
        d["modulus"] = self.modulus
        d["curves"] = [c.to_dict() for c in self.curves]
        d["crossings"] = {f"{e},{c}": s for (e, c), s in self.crossings}
        return d

    @classmethod
    def from_dict(cls, data: Mapping[str, Any]) -> CutSystem:
        base = EmbeddedGraph.from_dict(data)
        try:
            curves = tuple(
                CutCurve(c["kind"], tuple(c["endpoints"]) if "endpoints" in c else None) for c in data["curves"]
            )
            cross = []
            for key, s in data["crossings"].items():
                e, c = key.split(",")
                cross.append(((int(e), int(c)), int(s)))
            n = int(data.get("modulus", base.graph.edge_count))
        except (KeyError, TypeError, ValueError, AttributeError) as exc:
            if isinstance(exc, ValidationError):
                raise
            raise ValidationError(f"malformed cut system: {exc}") from exc
        return cls(base, n, curves, tuple(cross))

    def to_json(self, **kw: Any) -> str:
        return json.dumps(self.to_dict(), **kw)


# ---------------------------------------------------------------------------
# Validation


def face_nets(cs: CutSystem, faces: Sequence[Face] | None = None) -> np.ndarray:
    """Array ``[face, curve]`` of crossing nets around each face boundary."""
    faces = trace_faces(cs.base) if faces is None else faces
    tab = cs.crossing_table()
    out = np.zeros((len(faces), len(cs.curves)), dtype=np.int64)
    for i, f in enumerate(faces):
        for e, s in f.boundary:
            out[i] += s * tab[e]
    return out


def expected_nets(cs: CutSystem, face_total: int) -> np.ndarray:
    out = np.zeros((face_total, len(cs.curves)), dtype=np.int64)
    for j, c in enumerate(cs.curves):
        if c.kind == ARC:
            start, end = c.endpoints  # type: ignore[misc]
            out[start, j] += 1
            out[end, j] -= 1
    return out


@dataclass(frozen=True)
class CutValidation:
    ok: bool
    violations: tuple[str, ...]
    note: str = (
        "crossing counts are checked for consistency with the endpoint faces only; "
        "the existence of disjoint simple curves realising them is not checked"
    )


def validate_cut_system(cs: CutSystem) -> CutValidation:
    """Check endpoint faces, the 2-face rules and the general face-boundary rule."""
    faces = trace_faces(cs.base)
    F = len(faces)
    errs: list[str] = []
    for j, c in enumerate(cs.curves):
        if c.kind == ARC and any(not 0 <= f < F for f in c.endpoints or ()):
            errs.append(f"curve {j}: endpoint face outside 0..{F - 1}")
    if errs:
        return CutValidation(False, tuple(errs))
    tab = cs.crossing_table()
    exp = expected_nets(cs, F)
    for i, f in enumerate(faces):
        if f.size == 2:
            (e1, _), (e2, _) = f.boundary
            for j, c in enumerate(cs.curves):
                ends = 0 if c.kind == LOOP else sum(1 for x in c.endpoints or () if x == i)
                diff = abs(int(tab[e1, j] - tab[e2, j]))
                if ends == 0 and diff != 0:
                    errs.append(f"2-face {i} ({f}): curve {j} has no endpoint there but crosses e{e1} and e{e2} differently")
                if ends == 1 and diff != 1:
                    errs.append(f"2-face {i} ({f}): curve {j} has one endpoint there but crossing counts differ by {diff}")
    nets = face_nets(cs, faces)
    for i, j in zip(*np.nonzero(nets != exp)):
        errs.append(f"face {int(i)}: curve {int(j)} has crossing net {int(nets[i, j])}, endpoints require {int(exp[i, j])}")
    return CutValidation(not errs, tuple(errs))


def cut_voltage(cs: CutSystem) -> VoltageGraph:
    """Voltage assignment ``alpha(e) = sum_c crossings(e, c) mod n`` on the base."""
    report = validate_cut_system(cs)
    if not report.ok:
        raise ValidationError("; ".join(report.violations))
    alpha = cs.crossing_table().sum(axis=1) % cs.modulus if cs.curves else np.zeros(cs.base.graph.edge_count)
    return VoltageGraph(cs.base, cs.modulus, tuple(int(a) for a in alpha))


def symmetric_genus(cs: CutSystem) -> int:
    return rh_genus(euler_genus(cs.base), cs.modulus, cs.arc_count)


@dataclass(frozen=True)
class ObstructionReport:
    n: int
    base_genus: int
    arcs: int
    two_faces: int
    required_two_faces: int
    endpoints: int
    counting_ok: bool
    endpoints_ok: bool
    certified_infeasible: bool


def obstruction_certified(n: int, g: int, t: int) -> bool:
    """No bijective cut voltage exists: at least n - 4g 2-faces, each needing one of 2t endpoints."""
    return n - 4 * g > 2 * t


def validate_lower_bound_obstruction(cs: CutSystem) -> ObstructionReport:
    """Counting checks for a cut system claimed to have bijective voltages."""
    n = cs.base.graph.edge_count
    g = euler_genus(cs.base)
    t = cs.arc_count
    k = sum(1 for f in trace_faces(cs.base) if f.size == 2)
    return ObstructionReport(
        n=n,
        base_genus=g,
        arcs=t,
        two_faces=k,
        required_two_faces=n - 4 * g,
        endpoints=2 * t,
        counting_ok=k >= n - 4 * g,
        endpoints_ok=2 * t >= k,
        certified_infeasible=obstruction_certified(n, g, t),
    )


# ---------------------------------------------------------------------------
# Arcs from endpoint data


def _dual_edges(faces: Sequence[Face], edge_total: int) -> list[tuple[int, int]]:
    """For each edge, (face holding its +1 dart, face holding its -1 dart)."""
    plus = [-1] * edge_total
    minus = [-1] * edge_total
    for i, f in enumerate(faces):
        for e, s in f.boundary:
            if s == 1:
                plus[e] = i
            else:
                minus[e] = i
    return list(zip(plus, minus))


def arc_crossings(base: EmbeddedGraph, start: int, end: int) -> dict[int, int]:
    """Crossing counts of an arc running along a shortest dual path between two faces."""
    faces = trace_faces(base)
    dual = _dual_edges(faces, base.graph.edge_count)
    if start == end:
        return {}
    # a unit on edge e adds +1 to the net of its plus-face and -1 to its minus-face
    adj: dict[int, list[tuple[int, int, int]]] = {i: [] for i in range(len(faces))}
    for e, (p, m) in enumerate(dual):
        adj[m].append((p, e, 1))
        adj[p].append((m, e, -1))
    prev: dict[int, tuple[int, int, int]] = {end: (-1, -1, 0)}
    queue = deque([end])
    while queue:
        f = queue.popleft()
        for g, e, s in adj[f]:
            if g not in prev:
                prev[g] = (f, e, s)
                queue.append(g)
    if start not in prev:
        raise InternalError("dual graph is disconnected")
    out: dict[int, int] = {}
    f = start
    while f != end:
        pf, e, s = prev[f]
        out[e] = out.get(e, 0) + s
        f = pf
    return {e: s for e, s in out.items() if s}


def curves_from_nets(base: EmbeddedGraph, crossings: Mapping[tuple[int, int], int], curve_total: int) -> tuple[CutCurve, ...]:
    """Read arc endpoints off the face nets of generated crossing data."""
    faces = trace_faces(base)
    tab = np.zeros((base.graph.edge_count, curve_total), dtype=np.int64)
    for (e, c), s in crossings.items():
        tab[e, c] = s
    nets = np.zeros((len(faces), curve_total), dtype=np.int64)
    for i, f in enumerate(faces):
        for e, s in f.boundary:
            nets[i] += s * tab[e]
    curves = []
    for j in range(curve_total):
        col = nets[:, j]
        if not np.any(col):
            curves.append(CutCurve(LOOP))
            continue
        starts = np.nonzero(col == 1)[0]
        ends = np.nonzero(col == -1)[0]
        if len(starts) != 1 or len(ends) != 1 or np.count_nonzero(col) != 2:
            raise InternalError(f"curve {j}: face nets {col.tolist()} do not describe a single arc")
        curves.append(CutCurve(ARC, (int(starts[0]), int(ends[0]))))
    return tuple(curves)


def _cut_system(n: int, rho_w: Sequence[int], rho_b: Sequence[int], crossings: Mapping[tuple[int, int], int], curve_total: int) -> CutSystem:
    base = EmbeddedGraph.dipole(rho_w, rho_b)
    curves = curves_from_nets(base, crossings, curve_total)
    return CutSystem(base, n, curves, tuple(crossings.items()))


# ---------------------------------------------------------------------------
# Ring road blocks


def block_permutation(n: int) -> dict[int, int]:
    """Position -> lane group value on the exit side of a block."""
    if n % 4 not in (1, 2):
        raise DomainError(f"block permutations exist for n = 1, 2 (mod 4), got {n}")
    pi = {}
    for t in range(n // 4):
        pi[4 * t + 1] = 4 * t + 1
        pi[4 * t + 2] = 4 * t + 4
        pi[4 * t + 3] = 4 * t + 3
        pi[4 * t + 4] = 4 * t + 2
    if n % 4 == 2:
        pi[n - 1] = n - 1
    return pi


def white_order_positions(n: int) -> list[int]:
    """Positions of exit-side points in the rotation at the white point of a block."""
    if n == 1:
        return []
    if n == 2:
        return [1]
    if n < 5 or n % 4 not in (1, 2):
        raise DomainError(f"white rotation defined for n = 1, 2 (mod 4), got {n}")
    return [3, 2] + [p + 4 for p in white_order_positions(n - 4)] + [4, 1]


def _p(i: int) -> str:
    return f"pi{i}"


def _q(i: int) -> str:
    return f"pi'{i}"


@dataclass(frozen=True)
class RingBlock:
    n: int
    pi: tuple[int, ...]
    pi_prime: tuple[int, ...]
    rotations: tuple[tuple[str, tuple[str, ...]], ...]
    genus: int

    def rotation(self, label: str) -> tuple[str, ...]:
        return dict(self.rotations)[label]


def _block_rotations(n: int) -> dict[str, list[str]]:
    rot: dict[str, list[str]] = {}
    for t in range(n // 4):
        rot[_p(4 * t + 1)] = ["vw", _q(4 * t + 4)]
        rot[_p(4 * t + 2)] = [_q(4 * t + 5), "vw"]
        rot[_p(4 * t + 3)] = ["vw", _q(4 * t + 2)]
        rot[_p(4 * t + 4)] = [_q(4 * t + 3), "vw"]
        rot[_q(4 * t + 2)] = [_p(4 * t + 3)]
        rot[_q(4 * t + 3)] = [_p(4 * t + 4)]
        rot[_q(4 * t + 4)] = [_p(4 * t + 1)]
        if 4 * t + 5 <= n - 1:
            rot[_q(4 * t + 5)] = [_p(4 * t + 2)]
    rot[_q(1)] = ["vb"]
    rot["vb"] = [_q(1)]
    if n % 4 == 2:
        rot[_p(n - 1)] = ["vw"]
    else:
        rot[_p(n - 3)] = ["vw"]
    rot["vw"] = [_p(i) for i in white_order_positions(n)]
    return rot


def _capped_block_genus(n: int, rot: Mapping[str, Sequence[str]]) -> int:
    """Genus of the block surface with its boundary rectangle capped by one face.

    At each boundary point the rotation runs: next boundary point, listed
    interior arcs, previous boundary point.
    """
    boundary = ["a"] + [_q(i) for i in range(1, n)] + ["b", "c"] + [_p(i) for i in range(n - 1, 0, -1)] + ["d", "vw", "vb"]
    ends: dict[tuple[str, str, str], int] = {}
    edges: list[tuple[str, str, str]] = []

    def add(u: str, v: str, kind: str) -> None:
        ends[(u, v, kind)] = 2 * len(edges)
        ends[(v, u, kind)] = 2 * len(edges) + 1
        edges.append((u, v, kind))

    for i, x in enumerate(boundary):
        add(x, boundary[(i + 1) % len(boundary)], "boundary")
    for x, arcs in rot.items():
        for y in arcs:
            if (x, y, "arc") not in ends:
                if x not in rot.get(y, ()):
                    raise InternalError(f"arc {x}-{y} listed at one end only")
                add(x, y, "arc")
    succ: dict[int, int] = {}
    for i, x in enumerate(boundary):
        cyc = [ends[(x, boundary[(i + 1) % len(boundary)], "boundary")]]
        cyc += [ends[(x, y, "arc")] for y in rot.get(x, ())]
        cyc.append(ends[(x, boundary[i - 1], "boundary")])
        for j, h in enumerate(cyc):
            succ[h] = cyc[(j + 1) % len(cyc)]
    H = 2 * len(edges)
    if len(succ) != H:
        raise InternalError("block rotation system does not cover every edge end")
    seen = [False] * H
    faces = 0
    for h in range(H):
        if not seen[h]:
            faces += 1
            while not seen[h]:
                seen[h] = True
                h = succ[h ^ 1]
    defect = 2 - len(boundary) + len(edges) - faces
    if defect % 2 or defect < 0:
        raise InternalError(f"block Euler defect {defect}")
    return defect // 2


def ring_block(n: int) -> RingBlock:
    """Building block of the ring road construction for n = 1, 2 (mod 4)."""
    if n < 5 or n % 4 not in (1, 2):
        raise DomainError(f"ring_block needs n >= 5 with n = 1, 2 (mod 4), got {n}")
    pi = block_permutation(n)
    rot = _block_rotations(n)
    genus = _capped_block_genus(n, rot)
    expected = l_c_star(n) // n
    if genus != expected:
        raise InternalError(f"block genus {genus} differs from {expected}")
    return RingBlock(
        n=n,
        pi=tuple(pi[i] for i in range(1, n)),
        pi_prime=tuple(pi[i] - 1 for i in range(1, n)),
        rotations=tuple(sorted((k, tuple(v)) for k, v in rot.items())),
        genus=genus,
    )


def m1_rotations(n: int) -> tuple[list[int], list[int]]:
    """White and black edge orders of the closed quotient embedding M_1(n).

    The white order lists e_0 then the exit groups in the block's white
    rotation.  The black order follows lane group n-1 backwards through the
    blocks: group k joins the ring road on the left when its exit point has
    rotation "pi' v_w" and on the right otherwise.
    """
    pi = block_permutation(n)
    white = [0] + [pi[i] for i in white_order_positions(n)]
    position = {v: i for i, v in pi.items()}
    black = [n - 1]
    for k in range(n - 2, 0, -1):
        joined_left = position[k] % 4 in (0, 2)
        black = black + [k] if joined_left else [k] + black
    black.append(0)
    return white, black


def base_m1(n: int) -> CutSystem:
    """M_1(n) with the single cut X_1 crossing e_k exactly k times."""
    if n < 5 or n % 4 not in (1, 2):
        raise DomainError(f"base_m1 needs n >= 5 with n = 1, 2 (mod 4), got {n}")
    white, black = m1_rotations(n)
    crossings = {(k, 0): k for k in range(1, n)}
    return _cut_system(n, white, black, crossings, 1)


def _planar_dipole_2() -> CutSystem:
    return _cut_system(2, [0, 1], [1, 0], {(1, 0): 1}, 1)


def _sphere_3() -> CutSystem:
    return _cut_system(3, [0, 1, 2], [0, 2, 1], {(1, 0): 1, (2, 0): 1, (2, 1): 1}, 2)


def _three_mod_four(n: int) -> CutSystem:
    """M_1(n-1) plus e_{-1} parallel to e_0 and a second cut crossing it once."""
    white, black = m1_rotations(n - 1)
    minus1 = n - 1
    w = []
    for x in white:
        w.append(x)
        if x == 0:
            w.append(minus1)
    b = []
    for x in black:
        if x == 0:
            b.append(minus1)
        b.append(x)
    crossings = {(k, 0): k for k in range(1, n - 1)}
    crossings[(minus1, 1)] = -1
    return _cut_system(n, w, b, crossings, 2)


def _zero_mod_four(n: int) -> CutSystem:
    """M_1(n-2) with e_2 rerouted as e_{-2}, plus e_{-1} and e_2' and a second cut.

    Edge ids: e_{2'} reuses id 2, e_{-1} is id n-1 and e_{-2} is id n-2.
    """
    white, black = m1_rotations(n - 2)
    two_p, minus1, minus2 = 2, n - 1, n - 2
    w: list[int] = []
    for x in white:
        if x == 2:
            continue
        w.append(x)
        if x == 0:
            w += [minus1, minus2, two_p]
    b: list[int] = []
    for x in black:
        if x == 2:
            continue
        if x == 0:
            b.append(minus1)
        b.append(x)
        if x == 1:
            b.append(minus2)
        elif x == 3:
            b.append(two_p)
    crossings = {(k, 0): k for k in range(1, n - 2) if k != 2}
    crossings[(two_p, 0)] = 3
    crossings[(minus2, 0)] = -1
    crossings[(two_p, 1)] = -1
    crossings[(minus1, 1)] = -1
    crossings[(minus2, 1)] = -1
    return _cut_system(n, w, b, crossings, 2)


# Genus-one torus witness for n = 4 with one arc, found by exhaustive search
# (see find_n4_witness) and frozen here.
_N4_WITNESS: dict[str, Any] | None = {
    "white": 1,
    "black": 1,
    "edges": [[0, 0, 1], [1, 0, 1], [2, 0, 1], [3, 0, 1]],
    "rotations": {
        "0": [[0, "tail"], [1, "tail"], [2, "tail"], [3, "tail"]],
        "1": [[0, "head"], [1, "head"], [3, "head"], [2, "head"]],
    },
    "modulus": 4,
    "curves": [{"kind": "arc", "endpoints": [0, 1]}],
    "crossings": {"0,0": -2, "1,0": -1, "2,0": 1},
}


def construct_3d(n: int) -> CutSystem:
    """Cut system whose symmetric surface has the minimum genus for n lanes."""
    if n < 2:
        raise DomainError(f"construct_3d needs n >= 2, got {n}")
    if n == 2:
        return _planar_dipole_2()
    if n == 3:
        return _sphere_3()
    if n == 4:
        return n4_witness()
    r = n % 4
    if r in (1, 2):
        return base_m1(n)
    if r == 3:
        return _three_mod_four(n)
    return _zero_mod_four(n)


# ---------------------------------------------------------------------------
# n = 4


def _cyclic_orders(items: Sequence[int]) -> list[list[int]]:
    first, rest = items[0], list(items[1:])
    return [[first, *p] for p in itertools.permutations(rest)]


def _solution_space(base: EmbeddedGraph) -> tuple[np.ndarray, list[Face]]:
    faces = trace_faces(base)
    B = np.zeros((len(faces), base.graph.edge_count), dtype=np.int64)
    for i, f in enumerate(faces):
        for e, s in f.boundary:
            B[i, e] += s
    return B, faces


@dataclass(frozen=True)
class N4Certificate:
    rotation_pairs: int
    planar_pairs: int
    planar_rotations: tuple[tuple[tuple[int, ...], tuple[int, ...]], ...]
    assignments_checked: int
    bijective_found: int
    images: tuple[tuple[int, ...], ...]
    witness_genus: int
    witness_base_genus: int
    witness_arcs: int
    witness_bijective: bool

    @property
    def certified(self) -> bool:
        return self.bijective_found == 0 and self.witness_genus == 4 and self.witness_bijective


def _planar_pairs(n: int) -> tuple[int, list[tuple[list[int], list[int]]]]:
    edges = list(range(n))
    pairs = [(w, b) for w in _cyclic_orders(edges) for b in _cyclic_orders(edges)]
    planar = [(w, b) for w, b in pairs if euler_genus(EmbeddedGraph.dipole(w, b)) == 0]
    return len(pairs), planar


def verify_n4_exception() -> N4Certificate:
    """Certify that no n = 4 cut system below genus 4 has bijective voltages.

    Below genus 4 the base must be planar with one or two arcs.  On a planar
    base the crossing vector of a curve is fixed by its endpoint faces up to
    an additive constant, and loops add constants only, so it suffices to try
    every endpoint assignment with one particular solution per arc.  The
    disjointness of the curves is ignored, which only enlarges the search.
    """
    n = 4
    total, planar = _planar_pairs(n)
    checked = bijective = 0
    images: set[tuple[int, ...]] = set()
    for w, b in planar:
        base = EmbeddedGraph.dipole(w, b)
        B, faces = _solution_space(base)
        if np.linalg.matrix_rank(B) != n - 1 or np.any(B @ np.ones(n, dtype=np.int64)):
            raise InternalError("planar dipole must leave only constant crossing vectors free")
        F = len(faces)
        particular = {}
        for s, e in itertools.product(range(F), repeat=2):
            vec = np.zeros(n, dtype=np.int64)
            for edge, c in arc_crossings(base, s, e).items():
                vec[edge] = c
            particular[(s, e)] = vec
        for t in (1, 2):
            for ends in itertools.product(particular, repeat=t):
                checked += 1
                alpha = sum(particular[x] for x in ends) % n
                images.add(tuple(sorted(set(((alpha - alpha[0]) % n).tolist()))))
                if len(set(alpha.tolist())) == n:
                    bijective += 1
    w = n4_witness()
    wv = cut_voltage(w)
    return N4Certificate(
        rotation_pairs=total,
        planar_pairs=len(planar),
        planar_rotations=tuple((tuple(a), tuple(b)) for a, b in planar),
        assignments_checked=checked,
        bijective_found=bijective,
        images=tuple(sorted(images)),
        witness_genus=symmetric_genus(w),
        witness_base_genus=euler_genus(w.base),
        witness_arcs=w.arc_count,
        witness_bijective=wv.is_bijective(),
    )


def find_n4_witness(bound: int = 2) -> CutSystem:
    """Search genus-one D_4 embeddings with one arc for bijective crossing totals.

    Candidates are ordered by rotation pair, endpoint faces and then by the
    crossing vector with smallest total absolute value.
    """
    n = 4
    edges = list(range(n))
    rng = range(-bound, bound + 1)
    vectors = sorted(itertools.product(rng, repeat=n), key=lambda v: (sum(map(abs, v)), v))
    for w in _cyclic_orders(edges):
        for b in _cyclic_orders(edges):
            base = EmbeddedGraph.dipole(w, b)
            if euler_genus(base) != 1:
                continue
            B, faces = _solution_space(base)
            for s, e in itertools.permutations(range(len(faces)), 2):
                target = np.zeros(len(faces), dtype=np.int64)
                target[s] += 1
                target[e] -= 1
                for vec in vectors:
                    x = np.asarray(vec, dtype=np.int64)
                    if np.array_equal(B @ x, target) and len(set((x % n).tolist())) == n:
                        cross = {(i, 0): int(v) for i, v in enumerate(vec) if v}
                        return CutSystem(base, n, (CutCurve(ARC, (s, e)),), tuple(cross.items()))
    raise InfeasibleError("no genus-one witness for n = 4 within the search bound")


def n4_witness() -> CutSystem:
    """Frozen genus-4 cut system for n = 4: torus base, one arc."""
    if _N4_WITNESS is None:
        return find_n4_witness()
    return CutSystem.from_dict(_N4_WITNESS)


__all__ = [
    "ARC",
    "LOOP",
    "CutCurve",
    "CutSystem",
    "CutValidation",
    "N4Certificate",
    "ObstructionReport",
    "RingBlock",
    "arc_crossings",
    "base_m1",
    "block_permutation",
    "construct_3d",
    "curves_from_nets",
    "cut_voltage",
    "face_nets",
    "find_n4_witness",
    "m1_rotations",
    "n4_witness",
    "obstruction_certified",
    "rh_genus",
    "ring_block",
    "symmetric_genus",
    "validate_cut_system",
    "validate_lower_bound_obstruction",
    "verify_n4_exception",
    "white_order_positions",
]
