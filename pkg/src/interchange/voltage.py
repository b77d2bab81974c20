"""Voltage assignments over Z_n on embedded base graphs and their lifts.

The derived graph has vertex ``(v, a)`` for every base vertex ``v`` and
``a`` in Z_n, numbered ``v*n + a``; with a dipole base this makes the white
vertex ``w_a`` id ``a`` and the black vertex ``b_a`` id ``n + a``.  Base edge
``e`` lifts to edges ``e*n + a`` running from ``(tail, a)`` to
``(head, a + alpha(e))``.  Every lifted vertex carries the base rotation.
"""

from __future__ import annotations

from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass
from math import gcd
from typing import Any

import numpy as np

from .embedding import EmbeddedGraph, Face, Multigraph, face_count, trace_faces
from .errors import DomainError, ValidationError


@dataclass(frozen=True, order=True)
class CyclicElement:
    """Residue class ``value`` modulo ``modulus``."""

    value: int
    modulus: int

    def __post_init__(self) -> None:
        if self.modulus < 1:
            raise DomainError("modulus must be at least 1")
        object.__setattr__(self, "value", self.value % self.modulus)

    def _coerce(self, other: CyclicElement | int) -> int:
        if isinstance(other, CyclicElement):
            if other.modulus != self.modulus:
                raise DomainError("cannot combine residues of different moduli")
            return other.value
        return int(other)

    def __add__(self, other: CyclicElement | int) -> CyclicElement:
        return CyclicElement(self.value + self._coerce(other), self.modulus)

    __radd__ = __add__

    def __sub__(self, other: CyclicElement | int) -> CyclicElement:
        return CyclicElement(self.value - self._coerce(other), self.modulus)

    def __neg__(self) -> CyclicElement:
        return CyclicElement(-self.value, self.modulus)

    def __mul__(self, k: int) -> CyclicElement:
        return CyclicElement(self.value * int(k), self.modulus)

    __rmul__ = __mul__

    def __int__(self) -> int:
        return self.value

    @property
    def order(self) -> int:
        return zn_order(self.value, self.modulus)


def zn_order(x: int | CyclicElement, n: int | None = None) -> int:
    """Additive order of ``x`` in Z_n."""
    if isinstance(x, CyclicElement):
        x, n = x.value, x.modulus
    if n is None or n < 1:
        raise DomainError("modulus must be at least 1")
    return n // gcd(int(x) % n, n)


@dataclass(frozen=True)
class VoltageGraph:
    """Embedded base graph with a Z_n voltage on each edge."""

    base: EmbeddedGraph
    modulus: int
    alpha: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.modulus < 1:
            raise DomainError("modulus must be at least 1")
        alpha = tuple(int(a) % self.modulus for a in self.alpha)
        if len(alpha) != self.base.graph.edge_count:
            raise ValidationError(
                f"voltage given for {len(alpha)} edges, base has {self.base.graph.edge_count}"
            )
        object.__setattr__(self, "alpha", alpha)

    def voltage(self, e: int) -> CyclicElement:
        return CyclicElement(self.alpha[e], self.modulus)

    def is_dipole(self) -> bool:
        g = self.base.graph
        return g.white_count == 1 and g.black_count == 1

    def is_bijective(self) -> bool:
        """Voltages hit every element of Z_n exactly once."""
        return sorted(self.alpha) == list(range(self.modulus))

    def to_dict(self) -> dict[str, Any]:
        d = self.base.to_dict()
        d["modulus"] = self.modulus
        d["alpha"] = {str(e): a for e, a in enumerate(self.alpha)}
        return d

    @classmethod
    def from_dict(cls, data: Mapping[str, Any]) -> VoltageGraph:
        base = EmbeddedGraph.from_dict(data)
        try:
            n = int(data["modulus"])
            raw = {int(k): int(v) for k, v in data["alpha"].items()}
        except (KeyError, TypeError, ValueError, AttributeError) as exc:
            raise ValidationError(f"malformed voltage graph: {exc}") from exc
        E = base.graph.edge_count
        if sorted(raw) != list(range(E)):
            raise ValidationError("alpha must assign a voltage to every edge")
        return cls(base, n, tuple(raw[e] for e in range(E)))


def derive_graph(vg: VoltageGraph) -> Multigraph:
    """The derived (lifted) multigraph."""
    g, n = vg.base.graph, vg.modulus
    if not g.edges:
        return Multigraph(g.white_count * n, g.black_count * n, ())
    base = np.asarray(g.edges, dtype=np.int64)
    alpha = np.asarray(vg.alpha, dtype=np.int64)
    a = np.arange(n, dtype=np.int64)
    ids = base[:, 0:1] * n + a
    tails = base[:, 1:2] * n + a
    heads = base[:, 2:3] * n + (a + alpha[:, None]) % n
    edges = np.stack([ids, tails, heads], axis=-1).reshape(-1, 3)
    return Multigraph(g.white_count * n, g.black_count * n, edges)


def derive_embedding(vg: VoltageGraph) -> EmbeddedGraph:
    """The derived embedding: each lift of a vertex copies the base rotation."""
    g, n = vg.base.graph, vg.modulus
    alpha = np.asarray(vg.alpha, dtype=np.int64)
    a = np.arange(n, dtype=np.int64)
    rotations: list[tuple[int, ...]] = [()] * (g.vertex_count * n)
    for v, rot in enumerate(vg.base.rotations):
        r = np.asarray(rot, dtype=np.int64)
        e = r >> 1
        head = (r & 1).astype(bool)
        # column a holds the lifted rotation at (v, a)
        shift = np.where(head, alpha[e], 0)
        fibre = (a[None, :] - shift[:, None]) % n
        lifted = 2 * (e[:, None] * n + fibre) + (r & 1)[:, None]
        cols = lifted.T.tolist()
        for i in range(n):
            rotations[v * n + i] = tuple(cols[i])
    return EmbeddedGraph(derive_graph(vg), tuple(rotations))


def net_voltage(face: Face, vg: VoltageGraph) -> CyclicElement:
    """Signed sum of the voltages along a face boundary."""
    return CyclicElement(sum(s * vg.alpha[e] for e, s in face.boundary), vg.modulus)


def derived_face_profile(face: Face, vg: VoltageGraph) -> tuple[int, int]:
    """(number of lifted faces, size of each) generated by a base face."""
    order = net_voltage(face, vg).order
    return vg.modulus // order, face.size * order


def total_derived_faces(vg: VoltageGraph) -> int:
    return sum(derived_face_profile(f, vg)[0] for f in trace_faces(vg.base))


def derived_genus(vg: VoltageGraph) -> int:
    """Genus of the derived embedding computed from base face voltages only."""
    g = vg.base.graph
    n = vg.modulus
    chi = n * g.vertex_count - n * g.edge_count + total_derived_faces(vg)
    return (2 - chi) // 2


def lifts_of_face(face: Face, vg: VoltageGraph) -> list[list[int]]:
    """Half-edge sequences of the derived faces generated by ``face``."""
    n = vg.modulus
    order = net_voltage(face, vg).order
    out = []
    for start in range(n // order):
        walk = []
        fibre = start
        for _ in range(order):
            for h in face.half_edges:
                e = h >> 1
                if h % 2 == 0:
                    walk.append(2 * (e * n + fibre))
                    fibre = (fibre + vg.alpha[e]) % n
                else:
                    fibre = (fibre - vg.alpha[e]) % n
                    walk.append(2 * (e * n + fibre) + 1)
        out.append(walk)
    return out


def voltage_faces_consistent(vg: VoltageGraph) -> bool:
    """Face count of the traced lift equals the count predicted from net voltages."""
    return face_count(derive_embedding(vg)) == total_derived_faces(vg)


def dipole_voltage_graph(rho_w: Sequence[int], rho_b: Sequence[int], alpha: Iterable[int], n: int) -> VoltageGraph:
    return VoltageGraph(EmbeddedGraph.dipole(rho_w, rho_b), n, tuple(alpha))


def two_face_hamiltonian_lifts(vg: VoltageGraph) -> list[Face]:
    """Base 2-faces whose single lift is a Hamiltonian face of the derived embedding."""
    n = vg.modulus
    g = vg.base.graph
    out = []
    for f in trace_faces(vg.base):
        if f.size != 2 or net_voltage(f, vg).order != n:
            continue
        (walk,) = lifts_of_face(f, vg)
        verts = []
        for h in walk:
            e, a = divmod(h >> 1, n)
            tail = g.edges[e][1] * n + a
            verts.append(tail if h % 2 == 0 else g.edges[e][2] * n + (a + vg.alpha[e]) % n)
        if len(set(verts)) == len(walk) == 2 * n:
            out.append(f)
    return out
