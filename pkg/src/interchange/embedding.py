"""Directed two-coloured multigraphs, rotation systems and face tracing.

Edge ends are encoded as half-edge integers: ``2*e`` is the tail end of edge
``e`` (at its white vertex) and ``2*e + 1`` is its head end (at its black
vertex).  Whites are vertices ``0..W-1`` and blacks ``W..W+B-1``.

Face tracing convention: after traversing a half-edge ``h`` to the opposite
end ``h ^ 1``, the walk continues along the rotation successor of ``h ^ 1``.
A face boundary is the cyclic sequence of darts ``(edge, +1)`` for a
white-to-black traversal and ``(edge, -1)`` for black-to-white.
"""

from __future__ import annotations

import json
from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass
from functools import cached_property
from typing import Any

import numpy as np

from .errors import DomainError, InternalError, ValidationError

TAIL = "tail"
HEAD = "head"


def half_edge(edge: int, end: str) -> int:
    if end == TAIL:
        return 2 * edge
    if end == HEAD:
        return 2 * edge + 1
    raise ValidationError(f"edge end must be 'tail' or 'head', got {end!r}")


def edge_end(h: int) -> tuple[int, str]:
    return h >> 1, (TAIL if h % 2 == 0 else HEAD)


def dart_of(h: int) -> tuple[int, int]:
    """Dart leaving through half-edge ``h``."""
    return h >> 1, (1 if h % 2 == 0 else -1)


def canonical_cycle(seq: Sequence[Any]) -> tuple[Any, ...]:
    """Rotate a cyclic sequence so that its smallest element comes first."""
    if not seq:
        return ()
    i = min(range(len(seq)), key=lambda j: seq[j])
    return tuple(seq[i:]) + tuple(seq[:i])


def same_cycle(a: Sequence[Any], b: Sequence[Any]) -> bool:
    return len(a) == len(b) and canonical_cycle(list(a)) == canonical_cycle(list(b))


@dataclass(frozen=True)
class Multigraph:
    """Directed multigraph whose edges all run from a white to a black vertex."""

    white_count: int
    black_count: int
    edges: tuple[tuple[int, int, int], ...]

    def __post_init__(self) -> None:
        if self.white_count < 0 or self.black_count < 0:
            raise ValidationError("vertex counts must be non-negative")
        arr = np.asarray(self.edges, dtype=np.int64).reshape(-1, 3)
        object.__setattr__(self, "edges", tuple(map(tuple, arr.tolist())))
        W, V = self.white_count, self.vertex_count
        checks = (
            (arr[:, 0] != np.arange(len(arr)), "edge ids must be dense and ordered"),
            ((arr[:, 1] < 0) | (arr[:, 1] >= W), "tail is not a white vertex"),
            ((arr[:, 2] < W) | (arr[:, 2] >= V), "head is not a black vertex"),
        )
        for bad, msg in checks:
            idx = np.nonzero(bad)[0]
            if idx.size:
                raise ValidationError(f"edge at position {int(idx[0])}: {msg}")

    @classmethod
    def dipole(cls, n: int) -> Multigraph:
        """D_n: white vertex 0, black vertex 1, edges e_0..e_{n-1}."""
        if n < 0:
            raise DomainError("dipole size must be non-negative")
        return cls(1, 1, tuple((i, 0, 1) for i in range(n)))

    @property
    def vertex_count(self) -> int:
        return self.white_count + self.black_count

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def tail(self, e: int) -> int:
        return self.edges[e][1]

    def head(self, e: int) -> int:
        return self.edges[e][2]

    def vertex_of(self, h: int) -> int:
        _, tail, head = self.edges[h >> 1]
        return tail if h % 2 == 0 else head

    @cached_property
    def half_edge_vertex(self) -> np.ndarray:
        out = np.empty(2 * self.edge_count, dtype=np.int64)
        if self.edges:
            arr = self.edge_array
            out[0::2] = arr[:, 1]
            out[1::2] = arr[:, 2]
        return out

    @cached_property
    def edge_array(self) -> np.ndarray:
        return np.asarray(self.edges, dtype=np.int64).reshape(-1, 3)

    def is_connected(self) -> bool:
        V = self.vertex_count
        if V <= 1:
            return True
        arr = self.edge_array
        tails, heads = arr[:, 1], arr[:, 2]
        label = np.arange(V, dtype=np.int64)
        while True:
            m = np.minimum(label[tails], label[heads])
            new = label.copy()
            np.minimum.at(new, tails, m)
            np.minimum.at(new, heads, m)
            new = new[new]
            if np.array_equal(new, label):
                break
            label = new
        return bool(np.all(label == 0))


@dataclass(frozen=True)
class Face:
    """Boundary walk of one face as a cyclic sequence of darts."""

    boundary: tuple[tuple[int, int], ...]

    @property
    def size(self) -> int:
        return len(self.boundary)

    @property
    def half_edges(self) -> tuple[int, ...]:
        return tuple(2 * e + (0 if s == 1 else 1) for e, s in self.boundary)

    def vertices(self, graph: Multigraph) -> tuple[int, ...]:
        """Start vertex of every dart, in walk order."""
        return tuple(graph.vertex_of(h) for h in self.half_edges)

    def __str__(self) -> str:
        return " ".join(f"e{e}" if s == 1 else f"e{e}^-1" for e, s in self.boundary)


@dataclass(frozen=True)
class EmbeddedGraph:
    """A multigraph together with a rotation system.

    ``rotations[v]`` is the cyclic order of half-edges incident to ``v``.
    """

    graph: Multigraph
    rotations: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        rot = tuple(tuple(map(int, r)) for r in self.rotations)
        object.__setattr__(self, "rotations", rot)
        g = self.graph
        if len(rot) != g.vertex_count:
            raise ValidationError(
                f"rotation system lists {len(rot)} vertices, graph has {g.vertex_count}"
            )
        H = 2 * g.edge_count
        lengths = np.fromiter(map(len, rot), dtype=np.int64, count=len(rot))
        flat = np.concatenate([np.asarray(r, dtype=np.int64) for r in rot]) if rot else np.zeros(0, np.int64)
        if flat.size != H:
            raise ValidationError(f"rotation system lists {flat.size} edge ends, graph has {H}")
        if H and (flat.min() < 0 or flat.max() >= H):
            raise ValidationError("rotation system mentions an unknown edge")
        object.__setattr__(self, "_flat", (flat, lengths))
        counts = np.bincount(flat, minlength=H)
        if H and counts.max() > 1:
            h = int(np.argmax(counts))
            raise ValidationError(f"edge end {edge_end(h)} appears more than once")
        owner = np.repeat(np.arange(len(rot)), lengths)
        bad = np.nonzero(owner != g.half_edge_vertex[flat])[0]
        if bad.size:
            h = int(flat[bad[0]])
            raise ValidationError(
                f"edge end {edge_end(h)} listed at vertex {int(owner[bad[0]])}, "
                f"but it is incident to vertex {g.vertex_of(h)}"
            )

    @classmethod
    def from_edge_ends(
        cls, graph: Multigraph, rotations: Mapping[int, Sequence[tuple[int, str]]]
    ) -> EmbeddedGraph:
        rot = []
        for v in range(graph.vertex_count):
            rot.append(tuple(half_edge(e, end) for e, end in rotations.get(v, ())))
        return cls(graph, tuple(rot))

    @classmethod
    def dipole(cls, rho_w: Sequence[int], rho_b: Sequence[int]) -> EmbeddedGraph:
        """D_n with the given cyclic edge orders at the white and black vertex."""
        n = len(rho_w)
        return cls(
            Multigraph.dipole(n),
            (tuple(2 * e for e in rho_w), tuple(2 * e + 1 for e in rho_b)),
        )

    @cached_property
    def successor(self) -> np.ndarray:
        """``successor[h]`` is the half-edge after ``h`` in its vertex rotation."""
        flat, lengths = self._flat  # type: ignore[attr-defined]
        out = np.empty(flat.size, dtype=np.int64)
        if flat.size:
            ends = np.cumsum(lengths)
            starts = ends - lengths
            nxt = np.arange(1, flat.size + 1, dtype=np.int64)
            nonempty = lengths > 0
            nxt[ends[nonempty] - 1] = starts[nonempty]
            out[flat] = flat[nxt]
        return out

    @cached_property
    def face_permutation(self) -> np.ndarray:
        """Permutation of half-edges whose cycles are the faces."""
        H = self.successor.size
        return self.successor[np.arange(H, dtype=np.int64) ^ 1]

    def edge_order(self, v: int) -> tuple[int, ...]:
        return tuple(h >> 1 for h in self.rotations[v])

    def to_dict(self) -> dict[str, Any]:
        g = self.graph
        return {
            "white": g.white_count,
            "black": g.black_count,
            "edges": [list(e) for e in g.edges],
            "rotations": {
                str(v): [[h >> 1, TAIL if h % 2 == 0 else HEAD] for h in r]
                for v, r in enumerate(self.rotations)
            },
        }

    @classmethod
    def from_dict(cls, data: Mapping[str, Any]) -> EmbeddedGraph:
        try:
            graph = Multigraph(
                int(data["white"]), int(data["black"]), tuple(tuple(e) for e in data["edges"])
            )
            rots = {int(v): [(int(e), str(end)) for e, end in seq] for v, seq in data["rotations"].items()}
        except (KeyError, TypeError, ValueError) as exc:
            if isinstance(exc, ValidationError):
                raise
            raise ValidationError(f"malformed embedded graph: {exc}") from exc
        return cls.from_edge_ends(graph, rots)

    def to_json(self, **kw: Any) -> str:
        return json.dumps(self.to_dict(), **kw)


def _cycle_labels(perm: np.ndarray) -> np.ndarray:
    """Label every element by the minimum element of its cycle."""
    label = np.arange(perm.size, dtype=np.int64)
    p = perm.copy()
    span = 1
    while span < perm.size:
        label = np.minimum(label, label[p])
        p = p[p]
        span *= 2
    return label


def face_labels(emb: EmbeddedGraph) -> np.ndarray:
    """For each half-edge, the smallest half-edge of the face it departs along."""
    return _cycle_labels(emb.face_permutation)


def face_count(emb: EmbeddedGraph) -> int:
    lab = face_labels(emb)
    return int(np.count_nonzero(lab == np.arange(lab.size)))


def trace_faces(emb: EmbeddedGraph) -> list[Face]:
    """All faces, ordered by their smallest half-edge; each starts at that half-edge."""
    phi = emb.face_permutation.tolist()
    seen = [False] * len(phi)
    faces: list[Face] = []
    for start in range(len(phi)):
        if seen[start]:
            continue
        darts = []
        h = start
        while not seen[h]:
            seen[h] = True
            darts.append((h >> 1, 1 if h % 2 == 0 else -1))
            h = phi[h]
        if h != start:
            raise InternalError("face permutation is not a permutation")
        faces.append(Face(tuple(darts)))
    return faces


def euler_characteristic(emb: EmbeddedGraph, faces: int | None = None) -> int:
    g = emb.graph
    F = face_count(emb) if faces is None else faces
    return g.vertex_count - g.edge_count + F


def euler_genus(emb: EmbeddedGraph) -> int:
    """Orientable genus of the surface carrying the embedding."""
    if not emb.graph.is_connected():
        raise ValidationError("genus is only defined for connected graphs")
    defect = 2 - euler_characteristic(emb)
    if defect % 2 or defect < 0:
        raise InternalError(f"Euler defect {defect} is not a non-negative even number")
    return defect // 2


def is_hamiltonian_face(face: Face, graph: Multigraph) -> bool:
    n = graph.white_count
    if face.size != 2 * n or graph.vertex_count != 2 * n:
        return False
    return len(set(face.vertices(graph))) == 2 * n


def hamiltonian_faces(emb: EmbeddedGraph) -> list[Face]:
    """Faces whose boundary is a cycle through every vertex exactly once."""
    g = emb.graph
    n = g.white_count
    if g.vertex_count != 2 * n:
        return []
    lab = face_labels(emb)
    sizes = np.bincount(lab, minlength=lab.size)
    out = []
    phi = emb.face_permutation
    for leader in np.nonzero(sizes == 2 * n)[0].tolist():
        darts = []
        h = leader
        for _ in range(2 * n):
            darts.append((h >> 1, 1 if h % 2 == 0 else -1))
            h = int(phi[h])
        face = Face(tuple(darts))
        if is_hamiltonian_face(face, g):
            out.append(face)
    return out


def is_simple_complete_bipartite(g: Multigraph, n: int) -> bool:
    """True iff ``g`` is K_{n,n}: one edge for every white-black pair."""
    if g.white_count != n or g.black_count != n or g.edge_count != n * n:
        return False
    arr = g.edge_array
    codes = np.unique(arr[:, 1] * (2 * n) + arr[:, 2])
    return codes.size == n * n


def rotation_from_cycle(cycle: Iterable[int]) -> dict[int, int]:
    """Successor map of a cyclic sequence."""
    seq = list(cycle)
    return {x: seq[(i + 1) % len(seq)] for i, x in enumerate(seq)}
