"""Brute-force minimum genus over all embedded voltage dipoles with alpha(e_i) = i.

The rotation at each vertex of D_n is stored as a successor array ``nxt``
(``nxt[e]`` is the edge after ``e``).  Faces of the base correspond to cycles
of ``tau = nxt_w o nxt_b`` on edges; a cycle of length L with net voltage g
lifts to gcd(g, n) faces, so the derived genus is
``(2 - 2n + n^2 - sum gcd(g, n)) / 2``.  Such a lifted face is Hamiltonian iff
``L == gcd(g, n)`` and the white and black fibres met on one pass around the
base face are distinct modulo L.

Symmetry reduction uses the affine maps ``x -> u*x + c`` (u a unit of Z_n),
which relabel edges and voltages simultaneously.  The white rotation ranges
over orbit representatives and the black rotation over representatives
modulo the stabiliser of the white one.
"""

from __future__ import annotations

import itertools
import json
import os
from collections import Counter
from collections.abc import Callable, Iterable, Sequence
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from math import gcd
from pathlib import Path
from typing import Any

import numpy as np

from .embedding import EmbeddedGraph
from .errors import DomainError, InternalError
from .voltage import VoltageGraph

MIN_N = 3
BIG_N = 9

Cyclic = tuple[int, ...]


def normalize(order: Iterable[int]) -> Cyclic:
    """Cyclic order rotated to start at its smallest element."""
    seq = list(order)
    i = seq.index(min(seq))
    return tuple(seq[i:] + seq[:i])


def successor(order: Sequence[int]) -> np.ndarray:
    n = len(order)
    nxt = np.empty(n, dtype=np.int64)
    for i, x in enumerate(order):
        nxt[x] = order[(i + 1) % n]
    return nxt


def order_from_successor(nxt: Sequence[int]) -> Cyclic:
    out = [0]
    while len(out) < len(nxt):
        out.append(int(nxt[out[-1]]))
    return tuple(out)


def affine_maps(n: int) -> list[tuple[int, int]]:
    return [(u, c) for u in range(1, n) if gcd(u, n) == 1 for c in range(n)]


def _key(nxt: np.ndarray, n: int) -> np.ndarray:
    """Integer code of successor arrays (last axis); smaller code = earlier in the enumeration."""
    w = n ** np.arange(n - 1, -1, -1, dtype=np.int64)
    return nxt @ w


def _act(nxt: np.ndarray, u: int, c: int, n: int) -> np.ndarray:
    """Successor arrays relabelled by x -> u*x + c (works on the last axis)."""
    perm = (u * np.arange(n) + c) % n
    out = np.empty_like(nxt)
    out[..., perm] = perm[nxt]
    return out


@lru_cache(maxsize=None)
def all_successors(n: int) -> np.ndarray:
    """Successor arrays of every cyclic order of 0..n-1, sorted by code."""
    rows = np.array([successor((0, *p)) for p in itertools.permutations(range(1, n))], dtype=np.int64)
    return rows[np.argsort(_key(rows, n), kind="stable")]


def canonical_reduce(rotations: tuple[Sequence[int], Sequence[int]]) -> tuple[Cyclic, Cyclic]:
    """Least affine relabelling of a (white, black) rotation pair."""
    rw, rb = rotations
    n = len(rw)
    if sorted(rw) != list(range(n)) or sorted(rb) != list(range(n)):
        raise DomainError("rotations must be cyclic orders of 0..n-1")
    sw, sb = successor(rw), successor(rb)
    best = None
    for u, c in affine_maps(n) if n > 1 else [(1, 0)]:
        aw, ab = _act(sw, u, c, n), _act(sb, u, c, n)
        key = (int(_key(aw, n)), int(_key(ab, n)))
        if best is None or key < best[0]:
            best = (key, aw, ab)
    assert best is not None
    return order_from_successor(best[1]), order_from_successor(best[2])


@lru_cache(maxsize=None)
def white_representatives(n: int, reduce: bool) -> list[tuple[np.ndarray, list[tuple[int, int]]]]:
    """White successor arrays to enumerate, each with its non-trivial stabiliser."""
    rows = all_successors(n)
    if not reduce:
        return [(r, []) for r in rows]
    keys = _key(rows, n)
    maps = [m for m in affine_maps(n) if m != (1, 0)]
    seen = np.zeros(len(rows), dtype=bool)
    out = []
    for i, r in enumerate(rows):
        if seen[i]:
            continue
        stab = []
        seen[i] = True
        for u, c in maps:
            img = _act(r, u, c, n)
            j = int(np.searchsorted(keys, _key(img, n)))
            seen[j] = True
            if j == i:
                stab.append((u, c))
        out.append((r, stab))
    return out


@dataclass(frozen=True)
class Evaluation:
    genus: np.ndarray
    hamiltonian: np.ndarray


def evaluate(nw: np.ndarray, nb: np.ndarray) -> Evaluation:
    """Derived genus and Hamiltonian-face flag for a batch of black rotations."""
    nb = np.atleast_2d(nb)
    B, n = nb.shape
    rows = np.arange(B)
    tau = nw[nb]
    step = np.arange(n) - nb  # net voltage gained leaving white end of e
    gsum = np.zeros(B, dtype=np.int64)
    ham = np.zeros(B, dtype=bool)
    for s in range(n):
        cur = np.full(B, s, dtype=np.int64)
        length = np.zeros(B, dtype=np.int64)
        net = np.zeros(B, dtype=np.int64)
        is_min = np.ones(B, dtype=bool)
        done = np.zeros(B, dtype=bool)
        for _ in range(n):
            live = ~done
            net += np.where(live, step[rows, cur], 0)
            length += live
            cur = np.where(live, tau[rows, cur], cur)
            is_min &= ~(live & (cur < s))
            done |= cur == s
        if not done.all():
            raise InternalError("face walk did not close")
        g = np.gcd(net % n, n)
        g = np.where(net % n == 0, n, g)
        gsum += np.where(is_min, g, 0)
        cand = is_min & (length == g)
        if not cand.any():
            continue
        cur = np.full(B, s, dtype=np.int64)
        S = np.zeros(B, dtype=np.int64)
        wmask = np.zeros(B, dtype=np.int64)
        bmask = np.zeros(B, dtype=np.int64)
        L = np.maximum(length, 1)
        for j in range(n):
            live = j < length
            wmask |= np.where(live, 1 << (S % L), 0)
            bmask |= np.where(live, 1 << ((S + cur) % L), 0)
            S = S + step[rows, cur]
            cur = tau[rows, cur]
        full = (1 << L) - 1
        ham |= cand & (wmask == full) & (bmask == full)
    total = 2 - 2 * n + n * n - gsum
    if np.any(total % 2):
        raise InternalError("odd Euler defect in search")
    return Evaluation(total // 2, ham)


@dataclass
class PartResult:
    index: int
    counted: int
    histogram: dict[int, int]
    best: tuple[int, int] | None  # (genus, black code)


def _black_filter(rows: np.ndarray, keys: np.ndarray, stab: list[tuple[int, int]], n: int) -> np.ndarray:
    keep = np.ones(len(rows), dtype=bool)
    for u, c in stab:
        img = _key(_act(rows, u, c, n), n)
        keep &= keys <= img
    return keep


def _run_part(args: tuple[int, int, bool, bool]) -> PartResult:
    n, index, reduce, require_ham = args
    reps = white_representatives(n, reduce)
    nw, stab = reps[index]
    rows = all_successors(n)
    keys = _key(rows, n)
    if stab:
        keep = _black_filter(rows, keys, stab, n)
        rows, keys = rows[keep], keys[keep]
    ev = evaluate(nw, rows)
    mask = ev.hamiltonian if require_ham else np.ones(len(rows), dtype=bool)
    hist = Counter(ev.genus[mask].tolist())
    best = None
    if mask.any():
        gens = np.where(mask, ev.genus, np.iinfo(np.int64).max)
        i = int(np.argmin(gens))  # rows are in code order, so ties go to the smallest code
        best = (int(gens[i]), int(keys[i]))
    return PartResult(index, len(rows), dict(hist), best)


@dataclass(frozen=True)
class SearchResult:
    n: int
    min_genus: int | None
    witness: VoltageGraph | None
    counted: int
    require_ham: bool
    symmetry_reduction: bool = True
    histogram: dict[int, int] = field(default_factory=dict)

    def to_dict(self) -> dict[str, Any]:
        return {
            "n": self.n,
            "min_genus": self.min_genus,
            "counted": self.counted,
            "require_ham": self.require_ham,
            "symmetry_reduction": self.symmetry_reduction,
            "histogram": {str(k): v for k, v in sorted(self.histogram.items())},
            "witness": self.witness.to_dict() if self.witness else None,
        }


def _decode(code: int, n: int) -> np.ndarray:
    digits = []
    for _ in range(n):
        digits.append(code % n)
        code //= n
    return np.array(digits[::-1], dtype=np.int64)


def _check_domain(n: int, allow_big: bool) -> None:
    if n < MIN_N or n > BIG_N:
        raise DomainError(f"search supports {MIN_N} <= n <= {BIG_N}, got {n}")
    if n == BIG_N and not allow_big:
        raise DomainError(f"n = {BIG_N} needs allow_big")


def default_jobs() -> int:
    env = os.environ.get("INTERCHANGE_JOBS")
    if env:
        try:
            return max(1, int(env))
        except ValueError as exc:
            raise DomainError(f"INTERCHANGE_JOBS must be an integer, got {env!r}") from exc
    return 1


def _load_checkpoint(path: Path, header: dict[str, Any]) -> dict[int, PartResult]:
    if not path.exists():
        return {}
    data = json.loads(path.read_text())
    if data.get("header") != header:
        raise DomainError(f"checkpoint {path} belongs to a different search")
    return {
        int(k): PartResult(int(k), v["counted"], {int(g): c for g, c in v["histogram"].items()}, tuple(v["best"]) if v["best"] else None)
        for k, v in data["parts"].items()
    }


def _save_checkpoint(path: Path, header: dict[str, Any], parts: dict[int, PartResult]) -> None:
    data = {
        "header": header,
        "parts": {
            str(k): {"counted": p.counted, "histogram": {str(g): c for g, c in p.histogram.items()}, "best": list(p.best) if p.best else None}
            for k, p in sorted(parts.items())
        },
    }
    tmp = path.with_suffix(path.suffix + ".tmp")
    tmp.write_text(json.dumps(data))
    tmp.replace(path)


def enumerate_min_genus(
    n: int,
    require_ham: bool = True,
    symmetry_reduction: bool = True,
    *,
    jobs: int | None = None,
    checkpoint: str | Path | None = None,
    allow_big: bool = False,
    progress: Callable[[int, int], None] | None = None,
) -> SearchResult:
    """Exact minimum derived genus over all rotation pairs of D_n with alpha(e_i) = i."""
    _check_domain(n, allow_big)
    jobs = default_jobs() if jobs is None else max(1, jobs)
    reps = white_representatives(n, symmetry_reduction)
    header = {"n": n, "require_ham": require_ham, "symmetry_reduction": symmetry_reduction, "parts": len(reps)}
    ckpt = Path(checkpoint) if checkpoint else None
    parts = _load_checkpoint(ckpt, header) if ckpt else {}
    todo = [i for i in range(len(reps)) if i not in parts]

    def record(p: PartResult) -> None:
        parts[p.index] = p
        if ckpt:
            _save_checkpoint(ckpt, header, parts)
        if progress:
            progress(len(parts), len(reps))

    tasks = [(n, i, symmetry_reduction, require_ham) for i in todo]
    if jobs == 1 or len(tasks) <= 1:
        for t in tasks:
            record(_run_part(t))
    else:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            for p in pool.map(_run_part, tasks, chunksize=max(1, len(tasks) // (8 * jobs))):
                record(p)

    hist: Counter[int] = Counter()
    best: tuple[int, int, int] | None = None
    for i in range(len(reps)):
        p = parts[i]
        hist.update(p.histogram)
        if p.best and (best is None or (p.best[0], i, p.best[1]) < best):
            best = (p.best[0], i, p.best[1])
    witness = None
    if best is not None:
        rw = order_from_successor(reps[best[1]][0])
        rb = order_from_successor(_decode(best[2], n))
        witness = VoltageGraph(EmbeddedGraph.dipole(rw, rb), n, tuple(range(n)))
    return SearchResult(
        n=n,
        min_genus=best[0] if best else None,
        witness=witness,
        counted=sum(p.counted for p in parts.values()),
        require_ham=require_ham,
        symmetry_reduction=symmetry_reduction,
        histogram=dict(sorted(hist.items())),
    )


def histogram(n: int, require_ham: bool = True, symmetry_reduction: bool = True, **kw: Any) -> dict[int, int]:
    """Genus distribution over the enumerated classes."""
    return enumerate_min_genus(n, require_ham, symmetry_reduction, **kw).histogram


__all__ = [
    "SearchResult",
    "all_successors",
    "canonical_reduce",
    "default_jobs",
    "enumerate_min_genus",
    "evaluate",
    "histogram",
    "normalize",
    "order_from_successor",
    "successor",
    "white_representatives",
]
