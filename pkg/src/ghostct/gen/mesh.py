"""Mesh category of the translation quiver Z A_n, computed by knitting.

Vertices are pairs ``(p, i)`` with ``1 <= i <= n``.  Arrows go
``(p, i) -> (p, i + 1)`` and ``(p, i) -> (p + 1, i - 1)``; the translation is
``tau(p, i) = (p - 1, i)``.  Every arrow raises ``level = 2p + i`` by one.
The mesh ending at ``y`` says that the sum of the two-arrow paths
``tau y -> e -> y`` vanishes.

Hom spaces out of a fixed source are computed level by level: for ``y`` not
the source, ``Hom(x, y)`` is the cokernel of
``Hom(x, tau y) -> sum_e Hom(x, e)``.  Each basis vector remembers a path,
and each arrow ``e -> y`` carries the matrix ``Hom(x, e) -> Hom(x, y)`` of
postcomposition, so any path can be evaluated to coordinates.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from ..exactlin import ZERO, ONE, Matrix, Subspace, unit_vector, zero_vector
from ..homcat import CategoryTable, make_table


class WindowTooSmall(RuntimeError):
    pass


def level(v: tuple) -> int:
    return 2 * v[0] + v[1]


def tau(v: tuple, k: int = 1) -> tuple:
    return (v[0] - k, v[1])


def predecessors(n: int, v: tuple) -> list:
    """Sources of the arrows ending at ``v``, in a fixed order."""
    p, i = v
    out = []
    if i >= 2:
        out.append((p, i - 1))
    if i + 1 <= n:
        out.append((p - 1, i + 1))
    return out


def vertices_at_level(n: int, lev: int) -> list:
    return [((lev - i) // 2, i) for i in range(1, n + 1) if (lev - i) % 2 == 0]


def sigma(n: int, v: tuple, k: int = 1) -> tuple:
    """The quiver automorphism realizing the shift functor."""
    p, i = v
    for _ in range(k):
        p, i = p + i, n + 1 - i
    for _ in range(-k):
        i = n + 1 - i
        p = p - i
    return (p, i)


def hammock_dim(n: int, x: tuple, y: tuple) -> int:
    """Closed form for dim Hom(x, y): a rectangle spanned from ``x``."""
    q = y[0] - x[0]
    i, j = x[1], y[1]
    return int(0 <= q <= i - 1 and i - q <= j <= n - q)


@dataclass
class _Entry:
    paths: list
    push: dict  # predecessor -> Matrix Hom(x, e) -> Hom(x, y)


class MeshCategory:
    """Knitted mesh category of Z A_n restricted to levels ``lo..hi``."""

    def __init__(self, n: int, lo: int, hi: int):
        if n < 1:
            raise ValueError("n must be positive")
        self.n, self.lo, self.hi = n, lo, hi
        self._knit = {}

    def in_window(self, v: tuple) -> bool:
        return 1 <= v[1] <= self.n and self.lo <= level(v) <= self.hi

    def knit(self, x: tuple) -> dict:
        hit = self._knit.get(x)
        if hit is not None:
            return hit
        if not self.in_window(x):
            raise WindowTooSmall(f"source {x} lies outside the window")
        n = self.n
        homs = {x: _Entry([(x,)], {})}
        lev = level(x)
        while True:
            lev += 1
            nonzero = False
            for y in vertices_at_level(n, lev):
                preds = [e for e in predecessors(n, y) if e in homs]
                if not preds:
                    continue
                if not self.in_window(y):
                    raise WindowTooSmall(f"knitting from {x} reaches {y} outside the window")
                offsets, total = {}, 0
                for e in preds:
                    offsets[e] = total
                    total += len(homs[e].paths)
                rel = []
                ty = tau(y)
                if ty in homs:
                    for k in range(len(homs[ty].paths)):
                        v = [ZERO] * total
                        src = unit_vector(len(homs[ty].paths), k)
                        for e in preds:
                            m = homs[e].push.get(ty)
                            if m is not None:
                                img = m.apply(src)
                                v[offsets[e] : offsets[e] + len(img)] = img
                        rel.append(v)
                image = Subspace.span(rel, total)
                keep = image.complement_positions()
                if not keep:
                    continue
                nonzero = True
                paths = []
                for pos in keep:
                    e = max((f for f in preds if offsets[f] <= pos), key=offsets.get)
                    paths.append(homs[e].paths[pos - offsets[e]] + (y,))
                push = {}
                for e in preds:
                    m = len(homs[e].paths)
                    cols = [image.quotient_coordinates(unit_vector(total, offsets[e] + k)) for k in range(m)]
                    push[e] = Matrix.from_columns(cols, len(keep))
                homs[y] = _Entry(paths, push)
            if not nonzero:
                break
        self._knit[x] = homs
        return homs

    def dim(self, x: tuple, y: tuple) -> int:
        entry = self.knit(x).get(y)
        return len(entry.paths) if entry else 0

    def paths(self, x: tuple, y: tuple) -> list:
        entry = self.knit(x).get(y)
        return list(entry.paths) if entry else []

    def evaluate(self, path: tuple) -> tuple:
        """Coordinates of a path in the basis of Hom(start, end)."""
        x = path[0]
        homs = self.knit(x)
        end = homs.get(path[-1])
        if end is None:
            return ()
        v = (ONE,)
        for u, w in zip(path, path[1:]):
            entry = homs.get(w)
            if entry is None:
                return zero_vector(len(end.paths))
            v = entry.push[u].apply(v)
        return v


@dataclass(frozen=True)
class MeshWindow:
    """A finite full subcategory of the mesh category, as a Hom table."""

    n: int
    radius: int
    vertices: tuple
    table: CategoryTable
    mesh: MeshCategory

    def mesh_violations(self) -> list:
        out = []
        idx = {v: k for k, v in enumerate(self.vertices)}
        for y in self.vertices:
            ty = tau(y)
            if ty not in idx:
                continue
            total = zero_vector(self.mesh.dim(ty, y))
            for e in predecessors(self.n, y):
                if self.mesh.in_window(e):
                    vec = self.mesh.evaluate((ty, e, y))
                    total = tuple(a + b for a, b in zip(total, vec))
            if any(total):
                out.append(f"mesh at {y} does not vanish")
        return out

    def hammock_violations(self) -> list:
        return [
            f"dim Hom({x}, {y}) differs from the hammock"
            for x, y in product(self.vertices, repeat=2)
            if self.mesh.dim(x, y) != hammock_dim(self.n, x, y)
        ]


def gen_mesh(n: int, window_radius: int) -> MeshWindow:
    """Mesh category on the vertices with level ``1..window_radius``.

    Knitting from a vertex runs until a level of zero Homs, so the window is
    enlarged (doubling) when sources near the top would need more room; the
    returned table covers the requested levels.
    """
    if window_radius < 1:
        raise ValueError("window radius must be positive")
    hi = window_radius
    while True:
        mesh = MeshCategory(n, 1, hi)
        try:
            verts = [v for lev in range(1, window_radius + 1) for v in vertices_at_level(n, lev)]
            for v in verts:
                mesh.knit(v)
            break
        except WindowTooSmall:
            hi *= 2
    verts = tuple(verts)
    size = len(verts)
    hom = [[mesh.dim(x, y) for y in verts] for x in verts]
    comp = {}
    for a, b, c in product(range(size), repeat=3):
        if not (hom[a][b] and hom[b][c] and hom[a][c]):
            continue
        fps = mesh.paths(verts[a], verts[b])
        gps = mesh.paths(verts[b], verts[c])
        comp[(a, b, c)] = tuple(tuple(mesh.evaluate(fp + gp[1:]) for fp in fps) for gp in gps)
    idents = [(ONE,) for _ in verts]
    names = [f"({p},{i})" for p, i in verts]
    return MeshWindow(n, window_radius, verts, make_table(names, hom, comp, idents), mesh)
