"""Orbit categories of the mesh category of Z A_n.

The auto-equivalence ``F0 = tau^-a [b]`` acts on vertices and raises the
level by ``d = 2a + b(n + 1)``.  Hom spaces of the orbit category are
``Hom(X, Y) = sum_i Hom(X, F0^i Y)``, with a basis of pairs
``(i, path)``.  Composition of ``(j, g)`` after ``(i, f)`` is the path
``f`` followed by ``F0^i(g)``, which lands in twist ``i + j``.

The shift and the Serre functor (``tau`` after the shift) commute with F0
and descend.  The shift transport sends a path ``p`` to ``F0^-k sigma(p)``
where ``sigma X = F0^k X'`` for the chosen representative ``X'``.
"""

from __future__ import annotations

from itertools import product

from ..exactlin import ONE, Matrix, zero_vector
from ..homcat import make_table
from ..tricat import TriangCategory
from .mesh import MeshCategory, WindowTooSmall, level, sigma, vertices_at_level


class InadmissibleSpec(ValueError):
    pass


def module_vertex(n: int, v: tuple) -> tuple:
    """Write ``v`` as ``sigma^k(m)`` with ``m`` a module vertex; return ``(m, k)``."""
    k = 0
    while not 0 <= v[0] <= n - v[1]:
        if v[0] < 0:
            v = sigma(n, v, 1)
            k -= 1
        else:
            v = sigma(n, v, -1)
            k += 1
    return v, k


def module_name(n: int, m: tuple) -> str:
    """Composition factors, top first, for the linear orientation 1 -> 2 -> ... -> n."""
    p, i = m
    lo, hi = n + 1 - i - p, n - p
    return "/".join(str(s) for s in range(lo, hi + 1))


def vertex_name(n: int, v: tuple) -> str:
    m, k = module_vertex(n, v)
    base = module_name(n, m)
    if k == 0:
        return base
    if "/" in base:
        base = f"({base})"
    return f"{base}[{k}]"


class _Orbit:
    def __init__(self, n: int, a: int, b: int):
        self.n, self.a, self.b = n, a, b
        self.d = 2 * a + b * (n + 1)

    def F(self, v: tuple, k: int = 1) -> tuple:
        for _ in range(k):
            v = sigma(self.n, (v[0] + self.a, v[1]), self.b)
        for _ in range(-k):
            v = sigma(self.n, v, -self.b)
            v = (v[0] - self.a, v[1])
        return v

    def to_window(self, v: tuple) -> tuple:
        """``(w, m)`` with ``w = F^m v`` of level in ``[1, 1 + d)``."""
        m = -((level(v) - 1) // self.d)
        return self.F(v, m), m


def _choose_representatives(orb: _Orbit) -> list:
    reps = []
    for lev in range(1, 1 + orb.d):
        for w in vertices_at_level(orb.n, lev):
            best = None
            span = 3 * (orb.n + 1) // orb.d + 3
            for m in range(0, span + 1):
                v = orb.F(w, m)
                _, k = module_vertex(orb.n, v)
                if k >= 0:
                    key = (k, level(v))
                    if best is None or key < best[0]:
                        best = (key, v)
            reps.append(best[1])
    return sorted(reps, key=lambda v: (module_vertex(orb.n, v)[1], level(v), v[1]))


def gen_orbit(n: int, a: int, b: int, name: str = "") -> TriangCategory:
    """Orbit category of the mesh category of Z A_n by ``tau^-a [b]``."""
    if n < 1 or a < 0 or b < 0:
        raise InadmissibleSpec("need n >= 1 and nonnegative a, b")
    orb = _Orbit(n, a, b)
    if orb.d <= 0:
        raise InadmissibleSpec("tau^-a [b] must move every vertex to a higher level")
    hi = 1 + orb.d + n
    while True:
        try:
            return _build(orb, MeshCategory(n, 1, hi), name or f"orbit_A{n}_{a}_{b}")
        except WindowTooSmall:
            hi *= 2


def _build(orb: _Orbit, mesh: MeshCategory, name: str) -> TriangCategory:
    n, d = orb.n, orb.d
    reps = _choose_representatives(orb)
    size = len(reps)
    where = {}
    for idx, r in enumerate(reps):
        w, m = orb.to_window(r)
        where[w] = (idx, m)

    def locate_pair(v: tuple) -> tuple:
        """``(idx, s)`` with ``v = F^s reps[idx]``."""
        w, m = orb.to_window(v)
        idx, e = where[w]
        return idx, e - m

    # Hom(X, Y) = sum_i Hom_mesh(X, F^i Y); components in increasing i
    comps = {}
    for x, y in product(range(size), repeat=2):
        rx, ry = reps[x], reps[y]
        lx = level(rx)
        i_lo = -((level(ry) - lx) // d) - 1
        i_hi = (lx + n - level(ry)) // d + 1
        blocks = []
        for i in range(i_lo, i_hi + 1):
            target = orb.F(ry, i)
            paths = mesh.paths(rx, target) if level(target) >= lx else []
            if paths:
                blocks.append((i, paths))
        comps[(x, y)] = blocks

    def offsets(x: int, y: int) -> dict:
        out, pos = {}, 0
        for i, paths in comps[(x, y)]:
            out[i] = (pos, len(paths))
            pos += len(paths)
        return out

    offs = {key: offsets(*key) for key in comps}
    hom = [[sum(len(p) for _, p in comps[(x, y)]) for y in range(size)] for x in range(size)]

    def place(x: int, z: int, i: int, vec: tuple) -> tuple:
        out = list(zero_vector(hom[x][z]))
        if i in offs[(x, z)]:
            pos, m = offs[(x, z)][i]
            out[pos : pos + m] = vec
        elif any(vec):
            raise AssertionError("composite lands in a twist with no Hom")
        return tuple(out)

    def translate(path: tuple, i: int) -> tuple:
        return tuple(orb.F(v, i) for v in path)

    comp = {}
    for x, y, z in product(range(size), repeat=3):
        if not (hom[x][y] and hom[y][z] and hom[x][z]):
            continue
        table = []
        for j, gpaths in comps[(y, z)]:
            for gp in gpaths:
                row = []
                for i, fpaths in comps[(x, y)]:
                    for fp in fpaths:
                        path = fp + translate(gp, i)[1:]
                        row.append(place(x, z, i + j, mesh.evaluate(path)))
                table.append(tuple(row))
        comp[(x, y, z)] = tuple(table)
    idents = [place(x, x, 0, (ONE,)) for x in range(size)]
    names = [vertex_name(n, r) for r in reps]
    base = make_table(names, hom, comp, idents)

    shift, kshift = [], []
    for r in reps:
        idx, s = locate_pair(sigma(n, r, 1))
        shift.append(idx)
        kshift.append(s)
    transport = {}
    for x, y in product(range(size), repeat=2):
        if not hom[x][y]:
            continue
        sx, sy = shift[x], shift[y]
        cols = []
        for i, paths in comps[(x, y)]:
            for p in paths:
                moved = translate(tuple(sigma(n, v, 1) for v in p), -kshift[x])
                cols.append(place(sx, sy, i + kshift[y] - kshift[x], mesh.evaluate(moved)))
        transport[(x, y)] = Matrix.from_columns(cols, hom[sx][sy])
    serre = tuple(locate_pair(sigma(n, (r[0] - 1, r[1]), 1))[0] for r in reps)
    return TriangCategory(base, tuple(shift), transport, serre, name)
