"""Stable module categories of self-injective Nakayama algebras.

The algebra is the path algebra of the cyclic quiver ``1 -> 2 -> ... -> s -> 1``
modulo paths of length ``L``.  The indecomposable ``M(t, l)`` is uniserial
with top ``t`` and length ``l``: its basis ``b_0 .. b_{l-1}`` sits at the
vertices ``t, t+1, ...`` and the arrows act by ``b_k -> b_{k+1}``.  Names are
``"{top}_{length}"``.

The shift is the cosyzygy, built from the injective envelope
``M(t, l) -> M(t + l - L, L)`` and its cokernel ``M(t + l - L, L - l)``.
The AR translate sends ``M(t, l)`` to ``M(t + 1, l)``, and the Serre functor
is the translate after the shift.
"""

from __future__ import annotations

from itertools import product

from ..exactlin import Matrix, commutant, solve
from ..homcat import ideal_pair, make_table, quotient
from ..tricat import TriangCategory


def _vertex(simples: int, t: int, k: int) -> int:
    return (t - 1 + k) % simples + 1


class _Module:
    def __init__(self, simples: int, top: int, length: int):
        self.top, self.length = top, length
        self.verts = [_vertex(simples, top, k) for k in range(length)]
        self.arrow = Matrix.from_rows(
            [[1 if r == c + 1 else 0 for c in range(length)] for r in range(length)], length
        )

    @property
    def name(self) -> str:
        return f"{self.top}_{self.length}"


def _module_hom(a: _Module, b: _Module):
    mask = [[b.verts[r] == a.verts[c] for c in range(a.length)] for r in range(b.length)]
    return commutant([(a.arrow, b.arrow)], b.length, a.length, mask)


def _as_matrix(flat, rows: int, cols: int) -> Matrix:
    return Matrix.from_flat(flat, rows, cols)


def gen_stable_nakayama(simples: int, loewy: int, name: str = "") -> TriangCategory:
    if simples < 1 or loewy < 2:
        raise ValueError("need at least one simple and Loewy length at least 2")
    s, L = simples, loewy
    mods = [_Module(s, t, l) for l in range(1, L + 1) for t in range(1, s + 1)]
    index = {(m.top, m.length): k for k, m in enumerate(mods)}
    homs = {(x, y): _module_hom(mods[x], mods[y]) for x, y in product(range(len(mods)), repeat=2)}
    hom = [[homs[(x, y)].dim for y in range(len(mods))] for x in range(len(mods))]

    def coords(x: int, y: int, m: Matrix) -> tuple:
        return homs[(x, y)].coordinates(m.flat())

    def basis_map(x: int, y: int, k: int) -> Matrix:
        return _as_matrix(homs[(x, y)].basis[k], mods[y].length, mods[x].length)

    comp = {}
    for x, y, z in product(range(len(mods)), repeat=3):
        if not (hom[x][y] and hom[y][z] and hom[x][z]):
            continue
        comp[(x, y, z)] = tuple(
            tuple(coords(x, z, basis_map(y, z, g) @ basis_map(x, y, f)) for f in range(hom[x][y]))
            for g in range(hom[y][z])
        )
    idents = [coords(x, x, Matrix.identity(mods[x].length)) for x in range(len(mods))]
    modcat = make_table([m.name for m in mods], hom, comp, idents)

    proj = [k for k, m in enumerate(mods) if m.length == L]
    keep = [k for k, m in enumerate(mods) if m.length < L]
    stable = quotient(modcat, proj, keep)
    pos = {x: a for a, x in enumerate(keep)}

    def wrap(t: int) -> int:
        return (t - 1) % s + 1

    def envelope(x: int) -> tuple:
        m = mods[x]
        inj = index[(wrap(m.top + m.length - L), L)]
        emb = Matrix.from_rows(
            [[1 if r == c + L - m.length else 0 for c in range(m.length)] for r in range(L)], m.length
        )
        return inj, emb

    def cosyzygy(x: int) -> int:
        m = mods[x]
        return index[(wrap(m.top + m.length - L), L - m.length)]

    shift = [pos[cosyzygy(x)] for x in keep]
    transport = {}
    for x, y in product(keep, repeat=2):
        a, b = pos[x], pos[y]
        n = stable.hom[a][b]
        if not n:
            continue
        ix, ex = envelope(x)
        iy, ey = envelope(y)
        sx, sy = cosyzygy(x), cosyzygy(y)
        lx, ly = mods[sx].length, mods[sy].length
        cols = []
        for k in ideal_pair(modcat, proj, x, y).complement_positions():
            f = basis_map(x, y, k)
            target = (ey @ f).flat()
            lifts = [basis_map(ix, iy, j) for j in range(hom[ix][iy])]
            c = solve(Matrix.from_columns([(g @ ex).flat() for g in lifts], len(target)), target)
            if c is None:
                raise AssertionError("injective envelope fails to extend a map")
            g = Matrix.zeros(L, L)
            for cj, gj in zip(c, lifts):
                g = g + gj.scale(cj)
            # the cokernel keeps the first coordinates of the envelope
            h = Matrix.from_rows([g.data[r][:lx] for r in range(ly)], lx)
            dense = coords(sx, sy, h)
            cols.append(ideal_pair(modcat, proj, sx, sy).quotient_coordinates(dense))
        transport[(a, b)] = Matrix.from_columns(cols, stable.hom[shift[a]][shift[b]])

    def serre_of(x: int) -> int:
        c = mods[cosyzygy(x)]
        return pos[index[(wrap(c.top + 1), c.length)]]

    serre = tuple(serre_of(x) for x in keep)
    return TriangCategory(stable, tuple(shift), transport, serre, name or f"stnak_{s}_{L}")
