"""Modules over the endomorphism algebra of a cluster tilting object.

For ``T = T_1 + ... + T_r`` in a Hom table, ``Lambda = End(T)^op`` has a
basis of basis morphisms ``T_a -> T_b`` and product ``l * m = m o l``.  The
idempotents ``e_i`` are the identities of the ``T_i``.  Every basis
element ``l : T_a -> T_b`` satisfies ``l = e_a l e_b``; we call ``(a, b)``
its corner.

Modules are kept in peak adapted bases: every basis vector ``v`` has a peak
``p`` with ``e_p v = v``.  Then ``e_i M`` is spanned by the basis vectors of
peak ``i``, and ``Hom(Lambda e_i, M)`` is identified with ``e_i M``.

All algebras here are basic and split, so that the trace form radical and
the dimension fingerprints used by :func:`decompose` are valid.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Iterable, Optional, Sequence

from .exactlin import (
    ONE,
    ZERO,
    Matrix,
    Subspace,
    commutant,
    kernel_basis,
    rank_of_vectors,
    solve,
    trace_form_radical,
    unit_vector,
    zero_vector,
)
from .homcat import CategoryError, basic


class ModuleError(ValueError):
    pass


@dataclass(frozen=True)
class Algebra:
    dim: int
    labels: tuple
    mult: tuple  # mult[i][j] = coordinates of b_i * b_j
    unit: tuple
    idems: tuple  # coordinate vectors of e_1 .. e_r
    corners: tuple  # (a, b) with b_k = e_a b_k e_b
    idem_sources: tuple = ()
    _cache: dict = field(default_factory=dict, compare=False, repr=False, hash=False)

    @property
    def rank(self) -> int:
        return len(self.idems)

    def times(self, x: Sequence, y: Sequence) -> tuple:
        out = [ZERO] * self.dim
        for i, a in enumerate(x):
            if a:
                for j, b in enumerate(y):
                    if b:
                        for k, c in enumerate(self.mult[i][j]):
                            if c:
                                out[k] += a * b * c
        return tuple(out)

    def corner_basis(self, a: Optional[int] = None, b: Optional[int] = None) -> list:
        return [k for k, (x, y) in enumerate(self.corners) if (a is None or x == a) and (b is None or y == b)]


@dataclass(frozen=True)
class Module:
    """Left module; ``action[k]`` is the matrix of basis element ``k``."""

    dim: int
    action: tuple
    peaks: tuple
    label: str = ""

    def peak_positions(self, i: int) -> list:
        return [k for k, p in enumerate(self.peaks) if p == i]

    def is_zero(self) -> bool:
        return self.dim == 0


@dataclass(frozen=True)
class ProjPresentation:
    """Minimal presentation ``P1 --map--> P0 --cover--> M -> 0``.

    ``gens0`` are the images in M of the tops of the summands of P0 and
    ``gens1`` the images in P0 of the tops of the summands of P1.
    """

    p0: tuple
    p1: tuple
    map: Matrix
    cover: Matrix
    gens0: tuple
    gens1: tuple
    syzygy: "Module"
    syzygy_basis: tuple  # basis of the kernel of ``cover`` in P0 coordinates


@dataclass(frozen=True)
class TauPair:
    modules: tuple
    kernel_part: tuple  # idempotent indices


# -- algebras -----------------------------------------------------------------


def make_algebra(mult, unit, idems, corners, labels=None, idem_sources=()) -> Algebra:
    dim = len(mult)
    labels = tuple(labels) if labels else tuple(f"b{k}" for k in range(dim))
    mult = tuple(tuple(tuple(v) for v in row) for row in mult)
    return Algebra(dim, labels, mult, tuple(unit), tuple(tuple(e) for e in idems), tuple(corners), tuple(idem_sources))


def validate_algebra(alg: Algebra) -> list:
    out = []
    n = alg.dim
    basis = [unit_vector(n, k) for k in range(n)]
    for x, y, z in product(range(n), repeat=3):
        if alg.times(alg.times(basis[x], basis[y]), basis[z]) != alg.times(basis[x], alg.times(basis[y], basis[z])):
            out.append(f"associativity fails on ({alg.labels[x]}, {alg.labels[y]}, {alg.labels[z]})")
            break
    for b in basis:
        if alg.times(alg.unit, b) != b or alg.times(b, alg.unit) != b:
            out.append("unit is not a two-sided identity")
            break
    total = zero_vector(n)
    for i, e in enumerate(alg.idems):
        total = tuple(a + b for a, b in zip(total, e))
        for j, f in enumerate(alg.idems):
            want = e if i == j else zero_vector(n)
            if alg.times(e, f) != want:
                out.append(f"idempotents {i} and {j} are not orthogonal idempotents")
    if total != alg.unit:
        out.append("idempotents do not sum to the unit")
    for k, (a, b) in enumerate(alg.corners):
        bk = basis[k]
        if alg.times(alg.times(alg.idems[a], bk), alg.idems[b]) != bk:
            out.append(f"basis element {alg.labels[k]} is not in corner ({a}, {b})")
    return out


def end_algebra(t, T: Iterable[int]) -> Algebra:
    """``End(T)^op`` from the Hom table of ``t`` (a TriangCategory or CategoryTable)."""
    c = getattr(t, "base", t)
    T = basic(T)
    if not T:
        raise CategoryError("T must be nonempty")
    c.check_ids(T)
    basis = [(a, b, k) for a, b in product(range(len(T)), repeat=2) for k in range(c.hom[T[a]][T[b]])]
    index = {key: pos for pos, key in enumerate(basis)}
    n = len(basis)
    mult = []
    for a, b, k in basis:
        row = []
        for a2, b2, k2 in basis:
            # (l * m) = m o l with l: T_a -> T_b and m: T_a2 -> T_b2
            out = [ZERO] * n
            if b == a2:
                vec = c.basis_product(T[a], T[b], T[b2], k2, k)
                for j, v in enumerate(vec):
                    if v:
                        out[index[(a, b2, j)]] += v
            row.append(tuple(out))
        mult.append(tuple(row))
    idems = []
    for i in range(len(T)):
        e = [ZERO] * n
        for j, v in enumerate(c.idents[T[i]]):
            e[index[(i, i, j)]] = v
        idems.append(tuple(e))
    unit = tuple(sum(col) for col in zip(*idems))
    labels = [f"{c.names[T[a]]}->{c.names[T[b]]}#{k}" for a, b, k in basis]
    corners = [(a, b) for a, b, _ in basis]
    return make_algebra(mult, unit, idems, corners, labels, T)


def radical(alg: Algebra) -> Subspace:
    """Jacobson radical as the radical of the trace form (characteristic zero)."""
    hit = alg._cache.get("rad")
    if hit is None:
        hit = trace_form_radical(alg.mult, alg.dim)
        power = list(hit.basis)
        for _ in range(alg.dim + 1):
            if not power:
                break
            power = Subspace.span([alg.times(x, r) for x in power for r in hit.basis], alg.dim).basis
        if power:
            raise ModuleError("trace form radical is not nilpotent")
        alg._cache["rad"] = hit
    return hit


def _corner_span(alg: Algebra, vectors: Iterable[Sequence]) -> list:
    """Split vectors into their corner components."""
    out = []
    for v in vectors:
        for a, b in set(alg.corners):
            part = [x if alg.corners[k] == (a, b) else ZERO for k, x in enumerate(v)]
            if any(part):
                out.append(part)
    return out


def arrows(alg: Algebra) -> list:
    """Corner homogeneous elements spanning rad modulo rad^2."""
    hit = alg._cache.get("arrows")
    if hit is not None:
        return hit
    rad = Subspace.span(_corner_span(alg, radical(alg).basis), alg.dim)
    sq = Subspace.span([alg.times(x, y) for x in rad.basis for y in rad.basis], alg.dim)
    sq = Subspace.span(_corner_span(alg, sq.basis), alg.dim)
    chosen = []
    current = sq
    for a, b in sorted(set(alg.corners)):
        for v in rad.basis:
            part = tuple(x if alg.corners[k] == (a, b) else ZERO for k, x in enumerate(v))
            if any(part) and part not in current:
                chosen.append(part)
                current = current + Subspace.span([part], alg.dim)
    alg._cache["arrows"] = chosen
    return chosen


def _act(alg: Algebra, m: Module, x: Sequence) -> Matrix:
    out = Matrix.zeros(m.dim, m.dim)
    for k, c in enumerate(x):
        if c:
            out = out + m.action[k].scale(c)
    return out


def _memo(alg: Algebra, key: tuple, objs: tuple, build):
    # keyed by object identity; the stored references keep the ids valid
    hit = alg._cache.get(key)
    if hit is not None and all(a is b for a, b in zip(hit[0], objs)):
        return hit[1]
    value = build()
    alg._cache[key] = (objs, value)
    return value


def arrow_actions(alg: Algebra, m: Module) -> tuple:
    return _memo(alg, ("act", id(m)), (m,), lambda: tuple(_act(alg, m, a) for a in arrows(alg)))


def validate_module(alg: Algebra, m: Module) -> list:
    out = []
    if len(m.action) != alg.dim or len(m.peaks) != m.dim:
        return ["action or peak list has the wrong length"]
    basis = [unit_vector(alg.dim, k) for k in range(alg.dim)]
    for i, j in product(range(alg.dim), repeat=2):
        if m.action[i] @ m.action[j] != _act(alg, m, alg.times(basis[i], basis[j])):
            out.append(f"action does not respect the product {alg.labels[i]} * {alg.labels[j]}")
            break
    if _act(alg, m, alg.unit) != Matrix.identity(m.dim):
        out.append("unit does not act as the identity")
    for i, e in enumerate(alg.idems):
        want = Matrix.from_rows([[ONE if r == c and m.peaks[r] == i else ZERO for c in range(m.dim)] for r in range(m.dim)], m.dim)
        if _act(alg, m, e) != want:
            out.append(f"idempotent {i} does not project onto its peak")
    return out


# -- constructions ------------------------------------------------------------


def zero_module(alg: Algebra) -> Module:
    return Module(0, tuple(Matrix.zeros(0, 0) for _ in range(alg.dim)), (), "0")


def yoneda_module(t, T: Iterable[int], xs: Sequence[int], alg: Optional[Algebra] = None) -> Module:
    """``Hom(T, X)`` with ``l * h = h o l``; peaks are the summands of T."""
    c = getattr(t, "base", t)
    T = basic(T)
    xs = list(xs)
    c.check_ids(xs)
    alg = alg or end_algebra(c, T)
    # slots are keyed by summand position so repeated summands stay apart
    slots = [(s, a, k) for s, x in enumerate(xs) for a in range(len(T)) for k in range(c.hom[T[a]][x])]
    index = {slot: pos for pos, slot in enumerate(slots)}
    n = len(slots)
    basis_keys = [(a, b, k) for a, b in product(range(len(T)), repeat=2) for k in range(c.hom[T[a]][T[b]])]
    action = []
    for a, b, k in basis_keys:
        cols = []
        for s, b2, k2 in slots:
            col = [ZERO] * n
            if b2 == b:
                vec = c.basis_product(T[a], T[b], xs[s], k2, k)
                for j, v in enumerate(vec):
                    if v:
                        col[index[(s, a, j)]] += v
            cols.append(col)
        action.append(Matrix.from_columns(cols, n))
    label = "H(" + ",".join(c.names[x] for x in xs) + ")"
    return Module(n, tuple(action), tuple(a for _, a, _ in slots), label)


def projective(alg: Algebra, i: int) -> Module:
    """``Lambda e_i``, spanned by the basis elements in corners ``(a, i)``."""
    basis = alg.corner_basis(b=i)
    pos = {k: p for p, k in enumerate(basis)}
    n = len(basis)
    action = []
    for mu in range(alg.dim):
        cols = []
        for k in basis:
            prod = alg.mult[mu][k]
            col = [ZERO] * n
            for j, v in enumerate(prod):
                if v:
                    if j not in pos:
                        raise ModuleError("product leaves the projective")
                    col[pos[j]] = v
            cols.append(col)
        action.append(Matrix.from_columns(cols, n))
    return Module(n, tuple(action), tuple(alg.corners[k][0] for k in basis), f"P{i}")


def direct_sum(alg: Algebra, mods: Sequence[Module]) -> Module:
    n = sum(m.dim for m in mods)
    action = []
    for k in range(alg.dim):
        rows = []
        off = 0
        for m in mods:
            for r in m.action[k].data:
                rows.append([ZERO] * off + list(r) + [ZERO] * (n - off - m.dim))
            off += m.dim
        action.append(Matrix(n, n, tuple(tuple(r) for r in rows)))
    peaks = tuple(p for m in mods for p in m.peaks)
    return Module(n, tuple(action), peaks, "+".join(m.label for m in mods))


def _homogeneous_basis(m: Module, space: Subspace) -> list:
    """Basis of a peak homogeneous subspace, grouped by peak; returns (peak, vector) pairs."""
    out = []
    for i in sorted(set(m.peaks)):
        pos = m.peak_positions(i)
        coord = Subspace.span([unit_vector(m.dim, p) for p in pos], m.dim)
        for v in (space & coord).basis:
            out.append((i, v))
    if len(out) != space.dim:
        raise ModuleError("subspace is not a sum of peak components")
    return out


def submodule(alg: Algebra, m: Module, space: Subspace) -> tuple:
    """The submodule on an invariant peak homogeneous subspace, and its inclusion matrix."""
    pairs = _homogeneous_basis(m, space)
    vecs = [v for _, v in pairs]
    incl = Matrix.from_columns(vecs, m.dim)
    action = []
    for k in range(alg.dim):
        cols = []
        for v in vecs:
            img = m.action[k].apply(v)
            c = solve(incl, img) if vecs else ()
            if c is None:
                raise ModuleError("subspace is not invariant")
            cols.append(c)
        action.append(Matrix.from_columns(cols, len(vecs)))
    return Module(len(vecs), tuple(action), tuple(p for p, _ in pairs), f"sub({m.label})"), incl


def quotient_module(alg: Algebra, m: Module, space: Subspace) -> Module:
    """``M / U`` on the classes of the unit vectors off the pivots of ``U``."""
    _homogeneous_basis(m, space)
    keep = space.complement_positions()
    action = []
    for k in range(alg.dim):
        cols = [space.quotient_coordinates(m.action[k].column(j)) for j in keep]
        action.append(Matrix.from_columns(cols, len(keep)))
    return Module(len(keep), tuple(action), tuple(m.peaks[j] for j in keep), f"{m.label}/U")


def radical_of_module(alg: Algebra, m: Module) -> Subspace:
    vecs = []
    for a in arrow_actions(alg, m):
        vecs.extend(a.columns())
    return Subspace.span(vecs, m.dim)


# -- morphisms ----------------------------------------------------------------


def hom_modules(alg: Algebra, m: Module, n: Module) -> Subspace:
    """Intertwiners ``M -> N`` as flattened ``dim N x dim M`` matrices."""
    if m.dim == 0 or n.dim == 0:
        return Subspace.zero(m.dim * n.dim)

    def build():
        mask = [[n.peaks[r] == m.peaks[c] for c in range(m.dim)] for r in range(n.dim)]
        pairs = list(zip(arrow_actions(alg, m), arrow_actions(alg, n)))
        return commutant(pairs, n.dim, m.dim, mask)

    return _memo(alg, ("hom", id(m), id(n)), (m, n), build)


def hom_dim_modules(alg: Algebra, m: Module, n: Module) -> int:
    return hom_modules(alg, m, n).dim


# -- presentations ------------------------------------------------------------


def _top_generators(alg: Algebra, m: Module) -> list:
    """(peak, vector) pairs whose classes form a basis of M / rad M."""
    rad = radical_of_module(alg, m)
    return [(m.peaks[j], unit_vector(m.dim, j)) for j in rad.complement_positions()]


def _cover(alg: Algebra, m: Module, gens: Sequence[tuple]) -> tuple:
    """Matrix of ``sum_g Lambda e_{i_g} -> M``, and the projective it starts from."""
    cols = []
    projs = []
    for i, v in gens:
        p = projective(alg, i)
        projs.append(p)
        for k in alg.corner_basis(b=i):
            cols.append(m.action[k].apply(v))
    return Matrix.from_columns(cols, m.dim), projs


def min_proj_presentation(alg: Algebra, m: Module) -> ProjPresentation:
    key = ("pres", id(m))
    hit = alg._cache.get(key)
    if hit is not None and hit[0] is m:
        return hit[1]
    gens0 = _top_generators(alg, m)
    cover, projs0 = _cover(alg, m, gens0)
    p0 = direct_sum(alg, projs0) if projs0 else zero_module(alg)
    ker = kernel_basis(cover) if p0.dim else Subspace.zero(0)
    omega, incl = submodule(alg, p0, ker) if p0.dim else (zero_module(alg), Matrix.zeros(0, 0))
    gens1_local = _top_generators(alg, omega)
    gens1 = [(i, incl.apply(v)) for i, v in gens1_local]
    pmap, _ = _cover(alg, p0, gens1) if gens1 else (Matrix.zeros(p0.dim, 0), [])
    pres = ProjPresentation(
        tuple(i for i, _ in gens0),
        tuple(i for i, _ in gens1),
        pmap,
        cover,
        tuple(v for _, v in gens0),
        tuple(v for _, v in gens1),
        omega,
        tuple(incl.columns()),
    )
    if p0.dim and rank_of_vectors(cover.T.data, m.dim) != m.dim:
        raise ModuleError("projective cover is not onto")
    if pmap.cols and not (cover @ pmap).is_zero():
        raise ModuleError("presentation is not a complex")
    alg._cache[key] = (m, pres)
    return pres


def presentation_map(alg: Algebra, pres: ProjPresentation, n: Module) -> Matrix:
    """``Hom(P0, N) -> Hom(P1, N)``, with ``Hom(Lambda e_i, N) = e_i N``."""
    pos0 = [n.peak_positions(i) for i in pres.p0]
    pos1 = [n.peak_positions(j) for j in pres.p1]
    ncols = sum(len(p) for p in pos0)
    nrows = sum(len(p) for p in pos1)
    rows = [[ZERO] * ncols for _ in range(nrows)]
    # coordinates of P0 are blocks of Lambda e_i, one per generator
    blocks = []
    off = 0
    for i in pres.p0:
        ks = alg.corner_basis(b=i)
        blocks.append((off, ks))
        off += len(ks)
    col_off = []
    acc = 0
    for p in pos0:
        col_off.append(acc)
        acc += len(p)
    r0 = 0
    for h, j in enumerate(pres.p1):
        v = pres.gens1[h]
        target = pos1[h]
        for g, (boff, ks) in enumerate(blocks):
            for local, k in enumerate(ks):
                c = v[boff + local]
                if not c:
                    continue
                act = n.action[k]
                for cidx, src in enumerate(pos0[g]):
                    for ridx, dst in enumerate(target):
                        x = act.data[dst][src]
                        if x:
                            rows[r0 + ridx][col_off[g] + cidx] += c * x
        r0 += len(target)
    return Matrix(nrows, ncols, tuple(tuple(r) for r in rows))


def property_S_pair(alg: Algebra, pres: ProjPresentation, n: Module) -> bool:
    m = presentation_map(alg, pres, n)
    if m.rows == 0:
        return True
    return rank_of_vectors(m.data, m.cols) == m.rows


def has_property_S(alg: Algebra, presentations: Sequence[ProjPresentation], mods: Sequence[Module]) -> bool:
    return all(property_S_pair(alg, p, n) for p in presentations for n in mods)


def pd_le_1(alg: Algebra, m: Module) -> bool:
    pres = min_proj_presentation(alg, m)
    if not pres.p1:
        return True
    return rank_of_vectors(pres.map.T.data, pres.map.rows) == pres.map.cols


def ext1_modules(alg: Algebra, m: Module, n: Module) -> int:
    """dim Ext^1(M, N) = dim coker(Hom(P0, N) -> Hom(Omega M, N))."""
    pres = min_proj_presentation(alg, m)
    omega = pres.syzygy
    target = hom_modules(alg, omega, n)
    if target.dim == 0:
        return 0
    incl = Matrix.from_columns(pres.syzygy_basis, sum(len(alg.corner_basis(b=i)) for i in pres.p0))
    images = []
    off = 0
    for g, i in enumerate(pres.p0):
        ks = alg.corner_basis(b=i)
        for pos in n.peak_positions(i):
            # the map P0 -> N sending the top of block g to the basis vector ``pos``
            cols = []
            for gg, ii in enumerate(pres.p0):
                for k in alg.corner_basis(b=ii):
                    cols.append(n.action[k].column(pos) if gg == g else zero_vector(n.dim))
            phi = Matrix.from_columns(cols, n.dim)
            images.append((phi @ incl).flat())
        off += len(ks)
    return target.dim - rank_of_vectors(images, n.dim * omega.dim)


# -- decomposition ------------------------------------------------------------


def _fingerprint_matrix(alg: Algebra, indecs: Sequence[Module]) -> Matrix:
    key = ("fingerprint", tuple(id(m) for m in indecs))
    hit = alg._cache.get(key)
    if hit is not None and hit[0] == tuple(indecs):
        return hit[1]
    a = Matrix.from_rows([[hom_dim_modules(alg, lj, li) for li in indecs] for lj in indecs], len(indecs))
    if len(set(a.data)) != len(indecs) or rank_of_vectors(a.data, len(indecs)) != len(indecs):
        raise ModuleError("indecomposable list has repeated or dependent fingerprints")
    alg._cache[key] = (tuple(indecs), a)
    return a


def decompose(alg: Algebra, n: Module, indecs: Sequence[Module]) -> Optional[tuple]:
    """Multiplicities of the listed indecomposables in ``N``, or ``None``.

    ``indecs`` must be the complete list of indecomposables up to isomorphism.
    """
    if not indecs:
        return () if n.dim == 0 else None
    a = _fingerprint_matrix(alg, indecs)
    left = [hom_dim_modules(alg, lj, n) for lj in indecs]
    c = solve(a, left)
    if c is None or any(x.denominator != 1 or x < 0 for x in c):
        return None
    c = tuple(int(x) for x in c)
    if sum(ci * m.dim for ci, m in zip(c, indecs)) != n.dim:
        return None
    right = [hom_dim_modules(alg, n, lj) for lj in indecs]
    if right != [sum(ci * a.data[i][j] for i, ci in enumerate(c)) for j in range(len(indecs))]:
        return None
    return c


def identify(alg: Algebra, m: Module, indecs: Sequence[Module]) -> Optional[int]:
    """Index of the indecomposable isomorphic to ``m``."""
    c = decompose(alg, m, indecs)
    if c is None or sum(c) != 1:
        return None
    return c.index(1)


# -- tau-tilting --------------------------------------------------------------


def kernel_of(alg: Algebra, mods: Sequence[Module]) -> tuple:
    """Idempotents killing every module: ``e_i M = 0``."""
    return tuple(i for i in range(alg.rank) if all(not m.peak_positions(i) for m in mods))


def is_tau_rigid_pair(alg: Algebra, pair: TauPair) -> bool:
    pres = [min_proj_presentation(alg, m) for m in pair.modules]
    if not has_property_S(alg, pres, pair.modules):
        return False
    return all(not m.peak_positions(e) for m in pair.modules for e in pair.kernel_part)


def approximation_from_idempotent(alg: Algebra, i: int, mods: Sequence[Module]) -> tuple:
    """Canonical left add(M)-approximation of ``Lambda e_i``.

    Its target has a copy of ``M_k`` for every basis vector of ``e_i M_k``;
    returns ``(target module, matrix of the map)``.
    """
    copies = [(m, pos) for m in mods for pos in m.peak_positions(i)]
    target = direct_sum(alg, [m for m, _ in copies]) if copies else zero_module(alg)
    ks = alg.corner_basis(b=i)
    cols = []
    for k in ks:
        col = []
        for m, pos in copies:
            col.extend(m.action[k].column(pos))
        cols.append(col)
    return target, Matrix.from_columns(cols, target.dim)


def approximation_generic(alg: Algebra, source: Module, mods: Sequence[Module]) -> tuple:
    """Left add(M)-approximation built from all intertwiners ``source -> M_k``."""
    parts, rows = [], []
    for m in mods:
        for flat in hom_modules(alg, source, m).basis:
            parts.append(m)
            rows.extend(Matrix.from_flat(flat, m.dim, source.dim).data)
    target = direct_sum(alg, parts) if parts else zero_module(alg)
    return target, Matrix(len(rows), source.dim, tuple(rows))


def cokernel(alg: Algebra, target: Module, f: Matrix) -> Module:
    return quotient_module(alg, target, Subspace.span(f.columns(), target.dim))


def in_add(alg: Algebra, n: Module, family: Sequence[Module], indecs: Sequence[Module]) -> bool:
    c = decompose(alg, n, indecs)
    if c is None:
        raise ModuleError("module does not decompose over the indecomposable list")
    allowed = {identify(alg, m, indecs) for m in family}
    return all(ci == 0 or i in allowed for i, ci in enumerate(c))


def is_support_tau_tilting(alg: Algebra, pair: TauPair, indecs: Sequence[Module]) -> bool:
    if not is_tau_rigid_pair(alg, pair):
        raise ModuleError("pair is not tau-rigid")
    if tuple(sorted(pair.kernel_part)) != kernel_of(alg, pair.modules):
        return False
    for i in range(alg.rank):
        target, f = approximation_from_idempotent(alg, i, pair.modules)
        if not in_add(alg, cokernel(alg, target, f), pair.modules, indecs):
            return False
    return True


def is_tau_tilting(alg: Algebra, mods: Sequence[Module], indecs: Sequence[Module]) -> bool:
    pair = TauPair(tuple(mods), ())
    return is_tau_rigid_pair(alg, pair) and is_support_tau_tilting(alg, pair, indecs)


def is_weak_tilting(alg: Algebra, mods: Sequence[Module], indecs: Sequence[Module]) -> bool:
    if any(ext1_modules(alg, m, n) for m in mods for n in mods):
        return False
    if not all(pd_le_1(alg, m) for m in mods):
        return False
    for i in range(alg.rank):
        target, f = approximation_from_idempotent(alg, i, mods)
        if rank_of_vectors(f.T.data, f.rows) != f.cols:
            return False
        if not in_add(alg, cokernel(alg, target, f), mods, indecs):
            return False
    return True


def regular_module(alg: Algebra) -> Module:
    return direct_sum(alg, [projective(alg, i) for i in range(alg.rank)])
