"""Shift and Serre data on a Hom table, and the ghost cluster tilting predicates.

No triangles are stored.  All predicates are decided extensionally from Hom
dimensions and from ideals of morphisms factoring through ``T[1]``.  In a
finite table every subcategory ``add X`` is functorially finite, so the
contravariantly finite variants of the maximality notions coincide with the
plain ones, and weak ghost cluster tilting is the same as ghost cluster
tilting.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Iterable, Optional, Sequence

from . import homcat
from .exactlin import rank, solve, unit_vector
from .homcat import CategoryError, CategoryTable, basic

KINDS = ("T1_rigid", "maximal_ghost_rigid", "ghost_cluster_tilting", "cluster_tilting", "rigid")


class MissingSerre(CategoryError):
    pass


@dataclass(frozen=True)
class TriangCategory:
    """A CategoryTable with the shift as a strict automorphism.

    ``transport[(x, y)]`` maps coordinates in Hom(x, y) to coordinates in
    Hom(x[1], y[1]).  ``serre`` is the object permutation of the Serre
    functor, when known.
    """

    base: CategoryTable
    shift: tuple
    transport: dict
    serre: Optional[tuple] = None
    name: str = ""
    _cache: dict = field(default_factory=dict, compare=False, repr=False, hash=False)

    @property
    def size(self) -> int:
        return self.base.size

    @property
    def names(self) -> tuple:
        return self.base.names

    def shift_inverse(self) -> tuple:
        inv = [0] * self.size
        for x, y in enumerate(self.shift):
            inv[y] = x
        return tuple(inv)

    def label(self, xs: Iterable[int]) -> list:
        return [self.names[x] for x in xs]


def _power(perm: Sequence[int], inverse: Sequence[int], x: int, k: int) -> int:
    step = perm if k > 0 else inverse
    for _ in range(abs(k)):
        x = step[x]
    return x


def shift_obj(t: TriangCategory, xs: Iterable[int], k: int = 1) -> tuple:
    inv = t.shift_inverse()
    return basic(_power(t.shift, inv, x, k) for x in xs)


def shift_index(t: TriangCategory, x: int, k: int = 1) -> int:
    return _power(t.shift, t.shift_inverse(), x, k)


def _serre_inverse(t: TriangCategory) -> tuple:
    if t.serre is None:
        raise MissingSerre(f"category {t.name or '?'} has no Serre data")
    inv = [0] * t.size
    for x, y in enumerate(t.serre):
        inv[y] = x
    return tuple(inv)


def serre_obj(t: TriangCategory, xs: Iterable[int], k: int = 1) -> tuple:
    if t.serre is None:
        raise MissingSerre(f"category {t.name or '?'} has no Serre data")
    inv = _serre_inverse(t)
    return basic(_power(t.serre, inv, x, k) for x in xs)


def tau_obj(t: TriangCategory, xs: Iterable[int]) -> tuple:
    """The AR translate, Serre functor followed by the inverse shift."""
    return shift_obj(t, serre_obj(t, xs), -1)


def F_obj(t: TriangCategory, xs: Iterable[int]) -> tuple:
    """Inverse AR translate composed with the shift, i.e. inverse Serre then shift twice."""
    return shift_obj(t, serre_obj(t, xs, -1), 2)


def is_F_stable(t: TriangCategory, xs: Iterable[int]) -> bool:
    xs = basic(xs)
    return F_obj(t, xs) == xs


def is_two_cy(t: TriangCategory) -> bool:
    if t.serre is None:
        return False
    return all(t.serre[x] == shift_index(t, x, 2) for x in range(t.size))


# -- Hom level quantities -----------------------------------------------------


def ext1_dim(t: TriangCategory, xs: Iterable[int], ys: Iterable[int]) -> int:
    return homcat.hom_dim(t.base, xs, [t.shift[y] for y in ys])


def ext1_matrix(t: TriangCategory) -> tuple:
    """``E[x][y] = dim Hom(x, y[1])`` for indecomposables."""
    key = ("ext1",)
    hit = t._cache.get(key)
    if hit is None:
        hit = tuple(tuple(t.base.hom[x][t.shift[y]] for y in range(t.size)) for x in range(t.size))
        t._cache[key] = hit
    return hit


def ghost_matrix(t: TriangCategory, T: Iterable[int]) -> tuple:
    """``G[x][y] = dim [T[1]](x, y[1])`` for indecomposables."""
    T = basic(T)
    key = ("ghost", T)
    hit = t._cache.get(key)
    if hit is None:
        through = shift_obj(t, T, 1)
        hit = tuple(
            tuple(homcat.ideal_pair(t.base, through, x, t.shift[y]).dim for y in range(t.size)) for x in range(t.size)
        )
        t._cache[key] = hit
    return hit


def ghost_hom_dim(t: TriangCategory, T: Iterable[int], xs: Iterable[int], ys: Iterable[int]) -> int:
    """dim [T[1]](X, Y)."""
    return homcat.ideal_dim(t.base, shift_obj(t, T, 1), list(xs), list(ys))


def _vanishes_on(m: tuple, xs: Sequence[int], ys: Sequence[int]) -> bool:
    return all(m[x][y] == 0 for x in xs for y in ys)


# -- predicates ---------------------------------------------------------------


def is_rigid(t: TriangCategory, xs: Iterable[int]) -> bool:
    xs = basic(xs)
    t.base.check_ids(xs)
    return _vanishes_on(ext1_matrix(t), xs, xs)


def cluster_tilting_closure(t: TriangCategory, T: Iterable[int]) -> tuple:
    """Indecomposables ``M`` with Hom(T, M[1]) = 0."""
    T = basic(T)
    e = ext1_matrix(t)
    return tuple(m for m in range(t.size) if all(e[x][m] == 0 for x in T))


def is_cluster_tilting(t: TriangCategory, T: Iterable[int]) -> bool:
    T = basic(T)
    t.base.check_ids(T)
    return cluster_tilting_closure(t, T) == T


def is_T1_rigid(t: TriangCategory, T: Iterable[int], xs: Iterable[int]) -> bool:
    xs = basic(xs)
    t.base.check_ids(xs)
    return _vanishes_on(ghost_matrix(t, T), xs, xs)


def ghost_perp(t: TriangCategory, T: Iterable[int], xs: Iterable[int]) -> tuple:
    """Indecomposables ``M`` with [T[1]](M, X[1]) = 0 and [T[1]](X, M[1]) = 0."""
    xs = basic(xs)
    g = ghost_matrix(t, T)
    return tuple(m for m in range(t.size) if all(g[m][x] == 0 and g[x][m] == 0 for x in xs))


def is_maximal_ghost_rigid(t: TriangCategory, T: Iterable[int], xs: Iterable[int]) -> bool:
    xs = basic(xs)
    if not is_T1_rigid(t, T, xs):
        return False
    return all(not is_T1_rigid(t, T, xs + (m,)) for m in range(t.size) if m not in xs)


def is_ghost_cluster_tilting(t: TriangCategory, T: Iterable[int], xs: Iterable[int]) -> bool:
    xs = basic(xs)
    t.base.check_ids(xs)
    return ghost_perp(t, T, xs) == xs


def is_weak_ghost_cluster_tilting(t: TriangCategory, T: Iterable[int], xs: Iterable[int]) -> bool:
    """Same as :func:`is_ghost_cluster_tilting` in a finite category.

    The extra requirement ``T in X[-1] * X`` holds automatically for
    contravariantly finite maximal ghost rigid subcategories, and every
    subcategory of a finite table is contravariantly finite.
    """
    return is_ghost_cluster_tilting(t, T, xs)


def is_relative_ct(t: TriangCategory, T: Iterable[int], xs: Iterable[int]) -> bool:
    return is_T1_rigid(t, T, xs) and len(basic(xs)) == len(basic(T))


def defs_d1_d2_set(t: TriangCategory, T: Iterable[int], xs: Iterable[int]) -> tuple:
    """``({M : [T[1]](X, M[1]) = 0}, that set intersected with {M : [T[1]](M, X[1]) = 0})``."""
    xs = basic(xs)
    g = ghost_matrix(t, T)
    d1 = tuple(m for m in range(t.size) if all(g[x][m] == 0 for x in xs))
    d2 = tuple(m for m in d1 if all(g[m][x] == 0 for x in xs))
    return d1, d2


# -- enumeration --------------------------------------------------------------


def compatible_sets(size: int, ok_self, ok_pair) -> list:
    """All sets of ids that are pairwise compatible, pruned depth first.

    Results are sorted tuples in lexicographic order.
    """
    verts = [v for v in range(size) if ok_self(v)]
    adj = {v: {w for w in verts if w != v and ok_pair(v, w)} for v in verts}
    out = [()]

    def grow(current: tuple, candidates: list) -> None:
        for k, v in enumerate(candidates):
            nxt = current + (v,)
            out.append(nxt)
            grow(nxt, [w for w in candidates[k + 1 :] if w in adj[v]])

    grow((), verts)
    return sorted(out)


def _sets_vanishing(m: tuple, size: int) -> list:
    return compatible_sets(size, lambda v: m[v][v] == 0, lambda v, w: m[v][w] == 0 and m[w][v] == 0)


def enumerate_basic(t: TriangCategory, kind: str, T: Optional[Iterable[int]] = None, limit: Optional[int] = None) -> list:
    """Basic objects of the requested kind, in lexicographic order."""
    if kind not in KINDS:
        raise ValueError(f"unknown kind {kind!r}; expected one of {', '.join(KINDS)}")
    if kind in ("rigid", "cluster_tilting"):
        key = ("enum", kind)
        hit = t._cache.get(key)
        if hit is None:
            rigid = _sets_vanishing(ext1_matrix(t), t.size)
            hit = rigid if kind == "rigid" else [x for x in rigid if is_cluster_tilting(t, x)]
            t._cache[key] = hit
    else:
        if T is None:
            raise ValueError(f"kind {kind} needs a tilting object T")
        T = basic(T)
        key = ("enum", kind, T)
        hit = t._cache.get(key)
        if hit is None:
            rigid = _sets_vanishing(ghost_matrix(t, T), t.size)
            if kind == "T1_rigid":
                hit = rigid
            elif kind == "maximal_ghost_rigid":
                hit = [x for x in rigid if is_maximal_ghost_rigid(t, T, x)]
            else:
                hit = [x for x in rigid if is_ghost_cluster_tilting(t, T, x)]
            t._cache[key] = hit
    return list(hit if limit is None else hit[:limit])


def bongartz_complete(t: TriangCategory, T: Iterable[int], xs: Iterable[int]) -> list:
    """All T[1]-rigid ``Y`` containing ``X`` with ``|Y| = |T|``."""
    T, xs = basic(T), basic(xs)
    if not is_T1_rigid(t, T, xs):
        raise CategoryError("X is not T[1]-rigid")
    want = len(T)
    return [y for y in enumerate_basic(t, "T1_rigid", T) if len(y) == want and set(xs) <= set(y)]


# -- reports ------------------------------------------------------------------


@dataclass(frozen=True)
class GhostReport:
    subject: tuple
    tilting: tuple
    flags: dict
    witnesses: dict

    def implications_hold(self) -> bool:
        f = self.flags
        return (
            (not f["ghost_cluster_tilting"] or f["maximal_ghost_rigid"])
            and (not f["maximal_ghost_rigid"] or f["T1_rigid"])
            and (not f["cluster_tilting"] or f["rigid"])
        )


def _pair_witness(t: TriangCategory, m: tuple, xs: Sequence[int], label: str) -> Optional[str]:
    # self pairs first, so that the simplest obstruction is reported
    pairs = [(x, x) for x in xs] + [(x, y) for x in xs for y in xs if x != y]
    for x, y in pairs:
        if m[x][y]:
            ny = t.names[y]
            shifted = f"({ny})[1]" if "/" in ny or "[" in ny else f"{ny}[1]"
            return f"{label}({t.names[x]}, {shifted}) has dimension {m[x][y]}, where {shifted} = {t.names[t.shift[y]]}"
    return None


def ghost_report(t: TriangCategory, T: Iterable[int], xs: Iterable[int]) -> GhostReport:
    T, xs = basic(T), basic(xs)
    t.base.check_ids(T)
    t.base.check_ids(xs)
    g = ghost_matrix(t, T)
    e = ext1_matrix(t)
    flags = {
        "rigid": is_rigid(t, xs),
        "T1_rigid": is_T1_rigid(t, T, xs),
        "maximal_ghost_rigid": is_maximal_ghost_rigid(t, T, xs),
        "ghost_cluster_tilting": is_ghost_cluster_tilting(t, T, xs),
        "cluster_tilting": is_cluster_tilting(t, xs),
        "F_stable": is_F_stable(t, xs) if t.serre is not None else None,
    }
    witnesses = {}
    if not flags["rigid"]:
        witnesses["rigid"] = _pair_witness(t, e, xs, "Hom")
    if not flags["T1_rigid"]:
        witnesses["T1_rigid"] = _pair_witness(t, g, xs, "[T[1]]")
    if not flags["maximal_ghost_rigid"] and flags["T1_rigid"]:
        extra = next(m for m in range(t.size) if m not in xs and is_T1_rigid(t, T, xs + (m,)))
        witnesses["maximal_ghost_rigid"] = f"{t.names[extra]} can be added"
    if not flags["ghost_cluster_tilting"]:
        perp = ghost_perp(t, T, xs)
        extra = [m for m in perp if m not in xs]
        if extra:
            witnesses["ghost_cluster_tilting"] = f"{t.names[extra[0]]} is ghost orthogonal to X but not in X"
        else:
            missing = next(x for x in xs if x not in perp)
            witnesses["ghost_cluster_tilting"] = f"{t.names[missing]} fails the ghost orthogonality"
    if not flags["cluster_tilting"]:
        w = _pair_witness(t, e, xs, "Hom")
        if w is None:
            extra = next(m for m in cluster_tilting_closure(t, xs) if m not in xs)
            w = f"Hom(X, {t.names[t.shift[extra]]}) = 0 but {t.names[extra]} is not in X"
        witnesses["cluster_tilting"] = w
    if flags["F_stable"] is False:
        image = F_obj(t, xs)
        moved = next(x for x in image if x not in xs)
        witnesses["F_stable"] = f"F(X) contains {t.names[moved]}"
    return GhostReport(xs, T, flags, witnesses)


# -- validation ---------------------------------------------------------------


def apply_shift(t: TriangCategory, x: int, y: int, v: Sequence) -> tuple:
    return t.transport[(x, y)].apply(v) if t.base.hom[x][y] else ()


def unshift(t: TriangCategory, x: int, y: int, v: Sequence) -> tuple:
    """Preimage under the transport Hom(x, y) -> Hom(x[1], y[1])."""
    sol = solve(t.transport[(x, y)], v)
    if sol is None:
        raise CategoryError("vector is not in the image of the shift")
    return sol


def validate_triang(t: TriangCategory) -> list:
    c = t.base
    out = homcat.validate(c)
    n = t.size
    if sorted(t.shift) != list(range(n)):
        return out + ["shift is not a permutation of the objects"]
    for x, y in product(range(n), repeat=2):
        if c.hom[x][y] != c.hom[t.shift[x]][t.shift[y]]:
            out.append(f"shift changes dim Hom({c.names[x]}, {c.names[y]})")
            continue
        if c.hom[x][y] == 0:
            continue
        m = t.transport.get((x, y))
        if m is None or (m.rows, m.cols) != (c.hom[x][y], c.hom[x][y]):
            out.append(f"transport for ({c.names[x]}, {c.names[y]}) is missing or misshapen")
            continue
        if rank(m) != m.rows:
            out.append(f"transport for ({c.names[x]}, {c.names[y]}) is singular")
    if out:
        return out
    for x in range(n):
        if apply_shift(t, x, x, c.idents[x]) != c.idents[t.shift[x]]:
            out.append(f"shift does not preserve the identity of {c.names[x]}")
    for x, y, z in product(range(n), repeat=3):
        if not (c.hom[x][y] and c.hom[y][z]):
            continue
        sx, sy, sz = t.shift[x], t.shift[y], t.shift[z]
        bad = False
        for gi in range(c.hom[y][z]):
            g = unit_vector(c.hom[y][z], gi)
            for fi in range(c.hom[x][y]):
                f = unit_vector(c.hom[x][y], fi)
                lhs = apply_shift(t, x, z, c.product(x, y, z, g, f)) if c.hom[x][z] else ()
                rhs = c.product(sx, sy, sz, apply_shift(t, y, z, g), apply_shift(t, x, y, f))
                if lhs != rhs:
                    bad = True
                    break
            if bad:
                break
        if bad:
            out.append(f"shift is not functorial on ({c.names[x]}, {c.names[y]}, {c.names[z]})")
    if t.serre is not None:
        if sorted(t.serre) != list(range(n)):
            out.append("Serre data is not a permutation of the objects")
        else:
            for a, b in product(range(n), repeat=2):
                if c.hom[a][b] != c.hom[b][t.serre[a]]:
                    out.append(f"Serre duality fails for ({c.names[a]}, {c.names[b]})")
    return out
