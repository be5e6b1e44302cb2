"""Finite Krull-Schmidt categories given by Hom tables.

A :class:`CategoryTable` lists indecomposable objects, the dimension of
every Hom space between them and the structure constants of composition in
fixed bases.  Ideals, approximations and quotients are computed directly
from this data.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Iterable, Sequence

from .exactlin import (
    ZERO,
    Subspace,
    add_vectors,
    rank_of_vectors,
    trace_form_radical,
    unit_vector,
    zero_vector,
)


class CategoryError(ValueError):
    """Raised for unknown objects or malformed morphisms."""


def basic(indecs: Iterable[int]) -> tuple:
    """Normalize a collection of indecomposable ids to a basic object."""
    return tuple(sorted(set(indecs)))


@dataclass(frozen=True)
class CategoryTable:
    """Hom-finite additive category with finitely many indecomposables.

    ``comp[(x, y, z)][g][f]`` is the coordinate vector of ``g o f`` in the
    basis of ``Hom(x, z)``, for basis morphisms ``f`` of ``Hom(x, y)`` and
    ``g`` of ``Hom(y, z)``.  Triples with an empty Hom space are omitted.
    """

    names: tuple
    hom: tuple
    comp: dict
    idents: tuple
    _cache: dict = field(default_factory=dict, compare=False, repr=False, hash=False)

    @property
    def size(self) -> int:
        return len(self.names)

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise CategoryError(f"unknown object {name!r}") from None

    def check_ids(self, ids: Iterable[int]) -> None:
        for x in ids:
            if not (isinstance(x, int) and 0 <= x < self.size):
                raise CategoryError(f"unknown object id {x!r}")

    def product(self, x: int, y: int, z: int, g: Sequence, f: Sequence) -> tuple:
        """Compose coordinate vectors ``g`` in Hom(y,z) and ``f`` in Hom(x,y)."""
        n = self.hom[x][z]
        table = self.comp.get((x, y, z))
        if table is None or not any(g) or not any(f):
            return zero_vector(n)
        out = [ZERO] * n
        for gi, gc in enumerate(g):
            if not gc:
                continue
            row = table[gi]
            for fi, fc in enumerate(f):
                if not fc:
                    continue
                c = gc * fc
                for k, v in enumerate(row[fi]):
                    if v:
                        out[k] += c * v
        return tuple(out)

    def basis_product(self, x: int, y: int, z: int, gi: int, fi: int) -> tuple:
        table = self.comp.get((x, y, z))
        if table is None:
            return zero_vector(self.hom[x][z])
        return table[gi][fi]


def make_table(names: Sequence[str], hom: Sequence[Sequence[int]], comp: dict, idents: Sequence[Sequence]) -> CategoryTable:
    return CategoryTable(tuple(names), tuple(tuple(r) for r in hom), dict(comp), tuple(tuple(v) for v in idents))


# -- validation ---------------------------------------------------------------


def endomorphism_radical_codim(c: CategoryTable, x: int) -> int:
    """dim End(x) - dim rad End(x)."""
    n = c.hom[x][x]
    if n == 0:
        return 0
    mult = [[c.basis_product(x, x, x, i, j) for j in range(n)] for i in range(n)]
    return n - trace_form_radical(mult, n).dim


def validate(c: CategoryTable) -> list:
    """List every violated invariant of ``c`` (empty when the table is valid)."""
    out = []
    size = c.size
    if len(c.hom) != size or any(len(r) != size for r in c.hom):
        return ["hom dimension table is not square in the object count"]
    if len(c.idents) != size:
        return ["identity list length differs from the object count"]
    for (x, y, z), table in c.comp.items():
        shape_ok = len(table) == c.hom[y][z] and all(
            len(row) == c.hom[x][y] and all(len(v) == c.hom[x][z] for v in row) for row in table
        )
        if not shape_ok:
            out.append(f"composition block ({c.names[x]}, {c.names[y]}, {c.names[z]}) has the wrong shape")
    if out:
        return out
    for x in range(size):
        if len(c.idents[x]) != c.hom[x][x] or not any(c.idents[x]):
            out.append(f"identity of {c.names[x]} is missing")
    if out:
        return out
    for x, y in product(range(size), repeat=2):
        for k in range(c.hom[x][y]):
            f = unit_vector(c.hom[x][y], k)
            if c.product(x, y, y, c.idents[y], f) != f:
                out.append(f"identity of {c.names[y]} is not a left identity on Hom({c.names[x]}, {c.names[y]})")
                break
            if c.product(x, x, y, f, c.idents[x]) != f:
                out.append(f"identity of {c.names[x]} is not a right identity on Hom({c.names[x]}, {c.names[y]})")
                break
    for x, y, z, w in product(range(size), repeat=4):
        if not (c.hom[x][y] and c.hom[y][z] and c.hom[z][w]):
            continue
        bad = False
        for hi in range(c.hom[z][w]):
            h = unit_vector(c.hom[z][w], hi)
            for gi in range(c.hom[y][z]):
                g = unit_vector(c.hom[y][z], gi)
                hg = c.product(y, z, w, h, g)
                for fi in range(c.hom[x][y]):
                    f = unit_vector(c.hom[x][y], fi)
                    left = c.product(x, z, w, h, c.product(x, y, z, g, f))
                    right = c.product(x, y, w, hg, f)
                    if left != right:
                        bad = True
                        break
                if bad:
                    break
            if bad:
                break
        if bad:
            out.append(f"associativity fails on ({c.names[x]}, {c.names[y]}, {c.names[z]}, {c.names[w]})")
    for x in range(size):
        if endomorphism_radical_codim(c, x) != 1:
            out.append(f"End({c.names[x]}) is not split local")
    return out


# -- objects and morphisms ----------------------------------------------------


def hom_dim(c: CategoryTable, xs: Iterable[int], ys: Iterable[int]) -> int:
    xs, ys = list(xs), list(ys)
    c.check_ids(xs)
    c.check_ids(ys)
    return sum(c.hom[x][y] for x in xs for y in ys)


@dataclass(frozen=True)
class Morphism:
    """Morphism between direct sums of indecomposables.

    ``blocks[t][s]`` is the coordinate vector of the component from
    ``source[s]`` to ``target[t]``.
    """

    source: tuple
    target: tuple
    blocks: tuple

    def block(self, t: int, s: int) -> tuple:
        return self.blocks[t][s]

    def is_zero(self) -> bool:
        return not any(any(v) for row in self.blocks for v in row)


def zero_morphism(c: CategoryTable, source: Sequence[int], target: Sequence[int]) -> Morphism:
    return Morphism(tuple(source), tuple(target), tuple(tuple(zero_vector(c.hom[s][t]) for s in source) for t in target))


def identity(c: CategoryTable, objs: Sequence[int]) -> Morphism:
    objs = tuple(objs)
    blocks = tuple(
        tuple(c.idents[s] if i == j else zero_vector(c.hom[s][t]) for j, s in enumerate(objs)) for i, t in enumerate(objs)
    )
    return Morphism(objs, objs, blocks)


def basis_morphism(c: CategoryTable, x: int, y: int, k: int) -> Morphism:
    return Morphism((x,), (y,), ((unit_vector(c.hom[x][y], k),),))


def check_morphism(c: CategoryTable, f: Morphism) -> None:
    c.check_ids(f.source)
    c.check_ids(f.target)
    if len(f.blocks) != len(f.target) or any(len(r) != len(f.source) for r in f.blocks):
        raise CategoryError("block grid does not match source and target")
    for t, row in zip(f.target, f.blocks):
        for s, v in zip(f.source, row):
            if len(v) != c.hom[s][t]:
                raise CategoryError("block length does not match the Hom dimension")


def compose(c: CategoryTable, g: Morphism, f: Morphism) -> Morphism:
    """``g o f``."""
    if tuple(f.target) != tuple(g.source):
        raise CategoryError("target of f differs from source of g")
    blocks = []
    for u, z in enumerate(g.target):
        row = []
        for s, x in enumerate(f.source):
            acc = zero_vector(c.hom[x][z])
            for t, y in enumerate(f.target):
                acc = add_vectors(acc, c.product(x, y, z, g.blocks[u][t], f.blocks[t][s]))
            row.append(acc)
        blocks.append(tuple(row))
    return Morphism(f.source, g.target, tuple(blocks))


# -- ideals -------------------------------------------------------------------


def ideal_pair(c: CategoryTable, through: Sequence[int], x: int, y: int) -> Subspace:
    """[add D](x, y) for indecomposables ``x`` and ``y``."""
    key = ("ideal", tuple(sorted(set(through))), x, y)
    hit = c._cache.get(key)
    if hit is not None:
        return hit
    n = c.hom[x][y]
    vectors = []
    for d in key[1]:
        if c.hom[x][d] == 0 or c.hom[d][y] == 0:
            continue
        for gi in range(c.hom[d][y]):
            for fi in range(c.hom[x][d]):
                vectors.append(c.basis_product(x, d, y, gi, fi))
    space = Subspace.span(vectors, n)
    c._cache[key] = space
    return space


def ideal_basis(c: CategoryTable, through: Iterable[int], xs: Sequence[int], ys: Sequence[int]) -> Subspace:
    """[add D](X, Y) inside Hom(X, Y) = direct sum of Hom(x, y), ``x`` outer, ``y`` inner."""
    through = list(through)
    xs, ys = list(xs), list(ys)
    for ids in (through, xs, ys):
        c.check_ids(ids)
    total = hom_dim(c, xs, ys)
    vectors = []
    offset = 0
    for x in xs:
        for y in ys:
            n = c.hom[x][y]
            for v in ideal_pair(c, through, x, y).basis:
                full = [ZERO] * total
                full[offset : offset + n] = v
                vectors.append(full)
            offset += n
    return Subspace.span(vectors, total)


def ideal_dim(c: CategoryTable, through: Iterable[int], xs: Iterable[int], ys: Iterable[int]) -> int:
    through = tuple(through)
    return sum(ideal_pair(c, through, x, y).dim for x in xs for y in ys)


# -- approximations -----------------------------------------------------------


def right_approx(c: CategoryTable, through: Iterable[int], target: Sequence[int]) -> Morphism:
    """Canonical right add(D)-approximation of ``target``.

    The source has one copy of ``d`` for every basis morphism ``d -> target``.
    """
    through = basic(through)
    target = tuple(target)
    c.check_ids(through)
    c.check_ids(target)
    source = []
    cols = []
    for d in through:
        for t, x in enumerate(target):
            for k in range(c.hom[d][x]):
                source.append(d)
                cols.append((t, k))
    blocks = tuple(
        tuple(unit_vector(c.hom[d][x], k) if tt == t else zero_vector(c.hom[d][x]) for d, (tt, k) in zip(source, cols))
        for t, x in enumerate(target)
    )
    return Morphism(tuple(source), target, blocks)


def left_approx(c: CategoryTable, through: Iterable[int], source: Sequence[int]) -> Morphism:
    """Canonical left add(D)-approximation of ``source``."""
    through = basic(through)
    source = tuple(source)
    c.check_ids(through)
    c.check_ids(source)
    target = []
    rows = []
    for d in through:
        for s, x in enumerate(source):
            for k in range(c.hom[x][d]):
                target.append(d)
                rows.append((s, k))
    blocks = tuple(
        tuple(unit_vector(c.hom[x][d], k) if ss == s else zero_vector(c.hom[x][d]) for s, x in enumerate(source))
        for d, (ss, k) in zip(target, rows)
    )
    return Morphism(source, tuple(target), blocks)


def _flatten(blocks_by_slot: Sequence[Sequence]) -> list:
    return [x for v in blocks_by_slot for x in v]


def is_right_approx(c: CategoryTable, through: Iterable[int], f: Morphism) -> bool:
    """``Hom(d, f)`` is onto for every ``d`` in D."""
    check_morphism(c, f)
    for d in basic(through):
        need = sum(c.hom[d][y] for y in f.target)
        if need == 0:
            continue
        vectors = []
        for s, x in enumerate(f.source):
            for k in range(c.hom[d][x]):
                h = unit_vector(c.hom[d][x], k)
                vectors.append(_flatten([c.product(d, x, y, f.blocks[t][s], h) for t, y in enumerate(f.target)]))
        if rank_of_vectors(vectors, need) != need:
            return False
    return True


def is_left_approx(c: CategoryTable, through: Iterable[int], f: Morphism) -> bool:
    """``Hom(f, d)`` is onto for every ``d`` in D."""
    check_morphism(c, f)
    for d in basic(through):
        need = sum(c.hom[x][d] for x in f.source)
        if need == 0:
            continue
        vectors = []
        for t, y in enumerate(f.target):
            for k in range(c.hom[y][d]):
                h = unit_vector(c.hom[y][d], k)
                vectors.append(_flatten([c.product(x, y, d, h, f.blocks[t][s]) for s, x in enumerate(f.source)]))
        if rank_of_vectors(vectors, need) != need:
            return False
    return True


def _objects_in(f: Morphism, side: str) -> tuple:
    return f.source if side == "right" else f.target


def _drop_slot(f: Morphism, side: str, slot: int) -> Morphism:
    if side == "right":
        source = f.source[:slot] + f.source[slot + 1 :]
        blocks = tuple(row[:slot] + row[slot + 1 :] for row in f.blocks)
        return Morphism(source, f.target, blocks)
    target = f.target[:slot] + f.target[slot + 1 :]
    return Morphism(f.source, target, f.blocks[:slot] + f.blocks[slot + 1 :])


def minimize_approx(c: CategoryTable, through: Iterable[int], f: Morphism, side: str) -> Morphism:
    """Greedily drop summands of the approximating object, in slot order."""
    if side not in ("left", "right"):
        raise ValueError("side must be 'left' or 'right'")
    through = basic(through)
    test = is_right_approx if side == "right" else is_left_approx
    if not test(c, through, f):
        raise CategoryError(f"input is not a {side} approximation")
    if any(x not in through for x in _objects_in(f, side)):
        raise CategoryError("approximating object is not in add D")
    slot = 0
    while slot < len(_objects_in(f, side)):
        trial = _drop_slot(f, side, slot)
        if test(c, through, trial):
            f = trial
        else:
            slot += 1
    return f


# -- quotients ----------------------------------------------------------------


def quotient(c: CategoryTable, through: Iterable[int], keep: Sequence[int]) -> CategoryTable:
    """Full subcategory on ``keep`` of the quotient ``c / [add D]``.

    A basis of ``Hom(x, y) / [D](x, y)`` is given by the classes of the unit
    vectors at the non-pivot coordinates of the ideal.
    """
    through = basic(through)
    keep = tuple(keep)
    c.check_ids(keep)
    ideals = {(x, y): ideal_pair(c, through, x, y) for x in keep for y in keep}
    reps = {key: space.complement_positions() for key, space in ideals.items()}
    hom = [[len(reps[(x, y)]) for y in keep] for x in keep]
    comp = {}
    for (a, x), (b, y), (e, z) in product(enumerate(keep), repeat=3):
        if not (hom[a][b] and hom[b][e] and hom[a][e]):
            continue
        table = []
        for gk in reps[(y, z)]:
            row = []
            for fk in reps[(x, y)]:
                v = c.basis_product(x, y, z, gk, fk)
                row.append(ideals[(x, z)].quotient_coordinates(v))
            table.append(tuple(row))
        comp[(a, b, e)] = tuple(table)
    idents = [ideals[(x, x)].quotient_coordinates(c.idents[x]) for x in keep]
    return make_table([c.names[x] for x in keep], hom, comp, idents)
