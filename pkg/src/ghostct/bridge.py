"""The map from ghost rigid objects to tau-rigid pairs, and theorem verifiers.

``phi(X) = (H(X), T cap X[-1])`` where ``H = Hom(T, -)``.  The verifiers
enumerate both families by independent code: the triangulated side with the
ghost ideal predicates of :mod:`tricat`, the module side with Property (S),
approximations and Ext groups over ``End(T)^op`` from :mod:`modalg`.  They
then check that ``phi`` matches the families bijectively.

Contravariant finiteness is automatic in a finite category, so the side
conditions that ask for it are dropped.  Only finitely generated families
are enumerated; every subcategory of a finite table has this form.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Optional, Sequence

from . import homcat, modalg, tricat
from .homcat import CategoryError, basic
from .modalg import Module, TauPair

THEOREMS = ("a7", "a9", "thm5", "thm6", "thm7", "f_stable", "equi", "two_cy", "factor", "prop_y4")

DESCRIPTIONS = {
    "a7": "T[1]-rigid objects correspond to tau-rigid pairs",
    "a9": "ghost cluster tilting objects correspond to support tau-tilting pairs",
    "thm5": "ghost cluster tilting objects without summands in T[1] correspond to tau-tilting families",
    "thm6": "tau-tilting families of projective dimension at most one are the weak tilting families",
    "thm7": "ghost cluster tilting objects without T[1] summands and with vanishing factorization ideal correspond to weak tilting families",
    "f_stable": "F-stable ghost cluster tilting objects are the cluster tilting objects",
    "equi": "ghost cluster tilting equals T[1]-rigid with |X| = |T|",
    "two_cy": "in a 2-Calabi-Yau category T[1]-rigid equals rigid",
    "factor": "pd H(X) <= 1 exactly when the factorization ideal through X vanishes",
    "prop_y4": "the approximation sequence criterion for support tau-tilting matches the count |M| + |Ker M| = |T|",
}


class VerificationError(CategoryError):
    pass


@dataclass(frozen=True)
class PhiResult:
    source: tuple
    modules: tuple
    module_ids: tuple  # objects of C whose H gives the modules
    kernel_part: tuple  # objects of T
    tilting: tuple


@dataclass
class VerificationReport:
    theorem: str
    category: str
    tilting: tuple
    left_count: int = 0
    right_count: int = 0
    matched: list = field(default_factory=list)
    failures: list = field(default_factory=list)
    notes: list = field(default_factory=list)
    skipped: Optional[str] = None
    wall_time: float = 0.0

    @property
    def success(self) -> bool:
        return not self.failures and self.left_count == self.right_count

    def to_dict(self, include_time: bool = False) -> dict:
        out = {
            "theorem": self.theorem,
            "category": self.category,
            "tilting": list(self.tilting),
            "left_count": self.left_count,
            "right_count": self.right_count,
            "matched": [list(map(str, m)) for m in self.matched],
            "failures": list(self.failures),
            "notes": list(self.notes),
            "skipped": self.skipped,
            "success": self.success,
        }
        if include_time:
            out["wall_time"] = round(self.wall_time, 6)
        return out


class TiltingContext:
    """Module side data for a fixed cluster tilting ``T``, computed lazily."""

    def __init__(self, t: tricat.TriangCategory, T: Iterable[int]):
        self.t = t
        self.T = basic(T)
        t.base.check_ids(self.T)
        self.alg = modalg.end_algebra(t, self.T)
        self.T1 = tricat.shift_obj(t, self.T, 1)
        self.outside = tuple(x for x in range(t.size) if x not in self.T1)
        self.modules = tuple(modalg.yoneda_module(t, self.T, [x], self.alg) for x in self.outside)
        self.position = {x: k for k, x in enumerate(self.outside)}
        self._memo = {}

    def memo(self, key, fn):
        if key not in self._memo:
            self._memo[key] = fn()
        return self._memo[key]

    def names(self, xs: Iterable[int]) -> list:
        return [self.t.names[x] for x in xs]

    def presentation(self, k: int):
        return modalg.min_proj_presentation(self.alg, self.modules[k])

    def property_S(self) -> tuple:
        def build():
            return tuple(
                tuple(modalg.property_S_pair(self.alg, self.presentation(i), self.modules[j]) for j in range(len(self.modules)))
                for i in range(len(self.modules))
            )

        return self.memo("S", build)

    def ext1(self) -> tuple:
        def build():
            return tuple(
                tuple(modalg.ext1_modules(self.alg, m, n) for n in self.modules) for m in self.modules
            )

        return self.memo("ext1", build)

    def pd(self) -> tuple:
        return self.memo("pd", lambda: tuple(modalg.pd_le_1(self.alg, m) for m in self.modules))

    def family(self, idx: Iterable[int]) -> tuple:
        return tuple(self.modules[k] for k in idx)

    def tau_rigid_pairs(self) -> list:
        """All (module indices, idempotent indices) satisfying Property (S) and M(E) = 0."""

        def build():
            s = self.property_S()
            m, r = len(self.modules), self.alg.rank
            out = []
            for size in range(m + 1):
                for mods in combinations(range(m), size):
                    if not all(s[i][j] for i in mods for j in mods):
                        continue
                    free = [e for e in range(r) if all(not self.modules[i].peak_positions(e) for i in mods)]
                    for k in range(len(free) + 1):
                        for es in combinations(free, k):
                            out.append((mods, es))
            return sorted(out)

        return self.memo("tau_rigid", build)

    def support_tau_tilting_pairs(self) -> list:
        def build():
            out = []
            for mods, es in self.tau_rigid_pairs():
                pair = TauPair(self.family(mods), es)
                if modalg.is_support_tau_tilting(self.alg, pair, self.modules):
                    out.append((mods, es))
            return out

        return self.memo("stt", build)

    def weak_tilting_families(self) -> list:
        def build():
            e, pd = self.ext1(), self.pd()
            good = [k for k in range(len(self.modules)) if pd[k] and e[k][k] == 0]
            out = []
            for size in range(len(good) + 1):
                for mods in combinations(good, size):
                    if any(e[i][j] for i in mods for j in mods):
                        continue
                    if modalg.is_weak_tilting(self.alg, self.family(mods), self.modules):
                        out.append(mods)
            return out

        return self.memo("weak", build)


_contexts: dict = {}


def context(t: tricat.TriangCategory, T: Iterable[int]) -> TiltingContext:
    key = (id(t), basic(T))
    hit = _contexts.get(key)
    if hit is None or hit.t is not t:
        hit = TiltingContext(t, T)
        _contexts[key] = hit
    return hit


# -- the map ------------------------------------------------------------------


def phi(t: tricat.TriangCategory, T: Iterable[int], xs: Iterable[int]) -> PhiResult:
    ctx = context(t, T)
    xs = basic(xs)
    t.base.check_ids(xs)
    ids = tuple(x for x in xs if x not in ctx.T1)
    kernel = tuple(x for x in ctx.T if t.shift[x] in xs)
    return PhiResult(xs, tuple(ctx.modules[ctx.position[x]] for x in ids), ids, kernel, ctx.T)


def phi_pair(ctx: TiltingContext, result: PhiResult) -> tuple:
    """PhiResult as (module indices, idempotent indices) for comparison with the module side."""
    return (
        tuple(ctx.position[x] for x in result.module_ids),
        tuple(ctx.T.index(x) for x in result.kernel_part),
    )


def phi_inverse(t: tricat.TriangCategory, T: Iterable[int], modules: Sequence[Module], kernel_part: Iterable[int]) -> Optional[tuple]:
    """The basic object with ``phi(X) = (modules, kernel_part)``, found by isomorphism testing."""
    ctx = context(t, T)
    kernel_part = basic(kernel_part)
    if any(e not in ctx.T for e in kernel_part):
        raise CategoryError("kernel part must lie in T")
    pair = TauPair(tuple(modules), tuple(ctx.T.index(e) for e in kernel_part))
    if not modalg.is_tau_rigid_pair(ctx.alg, pair):
        raise CategoryError("input is not a tau-rigid pair")
    found = []
    for m in modules:
        k = modalg.identify(ctx.alg, m, ctx.modules)
        if k is None:
            return None
        found.append(ctx.outside[k])
    return basic(found + [t.shift[e] for e in kernel_part])


def factorization_ideal_vanishes(t: tricat.TriangCategory, T: Iterable[int], xs: Iterable[int]) -> bool:
    """No nonzero map ``T_i[1] -> T_j[1]`` factors through ``add X``."""
    T, xs = basic(T), basic(xs)
    T1 = tricat.shift_obj(t, T, 1)
    if any(x in T1 for x in xs):
        raise CategoryError("X has a summand in T[1]")
    return all(homcat.ideal_pair(t.base, xs, a, b).dim == 0 for a in T1 for b in T1)


# -- verifiers ----------------------------------------------------------------


def _check_bijection(report: VerificationReport, ctx: TiltingContext, left: list, right: list) -> None:
    t = ctx.t
    report.left_count, report.right_count = len(left), len(right)
    right_set = set(right)
    seen = {}
    for xs in left:
        res = phi(t, ctx.T, xs)
        pair = phi_pair(ctx, res)
        if pair not in right_set:
            report.failures.append(f"phi({','.join(ctx.names(xs))}) is not in the module side family")
            continue
        if pair in seen:
            report.failures.append(f"phi is not injective: {seen[pair]} and {xs}")
        seen[pair] = xs
        back = phi_inverse(t, ctx.T, res.modules, res.kernel_part)
        if back != xs:
            report.failures.append(f"phi_inverse does not recover {','.join(ctx.names(xs))}")
        report.matched.append(("+".join(ctx.names(xs)) or "0", _pair_label(ctx, pair)))
    missing = [p for p in right if p not in seen]
    for p in missing:
        report.failures.append(f"{_pair_label(ctx, p)} is not in the image of phi")


def _pair_label(ctx: TiltingContext, pair: tuple) -> str:
    mods, es = pair
    m = ",".join(ctx.modules[k].label for k in mods) or "0"
    e = ",".join(ctx.t.names[ctx.T[i]] for i in es) or "0"
    return f"({m}; {e})"


def _families_to_pairs(families: Iterable[tuple]) -> list:
    return [(mods, ()) for mods in families]


def _all_subsets(n: int):
    for size in range(n + 1):
        yield from combinations(range(n), size)


def _verify_a7(report, ctx):
    left = tricat.enumerate_basic(ctx.t, "T1_rigid", ctx.T)
    _check_bijection(report, ctx, left, ctx.tau_rigid_pairs())


def _verify_a9(report, ctx):
    t = ctx.t
    left = tricat.enumerate_basic(t, "ghost_cluster_tilting", ctx.T)
    _check_bijection(report, ctx, left, ctx.support_tau_tilting_pairs())
    for xs in left:
        res = phi(t, ctx.T, xs)
        kernel = tuple(ctx.T[i] for i in modalg.kernel_of(ctx.alg, res.modules))
        if kernel != res.kernel_part:
            report.failures.append(f"Ker H({','.join(ctx.names(xs))}) differs from T cap X[-1]")


def _no_t1(ctx, xs) -> bool:
    return not any(x in ctx.T1 for x in xs)


def _tau_tilting_families(ctx) -> list:
    return [mods for mods, es in ctx.support_tau_tilting_pairs() if not es and not modalg.kernel_of(ctx.alg, ctx.family(mods))]


def _verify_thm5(report, ctx):
    left = [xs for xs in tricat.enumerate_basic(ctx.t, "ghost_cluster_tilting", ctx.T) if _no_t1(ctx, xs)]
    _check_bijection(report, ctx, left, _families_to_pairs(_tau_tilting_families(ctx)))


def _verify_thm7(report, ctx):
    left = [
        xs
        for xs in tricat.enumerate_basic(ctx.t, "ghost_cluster_tilting", ctx.T)
        if _no_t1(ctx, xs) and factorization_ideal_vanishes(ctx.t, ctx.T, xs)
    ]
    _check_bijection(report, ctx, left, _families_to_pairs(ctx.weak_tilting_families()))


def _verify_thm6(report, ctx):
    pd = ctx.pd()
    left = [mods for mods in _tau_tilting_families(ctx) if all(pd[k] for k in mods)]
    right = ctx.weak_tilting_families()
    _compare_sets(report, left, right, lambda mods: ",".join(ctx.modules[k].label for k in mods) or "0")


def _compare_sets(report, left, right, label) -> None:
    report.left_count, report.right_count = len(left), len(right)
    ls, rs = set(left), set(right)
    for x in left:
        if x in rs:
            report.matched.append((label(x), label(x)))
        else:
            report.failures.append(f"{label(x)} is only on the left")
    for x in right:
        if x not in ls:
            report.failures.append(f"{label(x)} is only on the right")


def _verify_f_stable(report, ctx):
    t = ctx.t
    if t.serre is None:
        raise VerificationError("f_stable needs Serre data")
    left = [xs for xs in tricat.enumerate_basic(t, "ghost_cluster_tilting", ctx.T) if tricat.is_F_stable(t, xs)]
    right = tricat.enumerate_basic(t, "cluster_tilting")
    _compare_sets(report, left, right, lambda xs: "+".join(ctx.names(xs)) or "0")


def _verify_equi(report, ctx):
    t = ctx.t
    if t.serre is None:
        raise VerificationError("equi needs Serre data")
    left, right = [], []
    for xs in _all_subsets(t.size):
        if tricat.is_ghost_cluster_tilting(t, ctx.T, xs):
            left.append(xs)
        if tricat.is_relative_ct(t, ctx.T, xs):
            right.append(xs)
    _compare_sets(report, left, right, lambda xs: "+".join(ctx.names(xs)) or "0")


def _verify_two_cy(report, ctx):
    t = ctx.t
    if not tricat.is_two_cy(t):
        report.skipped = "category is not 2-Calabi-Yau"
        return
    left = [xs for xs in _all_subsets(t.size) if tricat.is_T1_rigid(t, ctx.T, xs)]
    right = [xs for xs in _all_subsets(t.size) if tricat.is_rigid(t, xs)]
    _compare_sets(report, left, right, lambda xs: "+".join(ctx.names(xs)) or "0")


def _verify_factor(report, ctx):
    pd = ctx.pd()
    left = [x for k, x in enumerate(ctx.outside) if pd[k]]
    right = [x for x in ctx.outside if factorization_ideal_vanishes(ctx.t, ctx.T, [x])]
    _compare_sets(report, left, right, lambda x: ctx.t.names[x])


def _verify_prop_y4(report, ctx):
    alg = ctx.alg
    reg = modalg.regular_module(alg)
    families = sorted({mods for mods, _ in ctx.tau_rigid_pairs()})
    left, right = [], []
    for mods in families:
        fam = ctx.family(mods)
        target, f = modalg.approximation_generic(alg, reg, fam)
        sequence = modalg.in_add(alg, modalg.cokernel(alg, target, f), fam, ctx.modules)
        if sequence:
            left.append(mods)
        if len(mods) + len(modalg.kernel_of(alg, fam)) == alg.rank:
            right.append(mods)
        stt = modalg.is_support_tau_tilting(alg, TauPair(fam, modalg.kernel_of(alg, fam)), ctx.modules)
        if stt != sequence:
            report.failures.append(f"support tau-tilting test disagrees with the sequence criterion on {mods}")
    _compare_sets(report, left, right, lambda mods: ",".join(ctx.modules[k].label for k in mods) or "0")


_VERIFIERS = {
    "a7": _verify_a7,
    "a9": _verify_a9,
    "thm5": _verify_thm5,
    "thm6": _verify_thm6,
    "thm7": _verify_thm7,
    "f_stable": _verify_f_stable,
    "equi": _verify_equi,
    "two_cy": _verify_two_cy,
    "factor": _verify_factor,
    "prop_y4": _verify_prop_y4,
}


_SCOPE = "families range over additive closures of finite sets of indecomposables"
_FINITE = "contravariant finiteness holds automatically in a finite category"
_NOTES = {
    "thm5": (_FINITE,),
    "thm7": (_FINITE,),
    "f_stable": (_FINITE, "F-stability is tested on the object permutation of F"),
    "equi": ("weak ghost cluster tilting coincides with ghost cluster tilting in a finite category",),
}


def verify(theorem: str, t: tricat.TriangCategory, T: Iterable[int]) -> VerificationReport:
    if theorem not in _VERIFIERS:
        raise ValueError(f"unknown theorem {theorem!r}; expected one of {', '.join(THEOREMS)}")
    T = basic(T)
    if not tricat.is_cluster_tilting(t, T):
        raise VerificationError(f"{'+'.join(t.names[x] for x in T)} is not cluster tilting")
    if theorem in ("f_stable", "equi") and t.serre is None:
        raise VerificationError(f"{theorem} needs Serre data")
    start = time.perf_counter()
    report = VerificationReport(theorem, t.name, tuple(t.names[x] for x in T), notes=list(_NOTES.get(theorem, ())) + [_SCOPE])
    _VERIFIERS[theorem](report, context(t, T))
    report.wall_time = time.perf_counter() - start
    return report


def verify_many(t: tricat.TriangCategory, tiltings: Optional[Sequence] = None, theorems: Sequence[str] = THEOREMS) -> list:
    """Reports ordered by theorem, then by tilting object."""
    if tiltings is None:
        tiltings = tricat.enumerate_basic(t, "cluster_tilting")
    out = []
    for th in theorems:
        if th in ("f_stable", "equi") and t.serre is None:
            continue
        for T in sorted(basic(T) for T in tiltings):
            out.append(verify(th, t, T))
    return out
