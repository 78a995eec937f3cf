"""Nilpotency, annihilators, generator counts and the regrading check."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DimensionError, Verdict
from .exactlin import Subspace, kernel_sparse
from .identities import VarietyName, holds, in_variety, super_cube_identities
from .superalgebra import SuperAlgebra, assemble, graded_basis


def product_space(a: SuperAlgebra, U: Subspace, W: Subspace) -> Subspace:
    """Span of all products ``u w`` with ``u`` in U and ``w`` in W."""
    return Subspace([a.mul_vectors(u, w) for u in U.basis for w in W.basis], a.dim)


def powers(a: SuperAlgebra, upto: int) -> list[Subspace]:
    """``P[t]`` = span of all products of ``t`` elements under every bracketing, t = 1..upto.

    Index 0 of the returned list is unused (None) so that ``P[t]`` reads naturally.
    """
    P: list = [None, Subspace.whole(a.dim)]
    for t in range(2, upto + 1):
        vecs = []
        for p in range(1, t):
            U, W = P[p], P[t - p]
            if U.dim and W.dim:
                vecs.extend(product_space(a, U, W).basis)
        P.append(Subspace(vecs, a.dim))
    return P


def left_normed_powers(a: SuperAlgebra, upto: int) -> list[Subspace]:
    """``L[t]`` = span of left-normed products ``(..((x1 x2) x3)..) xt``."""
    L: list = [None, Subspace.whole(a.dim)]
    whole = L[1]
    for t in range(2, upto + 1):
        L.append(product_space(a, L[t - 1], whole))
    return L


@dataclass(frozen=True)
class NilReport:
    nil_index: int | None
    step_class: str
    power_dims: tuple

    def to_dict(self) -> dict:
        return {"nil_index": self.nil_index, "step_class": self.step_class, "power_dims": list(self.power_dims)}


def step_class(nil_index: int | None) -> str:
    if nil_index is None:
        return "other"
    if nil_index <= 2:
        return "abelian"
    return {3: "2-step", 4: "3-step"}.get(nil_index, "other")


def nil_report(a: SuperAlgebra) -> NilReport:
    if a.dim == 0:
        return NilReport(1, "abelian", (0,))
    P = powers(a, a.dim + 1)
    for t in range(1, a.dim + 2):
        if P[t].dim == 0:
            return NilReport(t, step_class(t), tuple(P[k].dim for k in range(1, t + 1)))
    return NilReport(None, "other", tuple(P[k].dim for k in range(1, a.dim + 2)))


def nil_index(a: SuperAlgebra) -> int | None:
    return nil_report(a).nil_index


def cube_zero(a: SuperAlgebra) -> bool:
    """x^2 x = 0 and x x^2 = 0 for every (homogeneous) x, via their signed linearizations."""
    return all(holds(a, identity) for identity in super_cube_identities())


@dataclass(frozen=True)
class GradedSubspace:
    space: Subspace
    even: tuple
    odd: tuple

    @property
    def dim(self) -> int:
        return self.space.dim

    def to_dict(self, labels) -> dict:
        from .superalgebra import format_combination

        return {"dim": self.dim, "even": [format_combination(v, labels) for v in self.even],
                "odd": [format_combination(v, labels) for v in self.odd]}


def annihilator(a: SuperAlgebra) -> GradedSubspace:
    n = a.dim
    rows = []
    for j in range(n):
        for side in (0, 1):
            acc: dict = {}
            for i in range(n):
                key = (i, j) if side == 0 else (j, i)
                for k, c in a.table.get(key, ()):
                    acc.setdefault(k, {})[i] = c
            rows.extend(acc.values())
    space = Subspace(kernel_sparse(rows, n), n)
    even, odd = graded_basis(a, space)
    return GradedSubspace(space, tuple(even), tuple(odd))


def square(a: SuperAlgebra) -> Subspace:
    return product_space(a, Subspace.whole(a.dim), Subspace.whole(a.dim))


def generator_count(a: SuperAlgebra) -> int:
    """Minimal number of generators of a nilpotent algebra: ``dim A - dim A^2``."""
    if nil_index(a) is None:
        raise ValueError("generator_count needs a nilpotent algebra")
    return a.dim - square(a).dim


def dim_bound(d: int) -> int:
    return -d + d * d + 2 * d ** 3 + d ** 4


def dim_bound_check(a: SuperAlgebra) -> bool:
    return a.dim <= dim_bound(generator_count(a))


@dataclass(frozen=True)
class RegradeResult:
    verdict: Verdict
    algebra: SuperAlgebra | None = None
    parities: tuple = ()

    def __bool__(self) -> bool:
        return bool(self.verdict)


def odd_generator_grading_check(a: SuperAlgebra, odd_generators=(0, 1)) -> RegradeResult:
    """Regrade an ungraded algebra with the given generators odd.

    Parities spread through the products (``|e_k| = |e_i| + |e_j|`` for every
    component ``e_k`` of ``e_i e_j``); vectors never reached stay even.  The
    regraded algebra must then satisfy the signed symmetric Zinbiel identities.
    """
    if a.is_graded:
        raise DimensionError("expected an ungraded algebra")
    n = a.dim
    par: list = [None] * n
    for g in odd_generators:
        par[g] = 1
    while True:
        changed = True
        while changed:
            changed = False
            for (i, j), out in sorted(a.table.items()):
                if par[i] is None or par[j] is None:
                    continue
                want = (par[i] + par[j]) % 2
                for k, _ in out:
                    if par[k] is None:
                        par[k] = want
                        changed = True
                    elif par[k] != want:
                        v = Verdict(False, "grading", (a.labels[i], a.labels[j]),
                                    details={"component": a.labels[k]})
                        return RegradeResult(v)
        if None not in par:
            break
        par[par.index(None)] = 0
    parities = tuple(par)
    b, _ = assemble(a.labels, parities, {k: dict(v) for k, v in a.table.items()})
    verdict = in_variety(b, VarietyName.SymmetricZinbiel)
    return RegradeResult(verdict, b, parities)
