"""Invariant forms, scalar 2-cocycles, central extensions, admissible triples,
semi-direct products, double extensions and their converse decompositions.

Endomorphisms are square matrices acting on coordinate columns: column ``j``
of ``delta`` holds the coordinates of ``delta(e_j)``.  Bilinear forms and
scalar cocycles are Gram matrices: ``B(u, v) = u^T G v``.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from . import exactlin as el
from .errors import DimensionError, GradingError, PreconditionError, TheoremContradiction, Verdict
from .exactlin import ONE, ZERO, Subspace
from .identities import VarietyName, in_variety, polarize, variety
from .structure import annihilator, nil_index, square
from .superalgebra import SuperAlgebra, assemble, change_basis, fresh_label, graded_basis, transform_form


def _sign(e: int) -> int:
    return -1 if e % 2 else 1


def _unit(n: int, i: int) -> tuple:
    return tuple(ONE if k == i else ZERO for k in range(n))


def bform(G: el.Matrix, u: Sequence, v: Sequence) -> Fraction:
    return sum((x * G[i][j] * y for i, x in enumerate(u) if x for j, y in enumerate(v) if y), ZERO)


def apply(M: el.Matrix, v: Sequence) -> tuple:
    return el.matvec(M, v)


def _check_gram(a: SuperAlgebra, G) -> el.Matrix:
    G = el.matrix(G)
    if len(G) != a.dim or any(len(r) != a.dim for r in G):
        raise DimensionError(f"gram matrix must be {a.dim}x{a.dim}")
    return G


def is_homogeneous_map(a: SuperAlgebra, M: el.Matrix, degree: int) -> bool:
    n = a.dim
    return all(not M[k][j] or (a.parity(k) - a.parity(j) - degree) % 2 == 0 for k in range(n) for j in range(n))


# -- invariant scalar products ------------------------------------------------------


@dataclass(frozen=True)
class FormReport:
    even: Verdict
    supersymmetric: Verdict
    invariant: Verdict
    nondegenerate: Verdict

    @property
    def ok(self) -> bool:
        return all((self.even, self.supersymmetric, self.invariant, self.nondegenerate))

    def __bool__(self) -> bool:
        return self.ok

    def failures(self) -> list[str]:
        return [k for k in ("even", "supersymmetric", "invariant", "nondegenerate") if not getattr(self, k)]

    def to_dict(self) -> dict:
        return {k: getattr(self, k).to_dict() for k in ("even", "supersymmetric", "invariant", "nondegenerate")}


def form_checks(a: SuperAlgebra, G) -> FormReport:
    G = _check_gram(a, G)
    n, par, lab = a.dim, a.parities, a.labels
    even = Verdict.passed()
    for i in range(n):
        for j in range(n):
            if par[i] != par[j] and G[i][j]:
                even = Verdict(False, "even", (lab[i], lab[j]), G[i][j])
                break
        if not even:
            break
    sym = Verdict.passed()
    for i in range(n):
        for j in range(n):
            if G[i][j] != _sign(par[i] * par[j]) * G[j][i]:
                sym = Verdict(False, "supersymmetric", (lab[i], lab[j]), G[i][j] - _sign(par[i] * par[j]) * G[j][i])
                break
        if not sym:
            break
    inv = Verdict.passed()
    units = [_unit(n, i) for i in range(n)]
    for i, j, k in itertools.product(range(n), repeat=3):
        lhs = bform(G, a.mul_vectors(units[i], units[j]), units[k])
        rhs = bform(G, units[i], a.mul_vectors(units[j], units[k]))
        if lhs != rhs:
            inv = Verdict(False, "invariant", (lab[i], lab[j], lab[k]), lhs - rhs)
            break
    nondeg = Verdict.passed() if el.rank(G) == n else Verdict(False, "nondegenerate", (), el.rank(G))
    return FormReport(even, sym, inv, nondeg)


def invariant_form_space(a: SuperAlgebra) -> list[el.Matrix]:
    """Basis of all even, supersymmetric, invariant bilinear forms (degenerate ones included)."""
    n, par = a.dim, a.parities
    unknowns = [(i, j) for i in range(n) for j in range(i, n) if par[i] == par[j] and not (i == j and par[i])]
    index = {p: u for u, p in enumerate(unknowns)}

    def entry(i, j) -> dict:
        if i <= j:
            return {index[(i, j)]: ONE} if (i, j) in index else {}
        s = _sign(par[i] * par[j])
        return {index[(j, i)]: Fraction(s)} if (j, i) in index else {}

    rows = []
    for i, j, k in itertools.product(range(n), repeat=3):
        row: dict = {}
        for m, c in a.table.get((i, j), ()):
            for u, v in entry(m, k).items():
                row[u] = row.get(u, ZERO) + c * v
        for m, c in a.table.get((j, k), ()):
            for u, v in entry(i, m).items():
                row[u] = row.get(u, ZERO) - c * v
        row = {u: v for u, v in row.items() if v}
        if row:
            rows.append(row)
    out = []
    for sol in el.kernel_sparse(rows, len(unknowns)):
        G = [[ZERO] * n for _ in range(n)]
        for (i, j), x in zip(unknowns, sol):
            G[i][j] = x
            G[j][i] = _sign(par[i] * par[j]) * x
        out.append(tuple(map(tuple, G)))
    return out


def nondegenerate_invariant_form(a: SuperAlgebra, tries: int = 25, seed: int = 0) -> el.Matrix | None:
    """A nondegenerate invariant scalar product, or None.

    None is certain when all invariant forms share a nonzero radical vector;
    otherwise it rests on ``tries`` random combinations all being singular.
    """
    basis = invariant_form_space(a)
    n = a.dim
    if n == 0:
        return ()
    if not basis:
        return None
    stacked = [row for G in basis for row in G]
    if el.rank(stacked) < n:
        return None  # common radical: every invariant form is degenerate
    rng = random.Random(seed)
    for t in range(tries):
        coeffs = [ONE] * len(basis) if t == 0 else [Fraction(rng.randint(-5, 5)) for _ in basis]
        G = tuple(tuple(sum((c * B[i][j] for c, B in zip(coeffs, basis)), ZERO) for j in range(n)) for i in range(n))
        if el.rank(G) == n:
            return G
    return None


def adjoint_endo(G: el.Matrix, M: el.Matrix) -> el.Matrix:
    """The B-adjoint M* with B(Mx, y) = B(x, M*y), i.e. G^-1 M^T G."""
    return el.matmul(el.matmul(el.inverse(G), el.transpose(M)), G)


@dataclass(frozen=True)
class QuadraticReport:
    symmetric_zinbiel: Verdict
    nil_index: int | None

    @property
    def ok(self) -> bool:
        return bool(self.symmetric_zinbiel) and self.nil_index is not None and self.nil_index <= 3


def quadratic_consequences(a: SuperAlgebra, G) -> QuadraticReport:
    """A quadratic left or right Zinbiel superalgebra must be symmetric and 2-step nilpotent."""
    report = form_checks(a, G)
    if not report:
        raise PreconditionError("invariant scalar product", "failed: " + ", ".join(report.failures()))
    if not (in_variety(a, VarietyName.LeftZinbiel) or in_variety(a, VarietyName.RightZinbiel)):
        raise PreconditionError("left or right Zinbiel", "the algebra satisfies neither identity")
    out = QuadraticReport(in_variety(a, VarietyName.SymmetricZinbiel), nil_index(a))
    if not out.ok:
        raise TheoremContradiction(
            f"quadratic Zinbiel algebra with symmetric={bool(out.symmetric_zinbiel)}, nil_index={out.nil_index}")
    return out


# -- scalar 2-cocycles -------------------------------------------------------------------


def cocycle_endo_check(a: SuperAlgebra, G, delta: el.Matrix, alpha: int) -> Verdict:
    """Conditions making ``(x, y) -> B(delta(x), y)`` a scalar 2-cocycle:

    (i)  delta(xy) = delta(x) y + (-1)^{|y|(|x|+alpha)} y delta(x)
    (ii) delta(xy) = -(-1)^{alpha|x|} x delta(y)
    """
    G = _check_gram(a, G)
    if not is_homogeneous_map(a, delta, alpha):
        raise GradingError(f"delta is not homogeneous of degree {alpha}")
    n, par = a.dim, a.parities
    units = [_unit(n, i) for i in range(n)]
    images = [apply(delta, u) for u in units]
    for i in range(n):
        for j in range(n):
            dxy = apply(delta, a.mul_vectors(units[i], units[j]))
            s1 = _sign(par[j] * (par[i] + alpha))
            r1 = [p - q - s1 * r for p, q, r in
                  zip(dxy, a.mul_vectors(images[i], units[j]), a.mul_vectors(units[j], images[i]))]
            if any(r1):
                return Verdict(False, "(i)", (a.labels[i], a.labels[j]), tuple(r1))
            s2 = _sign(alpha * par[i])
            r2 = [p + s2 * q for p, q in zip(dxy, a.mul_vectors(units[i], images[j]))]
            if any(r2):
                return Verdict(False, "(ii)", (a.labels[i], a.labels[j]), tuple(r2))
    return Verdict.passed()


def cocycle_endo_space(a: SuperAlgebra, G, alpha: int) -> list[el.Matrix]:
    """All homogeneous degree-``alpha`` maps satisfying (i) and (ii), by a kernel solve."""
    n, par = a.dim, a.parities
    unknowns = [(k, j) for k in range(n) for j in range(n) if (par[k] - par[j] - alpha) % 2 == 0]
    columns = []
    for k, j in unknowns:
        M = [[ZERO] * n for _ in range(n)]
        M[k][j] = ONE
        M = tuple(map(tuple, M))
        units = [_unit(n, i) for i in range(n)]
        images = [apply(M, u) for u in units]
        col = []
        for x in range(n):
            for y in range(n):
                dxy = apply(M, a.mul_vectors(units[x], units[y]))
                s1 = _sign(par[y] * (par[x] + alpha))
                col += [p - q - s1 * r for p, q, r in
                        zip(dxy, a.mul_vectors(images[x], units[y]), a.mul_vectors(units[y], images[x]))]
                s2 = _sign(alpha * par[x])
                col += [p + s2 * q for p, q in zip(dxy, a.mul_vectors(units[x], images[y]))]
        columns.append(col)
    rows = [{u: columns[u][r] for u in range(len(unknowns)) if columns[u][r]} for r in range(len(columns[0]) if columns else 0)]
    out = []
    for sol in el.kernel_sparse([r for r in rows if r], len(unknowns)):
        M = [[ZERO] * n for _ in range(n)]
        for (k, j), x in zip(unknowns, sol):
            M[k][j] = x
        out.append(tuple(map(tuple, M)))
    return out


def endo_to_cocycle(G, delta) -> el.Matrix:
    """Gram matrix of ``(x, y) -> B(delta(x), y)``, i.e. delta^T G."""
    return el.matmul(el.transpose(delta), G)


@dataclass(frozen=True)
class CocycleSpace:
    z2_basis: tuple
    b2_basis: tuple
    parity: int

    @property
    def z2_dim(self) -> int:
        return len(self.z2_basis)

    @property
    def b2_dim(self) -> int:
        return len(self.b2_basis)

    @property
    def h2_dim(self) -> int:
        return self.z2_dim - self.b2_dim

    def to_dict(self) -> dict:
        return {"parity": self.parity, "z2_dim": self.z2_dim, "b2_dim": self.b2_dim, "h2_dim": self.h2_dim}


def _tree_value(a: SuperAlgebra, tree, t):
    """Coordinates of the product of basis vectors ``t`` along ``tree``."""
    if isinstance(tree, int):
        return _unit(a.dim, t[tree])
    return a.mul_vectors(_tree_value(a, tree[0], t), _tree_value(a, tree[1], t))


def _identities_for(a: SuperAlgebra, v) -> list:
    var = variety(v)
    out = []
    for identity in var.identities:
        if not identity.multilinear:
            if a.is_graded:
                raise GradingError(f"{var.name.value} is defined for ungraded algebras only")
            identity = polarize(identity)
        out.append(identity)
    return out


def cocycle_constraints(a: SuperAlgebra, v=VarietyName.SymmetricZinbiel, parity: int = 0):
    """Sparse linear constraints on omega[i][j] (|i| + |j| = parity) for A + K omega to stay in ``v``."""
    n, par = a.dim, a.parities
    unknowns = [(i, j) for i in range(n) for j in range(n) if (par[i] + par[j]) % 2 == parity]
    index = {p: u for u, p in enumerate(unknowns)}
    rows = []
    for identity in _identities_for(a, v):
        for t in itertools.product(range(n), repeat=identity.nvars):
            row: dict = {}
            for term in identity.terms:
                if isinstance(term.tree, int):
                    continue
                e = sum(par[t[x]] * par[t[y]] for x, y in term.pairs) + sum(par[t[x]] for x in term.singles)
                coef = term.coef * _sign(e)
                left = _tree_value(a, term.tree[0], t)
                right = _tree_value(a, term.tree[1], t)
                for i, x in enumerate(left):
                    if not x:
                        continue
                    for j, y in enumerate(right):
                        if y and (i, j) in index:
                            u = index[(i, j)]
                            row[u] = row.get(u, ZERO) + coef * x * y
            row = {u: c for u, c in row.items() if c}
            if row:
                rows.append(row)
    return unknowns, rows


def _to_gram(n: int, unknowns, sol) -> el.Matrix:
    G = [[ZERO] * n for _ in range(n)]
    for (i, j), x in zip(unknowns, sol):
        G[i][j] = x
    return tuple(map(tuple, G))


def coboundaries(a: SuperAlgebra, parity: int = 0) -> list[el.Matrix]:
    """Basis of B^2: the maps (x, y) -> f(xy) for functionals f of the given parity."""
    n = a.dim
    vecs = []
    for m in range(n):
        if a.parity(m) != parity:
            continue
        vecs.append(tuple(a.coef(i, j, m) for i in range(n) for j in range(n)))
    basis = el.row_basis(vecs, n * n)
    return [tuple(tuple(v[i * n + j] for j in range(n)) for i in range(n)) for v in basis]


def cocycle_space(a: SuperAlgebra, v=VarietyName.SymmetricZinbiel, parity: int = 0) -> CocycleSpace:
    n = a.dim
    unknowns, rows = cocycle_constraints(a, v, parity)
    z2 = [_to_gram(n, unknowns, sol) for sol in el.kernel_sparse(rows, len(unknowns))]
    b2 = coboundaries(a, parity)
    return CocycleSpace(tuple(z2), tuple(b2), parity)


def annihilator_radical(a: SuperAlgebra, space: CocycleSpace) -> Subspace:
    """Annihilator vectors on which every cocycle of ``space`` vanishes (both slots).

    Coboundaries vanish on the annihilator, so this depends only on cohomology
    classes.  A non-split central extension exists iff this subspace is zero.
    """
    n = a.dim
    rows = []
    for w in space.z2_basis:
        rows += [{i: w[i][j] for i in range(n) if w[i][j]} for j in range(n)]
        rows += [{i: w[j][i] for i in range(n) if w[j][i]} for j in range(n)]
    rad = Subspace(el.kernel_sparse([r for r in rows if r], n), n)
    return rad.intersect(annihilator(a).space)


def admits_nonsplit_extension(a: SuperAlgebra, space: CocycleSpace) -> bool:
    return space.h2_dim > 0 and annihilator_radical(a, space).dim == 0


def in_cocycle_space(a: SuperAlgebra, omega, v=VarietyName.SymmetricZinbiel, parity: int = 0) -> bool:
    unknowns, rows = cocycle_constraints(a, v, parity)
    n = a.dim
    for i in range(n):
        for j in range(n):
            if omega[i][j] and (a.parity(i) + a.parity(j)) % 2 != parity:
                return False
    values = [omega[i][j] for i, j in unknowns]
    return all(sum((c * values[u] for u, c in row.items()), ZERO) == 0 for row in rows)


def central_extension(a: SuperAlgebra, omegas: Sequence, parities: Sequence[int] | None = None,
                      labels: Sequence[str] | None = None, check=VarietyName.SymmetricZinbiel) -> SuperAlgebra:
    """``A + K^s`` with ``x * y = xy + sum_k omega_k(x, y) z_k``; the ``z_k`` are central.

    With ``check`` set, the result must lie in that variety, otherwise a
    PreconditionError carrying the failing tuple is raised.
    """
    n = a.dim
    omegas = [el.matrix(w) for w in omegas]
    if parities is None:
        parities = []
        for w in omegas:
            seen = {(a.parity(i) + a.parity(j)) % 2 for i in range(n) for j in range(n) if w[i][j]}
            parities.append(seen.pop() if len(seen) == 1 else 0)
    if labels is None:
        labels, taken = [], set(a.labels)
        for k in range(len(omegas)):
            name = fresh_label(taken, f"e{n + k + 1}")
            taken.add(name)
            labels.append(name)
    table = {key: dict(out) for key, out in a.table.items()}
    for k, w in enumerate(omegas):
        if len(w) != n or any(len(r) != n for r in w):
            raise DimensionError(f"cocycle {k + 1} must be {n}x{n}")
        for i in range(n):
            for j in range(n):
                if w[i][j]:
                    if (a.parity(i) + a.parity(j)) % 2 != parities[k]:
                        raise GradingError(f"cocycle {k + 1} has an entry at ({a.labels[i]}, {a.labels[j]}) "
                                           f"of the wrong parity")
                    table.setdefault((i, j), {})[n + k] = w[i][j]
    alg, _ = assemble(list(a.labels) + list(labels), list(a.parities) + list(parities), table)
    if check is not None:
        verdict = in_variety(alg, check)
        if not verdict:
            raise PreconditionError("cocycle condition", f"{verdict.what} fails at {verdict.witness}")
    return alg


def parse_cocycle(text: str, a: SuperAlgebra) -> el.Matrix:
    """Read ``"E15 - E51 - 2 E24"`` (1-based E_ij notation) into an n x n matrix."""
    import re

    n = a.dim
    M = [[ZERO] * n for _ in range(n)]
    compact = text.replace(" ", "")
    if compact in ("", "0"):
        return tuple(map(tuple, M))
    pos = 0
    pattern = re.compile(r"([+-]?)(\d+(?:/\d+)?)?\*?E(\d)(\d)")
    while pos < len(compact):
        m = pattern.match(compact, pos)
        if not m:
            raise ValueError(f"cannot read cocycle near {compact[pos:]!r}")
        sign = -1 if m.group(1) == "-" else 1
        coef = Fraction(m.group(2)) if m.group(2) else ONE
        i, j = int(m.group(3)) - 1, int(m.group(4)) - 1
        if not (0 <= i < n and 0 <= j < n):
            raise DimensionError(f"E{i + 1}{j + 1} outside dimension {n}")
        M[i][j] += sign * coef
        pos = m.end()
    return tuple(map(tuple, M))


# -- admissible triples and semi-direct products -----------------------------------------


@dataclass(frozen=True)
class AdmissibleTriple:
    delta: el.Matrix
    D: el.Matrix
    a0: tuple
    d_parity: int = 0

    @classmethod
    def zero(cls, a: SuperAlgebra, d_parity: int = 0) -> "AdmissibleTriple":
        z = el.zeros(a.dim, a.dim)
        return cls(z, z, (ZERO,) * a.dim, d_parity)


ADMISSIBLE_EQUATIONS = (
    "delta(xy) = (-1)^{s|x|} x delta(y)",
    "delta(xy) = delta(x)y + (-1)^{s|x|} D(x)y",
    "delta(xy) = -(-1)^{|y|(|x|+s)} D(y)x",
    "delta(x)y = (-1)^{|x||y|} delta(y)x",
    "delta(x)y = -(-1)^{s(|x|+|y|)} x D(y)",
    "D(xy) = (-1)^{s|y|} D(x)y",
    "delta^2 = (-1)^s delta^2",
    "(-1)^s delta^2 = -D^2",
    "-D^2(x) = (1+(-1)^s) a0 x",
    "delta D = -(-1)^s D delta",
    "-(-1)^s D delta(x) = (-1)^{s|x|} x a0",
    "(-1)^{s|x|} x a0 = -(-1)^{s(|x|+s)} a0 x",
    "delta(a0) = 0",
    "D(a0) = 0",
)


def admissible_check(a: SuperAlgebra, t: AdmissibleTriple, require_annihilator: bool = True) -> Verdict:
    """Every equation making the semi-direct product by ``d`` (|d| = s) symmetric Zinbiel."""
    n, par, s = a.dim, a.parities, t.d_parity
    lab = a.labels
    if not is_homogeneous_map(a, t.delta, s) or not is_homogeneous_map(a, t.D, s):
        return Verdict(False, f"delta and D homogeneous of degree {s}")
    if any(x for k, x in enumerate(t.a0) if par[k]):
        return Verdict(False, "a0 even")
    if require_annihilator and tuple(t.a0) not in annihilator(a).space:
        return Verdict(False, "a0 in Ann(A)")
    mul = a.mul_vectors
    units = [_unit(n, i) for i in range(n)]
    dl = [apply(t.delta, u) for u in units]
    Dl = [apply(t.D, u) for u in units]

    def lin(*terms):
        return tuple(sum((c * v[k] for c, v in terms), ZERO) for k in range(n))

    for i in range(n):
        x, px = units[i], par[i]
        for j in range(n):
            y, py = units[j], par[j]
            xy = mul(x, y)
            dxy = apply(t.delta, xy)
            checks = (
                lin((1, dxy), (-_sign(s * px), mul(x, dl[j]))),
                lin((1, dxy), (-1, mul(dl[i], y)), (-_sign(s * px), mul(Dl[i], y))),
                lin((1, dxy), (_sign(py * (px + s)), mul(Dl[j], x))),
                lin((1, mul(dl[i], y)), (-_sign(px * py), mul(dl[j], x))),
                lin((1, mul(dl[i], y)), (_sign(s * (px + py)), mul(x, Dl[j]))),
                lin((1, apply(t.D, xy)), (-_sign(s * py), mul(Dl[i], y))),
            )
            for k, r in enumerate(checks):
                if any(r):
                    return Verdict(False, ADMISSIBLE_EQUATIONS[k], (lab[i], lab[j]), r)
        dd = apply(t.delta, dl[i])
        DD = apply(t.D, Dl[i])
        dD = apply(t.delta, Dl[i])
        Dd = apply(t.D, dl[i])
        xa0 = mul(x, t.a0)
        a0x = mul(t.a0, x)
        checks = (
            lin((1, dd), (-_sign(s), dd)),
            lin((_sign(s), dd), (1, DD)),
            lin((-1, DD), (-(1 + _sign(s)), a0x)),
            lin((1, dD), (_sign(s), Dd)),
            lin((-_sign(s), Dd), (-_sign(s * px), xa0)),
            lin((_sign(s * px), xa0), (_sign(s * (px + s)), a0x)),
        )
        for k, r in enumerate(checks):
            if any(r):
                return Verdict(False, ADMISSIBLE_EQUATIONS[6 + k], (lab[i],), r)
    if any(apply(t.delta, t.a0)):
        return Verdict(False, ADMISSIBLE_EQUATIONS[12], (), apply(t.delta, t.a0))
    if any(apply(t.D, t.a0)):
        return Verdict(False, ADMISSIBLE_EQUATIONS[13], (), apply(t.D, t.a0))
    return Verdict.passed()


def _semidirect(a: SuperAlgebra, t: AdmissibleTriple, label: str | None = None) -> SuperAlgebra:
    n = a.dim
    label = label or fresh_label(a.labels, "d")
    table = {key: dict(out) for key, out in a.table.items()}
    for j in range(n):
        for k in range(n):
            if t.delta[k][j]:
                table.setdefault((n, j), {})[k] = t.delta[k][j]
            if t.D[k][j]:
                table.setdefault((j, n), {})[k] = t.D[k][j]
    for k, x in enumerate(t.a0):
        if x:
            table.setdefault((n, n), {})[k] = x
    alg, _ = assemble(list(a.labels) + [label], list(a.parities) + [t.d_parity], table)
    return alg


def semidirect_product(a: SuperAlgebra, t: AdmissibleTriple, label: str | None = None) -> SuperAlgebra:
    """``A + K d`` with d*d = a0, d*x = delta(x), x*d = D(x)."""
    verdict = admissible_check(a, t)
    if not verdict:
        raise PreconditionError("admissible triple", f"{verdict.what} fails at {verdict.witness}")
    return _semidirect(a, t, label)


def semidirect_is_symmetric(a: SuperAlgebra, t: AdmissibleTriple) -> bool:
    """Direct identity check of the semi-direct product, without the admissibility test."""
    return bool(in_variety(_semidirect(a, t), VarietyName.SymmetricZinbiel))


# -- double extensions ------------------------------------------------------------------------


@dataclass(frozen=True)
class DoubleExtension:
    algebra: SuperAlgebra
    form: el.Matrix
    kind: str

    def __iter__(self):
        return iter((self.algebra, self.form))


def _require(cond: bool, name: str, detail: str = "") -> None:
    if not cond:
        raise PreconditionError(name, detail)


def _common_preconditions(a: SuperAlgebra, G, delta, a0, s: int) -> None:
    report = form_checks(a, G)
    _require(report.ok, "invariant scalar product", "failed: " + ", ".join(report.failures()))
    _require(is_homogeneous_map(a, delta, s), f"delta homogeneous of degree {s}")
    ann = annihilator(a).space
    n = a.dim
    for j in range(n):
        _require(apply(delta, _unit(n, j)) in ann, "delta(A) in Ann(A)", f"fails for {a.labels[j]}")
    for v in square(a).basis:
        _require(not any(apply(delta, v)), "delta(A^2) = 0")
    _require(len(a0) == n, "a0 has the algebra's dimension")
    _require(tuple(a0) in ann and not any(x for k, x in enumerate(a0) if a.parity(k)), "a0 in Ann(A) even part")
    _require(bform(G, a0, a0) == 0, "B(a0, a0) = 0")


def even_double_extension(a: SuperAlgebra, G, delta, a0, alpha=0, verify: bool = True) -> DoubleExtension:
    """Even double extension by ``K d* + K d``; basis order: d*, A_even, d, A_odd."""
    G = _check_gram(a, G)
    n = a.dim
    delta = el.matrix(delta) if n else ()
    a0 = el.vector(a0)
    alpha = el.scalar(alpha)
    _common_preconditions(a, G, delta, a0, 0)
    dstar_ = adjoint_endo(G, delta) if n else ()
    zero = el.zeros(n, n)
    _require(el.matmul(delta, delta) == zero, "delta^2 = 0")
    _require(el.matmul(delta, dstar_) == zero, "delta delta* = 0")
    _require(el.matmul(dstar_, delta) == zero, "delta* delta = 0")
    verdict = admissible_check(a, AdmissibleTriple(delta, dstar_, a0, 0))
    _require(bool(verdict), "(delta, delta*, a0) admissible", f"{verdict.what} fails at {verdict.witness}")

    ds_label = fresh_label(a.labels, "ds")
    d_label = fresh_label(set(a.labels) | {ds_label}, "d")
    # working indices: 0..n-1 = A, n = d*, n+1 = d
    S, D_ = n, n + 1
    table: dict = {}

    def add(i, j, k, c):
        if c:
            row = table.setdefault((i, j), {})
            row[k] = row.get(k, ZERO) + c

    units = [_unit(n, i) for i in range(n)]
    for i in range(n):
        for j in range(n):
            for k, c in a.table.get((i, j), ()):
                add(i, j, k, c)
            add(i, j, S, bform(G, apply(delta, units[i]), units[j]))
        for k in range(n):
            add(D_, i, k, delta[k][i])
            add(i, D_, k, dstar_[k][i])
        b = bform(G, units[i], a0)
        add(D_, i, S, b)
        add(i, D_, S, b)
    for k, x in enumerate(a0):
        add(D_, D_, k, x)
    add(D_, D_, S, alpha)
    labels = list(a.labels) + [ds_label, d_label]
    parities = list(a.parities) + [0, 0]
    order = [S] + list(a.block(0)) + [D_] + list(a.block(1))
    alg, Gbar = _reorder(labels, parities, table, order, _extend_form(G, n, ((S, D_, ONE), (D_, S, ONE))))
    out = DoubleExtension(alg, Gbar, "even")
    if verify:
        _verify_output(out)
    return out


def odd_double_extension(a: SuperAlgebra, G, delta, D, a0, verify: bool = True) -> DoubleExtension:
    """Odd double extension by odd ``d*, d``; basis order: A_even, d*, A_odd, d."""
    G = _check_gram(a, G)
    n = a.dim
    delta = el.matrix(delta) if n else ()
    D = el.matrix(D) if n else ()
    a0 = el.vector(a0)
    _common_preconditions(a, G, delta, a0, 1)
    _require(is_homogeneous_map(a, D, 1), "D odd")
    zero = el.zeros(n, n)
    _require(el.matmul(delta, D) == zero, "delta D = 0")
    _require(el.matmul(D, delta) == zero, "D delta = 0")
    units = [_unit(n, i) for i in range(n)]
    for i in range(n):
        for j in range(n):
            lhs = bform(G, apply(delta, units[i]), units[j])
            rhs = _sign(a.parity(i) + a.parity(j)) * bform(G, units[i], apply(D, units[j]))
            _require(lhs == rhs, "B(delta(x), y) = (-1)^{|x|+|y|} B(x, D(y))",
                     f"fails at ({a.labels[i]}, {a.labels[j]})")
    verdict = admissible_check(a, AdmissibleTriple(delta, D, a0, 1))
    _require(bool(verdict), "(delta, D, a0) admissible", f"{verdict.what} fails at {verdict.witness}")

    ds_label = fresh_label(a.labels, "ds")
    d_label = fresh_label(set(a.labels) | {ds_label}, "d")
    S, D_ = n, n + 1
    table: dict = {}

    def add(i, j, k, c):
        if c:
            row = table.setdefault((i, j), {})
            row[k] = row.get(k, ZERO) + c

    for i in range(n):
        for j in range(n):
            for k, c in a.table.get((i, j), ()):
                add(i, j, k, c)
            add(i, j, S, -bform(G, apply(delta, units[i]), units[j]))
        for k in range(n):
            add(D_, i, k, delta[k][i])
            add(i, D_, k, D[k][i])
        b = bform(G, units[i], a0)
        add(D_, i, S, -b)
        add(i, D_, S, b)
    for k, x in enumerate(a0):
        add(D_, D_, k, x)
    labels = list(a.labels) + [ds_label, d_label]
    parities = list(a.parities) + [1, 1]
    order = list(a.block(0)) + [S] + list(a.block(1)) + [D_]
    alg, Gbar = _reorder(labels, parities, table, order, _extend_form(G, n, ((S, D_, ONE), (D_, S, -ONE))))
    out = DoubleExtension(alg, Gbar, "odd")
    if verify:
        _verify_output(out)
    return out


def _extend_form(G, n: int, extra) -> list:
    Gbar = [[ZERO] * (n + 2) for _ in range(n + 2)]
    for i in range(n):
        for j in range(n):
            Gbar[i][j] = G[i][j]
    for i, j, v in extra:
        Gbar[i][j] = v
    return Gbar


def _reorder(labels, parities, table, order, gram) -> tuple[SuperAlgebra, el.Matrix]:
    position = {old: new for new, old in enumerate(order)}
    new_table = {(position[i], position[j]): {position[k]: c for k, c in out.items()} for (i, j), out in table.items()}
    new_par = [parities[o] for o in order]
    n_even = sum(1 for p in new_par if p == 0)
    if new_par != [0] * n_even + [1] * (len(new_par) - n_even):
        raise AssertionError("basis order must list even vectors first")  # pragma: no cover
    alg = SuperAlgebra(n_even, len(order) - n_even, new_table, [labels[o] for o in order])
    G = tuple(tuple(gram[order[i]][order[j]] for j in range(len(order))) for i in range(len(order)))
    return alg, G


def _verify_output(ext: DoubleExtension) -> None:
    report = form_checks(ext.algebra, ext.form)
    if not report:
        raise TheoremContradiction(f"{ext.kind} double extension form fails: {', '.join(report.failures())}")
    verdict = in_variety(ext.algebra, VarietyName.SymmetricZinbiel)
    if not verdict:
        raise TheoremContradiction(f"{ext.kind} double extension is not symmetric Zinbiel: "
                                   f"{verdict.what} at {verdict.witness}")
    quadratic_consequences(ext.algebra, ext.form)


# -- converse decompositions -------------------------------------------------------------------


@dataclass(frozen=True)
class Decomposition:
    kind: str
    H: SuperAlgebra
    form: el.Matrix
    delta: el.Matrix
    D: el.Matrix
    a0: tuple
    alpha: Fraction
    witness: el.Matrix  # columns: the basis of A matching the rebuilt extension's layout
    e: tuple
    d: tuple

    def rebuild(self) -> DoubleExtension:
        if self.kind == "even":
            return even_double_extension(self.H, self.form, self.delta, self.a0, self.alpha)
        return odd_double_extension(self.H, self.form, self.delta, self.D, self.a0)


def _decompose(a: SuperAlgebra, G, parity: int) -> Decomposition:
    G = _check_gram(a, G)
    report = form_checks(a, G)
    _require(report.ok, "invariant scalar product", "failed: " + ", ".join(report.failures()))
    n = a.dim
    _require(len(a.block(parity)) >= 2, f"dim A_{parity} >= 2")
    ann = annihilator(a)
    candidates = ann.even if parity == 0 else ann.odd
    _require(bool(candidates), f"Ann(A) meets A_{parity}", "not decomposable by this theorem")
    e = next((v for v in candidates if bform(G, v, v) == 0), None)
    _require(e is not None, "isotropic annihilator vector", "every annihilator basis vector is anisotropic")
    row = tuple(sum((e[i] * G[i][j] for i in range(n)), ZERO) for j in range(n))
    d = el.solve((row,), (ONE,), n)
    _require(d is not None, "B(e, d) = 1 solvable")
    d = tuple(x if a.parity(k) == parity else ZERO for k, x in enumerate(d))
    if parity == 0:
        lam = bform(G, d, d)
        if lam:
            d = tuple(x - lam / 2 * y for x, y in zip(d, e))
    rows = [{j: x for j, x in enumerate(row) if x},
            {j: x for j, x in enumerate(tuple(sum((d[i] * G[i][k] for i in range(n)), ZERO) for k in range(n))) if x}]
    space = Subspace(el.kernel_sparse(rows, n), n)
    h_even, h_odd = graded_basis(a, space)
    H_basis = h_even + h_odd
    H, _ = restrict_orthogonal(a, H_basis, e, d, G)
    m = len(H_basis)
    Hmat = el.transpose(tuple(H_basis)) if m else ()

    def coords(v) -> tuple:
        if not m:
            return ()
        # the H component of v: remove the e and d parts, then solve
        lam_e = bform(G, v, d)
        mu_d = bform(G, v, e) if parity == 0 else -bform(G, v, e)
        rest = tuple(x - lam_e * y - mu_d * z for x, y, z in zip(v, e, d))
        sol = el.solve(Hmat, rest, m)
        if sol is None:
            raise AssertionError("projection onto H failed")  # pragma: no cover
        return sol

    G_H = tuple(tuple(bform(G, u, v) for v in H_basis) for u in H_basis)
    delta = el.transpose(tuple(coords(a.mul_vectors(d, h)) for h in H_basis)) if m else ()
    D = el.transpose(tuple(coords(a.mul_vectors(h, d)) for h in H_basis)) if m else ()
    dd = a.mul_vectors(d, d)
    a0 = coords(dd)
    alpha = bform(G, dd, d) if parity == 0 else ZERO
    if parity == 0:
        cols = [e] + h_even + [d] + h_odd
    else:
        cols = h_even + [e] + h_odd + [d]
    witness = el.transpose(tuple(cols))
    return Decomposition("even" if parity == 0 else "odd", H, G_H, delta, D, a0, alpha, witness, e, d)


def restrict_orthogonal(a: SuperAlgebra, basis, e, d, G) -> tuple[SuperAlgebra, list]:
    """Product on H = (K e + K d)^perp: the H-component of products of H vectors."""
    m = len(basis)
    n_even = sum(1 for v in basis if all(not x for k, x in enumerate(v) if a.parity(k)))
    if not m:
        return SuperAlgebra(0, 0, {}), []
    Hmat = el.transpose(tuple(basis))
    table = {}
    for i in range(m):
        for j in range(m):
            p = a.mul_vectors(basis[i], basis[j])
            lam_e = bform(G, p, d)
            rest = tuple(x - lam_e * y for x, y in zip(p, e))
            sol = el.solve(Hmat, rest, m)
            if sol is None:
                raise PreconditionError("H closed under the product", "a product of H has a d-component")
            if any(sol):
                table[(i, j)] = dict(enumerate(sol))
    return SuperAlgebra(n_even, m - n_even, table), list(basis)


def decompose_even(a: SuperAlgebra, G) -> Decomposition:
    return _decompose(a, G, 0)


def decompose_odd(a: SuperAlgebra, G) -> Decomposition:
    return _decompose(a, G, 1)


def round_trip(a: SuperAlgebra, G, parity: int) -> tuple[Decomposition, DoubleExtension, bool]:
    """Decompose, rebuild, and compare the rebuilt table with ``a`` in the witness basis."""
    dec = _decompose(a, G, parity)
    ext = dec.rebuild()
    moved = change_basis(a, dec.witness)
    same = moved.same_table(ext.algebra) and transform_form(G, dec.witness) == ext.form
    return dec, ext, same


# -- deterministic generator of quadratic algebras ------------------------------------------------


@dataclass
class GeneratedQuadratic:
    kind: str
    base: SuperAlgebra
    base_form: el.Matrix
    delta: el.Matrix
    D: el.Matrix
    a0: tuple
    alpha: Fraction
    extension: DoubleExtension
    history: list = field(default_factory=list)


def _small_combo(rng: random.Random, vectors, n: int) -> tuple:
    if not vectors:
        return (ZERO,) * n
    coeffs = [rng.choice((-2, -1, 0, 0, 1, 1, 2)) for _ in vectors]
    return tuple(sum((Fraction(c) * v[k] for c, v in zip(coeffs, vectors)), ZERO) for k in range(n))


def _rank_one(n: int, u, w_row) -> el.Matrix:
    """The map x -> (w_row . x) u."""
    return tuple(tuple(u[k] * w_row[j] for j in range(n)) for k in range(n))


def _random_even_data(rng: random.Random, a: SuperAlgebra, G, attempts: int = 12):
    n = a.dim
    ann = annihilator(a)
    for _ in range(attempts):
        u = _small_combo(rng, ann.even, n)
        w = _small_combo(rng, ann.even, n)
        a0 = _small_combo(rng, ann.even, n) if rng.random() < 0.6 else (ZERO,) * n
        w_row = tuple(sum((w[i] * G[i][j] for i in range(n)), ZERO) for j in range(n))
        delta = _rank_one(n, u, w_row)
        alpha = Fraction(rng.choice((0, 1, -1, 2)))
        try:
            return even_double_extension(a, G, delta, a0, alpha), delta, adjoint_endo(G, delta), a0, alpha
        except PreconditionError:
            continue
    z = el.zeros(n, n)
    alpha = Fraction(rng.choice((0, 1)))
    return even_double_extension(a, G, z, (ZERO,) * n, alpha), z, z, (ZERO,) * n, alpha


def _solve_partner(a: SuperAlgebra, G, delta) -> el.Matrix | None:
    """D with B(delta(x), y) = (-1)^{|x|+|y|} B(x, D(y)), i.e. D = G^-1 S delta^T G with signs."""
    n = a.dim
    Ginv = el.inverse(G)
    cols = []
    for j in range(n):
        v = tuple(_sign(a.parity(i) + a.parity(j)) * bform(G, apply(delta, _unit(n, i)), _unit(n, j))
                  for i in range(n))
        cols.append(el.matvec(Ginv, v))
    return el.transpose(tuple(cols))


def _random_odd_data(rng: random.Random, a: SuperAlgebra, G, attempts: int = 12):
    n = a.dim
    ann = annihilator(a)
    for _ in range(attempts):
        if rng.random() < 0.5:
            u, w = _small_combo(rng, ann.even, n), _small_combo(rng, ann.odd, n)
        else:
            u, w = _small_combo(rng, ann.odd, n), _small_combo(rng, ann.even, n)
        a0 = _small_combo(rng, ann.even, n) if rng.random() < 0.6 else (ZERO,) * n
        w_row = tuple(sum((w[i] * G[i][j] for i in range(n)), ZERO) for j in range(n))
        delta = _rank_one(n, u, w_row)
        D = _solve_partner(a, G, delta)
        try:
            return odd_double_extension(a, G, delta, D, a0), delta, D, a0
        except PreconditionError:
            continue
    z = el.zeros(n, n)
    return odd_double_extension(a, G, z, z, (ZERO,) * n), z, z, (ZERO,) * n


def _seed_bases() -> list[tuple[SuperAlgebra, el.Matrix]]:
    hyper = ((ZERO, ONE), (ONE, ZERO))
    odd_hyper = ((ZERO, ONE), (-ONE, ZERO))
    return [
        (SuperAlgebra.zero(0, 0), ()),
        (SuperAlgebra.zero(2, 0), hyper),
        (SuperAlgebra.zero(2, 0), el.identity(2)),
        (SuperAlgebra.zero(0, 2), odd_hyper),
        (SuperAlgebra.zero(1, 2), ((ONE, ZERO, ZERO), (ZERO, ZERO, ONE), (ZERO, -ONE, ZERO))),
    ]


def generate_quadratic(count: int = 60, seed: int = 2024, max_steps: int = 3) -> list[GeneratedQuadratic]:
    """Seeded random iterated double extensions; the last step of each sample is recorded."""
    rng = random.Random(seed)
    bases = _seed_bases()
    out = []
    while len(out) < count:
        a, G = bases[rng.randrange(len(bases))]
        history = []
        steps = rng.randint(1, max_steps)
        for step in range(steps):
            kind = "even" if rng.random() < 0.5 else "odd"
            if kind == "even":
                ext, delta, D, a0, alpha = _random_even_data(rng, a, G)
            else:
                ext, delta, D, a0 = _random_odd_data(rng, a, G)
                alpha = ZERO
            sample = GeneratedQuadratic(kind, a, G, delta, D, a0, alpha, ext, list(history))
            history.append(kind)
            a, G = ext.algebra, ext.form
            if a.dim > 9:
                break
        out.append(sample)
    return out
