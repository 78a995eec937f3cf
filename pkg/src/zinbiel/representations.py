"""Representations (r, l) of Zinbiel superalgebras and split extensions.

A pair acts on a graded module ``V`` (first ``m_even`` coordinates even).  The
split extension ``A + V`` has product

    (x + u)(y + v) = xy + l(x) v + (-1)^{|u||y|} r(y) u

and ``V`` squares to zero.  The module axioms below are exactly the left and
right Zinbiel identities of that product evaluated with one vector from ``V``.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import exactlin as el
from .errors import DimensionError, GradingError, PreconditionError, Verdict
from .exactlin import ZERO
from .identities import VarietyName, in_variety
from .superalgebra import SuperAlgebra, assemble, fresh_label


@dataclass(frozen=True)
class RepresentationPair:
    m_even: int
    m_odd: int
    r: tuple  # r[i] is the matrix of r(e_i)
    l: tuple

    @property
    def dim(self) -> int:
        return self.m_even + self.m_odd

    def parity(self, k: int) -> int:
        return 0 if k < self.m_even else 1

    @classmethod
    def zero(cls, a: SuperAlgebra, m_even: int, m_odd: int = 0) -> "RepresentationPair":
        z = el.zeros(m_even + m_odd, m_even + m_odd)
        return cls(m_even, m_odd, (z,) * a.dim, (z,) * a.dim)


def _check_shape(a: SuperAlgebra, rp: RepresentationPair) -> None:
    m = rp.dim
    if len(rp.r) != a.dim or len(rp.l) != a.dim:
        raise DimensionError(f"need one map per basis vector ({a.dim}), got {len(rp.r)} and {len(rp.l)}")
    for maps in (rp.r, rp.l):
        for i, M in enumerate(maps):
            if len(M) != m or any(len(row) != m for row in M):
                raise DimensionError(f"map for {a.labels[i]} is not {m}x{m}")
            p = a.parity(i)
            for row in range(m):
                for col in range(m):
                    if M[row][col] and (rp.parity(row) + rp.parity(col)) % 2 != p:
                        raise GradingError(f"map for {a.labels[i]} does not have parity {p}")


def _sparse(M) -> dict:
    """Matrix as ``{row: {col: value}}`` without zero entries."""
    out = {}
    for r, row in enumerate(M):
        d = {c: x for c, x in enumerate(row) if x}
        if d:
            out[r] = d
    return out


def _mm(A: dict, B: dict) -> dict:
    out = {}
    for r, row in A.items():
        acc: dict = {}
        for k, x in row.items():
            for c, y in B.get(k, {}).items():
                acc[c] = acc.get(c, ZERO) + x * y
        acc = {c: v for c, v in acc.items() if v}
        if acc:
            out[r] = acc
    return out


def _lin(*terms) -> dict:
    """Linear combination of sparse matrices, given as (coefficient, matrix) pairs."""
    out: dict = {}
    for coef, M in terms:
        for r, row in M.items():
            acc = out.setdefault(r, {})
            for c, x in row.items():
                acc[c] = acc.get(c, ZERO) + coef * x
    return {r: {c: v for c, v in row.items() if v} for r, row in out.items() if any(row.values())}


def _combo(a: SuperAlgebra, maps: list, i: int, j: int) -> dict:
    """Sparse matrix of ``f(e_i e_j)`` for a linear family ``f``."""
    return _lin(*((c, maps[k]) for k, c in a.table.get((i, j), ())))


def _dense(M: dict, m: int) -> tuple:
    return tuple(tuple(M.get(r, {}).get(c, ZERO) for c in range(m)) for r in range(m))


def _axiom_check(a: SuperAlgebra, rp: RepresentationPair, axioms) -> Verdict:
    _check_shape(a, rp)
    m = rp.dim
    L = [_sparse(M) for M in rp.l]
    R = [_sparse(M) for M in rp.r]
    for i in range(a.dim):
        for j in range(a.dim):
            s = -1 if a.parity(i) * a.parity(j) else 1
            data = {
                "l(xy)": _combo(a, L, i, j), "l(yx)": _combo(a, L, j, i),
                "r(xy)": _combo(a, R, i, j), "r(yx)": _combo(a, R, j, i),
                "lx": L[i], "ly": L[j], "rx": R[i], "ry": R[j], "s": s, "mm": _mm,
            }
            for name, fn in axioms:
                residual = fn(data)
                if residual:
                    return Verdict(False, name, (a.labels[i], a.labels[j]), _dense(residual, m))
    return Verdict.passed()


LEFT_AXIOMS = (
    ("l(xy) = l(x)l(y) + l(x)r(y)",
     lambda d: _lin((1, d["l(xy)"]), (-1, d["mm"](d["lx"], d["ly"])), (-1, d["mm"](d["lx"], d["ry"])))),
    ("r(x)r(y) = r(xy) + (-1)^{|x||y|} r(yx)",
     lambda d: _lin((1, d["mm"](d["rx"], d["ry"])), (-1, d["r(xy)"]), (-d["s"], d["r(yx)"]))),
    ("l(x)l(y) = (-1)^{|x||y|} r(y)l(x) - l(x)r(y)",
     lambda d: _lin((1, d["mm"](d["lx"], d["ly"])), (-d["s"], d["mm"](d["ry"], d["lx"])),
                    (1, d["mm"](d["lx"], d["ry"])))),
)

RIGHT_AXIOMS = (
    ("l(x)l(y) = l(xy) + (-1)^{|x||y|} l(yx)",
     lambda d: _lin((1, d["mm"](d["lx"], d["ly"])), (-1, d["l(xy)"]), (-d["s"], d["l(yx)"]))),
    ("l(x)r(y) = r(xy)",
     lambda d: _lin((1, d["mm"](d["lx"], d["ry"])), (-1, d["r(xy)"]))),
    ("r(xy) = (-1)^{|x||y|} (r(y)r(x) + r(y)l(x))",
     lambda d: _lin((1, d["r(xy)"]), (-d["s"], d["mm"](d["ry"], d["rx"])), (-d["s"], d["mm"](d["ry"], d["lx"])))),
)


def is_left_representation(a: SuperAlgebra, rp: RepresentationPair) -> Verdict:
    return _axiom_check(a, rp, LEFT_AXIOMS)


def is_right_representation(a: SuperAlgebra, rp: RepresentationPair) -> Verdict:
    return _axiom_check(a, rp, RIGHT_AXIOMS)


def is_representation(a: SuperAlgebra, rp: RepresentationPair) -> Verdict:
    v = is_left_representation(a, rp)
    return v if not v else is_right_representation(a, rp)


def adjoint_pair(a: SuperAlgebra) -> RepresentationPair:
    """l(x) = left multiplication; r(y) u = (-1)^{|u||y|} u y."""
    n = a.dim
    c = a.structure_tensor()
    par = a.parities
    r = tuple(tuple(tuple((-1) ** (par[i] * par[j]) * c[j][i][k] for j in range(n)) for k in range(n))
              for i in range(n))
    l = tuple(a.left_matrix(i) for i in range(n))
    return RepresentationPair(a.n_even, a.n_odd, r, l)


def coadjoint_pair(a: SuperAlgebra) -> RepresentationPair:
    """Pair on the dual space A* (dual basis f_k, |f_k| = |e_k|).

    l(x) f = (-1)^{|f||x|} f o R(x) and r(x) f = (-1)^{|f||x|} f o L(x),
    where R(x) y = (-1)^{|x||y|} y x is the signed right multiplication.
    """
    n = a.dim
    c = a.structure_tensor()
    par = a.parities
    l = tuple(tuple(tuple((-1) ** (par[i] * par[j] + par[i] * par[k]) * c[k][i][j] for j in range(n))
                    for k in range(n)) for i in range(n))
    r = tuple(tuple(tuple((-1) ** (par[i] * par[j]) * c[i][k][j] for j in range(n)) for k in range(n))
              for i in range(n))
    return RepresentationPair(a.n_even, a.n_odd, r, l)


def coadjoint_is_representation(a: SuperAlgebra) -> bool:
    return bool(is_representation(a, coadjoint_pair(a)))


_CHECKS = {"symmetric": is_representation, "left": is_left_representation, "right": is_right_representation}


def _split(a: SuperAlgebra, rp: RepresentationPair, module_labels=None) -> SuperAlgebra:
    n, m = a.dim, rp.dim
    if module_labels is None:
        module_labels, taken = [], set(a.labels)
        for k in range(m):
            name = fresh_label(taken, f"v{k + 1}")
            taken.add(name)
            module_labels.append(name)
    table: dict = {key: dict(out) for key, out in a.table.items()}
    for i in range(n):
        for v in range(m):
            sign = -1 if rp.parity(v) * a.parity(i) else 1
            for k in range(m):
                if rp.l[i][k][v]:
                    table.setdefault((i, n + v), {})[n + k] = rp.l[i][k][v]
                if rp.r[i][k][v]:
                    table.setdefault((n + v, i), {})[n + k] = sign * rp.r[i][k][v]
    labels = list(a.labels) + list(module_labels)
    alg, _ = assemble(labels, list(a.parities) + [rp.parity(k) for k in range(m)], table)
    return alg


def split_extension(a: SuperAlgebra, rp: RepresentationPair, kind: str = "symmetric",
                    module_labels=None) -> SuperAlgebra:
    """The algebra ``A + V``; refuses if ``rp`` violates the axioms for ``kind``."""
    verdict = _CHECKS[kind](a, rp)
    if not verdict:
        raise PreconditionError(verdict.what, f"fails at {verdict.witness}")
    return _split(a, rp, module_labels)


def split_variety(kind: str) -> VarietyName:
    return {"symmetric": VarietyName.SymmetricZinbiel, "left": VarietyName.LeftZinbiel,
            "right": VarietyName.RightZinbiel}[kind]


def split_is_in_variety(a: SuperAlgebra, rp: RepresentationPair, kind: str = "symmetric") -> bool:
    """Build the split product without checking the axioms and test the identities directly."""
    _check_shape(a, rp)
    return bool(in_variety(_split(a, rp), split_variety(kind)))
