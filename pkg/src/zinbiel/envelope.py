"""Truncated Grassmann envelopes.

For a superalgebra ``A`` and the exterior algebra on ``k`` generators,
``Gamma(A) = A_0 (x) Lambda_even + A_1 (x) Lambda_odd`` with the plain product
``(x (x) g)(y (x) h) = xy (x) gh``.  A signed identity holds on ``A`` exactly
when its unsigned form holds on a large enough envelope; with ``k = 3`` that
covers every identity in three variables.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations

from .identities import VarietyName, in_variety
from .structure import cube_zero
from .superalgebra import SuperAlgebra

MAX_RANK = 4

# multilinear varieties whose signed and envelope verdicts are compared
ENVELOPE_VARIETIES = (
    VarietyName.LeftZinbiel, VarietyName.RightZinbiel, VarietyName.SymmetricZinbiel,
    VarietyName.LeftLeibniz, VarietyName.RightLeibniz, VarietyName.SymmetricLeibniz,
    VarietyName.LR, VarietyName.AntiFlexible, VarietyName.Associative, VarietyName.Lie1,
    VarietyName.TriplesZero,
)


def wedge(s: tuple, t: tuple) -> tuple[int, tuple] | None:
    """``xi_S xi_T = sign * xi_{S+T}``, or None when S and T overlap."""
    if set(s) & set(t):
        return None
    inversions = sum(1 for x in s for y in t if x > y)
    return (-1 if inversions % 2 else 1), tuple(sorted(s + t))


def grassmann_basis(k: int) -> list[tuple]:
    return [c for r in range(k + 1) for c in combinations(range(k), r)]


def grassmann_envelope(a: SuperAlgebra, k: int = 3) -> SuperAlgebra:
    if not 0 <= k <= MAX_RANK:
        raise ValueError(f"rank must be between 0 and {MAX_RANK}")
    subsets = grassmann_basis(k)
    basis = [(i, s) for i in range(a.dim) for s in subsets if len(s) % 2 == a.parity(i)]
    index = {b: n for n, b in enumerate(basis)}
    labels = [f"{a.labels[i]}_g{''.join(str(x + 1) for x in s)}" for i, s in basis]
    table: dict = {}
    for p, (i, s) in enumerate(basis):
        for q, (j, t) in enumerate(basis):
            out = a.table.get((i, j))
            if not out:
                continue
            w = wedge(s, t)
            if w is None:
                continue
            sign, u = w
            table[(p, q)] = {index[(k_, u)]: Fraction(sign) * c for k_, c in out}
    return SuperAlgebra(len(basis), 0, table, labels)


def grassmann_check(a: SuperAlgebra, k: int = 3, varieties=ENVELOPE_VARIETIES) -> dict[str, dict]:
    """Signed verdict on ``a`` next to the unsigned verdict on its envelope, per variety."""
    env = grassmann_envelope(a, k)
    out = {}
    for v in varieties:
        signed = bool(in_variety(a, v))
        plain = bool(in_variety(env, v))
        out[VarietyName(v).value] = {"super": signed, "envelope": plain, "agree": signed == plain}
    signed, plain = cube_zero(a), cube_zero(env)
    out["cube-zero"] = {"super": signed, "envelope": plain, "agree": signed == plain}
    return out
