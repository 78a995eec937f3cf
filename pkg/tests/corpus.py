"""Algebras shared by several test modules."""

from __future__ import annotations

import random
from fractions import Fraction
from functools import lru_cache

from zinbiel import catalog
from zinbiel.extensions import even_double_extension, generate_quadratic, odd_double_extension
from zinbiel.structure import odd_generator_grading_check
from zinbiel.superalgebra import SuperAlgebra


@lru_cache(maxsize=None)
def generated():
    return tuple(generate_quadratic(60, seed=2024))


@lru_cache(maxsize=None)
def regraded():
    """Ungraded catalog algebras regraded with e1, e2 odd (violating ones included when they form an algebra)."""
    out = []
    for name, a in catalog.instances(role="classification", ungraded_only=True):
        r = odd_generator_grading_check(a)
        if r.algebra is not None:
            out.append((f"{name}/regraded", r.algebra))
    return tuple(out)


def small_quadratic():
    out = [("even-dext-0", even_double_extension(SuperAlgebra.zero(0), (), (), (), 1)),
           ("odd-dext-0", odd_double_extension(SuperAlgebra.zero(0), (), (), (), ())),
           ("even-dext-zero2", even_double_extension(SuperAlgebra.zero(2), ((1, 0), (0, 1)),
                                                     ((0, 0), (0, 0)), (0, 0), 1))]
    return out


@lru_cache(maxsize=None)
def graded_corpus():
    """Every graded algebra the suite builds: the odd one-generated entry,
    regradings of the catalog and the graded outputs of the generator."""
    out = [("OneGen_1_1", catalog.get("OneGen_1_1"))]
    out += list(regraded())
    out += [(name, ext.algebra) for name, ext in small_quadratic() if ext.algebra.is_graded]
    out += [(f"generated-{k}-{g.kind}", g.extension.algebra) for k, g in enumerate(generated())
            if g.extension.algebra.is_graded]
    return tuple(out)


@lru_cache(maxsize=None)
def small_corpus(max_dim: int = 6):
    """Algebras of dimension at most ``max_dim`` for the cocycle cross-checks."""
    out = [(f"zero-{n}", SuperAlgebra.zero(n)) for n in (1, 2, 3)]
    out.append(("zero-1-1", SuperAlgebra.zero(1, 1)))
    out += [(n, a) for n, a in catalog.instances() if a.dim <= max_dim]
    out += [(n, a) for n, a in regraded() if a.dim <= max_dim]
    seen = set()
    for k, g in enumerate(generated()):
        a = g.extension.algebra
        key = (a.n_even, a.n_odd, tuple(sorted(a.table.items())))
        if a.dim <= max_dim and key not in seen:
            seen.add(key)
            out.append((f"generated-{k}", a))
    return tuple(out)


def random_block_basis(a: SuperAlgebra, rng: random.Random):
    """A random invertible matrix preserving the grading (block diagonal in the even/odd split)."""
    from zinbiel import exactlin as el

    n = a.dim
    while True:
        P = [[Fraction(0)] * n for _ in range(n)]
        for lo, hi in ((0, a.n_even), (a.n_even, n)):
            for i in range(lo, hi):
                for j in range(lo, hi):
                    P[i][j] = Fraction(rng.randint(-3, 3), rng.choice((1, 1, 2, 3)))
        P = el.matrix(P)
        if el.rank(P) == n:
            return P


def algebras(max_even: int = 2, max_odd: int = 2, density: float = 0.35):
    """Hypothesis strategy: random graded algebras with small integer structure constants."""
    from hypothesis import strategies as st

    @st.composite
    def build(draw):
        ne = draw(st.integers(0 if max_odd else 1, max_even))
        no = draw(st.integers(0 if ne else 1, max_odd))
        n = ne + no
        par = [0] * ne + [1] * no
        table = {}
        for i in range(n):
            for j in range(n):
                if not draw(st.booleans()) or draw(st.floats(0, 1)) > density * 2:
                    continue
                out = {k: draw(st.integers(-2, 2)) for k in range(n) if par[k] == (par[i] + par[j]) % 2}
                out = {k: c for k, c in out.items() if c}
                if out:
                    table[(i, j)] = out
        return SuperAlgebra(ne, no, table)

    return build()
