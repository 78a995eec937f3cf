"""Independent reference computations used to cross-check the primary solvers."""

from __future__ import annotations

import itertools

from zinbiel import exactlin as el


def brute_cocycle_dims(a, parity: int = 0) -> tuple[int, int]:
    """(dim Z^2, dim B^2) for the symmetric Zinbiel variety from the dense structure tensor.

    A + K z with x*y = xy + omega(x, y) z satisfies both signed Zinbiel identities iff, for all
    basis x, y, w,
        omega(xy, w) - omega(x, yw) - (-1)^{|y||w|} omega(x, wy) = 0
        omega(x, yw) - omega(xy, w) - (-1)^{|x||y|} omega(yx, w) = 0
    (the A-component vanishes because A itself is symmetric Zinbiel).
    """
    n, par = a.dim, a.parities
    c = a.structure_tensor()
    unknowns = [(i, j) for i in range(n) for j in range(n) if (par[i] + par[j]) % 2 == parity]
    col = {u: k for k, u in enumerate(unknowns)}
    rows = []
    for x, y, w in itertools.product(range(n), repeat=3):
        s_yw = -1 if par[y] * par[w] else 1
        s_xy = -1 if par[x] * par[y] else 1
        left = [0] * len(unknowns)
        right = [0] * len(unknowns)
        for k in range(n):
            for (p, q), coef in (((k, w), c[x][y][k]), ((x, k), -c[y][w][k]), ((x, k), -s_yw * c[w][y][k])):
                if coef and (p, q) in col:
                    left[col[(p, q)]] += coef
            for (p, q), coef in (((x, k), c[y][w][k]), ((k, w), -c[x][y][k]), ((k, w), -s_xy * c[y][x][k])):
                if coef and (p, q) in col:
                    right[col[(p, q)]] += coef
        rows += [left, right]
    z2 = len(unknowns) - (el.rank(el.matrix(rows)) if rows and unknowns else 0)
    cob = [[c[i][j][m] for (i, j) in unknowns] for m in range(n) if par[m] == parity]
    b2 = el.rank(el.matrix(cob)) if cob and unknowns else 0
    return z2, b2
