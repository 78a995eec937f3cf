"""Graded structure-constant algebras, elements, and the ``.alg`` text format.

A :class:`SuperAlgebra` has basis ``e_0 .. e_{n-1}``; the first ``n_even``
vectors are even and the remaining ``n_odd`` are odd.  Products are kept
sparse: ``table[(i, j)]`` is a tuple of ``(k, coefficient)`` pairs meaning
``e_i e_j = sum coefficient * e_k``.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from . import exactlin as el
from .errors import DimensionError, GradingError, ParseError
from .exactlin import ZERO, Subspace

_LABEL = re.compile(r"^[A-Za-z_][A-Za-z0-9_']*$")


def default_labels(n: int) -> tuple[str, ...]:
    return tuple(f"e{i + 1}" for i in range(n))


class SuperAlgebra:
    """Finite-dimensional Z2-graded algebra over Q given by structure constants."""

    __slots__ = ("n_even", "n_odd", "labels", "table", "_index")

    def __init__(self, n_even: int, n_odd: int, table: Mapping, labels: Sequence[str] | None = None):
        n = n_even + n_odd
        if n_even < 0 or n_odd < 0:
            raise DimensionError("negative block size")
        labels = tuple(labels) if labels is not None else default_labels(n)
        if len(labels) != n:
            raise DimensionError(f"{len(labels)} labels for dimension {n}")
        if len(set(labels)) != n:
            raise ValueError("duplicate basis labels")
        clean: dict[tuple[int, int], tuple[tuple[int, Fraction], ...]] = {}
        for (i, j), out in table.items():
            if not (0 <= i < n and 0 <= j < n):
                raise DimensionError(f"product index ({i}, {j}) out of range")
            items = out.items() if isinstance(out, Mapping) else out
            terms = {}
            for k, c in items:
                if not 0 <= k < n:
                    raise DimensionError(f"result index {k} out of range")
                c = el.scalar(c)
                if c:
                    terms[k] = terms.get(k, ZERO) + c
            terms = {k: c for k, c in terms.items() if c}
            for k in terms:
                if (k >= n_even) != ((i >= n_even) != (j >= n_even)):
                    raise GradingError(
                        f"{labels[i]}*{labels[j]} has a component on {labels[k]} of the wrong parity")
            if terms:
                clean[(i, j)] = tuple(sorted(terms.items()))
        self.n_even = n_even
        self.n_odd = n_odd
        self.labels = labels
        self.table = clean
        self._index = {name: i for i, name in enumerate(labels)}

    def __setattr__(self, name, value):
        if hasattr(self, "_index"):
            raise AttributeError("SuperAlgebra is immutable")
        object.__setattr__(self, name, value)

    # -- construction helpers -------------------------------------------------

    @classmethod
    def from_products(cls, n_even: int, n_odd: int, products: Mapping[str, Mapping[str, object]] | str,
                      labels: Sequence[str] | None = None) -> "SuperAlgebra":
        """Build from label-keyed products, e.g. ``{"e1*e1": {"e2": 1}}``.

        A string argument is read as a list of ``a*b = ...`` product lines.
        """
        labels = tuple(labels) if labels is not None else default_labels(n_even + n_odd)
        if isinstance(products, str):
            text = f"dim {n_even} {n_odd}\nbasis {' '.join(labels)}\n" + products.replace(";", "\n")
            return parse(text)
        idx = {name: i for i, name in enumerate(labels)}
        table = {}
        for key, out in products.items():
            a, b = (s.strip() for s in key.split("*"))
            table[(idx[a], idx[b])] = {idx[k]: c for k, c in out.items()}
        return cls(n_even, n_odd, table, labels)

    @classmethod
    def from_dense(cls, n_even: int, n_odd: int, c, labels: Sequence[str] | None = None) -> "SuperAlgebra":
        n = n_even + n_odd
        table = {}
        for i in range(n):
            for j in range(n):
                out = {k: c[i][j][k] for k in range(n) if c[i][j][k]}
                if out:
                    table[(i, j)] = out
        return cls(n_even, n_odd, table, labels)

    @classmethod
    def zero(cls, n_even: int, n_odd: int = 0, labels: Sequence[str] | None = None) -> "SuperAlgebra":
        return cls(n_even, n_odd, {}, labels)

    # -- basic data -----------------------------------------------------------

    @property
    def dim(self) -> int:
        return self.n_even + self.n_odd

    @property
    def is_graded(self) -> bool:
        return self.n_odd > 0

    def parity(self, i: int) -> int:
        return 1 if i >= self.n_even else 0

    @property
    def parities(self) -> tuple[int, ...]:
        return tuple(self.parity(i) for i in range(self.dim))

    def index(self, label: str) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise KeyError(f"unknown basis label {label!r}") from None

    def coef(self, i: int, j: int, k: int) -> Fraction:
        for kk, c in self.table.get((i, j), ()):
            if kk == k:
                return c
        return ZERO

    def structure_tensor(self) -> tuple:
        n = self.dim
        return tuple(tuple(tuple(self.coef(i, j, k) for k in range(n)) for j in range(n)) for i in range(n))

    def basis_product(self, i: int, j: int) -> tuple[tuple[int, Fraction], ...]:
        return self.table.get((i, j), ())

    def is_zero_product(self) -> bool:
        return not self.table

    def __eq__(self, other) -> bool:
        return (isinstance(other, SuperAlgebra) and self.n_even == other.n_even
                and self.n_odd == other.n_odd and self.labels == other.labels and self.table == other.table)

    def same_table(self, other: "SuperAlgebra") -> bool:
        """Equality of grading and structure constants, ignoring labels."""
        return self.n_even == other.n_even and self.n_odd == other.n_odd and self.table == other.table

    def __hash__(self) -> int:
        return hash((self.n_even, self.n_odd, self.labels, tuple(sorted(self.table.items()))))

    def __repr__(self) -> str:
        return f"SuperAlgebra(dim=({self.n_even},{self.n_odd}), products={len(self.table)})"

    # -- arithmetic -----------------------------------------------------------

    def mul_vectors(self, u: Sequence, v: Sequence) -> tuple:
        n = self.dim
        out = [ZERO] * n
        su = [(i, x) for i, x in enumerate(u) if x]
        sv = [(j, y) for j, y in enumerate(v) if y]
        for i, x in su:
            for j, y in sv:
                for k, c in self.table.get((i, j), ()):
                    out[k] += x * y * c
        return tuple(out)

    def multiply(self, x: "Element", y: "Element") -> "Element":
        if x.algebra is not self or y.algebra is not self:
            if x.algebra != self or y.algebra != self:
                raise ValueError("elements belong to a different algebra")
        return Element(self, self.mul_vectors(x.coeffs, y.coeffs))

    def element(self, coeffs: Sequence | Mapping[str, object]) -> "Element":
        if isinstance(coeffs, Mapping):
            v = [ZERO] * self.dim
            for name, c in coeffs.items():
                v[self.index(name)] += el.scalar(c)
            coeffs = v
        return Element(self, coeffs)

    def basis(self, i: int | str) -> "Element":
        if isinstance(i, str):
            i = self.index(i)
        v = [ZERO] * self.dim
        v[i] = el.ONE
        return Element(self, v)

    def left_matrix(self, i: int) -> el.Matrix:
        """Matrix of ``y -> e_i y`` (column j holds the coordinates of e_i e_j)."""
        n = self.dim
        m = [[ZERO] * n for _ in range(n)]
        for j in range(n):
            for k, c in self.table.get((i, j), ()):
                m[k][j] = c
        return tuple(map(tuple, m))

    def right_matrix(self, i: int) -> el.Matrix:
        """Matrix of ``y -> y e_i`` (no sign)."""
        n = self.dim
        m = [[ZERO] * n for _ in range(n)]
        for j in range(n):
            for k, c in self.table.get((j, i), ()):
                m[k][j] = c
        return tuple(map(tuple, m))

    def block(self, parity: int) -> range:
        return range(0, self.n_even) if parity == 0 else range(self.n_even, self.dim)


class Element:
    """A vector of an algebra; ``*`` is the algebra product."""

    __slots__ = ("algebra", "coeffs")

    def __init__(self, algebra: SuperAlgebra, coeffs: Iterable):
        coeffs = el.vector(coeffs)
        if len(coeffs) != algebra.dim:
            raise DimensionError(f"element of length {len(coeffs)} in a {algebra.dim}-dim algebra")
        self.algebra = algebra
        self.coeffs = coeffs

    def _same(self, other: "Element") -> None:
        if not isinstance(other, Element) or other.algebra != self.algebra:
            raise ValueError("elements belong to different algebras")

    def __add__(self, other: "Element") -> "Element":
        self._same(other)
        return Element(self.algebra, (a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "Element") -> "Element":
        self._same(other)
        return Element(self.algebra, (a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> "Element":
        return Element(self.algebra, (-a for a in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, Element):
            return self.algebra.multiply(self, other)
        s = el.scalar(other)
        return Element(self.algebra, (s * a for a in self.coeffs))

    def __rmul__(self, other):
        s = el.scalar(other)
        return Element(self.algebra, (s * a for a in self.coeffs))

    def __eq__(self, other) -> bool:
        if isinstance(other, int) and other == 0:
            return self.is_zero()
        return isinstance(other, Element) and other.algebra == self.algebra and other.coeffs == self.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def parity(self) -> int | None:
        """0 or 1 for homogeneous nonzero elements, None otherwise (0 for zero)."""
        support = {self.algebra.parity(i) for i, c in enumerate(self.coeffs) if c}
        if not support:
            return 0
        return support.pop() if len(support) == 1 else None

    def is_homogeneous(self) -> bool:
        return self.parity() is not None

    def __repr__(self) -> str:
        return format_combination(self.coeffs, self.algebra.labels) or "0"


def format_combination(coeffs: Sequence, labels: Sequence[str]) -> str:
    parts = []
    for c, name in zip(coeffs, labels):
        if not c:
            continue
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        term = name if mag == 1 else f"{mag} {name}"
        parts.append((sign, term))
    if not parts:
        return ""
    first_sign, first = parts[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, term in parts[1:]:
        out += f" {sign} {term}"
    return out


# -- derived algebras ---------------------------------------------------------


def assemble(labels: Sequence[str], parities: Sequence[int], table: Mapping) -> tuple[SuperAlgebra, list[int]]:
    """Build an algebra from an arbitrarily ordered graded basis.

    The basis is stably reordered so even vectors come first.  Returns the
    algebra and ``position`` with ``position[old_index] = new_index``.
    """
    order = [i for i, p in enumerate(parities) if p == 0] + [i for i, p in enumerate(parities) if p == 1]
    position = [0] * len(order)
    for new, old in enumerate(order):
        position[old] = new
    new_table = {}
    for (i, j), out in table.items():
        items = out.items() if isinstance(out, Mapping) else out
        new_table[(position[i], position[j])] = {position[k]: c for k, c in items}
    n_even = sum(1 for p in parities if p == 0)
    alg = SuperAlgebra(n_even, len(order) - n_even, new_table, [labels[i] for i in order])
    return alg, position


def fresh_label(taken: Iterable[str], base: str) -> str:
    taken = set(taken)
    if base not in taken:
        return base
    i = 1
    while f"{base}{i}" in taken:
        i += 1
    return f"{base}{i}"


def opposite(a: SuperAlgebra) -> SuperAlgebra:
    """The algebra with product ``x o y = y x`` (no Koszul sign)."""
    return SuperAlgebra(a.n_even, a.n_odd, {(j, i): out for (i, j), out in a.table.items()}, a.labels)


def is_graded_basis(a: SuperAlgebra, P: el.Matrix) -> bool:
    """True iff the columns of ``P`` are homogeneous, evens first, matching ``a``'s block sizes."""
    n = a.dim
    for j in range(n):
        want = a.parity(j)
        if any(P[i][j] for i in range(n) if a.parity(i) != want):
            return False
    return True


def change_basis(a: SuperAlgebra, P: el.Matrix, labels: Sequence[str] | None = None) -> SuperAlgebra:
    """Structure constants of ``a`` in the basis given by the columns of ``P``."""
    if not is_graded_basis(a, P):
        raise GradingError("new basis must be homogeneous with the same block layout")
    Pinv = el.inverse(P)
    cols = el.transpose(P)
    n = a.dim
    table = {}
    for i in range(n):
        for j in range(n):
            prod = a.mul_vectors(cols[i], cols[j])
            if any(prod):
                table[(i, j)] = dict(enumerate(el.matvec(Pinv, prod)))
    return SuperAlgebra(a.n_even, a.n_odd, table, labels if labels is not None else a.labels)


def transform_form(gram: el.Matrix, P: el.Matrix) -> el.Matrix:
    """Gram matrix of the same bilinear form in the basis given by the columns of ``P``."""
    return el.matmul(el.matmul(el.transpose(P), gram), P)


def generated_subspace(a: SuperAlgebra, gens: Iterable[Sequence]) -> Subspace:
    """Span closure: the subalgebra generated by ``gens`` as a subspace."""
    n = a.dim
    current = Subspace(list(gens), n)
    for _ in range(n + 1):
        vecs = list(current.basis)
        prods = [a.mul_vectors(u, v) for u in vecs for v in vecs]
        nxt = Subspace(vecs + prods, n)
        if nxt.dim == current.dim:
            return current
        current = nxt
    raise AssertionError("subalgebra closure did not stabilise")  # pragma: no cover


def graded_basis(a: SuperAlgebra, space: Subspace) -> tuple[list[tuple], list[tuple]]:
    """Even and odd bases of a graded subspace; raises if ``space`` is not graded."""
    n = a.dim
    even = Subspace([tuple(x if a.parity(i) == 0 else ZERO for i, x in enumerate(v)) for v in space.basis], n)
    odd = Subspace([tuple(x if a.parity(i) == 1 else ZERO for i, x in enumerate(v)) for v in space.basis], n)
    if even.dim + odd.dim != space.dim:
        raise GradingError("subspace is not graded")
    return list(even.basis), list(odd.basis)


def restrict(a: SuperAlgebra, space: Subspace) -> tuple[SuperAlgebra, list[tuple]]:
    """The algebra structure on a subalgebra ``space``; returns it with its basis."""
    ev, od = graded_basis(a, space)
    basis = ev + od
    sub = Subspace(basis, a.dim)
    k = len(basis)
    table = {}
    M = el.transpose(tuple(basis)) if basis else ()
    for i in range(k):
        for j in range(k):
            prod = a.mul_vectors(basis[i], basis[j])
            if any(prod):
                coords = el.solve(M, prod, k)
                if coords is None or prod not in sub:
                    raise ValueError("subspace is not closed under the product")
                table[(i, j)] = dict(enumerate(coords))
    return SuperAlgebra(len(ev), len(od), table), basis


def subalgebra(a: SuperAlgebra, gens: Iterable[Sequence]) -> tuple[SuperAlgebra, list[tuple]]:
    return restrict(a, generated_subspace(a, gens))


# -- text format --------------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(?P<sign>[+-])|(?P<num>\d+(?:/\d+)?)|(?P<name>[A-Za-z_][A-Za-z0-9_']*))")


def _parse_combination(text: str, index: Mapping[str, int], lineno: int) -> dict[int, Fraction]:
    pos, out = 0, {}
    sign, coeff, expect_term = 1, None, True
    text = text.strip()
    if text == "0":
        return {}
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ParseError(f"cannot read {text[pos:]!r}", lineno)
        pos = m.end()
        if m.group("sign"):
            if coeff is not None:
                raise ParseError("sign after a coefficient", lineno)
            sign = -sign if m.group("sign") == "-" else sign
            expect_term = True
        elif m.group("num"):
            if coeff is not None or not expect_term:
                raise ParseError("two coefficients in a row", lineno)
            try:
                coeff = Fraction(m.group("num"))
            except ZeroDivisionError:
                raise ParseError(f"zero denominator in {m.group('num')!r}", lineno) from None
        else:
            if not expect_term:
                raise ParseError("missing '+' between terms", lineno)
            name = m.group("name")
            if name not in index:
                raise ParseError(f"unknown basis vector {name!r}", lineno)
            k = index[name]
            out[k] = out.get(k, ZERO) + sign * (coeff if coeff is not None else 1)
            sign, coeff, expect_term = 1, None, False
        if pos < len(text) and text[pos:].strip() == "":
            break
    if expect_term or coeff is not None:
        raise ParseError("dangling sign or coefficient", lineno)
    return {k: c for k, c in out.items() if c}


def _strip_comment(line: str) -> str:
    return line.split("#", 1)[0].strip()


def parse_with_form(text: str) -> tuple[SuperAlgebra, el.Matrix | None]:
    """Parse the ``.alg`` format; returns the algebra and the Gram matrix if a form block is present."""
    n_even = n_odd = None
    labels = None
    index: dict[str, int] = {}
    table: dict[tuple[int, int], dict[int, Fraction]] = {}
    seen: dict[tuple[int, int], int] = {}
    form: dict[tuple[int, int], Fraction] = {}
    form_seen: dict[tuple[int, int], int] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = _strip_comment(raw)
        if not line:
            continue
        head = line.split()[0]
        if n_even is None:
            parts = line.split()
            if head != "dim" or len(parts) != 3 or not all(p.isdigit() for p in parts[1:]):
                raise ParseError("expected 'dim <n_even> <n_odd>' first", lineno)
            n_even, n_odd = int(parts[1]), int(parts[2])
            labels = default_labels(n_even + n_odd)
            index = {x: i for i, x in enumerate(labels)}
            continue
        if head == "basis":
            names = line.split()[1:]
            if table or form:
                raise ParseError("'basis' must precede products", lineno)
            if len(names) != n_even + n_odd:
                raise ParseError(f"basis lists {len(names)} names, dimension is {n_even + n_odd}", lineno)
            for x in names:
                if not _LABEL.match(x):
                    raise ParseError(f"bad basis name {x!r}", lineno)
            if len(set(names)) != len(names):
                raise ParseError("duplicate basis name", lineno)
            labels = tuple(names)
            index = {x: i for i, x in enumerate(labels)}
            continue
        if head == "form":
            body = line[len("form"):]
            if "=" not in body:
                raise ParseError("form line needs '='", lineno)
            lhs, rhs = body.split("=", 1)
            pair = [s.strip() for s in lhs.split(",")]
            if len(pair) != 2 or any(p not in index for p in pair):
                raise ParseError(f"bad form entry {lhs.strip()!r}", lineno)
            try:
                val = Fraction(rhs.strip().replace(" ", ""))
            except (ValueError, ZeroDivisionError):
                raise ParseError(f"bad rational {rhs.strip()!r}", lineno) from None
            i, j = index[pair[0]], index[pair[1]]
            if (i, j) in form_seen:
                raise ParseError(f"duplicate form entry (first on line {form_seen[(i, j)]})", lineno)
            pi, pj = int(i >= n_even), int(j >= n_even)
            mirror = val if pi * pj == 0 else -val
            for key, v in (((i, j), val), ((j, i), mirror)):
                if key in form and form[key] != v:
                    raise ParseError("form entry conflicts with supersymmetric completion", lineno)
                form[key] = v
            form_seen[(i, j)] = lineno
            continue
        if "=" not in line or "*" not in line.split("=", 1)[0]:
            raise ParseError(f"cannot parse line {raw.strip()!r}", lineno)
        lhs, rhs = line.split("=", 1)
        factors = [s.strip() for s in lhs.split("*")]
        if len(factors) != 2 or any(f not in index for f in factors):
            raise ParseError(f"bad product {lhs.strip()!r}", lineno)
        i, j = index[factors[0]], index[factors[1]]
        if (i, j) in seen:
            raise ParseError(f"duplicate product line (first on line {seen[(i, j)]})", lineno)
        seen[(i, j)] = lineno
        out = _parse_combination(rhs, index, lineno)
        for k in out:
            if int(k >= n_even) != (int(i >= n_even) ^ int(j >= n_even)):
                raise GradingViolation(
                    f"{labels[i]}*{labels[j]} lands on {labels[k]}, which has the wrong parity", lineno)
        table[(i, j)] = out
    if n_even is None:
        raise ParseError("empty algebra file")
    alg = SuperAlgebra(n_even, n_odd, table, labels)
    gram = None
    if form:
        n = alg.dim
        gram = tuple(tuple(form.get((i, j), ZERO) for j in range(n)) for i in range(n))
    return alg, gram


class GradingViolation(ParseError, GradingError):
    pass


def parse(text: str) -> SuperAlgebra:
    return parse_with_form(text)[0]


def serialize(a: SuperAlgebra, form: el.Matrix | None = None, comment: str | None = None) -> str:
    lines = []
    if comment:
        lines += [f"# {c}" for c in comment.splitlines()]
    lines.append(f"dim {a.n_even} {a.n_odd}")
    if a.labels != default_labels(a.dim):
        lines.append("basis " + " ".join(a.labels))
    for (i, j) in sorted(a.table):
        coeffs = [ZERO] * a.dim
        for k, c in a.table[(i, j)]:
            coeffs[k] = c
        lines.append(f"{a.labels[i]}*{a.labels[j]} = {format_combination(coeffs, a.labels)}")
    if form is not None:
        n = a.dim
        for i in range(n):
            for j in range(i, n):
                v = form[i][j]
                sign = -1 if a.parity(i) * a.parity(j) else 1
                if form[j][i] != sign * v:
                    raise ValueError("only supersymmetric forms can be serialised")
                if v:
                    lines.append(f"form {a.labels[i]},{a.labels[j]} = {v}")
    return "\n".join(lines) + "\n"
