"""Signed multilinear identities, polarization, and the variety registry.

An identity is a formal sum of bracketed words, ``sum c_t * w_t = 0``.  Each
term may carry a Koszul sign ``(-1)^(sum |x_a||x_b| + sum |x_a|)`` over a set
of variable pairs and singles; on purely even algebras every sign is +1.

Identities are written in a small text notation, e.g.::

    ident("left-zinbiel", "xyz", "(xy)z = x(yz) + {yz} x(zy)")

where ``{yz}`` is the sign ``(-1)^{|y||z|}`` and ``{x,yz}`` would add a
single ``|x|`` as well.  A word is a variable or a product of exactly two
words; parentheses are required except around a pair of bare variables.
"""

from __future__ import annotations

import enum
import itertools
import random
import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence, Union

from .errors import UnsupportedIdentity, Verdict, ZinbielError
from .exactlin import ZERO
from .superalgebra import Element, SuperAlgebra, opposite, subalgebra

Tree = Union[int, tuple]

DEFAULT_MAX_VARS = 4


@dataclass(frozen=True)
class Term:
    coef: Fraction
    tree: Tree
    pairs: frozenset = frozenset()
    singles: frozenset = frozenset()


@dataclass(frozen=True)
class SignedIdentity:
    name: str
    nvars: int
    terms: tuple
    var_names: str = ""

    @property
    def signed(self) -> bool:
        return any(t.pairs or t.singles for t in self.terms)

    @property
    def multilinear(self) -> bool:
        return all(sorted(leaves(t.tree)) == list(range(self.nvars)) for t in self.terms)

    def __str__(self) -> str:
        return f"{self.name}: {format_identity(self)}"


def leaves(tree: Tree) -> list[int]:
    if isinstance(tree, int):
        return [tree]
    return leaves(tree[0]) + leaves(tree[1])


def _relabel(tree: Tree, fn) -> Tree:
    if isinstance(tree, int):
        return fn(tree)
    return (_relabel(tree[0], fn), _relabel(tree[1], fn))


def _format_tree(tree: Tree, names: str, top: bool = True) -> str:
    if isinstance(tree, int):
        return names[tree] if tree < len(names) else f"x{tree + 1}"
    s = _format_tree(tree[0], names, False) + _format_tree(tree[1], names, False)
    return s if top else f"({s})"


def format_identity(ident: SignedIdentity) -> str:
    names = ident.var_names if len(ident.var_names) >= ident.nvars else ""
    parts = []
    for t in ident.terms:
        sign = ""
        if t.pairs or t.singles:
            spec = [names[a] + names[b] if names else f"x{a + 1}x{b + 1}" for a, b in sorted(t.pairs)]
            spec += [names[a] if names else f"x{a + 1}" for a in sorted(t.singles)]
            sign = "{" + ",".join(spec) + "} "
        c = t.coef
        mag = "" if abs(c) == 1 else f"{abs(c)} "
        parts.append(("-" if c < 0 else "+", f"{mag}{sign}{_format_tree(t.tree, names)}"))
    if not parts:
        return "0 = 0"
    out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
    for s, p in parts[1:]:
        out += f" {s} {p}"
    return out + " = 0"


# -- parsing the identity notation ------------------------------------------

_TERM_TOKEN = re.compile(r"\s*(?:(?P<sign>[+-])|(?P<num>\d+(?:/\d+)?)|(?P<spec>\{[^}]*\})|(?P<open>\()|(?P<close>\))|(?P<var>[a-z]))")


def _parse_word(tokens: list, pos: int, var_index: dict) -> tuple[Tree, int]:
    factors = []
    while pos < len(tokens) and tokens[pos][0] in ("var", "open"):
        kind, val = tokens[pos]
        if kind == "var":
            factors.append(var_index[val])
            pos += 1
        else:
            sub, pos = _parse_word(tokens, pos + 1, var_index)
            if pos >= len(tokens) or tokens[pos][0] != "close":
                raise ValueError("unbalanced parentheses")
            factors.append(sub)
            pos += 1
    if len(factors) == 1:
        return factors[0], pos
    if len(factors) == 2:
        return (factors[0], factors[1]), pos
    raise ValueError(f"ambiguous bracketing with {len(factors)} juxtaposed factors")


def _parse_side(text: str, var_index: dict, sign: int) -> list[Term]:
    tokens = []
    pos = 0
    text = text.strip()
    while pos < len(text):
        m = _TERM_TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ValueError(f"cannot parse identity near {text[pos:]!r}")
        pos = m.end()
        kind = m.lastgroup
        tokens.append((kind, m.group(kind)))
    terms, i = [], 0
    if tokens == [("num", "0")]:
        return []
    while i < len(tokens):
        s, coef = sign, Fraction(1)
        while i < len(tokens) and tokens[i][0] == "sign":
            if tokens[i][1] == "-":
                s = -s
            i += 1
        if i < len(tokens) and tokens[i][0] == "num":
            coef = Fraction(tokens[i][1])
            i += 1
        pairs, singles = set(), set()
        if i < len(tokens) and tokens[i][0] == "spec":
            for item in tokens[i][1][1:-1].split(","):
                item = item.strip()
                if len(item) == 2:
                    a, b = sorted((var_index[item[0]], var_index[item[1]]))
                    pairs ^= {(a, b)} if a != b else set()
                elif len(item) == 1:
                    singles ^= {var_index[item]}
                else:
                    raise ValueError(f"bad sign spec {item!r}")
            i += 1
        tree, i = _parse_word(tokens, i, var_index)
        terms.append(Term(s * coef, tree, frozenset(pairs), frozenset(singles)))
    return terms


def ident(name: str, variables: str, text: str) -> SignedIdentity:
    """Build an identity from ``lhs = rhs`` notation over single-letter variables."""
    var_index = {v: i for i, v in enumerate(variables)}
    if "=" in text:
        lhs, rhs = text.split("=")
    else:
        lhs, rhs = text, "0"
    terms = _parse_side(lhs, var_index, 1) + _parse_side(rhs, var_index, -1)
    return SignedIdentity(name, len(variables), _collect(terms), variables)


def _collect(terms: Iterable[Term]) -> tuple:
    acc: dict = {}
    order = []
    for t in terms:
        key = (t.tree, t.pairs, t.singles)
        if key not in acc:
            order.append(key)
            acc[key] = ZERO
        acc[key] += t.coef
    return tuple(Term(acc[k], *k) for k in order if acc[k])


# -- transformations ----------------------------------------------------------


def polarize(identity: SignedIdentity) -> SignedIdentity:
    """Full linearization: every occurrence of a repeated variable becomes a new
    variable, summed over all assignments.  Multilinear input is returned as is.
    """
    if identity.multilinear:
        return identity
    if identity.signed:
        raise UnsupportedIdentity(f"{identity.name}: cannot polarize a signed identity with repeated variables")
    mult = [0] * identity.nvars
    for v in leaves(identity.terms[0].tree):
        mult[v] += 1
    for t in identity.terms:
        m = [0] * identity.nvars
        for v in leaves(t.tree):
            m[v] += 1
        if m != mult:
            raise UnsupportedIdentity(f"{identity.name}: terms are not homogeneous in every variable")
    offset = [sum(mult[:v]) for v in range(identity.nvars)]
    copies = [list(range(offset[v], offset[v] + mult[v])) for v in range(identity.nvars)]
    terms = []
    for t in identity.terms:
        for choice in itertools.product(*(itertools.permutations(c) for c in copies)):
            counters = [0] * identity.nvars

            def assign(v, choice=choice, counters=counters):
                k = counters[v]
                counters[v] += 1
                return choice[v][k]

            terms.append(Term(t.coef, _relabel(t.tree, assign)))
    names = identity.var_names
    new_names = ""
    if names and sum(mult) <= 26:
        new_names = "".join(_poly_names(names, mult))
    return SignedIdentity(identity.name + "/lin", sum(mult), _collect(terms), new_names)


def _poly_names(names: str, mult: list[int]) -> list[str]:
    pool = iter("abcdefghijklmnopqrstuvwxyz")
    out = []
    for v, k in enumerate(mult):
        if k == 1:
            out.append(names[v])
        else:
            out.extend(next(pool) for _ in range(k))
    # keep names distinct
    return out if len(set(out)) == len(out) else [chr(ord("a") + i) for i in range(sum(mult))]


def koszul(identity: SignedIdentity) -> SignedIdentity:
    """Attach to each term the Koszul sign of its leaf order (super version of an
    ungraded multilinear identity)."""
    if not identity.multilinear:
        raise UnsupportedIdentity("koszul signs need a multilinear identity")
    terms = []
    for t in identity.terms:
        order = leaves(t.tree)
        inv = frozenset((min(order[a], order[b]), max(order[a], order[b]))
                        for a in range(len(order)) for b in range(a + 1, len(order)) if order[a] > order[b])
        terms.append(Term(t.coef, t.tree, inv ^ t.pairs, t.singles))
    return SignedIdentity(identity.name, identity.nvars, _collect(terms), identity.var_names)


def _mirror(tree: Tree) -> Tree:
    if isinstance(tree, int):
        return tree
    return (_mirror(tree[1]), _mirror(tree[0]))


def opposite_identity(identity: SignedIdentity, name: str | None = None) -> SignedIdentity:
    """The identity satisfied by the opposite algebra (unsigned identities only)."""
    if identity.signed:
        raise UnsupportedIdentity("opposite of a signed identity is not defined here")
    terms = [Term(t.coef, _mirror(t.tree)) for t in identity.terms]
    return SignedIdentity(name or identity.name + "/op", identity.nvars, _collect(terms), identity.var_names)


def super_cube_identities() -> tuple[SignedIdentity, SignedIdentity]:
    """Koszul-signed linearizations of ``x^2 x = 0`` and ``x x^2 = 0``."""
    return (koszul(polarize(ident("x2x", "x", "(xx)x = 0"))),
            koszul(polarize(ident("xx2", "x", "x(xx) = 0"))))


# -- evaluation -----------------------------------------------------------------


def _evaluate(table: dict, tree: Tree, t: Sequence[int]):
    """Product of basis vectors along ``tree``: a dict k -> coefficient, or None for zero."""
    if isinstance(tree, int):
        return {t[tree]: Fraction(1)}
    left, right = tree
    if isinstance(left, int) and isinstance(right, int):
        out = table.get((t[left], t[right]))
        return dict(out) if out else None
    lv = _evaluate(table, left, t)
    if not lv:
        return None
    rv = _evaluate(table, right, t)
    if not rv:
        return None
    out: dict = {}
    for i, x in lv.items():
        for j, y in rv.items():
            for k, c in table.get((i, j), ()):
                out[k] = out.get(k, ZERO) + x * y * c
    out = {k: c for k, c in out.items() if c}
    return out or None


def evaluate(a: SuperAlgebra, identity: SignedIdentity, t: Sequence[int]) -> Element:
    """Residual of the identity at the basis tuple ``t`` (with Koszul signs)."""
    par = a.parities
    acc = [ZERO] * a.dim
    for term in identity.terms:
        val = _evaluate(a.table, term.tree, t)
        if not val:
            continue
        e = sum(par[t[x]] * par[t[y]] for x, y in term.pairs) + sum(par[t[x]] for x in term.singles)
        c = -term.coef if e % 2 else term.coef
        for k, v in val.items():
            acc[k] += c * v
    return Element(a, acc)


def holds(a: SuperAlgebra, identity: SignedIdentity, max_vars: int = DEFAULT_MAX_VARS) -> Verdict:
    """Decide ``identity`` on ``a`` by evaluating it on every basis tuple.

    Repeated-variable identities are polarized first, which requires ``a`` to
    be ungraded.  On failure the verdict carries the first violating tuple in
    lexicographic order and the residual element.
    """
    if not identity.multilinear:
        if a.is_graded:
            raise UnsupportedIdentity(
                f"{identity.name} repeats variables; polarized evaluation on a superalgebra is not supported")
        identity = polarize(identity)
    if identity.nvars > max_vars:
        raise ZinbielError(f"{identity.name} has {identity.nvars} variables, bound is {max_vars}")
    n = a.dim
    if not a.table and all(not isinstance(t.tree, int) for t in identity.terms):
        return Verdict.passed()
    table = a.table
    par = a.parities
    terms = [(term.coef, term.tree, tuple(term.pairs), tuple(term.singles)) for term in identity.terms]
    for t in itertools.product(range(n), repeat=identity.nvars):
        acc: dict = {}
        for coef, tree, pairs, singles in terms:
            val = _evaluate(table, tree, t)
            if not val:
                continue
            e = 0
            for x, y in pairs:
                e += par[t[x]] * par[t[y]]
            for x in singles:
                e += par[t[x]]
            c = -coef if e & 1 else coef
            for k, v in val.items():
                acc[k] = acc.get(k, ZERO) + c * v
        if any(acc.values()):
            res = Element(a, [acc.get(k, ZERO) for k in range(n)])
            return Verdict(False, identity.name, tuple(a.labels[i] for i in t), res)
    return Verdict.passed()


# -- the registry -------------------------------------------------------------------


class VarietyName(str, enum.Enum):
    LeftZinbiel = "left-zinbiel"
    RightZinbiel = "right-zinbiel"
    SymmetricZinbiel = "symmetric-zinbiel"
    LeftLeibniz = "left-leibniz"
    RightLeibniz = "right-leibniz"
    SymmetricLeibniz = "symmetric-leibniz"
    LR = "lr"
    AntiFlexible = "anti-flexible"
    MonoSymZinbiel = "mono-symmetric-zinbiel"
    BinarySymZinbielA = "binary-symmetric-zinbiel-a"
    BinarySymZinbielB = "binary-symmetric-zinbiel-b"
    MonoLeftLeibniz = "mono-left-leibniz"
    BinaryLeftLeibniz = "binary-left-leibniz"
    MonoLeftZinbiel = "mono-left-zinbiel"
    BinaryLeftZinbiel = "binary-left-zinbiel"
    Associative = "associative"
    Lie1 = "lie1"
    IntersectionSLSZ = "intersection-sl-sz"
    TriplesZero = "triples-zero"
    Omega = "omega"
    BinarySymLeibniz = "binary-symmetric-leibniz"
    AssLie1 = "ass-lie1"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class Variety:
    name: VarietyName
    identities: tuple
    ungraded_only: bool = False
    note: str = ""


LEFT_ZINBIEL = ident("left-zinbiel", "xyz", "(xy)z = x(yz) + {yz} x(zy)")
RIGHT_ZINBIEL = ident("right-zinbiel", "xyz", "x(yz) = (xy)z + {xy} (yx)z")
LEFT_LEIBNIZ = ident("left-leibniz", "xyz", "x(yz) = (xy)z + {xy} y(xz)")
RIGHT_LEIBNIZ = ident("right-leibniz", "xyz", "(xy)z = {yz} (xz)y + x(yz)")
LR_LEFT = ident("lr-left", "xyz", "(xy)z = {yz} (xz)y")
LR_RIGHT = ident("lr-right", "xyz", "x(yz) = {xy} y(xz)")
ANTI_FLEXIBLE = ident("anti-flexible", "xyz", "(xy)z - x(yz) = {xy,xz,yz} (zy)x - {xy,xz,yz} z(yx)")
SZ_CYCLIC = ident("sz-cyclic", "xyz", "(xy)z = - {xy,xz} y(zx)")
SZ_REVERSE = ident("sz-reverse", "xyz", "(xy)z = - {xy,yz,xz} z(yx)")
ASSOCIATIVE = ident("associative", "xyz", "(xy)z = x(yz)")
ANTICOMMUTATIVE = ident("anticommutative", "xy", "xy + {xy} yx = 0")
TRIPLE_LEFT = ident("left-triple-zero", "xyz", "(xy)z = 0")
TRIPLE_RIGHT = ident("right-triple-zero", "xyz", "x(yz) = 0")
OMEGA_LEFT = ident("omega-left", "xyz", "(xy)z = x(yz) - x(zy)")
OMEGA_RIGHT = ident("omega-right", "xyz", "x(yz) = (xy)z - (yx)z")

# consequences of symmetric Zinbiel (checked, never used as definitions)
DERIVED_SZ_IDENTITIES = (LR_LEFT, LR_RIGHT, ANTI_FLEXIBLE, SZ_CYCLIC, SZ_REVERSE)

MONO_LEFT_LEIBNIZ = (ident("mono-lleib-1", "x", "(xx)x = 0"), ident("mono-lleib-2", "x", "(xx)(xx) = 0"))
BINARY_LEFT_LEIBNIZ = (
    ident("bin-lleib-1", "xy", "(xx)y = 0"),
    ident("bin-lleib-2", "xy", "x(yx) = (xy)x + y(xx)"),
    ident("bin-lleib-3", "xy", "x(y(xy)) = (xy)(xy) + y(x(xy))"),
)
MONO_LEFT_ZINBIEL = (ident("mono-lzinb-1", "x", "x(xx) = 2(xx)x"), ident("mono-lzinb-2", "x", "(xx)(xx) = 3((xx)x)x"))
BINARY_LEFT_ZINBIEL = (
    ident("bin-lzinb-1", "xy", "x(yx) = (xy)x + (yx)x"),
    ident("bin-lzinb-2", "xy", "x(xy) = 2(xx)y"),
)
MONO_SYM_ZINBIEL = (
    ident("mono-sz-1", "x", "(xx)x = 0"),
    ident("mono-sz-2", "x", "x(xx) = 0"),
    ident("mono-sz-3", "x", "(xx)(xx) = 0"),
)
BINARY_SYM_ZINBIEL_A = BINARY_LEFT_ZINBIEL + (
    ident("bin-sz-a-3", "xy", "(xy)x = x(yx) + x(xy)"),
    ident("bin-sz-a-4", "xy", "(yx)x = 2y(xx)"),
)
BINARY_SYM_ZINBIEL_B = (
    ident("bin-sz-b-1", "xy", "(xx)y = 0"),
    ident("bin-sz-b-2", "xy", "x(yx) = (xy)x"),
    ident("bin-sz-b-3", "xy", "x(y(xy)) = (xy)(xy) + y(x(xy))"),
    ident("bin-sz-b-4", "xy", "y(xx) = 0"),
    ident("bin-sz-b-5", "xy", "(xy)(xy) = ((xy)x)y + x((xy)y)"),
)
BINARY_SYM_LEIBNIZ = BINARY_LEFT_LEIBNIZ + tuple(
    opposite_identity(i, i.name.replace("lleib", "rleib")) for i in BINARY_LEFT_LEIBNIZ)


def _antisymmetric_triples() -> tuple:
    out = []
    base = {"left": lambda p: ((p[0], p[1]), p[2]), "right": lambda p: (p[0], (p[1], p[2]))}
    for label, build in base.items():
        for perm in itertools.permutations(range(3)):
            if perm == (0, 1, 2):
                continue
            inversions = sum(1 for a in range(3) for b in range(a + 1, 3) if perm[a] > perm[b])
            sign = -1 if inversions % 2 else 1
            # (x1 x2) x3 - sgn * (x_s1 x_s2) x_s3 = 0
            terms = (Term(Fraction(1), build((0, 1, 2))), Term(Fraction(-sign), build(perm)))
            out.append(SignedIdentity(f"antisym-{label}-{''.join(str(p + 1) for p in perm)}", 3,
                                      _collect(terms), "xyz"))
    return tuple(out)


INTERSECTION_SL_SZ = _antisymmetric_triples()

_V = VarietyName
REGISTRY: dict[VarietyName, Variety] = {
    _V.LeftZinbiel: Variety(_V.LeftZinbiel, (LEFT_ZINBIEL,)),
    _V.RightZinbiel: Variety(_V.RightZinbiel, (RIGHT_ZINBIEL,)),
    _V.SymmetricZinbiel: Variety(_V.SymmetricZinbiel, (LEFT_ZINBIEL, RIGHT_ZINBIEL)),
    _V.LeftLeibniz: Variety(_V.LeftLeibniz, (LEFT_LEIBNIZ,), note="standard form, dual to left Zinbiel"),
    _V.RightLeibniz: Variety(_V.RightLeibniz, (RIGHT_LEIBNIZ,), note="standard form, dual to right Zinbiel"),
    _V.SymmetricLeibniz: Variety(_V.SymmetricLeibniz, (LEFT_LEIBNIZ, RIGHT_LEIBNIZ)),
    _V.LR: Variety(_V.LR, (LR_LEFT, LR_RIGHT)),
    _V.AntiFlexible: Variety(_V.AntiFlexible, (ANTI_FLEXIBLE,)),
    _V.MonoSymZinbiel: Variety(_V.MonoSymZinbiel, MONO_SYM_ZINBIEL, ungraded_only=True),
    _V.BinarySymZinbielA: Variety(_V.BinarySymZinbielA, BINARY_SYM_ZINBIEL_A, ungraded_only=True),
    _V.BinarySymZinbielB: Variety(_V.BinarySymZinbielB, BINARY_SYM_ZINBIEL_B, ungraded_only=True),
    _V.MonoLeftLeibniz: Variety(_V.MonoLeftLeibniz, MONO_LEFT_LEIBNIZ, ungraded_only=True),
    _V.BinaryLeftLeibniz: Variety(_V.BinaryLeftLeibniz, BINARY_LEFT_LEIBNIZ, ungraded_only=True),
    _V.MonoLeftZinbiel: Variety(_V.MonoLeftZinbiel, MONO_LEFT_ZINBIEL, ungraded_only=True),
    _V.BinaryLeftZinbiel: Variety(_V.BinaryLeftZinbiel, BINARY_LEFT_ZINBIEL, ungraded_only=True),
    _V.Associative: Variety(_V.Associative, (ASSOCIATIVE,)),
    _V.Lie1: Variety(_V.Lie1, (ANTICOMMUTATIVE,)),
    _V.IntersectionSLSZ: Variety(_V.IntersectionSLSZ, INTERSECTION_SL_SZ, ungraded_only=True),
    _V.TriplesZero: Variety(_V.TriplesZero, (TRIPLE_LEFT, TRIPLE_RIGHT)),
    _V.Omega: Variety(_V.Omega, (OMEGA_LEFT, OMEGA_RIGHT), note="evaluated without grading signs"),
    _V.BinarySymLeibniz: Variety(_V.BinarySymLeibniz, BINARY_SYM_LEIBNIZ, ungraded_only=True),
    _V.AssLie1: Variety(_V.AssLie1, (ASSOCIATIVE, ANTICOMMUTATIVE)),
}


def variety(v: VarietyName | str) -> Variety:
    return REGISTRY[VarietyName(v)]


def in_variety(a: SuperAlgebra, v: VarietyName | str, max_vars: int = DEFAULT_MAX_VARS) -> Verdict:
    var = variety(v)
    if var.ungraded_only and a.is_graded:
        raise UnsupportedIdentity(f"{var.name.value} is defined for ungraded algebras only")
    for identity in var.identities:
        verdict = holds(a, identity, max_vars)
        if not verdict:
            return verdict
    return Verdict.passed()


# -- sampling cross-check -------------------------------------------------------------


def sample_generators(a: SuperAlgebra, i: int, count: int = 12, seed: int = 0) -> list[tuple]:
    """Deterministic family of ``i``-tuples of generators: basis tuples, then random
    small-integer combinations."""
    n = a.dim
    out = []
    unit = [tuple(1 if k == j else 0 for k in range(n)) for j in range(n)]
    for combo in itertools.combinations(range(n), i):
        out.append(tuple(unit[j] for j in combo))
    rng = random.Random(seed)
    for _ in range(count):
        out.append(tuple(tuple(rng.randint(-3, 3) for _ in range(n)) for _ in range(i)))
    return out


def subalgebra_variety_check(a: SuperAlgebra, v: VarietyName | str, i: int, count: int = 12,
                             seed: int = 0) -> bool:
    """True iff every sampled ``i``-generated subalgebra of ``a`` lies in ``v``."""
    if i not in (1, 2):
        raise ValueError("i must be 1 or 2")
    if a.is_graded:
        raise UnsupportedIdentity("subalgebra sampling is defined for ungraded algebras")
    for gens in sample_generators(a, i, count, seed):
        sub, _ = subalgebra(a, gens)
        if not in_variety(sub, v):
            return False
    return True


# -- the inclusion lattice -------------------------------------------------------------------

LATTICE_NODES: dict[str, tuple] = {
    "SL∩SZ": (_V.TriplesZero,),
    "SZ": (_V.SymmetricZinbiel,),
    "SL": (_V.SymmetricLeibniz,),
    "SZ2": (_V.BinarySymZinbielA,),
    "SL2": (_V.BinarySymLeibniz,),
    "Ass∩Lie1": (_V.Associative, _V.Lie1),
    "SL2∩SZ2": (_V.IntersectionSLSZ,),
    "SZ1=SL1": (_V.MonoSymZinbiel,),
}

# (smaller, larger, witness catalog name), one row per strict inclusion in the table
LATTICE_EDGES: tuple = (
    ("SL∩SZ", "SZ", "LatticeWitness_SZ"),
    ("SL2∩SZ2", "SZ2", "LatticeWitness_SZ"),
    ("SL2", "SZ1=SL1", "LatticeWitness_SZ"),
    ("SL∩SZ", "SL", "LatticeWitness_SL"),
    ("SL∩SZ", "Ass∩Lie1", "LatticeWitness_AssLie1"),
    ("Ass∩Lie1", "SL2∩SZ2", "LatticeWitness_SL2SZ2"),
    ("SL", "SL2", "LatticeWitness_SL2SZ2"),
    ("SZ", "SZ2", "LatticeWitness_SL2SZ2"),
    ("SZ2", "SZ1=SL1", "LatticeWitness_SZ1"),
    ("SL2∩SZ2", "SL2", "LatticeWitness_SZ1"),
)


def node_membership(a: SuperAlgebra, node: str) -> Verdict:
    for v in LATTICE_NODES[node]:
        verdict = in_variety(a, v)
        if not verdict:
            return verdict
    return Verdict.passed()


@dataclass
class LatticeRow:
    smaller: str
    larger: str
    witness: str
    in_larger: Verdict
    in_smaller: Verdict

    @property
    def certified(self) -> bool:
        return bool(self.in_larger) and not self.in_smaller

    def to_dict(self) -> dict:
        return {"edge": f"{self.smaller} ⊂ {self.larger}", "witness": self.witness,
                "in_larger": self.in_larger.to_dict(), "in_smaller": bool(self.in_smaller),
                "certified": self.certified}


@dataclass
class LatticeReport:
    rows: list
    characterization: list = field(default_factory=list)  # (algebra name, agrees, detail)

    @property
    def ok(self) -> bool:
        return all(r.certified for r in self.rows) and all(c[1] for c in self.characterization)

    def failures(self) -> list[str]:
        out = [f"{r.smaller} ⊂ {r.larger} ({r.witness})" for r in self.rows if not r.certified]
        out += [f"intersection characterization on {c[0]}: {c[2]}" for c in self.characterization if not c[1]]
        return out


class LatticeError(ZinbielError):
    pass


def intersection_characterization(a: SuperAlgebra) -> tuple[bool, str]:
    """Check SL∩SZ = SL∩SZ2 = SZ∩SL2 = TriplesZero on one ungraded algebra."""
    tz = bool(in_variety(a, _V.TriplesZero))
    sl = bool(in_variety(a, _V.SymmetricLeibniz))
    sz = bool(in_variety(a, _V.SymmetricZinbiel))
    sz2 = bool(in_variety(a, _V.BinarySymZinbielA))
    sl2 = bool(in_variety(a, _V.BinarySymLeibniz))
    values = {"triples-zero": tz, "SL∩SZ": sl and sz, "SL∩SZ2": sl and sz2, "SZ∩SL2": sz and sl2}
    agree = len(set(values.values())) == 1
    return agree, ", ".join(f"{k}={v}" for k, v in values.items())


def lattice_report(catalog=None, strict: bool = True) -> LatticeReport:
    """Certify every strict inclusion with its witness algebra, and check the
    triple-product characterization of the bottom node across the catalog."""
    if catalog is None:
        from . import catalog as catalog
    rows = []
    for small, large, wname in LATTICE_EDGES:
        w = catalog.get(wname)
        rows.append(LatticeRow(small, large, wname, node_membership(w, large), node_membership(w, small)))
    zero = SuperAlgebra.zero(3)
    for node in LATTICE_NODES:
        if not node_membership(zero, node):  # pragma: no cover - sanity row
            rows.append(LatticeRow("zero", node, "zero", Verdict(False, "zero algebra"), Verdict(False)))
    chars = []
    for name, alg in catalog.instances(ungraded_only=True):
        agree, detail = intersection_characterization(alg)
        chars.append((name, agree, detail))
    report = LatticeReport(rows, chars)
    if strict and not report.ok:
        raise LatticeError("lattice certificate failed: " + "; ".join(report.failures()))
    return report


def registry_disagreements(algebras: Iterable[tuple[str, SuperAlgebra]]) -> list[str]:
    """Names of algebras on which the two binary symmetric Zinbiel identity sets disagree."""
    out = []
    for name, a in algebras:
        if bool(in_variety(a, _V.BinarySymZinbielA)) != bool(in_variety(a, _V.BinarySymZinbielB)):
            out.append(name)
    return out


def dual_check(a: SuperAlgebra) -> bool:
    """Left Zinbiel on ``a`` iff right Zinbiel on its opposite."""
    return bool(in_variety(a, _V.LeftZinbiel)) == bool(in_variety(opposite(a), _V.RightZinbiel))
