"""Named symmetric Zinbiel algebras and the witnesses of the inclusion lattice.

Entries are stored as product-line strings in the ``.alg`` notation.  Families
with a parameter take a rational ``lam``; ``get("N4_5", lam=2)`` instantiates
one member and ``instances()`` runs through :data:`LAMBDA_SAMPLES`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Iterator

from . import exactlin as el
from .superalgebra import SuperAlgebra

LAMBDA_SAMPLES = (Fraction(0), Fraction(1), Fraction(-1), Fraction(2), Fraction(1, 2))


@dataclass(frozen=True)
class Entry:
    name: str
    n_even: int
    n_odd: int
    products: str | Callable[[Fraction], str]
    kind: str = "2-step"  # "2-step", "3-step", "3-step-variant", "one-generated", "witness"
    note: str = ""

    @property
    def role(self) -> str:
        return "witness" if self.kind == "witness" else "classification"

    @property
    def claimed_step(self) -> str | None:
        return {"2-step": "2-step", "one-generated": "2-step", "3-step": "3-step",
                "3-step-variant": "3-step"}.get(self.kind)

    @property
    def claimed_generators(self) -> int | None:
        return {"2-step": 2, "3-step": 2, "3-step-variant": 2, "one-generated": 1}.get(self.kind)

    @property
    def parametric(self) -> bool:
        return callable(self.products)

    def build(self, lam=None) -> SuperAlgebra:
        if self.parametric:
            if lam is None:
                raise ValueError(f"{self.name} needs a parameter value")
            text = self.products(el.scalar(lam))
        else:
            if lam is not None:
                raise ValueError(f"{self.name} has no parameter")
            text = self.products
        return SuperAlgebra.from_products(self.n_even, self.n_odd, text)


def _lam(c: Fraction) -> str:
    return str(c)


Z6_1 = ("e1*e2 = e3; e1*e5 = e6; e2*e1 = e4; e2*e2 = e5; e2*e3 = e6; e2*e4 = -2 e6; "
        "e3*e2 = 2 e6; e4*e2 = -e6; e5*e1 = -e6")

W7_CORE = ("e1*e2 = e4; e1*e3 = e5; e1*e6 = e7; e2*e1 = -e4; e2*e3 = e6; e2*e5 = -e7; "
           "e3*e1 = -e5; e3*e2 = -e6; e3*e4 = e7")

_ENTRIES = [
    Entry("N3_1", 3, 0, "e1*e1 = e2"),
    Entry("N3_2", 3, 0, "e1*e1 = e3; e2*e2 = e3"),
    Entry("N3_3", 3, 0, "e1*e2 = e3; e2*e1 = -e3"),
    Entry("N3_4", 3, 0, lambda l: f"e1*e1 = {_lam(l)} e3; e2*e1 = e3; e2*e2 = e3"),
    Entry("N4_1", 4, 0, "e1*e2 = e3; e2*e1 = e4"),
    Entry("N4_2", 4, 0, "e1*e1 = e3; e2*e1 = e4"),
    Entry("N4_3", 4, 0, "e1*e1 = e3; e2*e2 = e4"),
    Entry("N4_4", 4, 0, "e1*e1 = e3; e1*e2 = e3; e2*e1 = e4; e2*e2 = e3"),
    Entry("N4_5", 4, 0, lambda l: f"e1*e1 = e3; e2*e1 = e4; e2*e2 = e3 + {_lam(l)} e4"),
    Entry("N4_6", 4, 0, lambda l: f"e1*e1 = e3; e1*e2 = e4; e2*e1 = {_lam(l)} e4"),
    Entry("N5_1", 5, 0, "e1*e2 = e3; e2*e1 = e4; e2*e2 = e5"),
    Entry("N5_2", 5, 0, "e1*e1 = e5; e1*e2 = e3; e2*e1 = e4; e2*e2 = e5"),
    Entry("N5_3", 5, 0, "e1*e1 = e3; e1*e2 = e4; e2*e1 = e4; e2*e2 = e5"),
    Entry("N5_4", 5, 0, lambda l: f"e1*e1 = e3 + {_lam(l)} e5; e1*e2 = e3; e2*e1 = e4; e2*e2 = e5"),
    Entry("N6_1", 6, 0, "e1*e1 = e3; e1*e2 = e4; e2*e1 = e5; e2*e2 = e6"),
    Entry("Z6_1", 6, 0, Z6_1, kind="3-step"),
    Entry("Z6_2", 6, 0, Z6_1.replace("e2*e2 = e5", "e2*e2 = e5 + e6"), kind="3-step",
          note="classification table form, e2e2 = e5 + e6"),
    Entry("Z6_2_proof_variant", 6, 0, Z6_1 + "; e1*e1 = e6", kind="3-step-variant",
          note="central-extension form, e1e1 = e6; its relation to Z6_2 is not decided here"),
    Entry("Z7_1", 7, 0, Z6_1 + "; e1*e1 = e7", kind="3-step"),
    Entry("Z8_1", 8, 0, "e1*e1 = e3; e1*e2 = e4; e1*e4 = 2 e7; e1*e5 = -e7; e1*e6 = e8; e2*e1 = e5; "
                        "e2*e2 = e6; e2*e3 = -e7; e2*e4 = e8; e2*e5 = -2 e8; e3*e2 = e7; e4*e1 = e7; "
                        "e4*e2 = 2 e8; e5*e1 = -2 e7; e5*e2 = -e8; e6*e1 = -e8", kind="3-step"),
    Entry("OneGen_2_0", 2, 0, "e1*e1 = e2", kind="one-generated", note="one-generated, ungraded"),
    Entry("OneGen_1_1", 1, 1, "e2*e2 = e1", kind="one-generated", note="one-generated by an odd vector"),
    Entry("LatticeWitness_SZ", 6, 0, Z6_1, kind="witness"),
    Entry("LatticeWitness_SL", 4, 0, "e1*e2 = e3; e2*e1 = -e3; e2*e3 = e4; e3*e2 = -e4", kind="witness"),
    Entry("LatticeWitness_AssLie1", 7, 0, W7_CORE + "; e4*e3 = e7; e5*e2 = -e7; e6*e1 = e7", kind="witness"),
    Entry("LatticeWitness_SL2SZ2", 7, 0, W7_CORE, kind="witness"),
    Entry("LatticeWitness_SZ1", 2, 0, "e1*e2 = e2; e2*e1 = -e2", kind="witness"),
]

CATALOG: dict[str, Entry] = {e.name: e for e in _ENTRIES}


def names(role: str | None = None) -> list[str]:
    return [e.name for e in _ENTRIES if role is None or e.role == role]


def entry(name: str) -> Entry:
    try:
        return CATALOG[name]
    except KeyError:
        raise KeyError(f"no catalog entry named {name!r}") from None


def get(name: str, lam=None) -> SuperAlgebra:
    return entry(name).build(lam)


def instances(role: str | None = None, ungraded_only: bool = False) -> Iterator[tuple[str, SuperAlgebra]]:
    """Every entry, with parametric families sampled at :data:`LAMBDA_SAMPLES`."""
    for e in _ENTRIES:
        if role is not None and e.role != role:
            continue
        if ungraded_only and e.n_odd:
            continue
        if e.parametric:
            for lam in LAMBDA_SAMPLES:
                yield f"{e.name}[{lam}]", e.build(lam)
        else:
            yield e.name, e.build()


def parse_instance_name(text: str) -> tuple[str, Fraction | None]:
    """Split ``"N4_5[1/2]"`` into the entry name and its parameter."""
    if text.endswith("]") and "[" in text:
        base, lam = text[:-1].split("[", 1)
        return base, Fraction(lam)
    return text, None


def get_instance(text: str) -> SuperAlgebra:
    base, lam = parse_instance_name(text)
    return get(base, lam)


@dataclass(frozen=True)
class Claim:
    instance: str
    claim: str
    ok: bool
    detail: str = ""

    def to_dict(self) -> dict:
        d = {"instance": self.instance, "claim": self.claim, "ok": self.ok}
        if self.detail:
            d["detail"] = self.detail
        return d


def verify_entry(e: Entry, name: str, a: SuperAlgebra) -> list[Claim]:
    from .identities import VarietyName, in_variety
    from .representations import coadjoint_is_representation
    from .structure import cube_zero, dim_bound_check, generator_count, nil_report

    out = []
    sz = in_variety(a, VarietyName.SymmetricZinbiel)
    out.append(Claim(name, "symmetric-zinbiel", bool(sz), "" if sz else f"{sz.what} at {sz.witness}"))
    rep = nil_report(a)
    if e.claimed_step:
        out.append(Claim(name, f"step {e.claimed_step}", rep.step_class == e.claimed_step,
                         f"nil_index {rep.nil_index}"))
    out.append(Claim(name, "nil_index <= 4", rep.nil_index is not None and rep.nil_index <= 4,
                     f"nil_index {rep.nil_index}"))
    out.append(Claim(name, "cube zero", cube_zero(a)))
    d = generator_count(a)
    if e.claimed_generators:
        out.append(Claim(name, f"{e.claimed_generators} generators", d == e.claimed_generators, f"counted {d}"))
    out.append(Claim(name, "dimension bound", dim_bound_check(a), f"dim {a.dim}, d {d}"))
    co = coadjoint_is_representation(a)
    out.append(Claim(name, "coadjoint criterion", co == (rep.nil_index <= 3),
                     f"coadjoint representation {co}, nil_index {rep.nil_index}"))
    return out


def verify_all(kinds: Iterable[str] | None = None, lattice: bool = True) -> list[Claim]:
    """Run every claim attached to the catalog; witnesses are re-certified through the lattice."""
    kinds = set(kinds) if kinds is not None else None
    out = []
    for e in _ENTRIES:
        if e.role != "classification" or (kinds is not None and e.kind not in kinds):
            continue
        samples = [(f"{e.name}[{lam}]", e.build(lam)) for lam in LAMBDA_SAMPLES] if e.parametric \
            else [(e.name, e.build())]
        for name, a in samples:
            out.extend(verify_entry(e, name, a))
    if lattice:
        from .identities import lattice_report

        report = lattice_report(strict=False)
        for row in report.rows:
            out.append(Claim(row.witness, f"certifies {row.smaller} ⊂ {row.larger}", row.certified,
                             f"in larger: {bool(row.in_larger)}, in smaller: {bool(row.in_smaller)}"))
        for name, agree, detail in report.characterization:
            out.append(Claim(name, "triple-product characterization", agree, detail))
    return out


# Expected entry counts per kind: the printed multiplication tables.
MANIFEST = {"2-step": 15, "3-step": 4, "one-generated": 2, "witness": 5}


def coverage() -> dict[str, int]:
    counts: dict[str, int] = {}
    for e in _ENTRIES:
        counts[e.kind] = counts.get(e.kind, 0) + 1
    return counts


def export(name: str, lam=None) -> str:
    from .superalgebra import serialize

    e = entry(name)
    comment = f"{name}" + (f" with parameter {lam}" if lam is not None else "")
    if e.note:
        comment += f"\n{e.note}"
    return serialize(e.build(lam), comment=comment)


# Central extensions read off the three-step tables: (base, cocycles in 1-based E_ij notation).
_Z6_COCYCLE = "E15 - E51 - 2 E24 - E42 + E23 + 2 E32"
RECONSTRUCTIONS = {
    "Z6_1": ("N5_1", (_Z6_COCYCLE,)),
    "Z6_2_proof_variant": ("N5_1", ("E11 + " + _Z6_COCYCLE,)),
    "Z7_1": ("N5_1", (_Z6_COCYCLE, "E11")),
    "Z8_1": ("N6_1", ("2 E14 - E15 - E23 + E32 + E41 - 2 E51",
                      "E16 + E24 - 2 E25 + 2 E42 - E52 - E61")),
}


def reconstruct(name: str) -> tuple[SuperAlgebra, bool]:
    """Build ``name`` as a central extension of its base; also report exact table equality."""
    from .extensions import central_extension, parse_cocycle

    base_name, cocycles = RECONSTRUCTIONS[name]
    base = get(base_name)
    built = central_extension(base, [parse_cocycle(c, base) for c in cocycles])
    return built, built.same_table(get(name))
