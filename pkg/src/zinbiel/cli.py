"""Command-line interface.

Exit codes: 0 all checks pass, 1 some check fails, 2 bad input or usage,
3 a computed object contradicts a proven structural result.

Algebras are read from ``.alg`` files, or named directly as
``catalog:NAME`` / ``catalog:NAME[lam]``.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from . import catalog
from . import exactlin as el
from .envelope import MAX_RANK, grassmann_check
from .errors import ParseError, PreconditionError, TheoremContradiction, ZinbielError
from .extensions import (cocycle_space, admits_nonsplit_extension, central_extension, decompose_even,
                         decompose_odd, even_double_extension, form_checks, nondegenerate_invariant_form,
                         odd_double_extension, parse_cocycle, quadratic_consequences)
from .identities import LatticeError, VarietyName, in_variety, lattice_report
from .representations import adjoint_pair, coadjoint_pair, is_representation
from .structure import annihilator, cube_zero, dim_bound, generator_count, nil_report
from .superalgebra import SuperAlgebra, format_combination, parse_with_form, serialize

OK, FAIL, USAGE, CONTRADICTION = 0, 1, 2, 3
SCHEMA_PATH = Path(__file__).with_name("report_schema.json")


class UsageError(ZinbielError):
    pass


class Report:
    def __init__(self, argv):
        self.command = list(argv)
        self.checks: list[dict] = []
        self.result: dict = {}
        self.alarm: str | None = None
        self.usage_error = False
        self.as_json = False
        self.raw: str | None = None  # plain-text payload printed as is outside --json

    def check(self, name: str, verdict, **extra) -> bool:
        ok = bool(verdict)
        row = {"name": name, "ok": ok}
        if not ok and hasattr(verdict, "to_dict"):
            d = verdict.to_dict()
            for key in ("what", "witness", "residual"):
                if key in d:
                    row[key] = d[key]
        row.update(extra)
        self.checks.append(row)
        return ok

    @property
    def exit_code(self) -> int:
        if self.usage_error:
            return USAGE
        if self.alarm:
            return CONTRADICTION
        return OK if all(c["ok"] for c in self.checks) else FAIL

    def to_dict(self) -> dict:
        d = {"command": self.command, "checks": self.checks, "result": self.result,
             "ok": self.exit_code == OK, "exit_code": self.exit_code}
        if self.alarm:
            d["alarm"] = self.alarm
        return d


def _plain(obj):
    """Make results JSON friendly: rationals as strings, tuples as lists."""
    if isinstance(obj, Fraction):
        return str(obj)
    if isinstance(obj, dict):
        return {str(k): _plain(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_plain(x) for x in obj]
    return obj


def dumps(report: Report) -> str:
    return json.dumps(_plain(report.to_dict()), sort_keys=True, indent=2, ensure_ascii=False)


def render(report: Report) -> str:
    lines = []
    for c in report.checks:
        line = f"{'PASS' if c['ok'] else 'FAIL'}  {c['name']}"
        if not c["ok"] and "witness" in c:
            line += f"  ({c.get('what', '')} at {', '.join(map(str, c['witness']))})"
        lines.append(line)
    for key in sorted(report.result):
        value = report.result[key]
        if isinstance(value, str) and "\n" in value:
            lines.append(f"{key}:")
            lines.extend("  " + x for x in value.rstrip("\n").splitlines())
        else:
            lines.append(f"{key}: {json.dumps(_plain(value), sort_keys=True, ensure_ascii=False)}")
    if report.alarm:
        lines.append(f"ALARM: {report.alarm}")
    return "\n".join(lines)


# -- input ---------------------------------------------------------------------------------


def load(source: str) -> tuple[SuperAlgebra, el.Matrix | None]:
    if source.startswith("catalog:"):
        try:
            return catalog.get_instance(source[len("catalog:"):]), None
        except (KeyError, ValueError) as exc:
            raise UsageError(str(exc)) from None
    try:
        text = Path(source).read_text()
    except OSError as exc:
        raise UsageError(f"cannot read {source}: {exc.strerror}") from None
    return parse_with_form(text)


def _load_json(path: str):
    try:
        return json.loads(Path(path).read_text())
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: {exc.msg}", exc.lineno) from None


def _matrix(value, a: SuperAlgebra, what: str) -> el.Matrix:
    if isinstance(value, str):
        return parse_cocycle(value, a)
    try:
        M = el.matrix(value)
    except (TypeError, ValueError):
        raise ParseError(f"{what} is not a matrix of rationals") from None
    if len(M) != a.dim or any(len(r) != a.dim for r in M):
        raise ParseError(f"{what} must be {a.dim}x{a.dim}")
    return M


def _vector(value, n: int, what: str) -> tuple:
    try:
        v = el.vector(value)
    except (TypeError, ValueError):
        raise ParseError(f"{what} is not a vector of rationals") from None
    if len(v) != n:
        raise ParseError(f"{what} must have length {n}")
    return v


def _variety(name: str) -> VarietyName:
    try:
        return VarietyName(name)
    except ValueError:
        raise UsageError(f"unknown variety {name!r}") from None


def _form_for(a: SuperAlgebra, G, data=None) -> el.Matrix:
    if data and "form" in data:
        return _matrix(data["form"], a, "form")
    if G is not None:
        return G
    found = nondegenerate_invariant_form(a)
    if found is None:
        raise PreconditionError("invariant scalar product", "none given and none found")
    return found


# -- commands ------------------------------------------------------------------------------


def cmd_check(args, rep: Report) -> None:
    a, _ = load(args.file)
    rep.check(args.variety, in_variety(a, _variety(args.variety)))


def cmd_analyze(args, rep: Report) -> None:
    a, G = load(args.file)
    nr = nil_report(a)
    ann = annihilator(a)
    sz = in_variety(a, VarietyName.SymmetricZinbiel)
    rep.result["dim"] = [a.n_even, a.n_odd]
    rep.result["nil"] = nr.to_dict()
    rep.result["annihilator"] = ann.to_dict(a.labels)
    rep.result["symmetric_zinbiel"] = bool(sz)
    if nr.nil_index is None:
        rep.check("nilpotent", False)
        return
    d = generator_count(a)
    rep.result["generators"] = d
    rep.result["dimension_bound"] = dim_bound(d)
    cz = cube_zero(a)
    rep.result["cube_zero"] = cz
    bound_ok = a.dim <= dim_bound(d)
    rep.check("dimension bound", bound_ok, bound=dim_bound(d))
    if sz and (nr.nil_index > 4 or not cz or not bound_ok):
        rep.alarm = (f"symmetric Zinbiel algebra with nil_index {nr.nil_index}, cube_zero {cz}, "
                     f"dim {a.dim} against bound {dim_bound(d)}")
    if G is not None:
        forms = form_checks(a, G)
        rep.check("invariant scalar product", forms.ok, failures=forms.failures())
        zinbiel = in_variety(a, VarietyName.LeftZinbiel) or in_variety(a, VarietyName.RightZinbiel)
        if forms.ok and zinbiel:
            quadratic_consequences(a, G)


def cmd_rep_check(args, rep: Report) -> None:
    a, _ = load(args.file)
    which = "coadjoint" if args.coadjoint else "adjoint"
    pair = coadjoint_pair(a) if args.coadjoint else adjoint_pair(a)
    verdict = is_representation(a, pair)
    rep.check(f"{which} representation", verdict)
    if args.coadjoint and in_variety(a, VarietyName.SymmetricZinbiel):
        nil = nil_report(a).nil_index
        rep.result["nil_index"] = nil
        if nil is not None and bool(verdict) != (nil <= 3):
            rep.alarm = f"coadjoint representation {bool(verdict)} but nil_index {nil}"


def cmd_extend_central(args, rep: Report) -> None:
    a, _ = load(args.file)
    if args.cocycles is None:
        space = cocycle_space(a, VarietyName.SymmetricZinbiel, args.parity)
        rep.result["cocycles"] = space.to_dict()
        rep.result["nonsplit_extension_exists"] = admits_nonsplit_extension(a, space)
        rep.check("cocycle space", True)
        return
    data = _load_json(args.cocycles)
    if isinstance(data, dict):
        data = data.get("cocycles", [])
    if not isinstance(data, list) or not data:
        raise ParseError("cocycle file must hold a non-empty list")
    omegas = [_matrix(w, a, f"cocycle {k + 1}") for k, w in enumerate(data)]
    try:
        built = central_extension(a, omegas)
    except PreconditionError as exc:
        rep.check("cocycle condition", False, what=str(exc))
        return
    rep.check("cocycle condition", True)
    rep.result["algebra"] = serialize(built)


def cmd_double_extend(args, rep: Report) -> None:
    a, G = load(args.file)
    data = _load_json(args.data)
    if not isinstance(data, dict):
        raise ParseError("double-extension data must be a JSON object")
    G = _form_for(a, G, data)
    n = a.dim
    zero = [[0] * n for _ in range(n)]
    delta = _matrix(data.get("delta", zero), a, "delta")
    a0 = _vector(data.get("a0", [0] * n), n, "a0")
    try:
        if args.odd:
            D = _matrix(data.get("D", zero), a, "D")
            ext = odd_double_extension(a, G, delta, D, a0)
        else:
            ext = even_double_extension(a, G, delta, a0, Fraction(str(data.get("alpha", 0))))
    except PreconditionError as exc:
        rep.check("preconditions", False, what=str(exc))
        return
    rep.check("preconditions", True)
    rep.check("invariant scalar product", form_checks(ext.algebra, ext.form).ok)
    rep.check("symmetric-zinbiel", in_variety(ext.algebra, VarietyName.SymmetricZinbiel))
    nil = nil_report(ext.algebra).nil_index
    rep.result["nil_index"] = nil
    if nil is None or nil > 3:
        rep.alarm = f"quadratic double extension with nil_index {nil}"
    rep.result["algebra"] = serialize(ext.algebra, form=ext.form)


def cmd_decompose(args, rep: Report) -> None:
    a, G = load(args.file)
    G = _form_for(a, G)
    try:
        dec = (decompose_odd if args.odd else decompose_even)(a, G)
    except PreconditionError as exc:
        rep.check("decomposable", False, what=str(exc))
        return
    rebuilt = dec.rebuild()
    from .superalgebra import change_basis, transform_form

    same = (change_basis(a, dec.witness).same_table(rebuilt.algebra)
            and transform_form(G, dec.witness) == rebuilt.form)
    rep.check("decomposable", True)
    rep.check("rebuild matches", same)
    rep.result["kind"] = dec.kind
    rep.result["e"] = format_combination(dec.e, a.labels)
    rep.result["d"] = format_combination(dec.d, a.labels)
    rep.result["H"] = serialize(dec.H, form=dec.form)
    rep.result["delta"] = dec.delta
    rep.result["D"] = dec.D
    rep.result["a0"] = dec.a0
    rep.result["alpha"] = dec.alpha


def cmd_catalog(args, rep: Report) -> None:
    if args.action == "list":
        rep.result["entries"] = [{"name": e, "kind": catalog.entry(e).kind,
                                  "dim": [catalog.entry(e).n_even, catalog.entry(e).n_odd],
                                  "parametric": catalog.entry(e).parametric} for e in catalog.names()]
        rep.check("catalog", True)
    elif args.action == "show":
        if not args.name:
            raise UsageError("catalog show needs a name")
        base, lam = catalog.parse_instance_name(args.name)
        try:
            rep.result["algebra"] = rep.raw = catalog.export(base, lam)
        except (KeyError, ValueError) as exc:
            raise UsageError(str(exc)) from None
        rep.check("catalog", True)
    else:
        for claim in catalog.verify_all():
            rep.check(f"{claim.instance}: {claim.claim}", claim.ok, detail=claim.detail)
        for name in catalog.RECONSTRUCTIONS:
            rep.check(f"{name}: central extension of {catalog.RECONSTRUCTIONS[name][0]}",
                      catalog.reconstruct(name)[1])


def cmd_lattice(args, rep: Report) -> None:
    report = lattice_report(strict=False)
    for row in report.rows:
        rep.check(f"{row.smaller} ⊂ {row.larger} by {row.witness}", row.certified,
                  in_larger=bool(row.in_larger), in_smaller=bool(row.in_smaller))
    for name, agree, detail in report.characterization:
        rep.check(f"triple-product characterization on {name}", agree, detail=detail)


def cmd_grassmann(args, rep: Report) -> None:
    a, _ = load(args.file)
    if not 0 <= args.rank <= MAX_RANK:
        raise UsageError(f"--rank must be between 0 and {MAX_RANK}")
    table = grassmann_check(a, args.rank)
    rep.result["verdicts"] = table
    bad = sorted(k for k, v in table.items() if not v["agree"])
    for k in sorted(table):
        rep.check(f"{k} agrees", table[k]["agree"])
    if bad and args.rank >= 3:
        rep.alarm = "super and envelope verdicts differ on " + ", ".join(bad)


# -- parser --------------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="zinbiel", description="Exact checks for Zinbiel superalgebras.")
    p.add_argument("--json", action="store_true", help="machine-readable output")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("check", help="test membership in a variety")
    c.add_argument("file")
    c.add_argument("--variety", required=True, help=", ".join(v.value for v in VarietyName))
    c.set_defaults(func=cmd_check)

    c = sub.add_parser("analyze", help="nilpotency, annihilator, generators, dimension bound")
    c.add_argument("file")
    c.set_defaults(func=cmd_analyze)

    c = sub.add_parser("rep-check", help="adjoint or coadjoint representation")
    c.add_argument("file")
    g = c.add_mutually_exclusive_group(required=True)
    g.add_argument("--adjoint", action="store_true")
    g.add_argument("--coadjoint", action="store_true")
    c.set_defaults(func=cmd_rep_check)

    c = sub.add_parser("extend", help="central extensions")
    ext = c.add_subparsers(dest="kind", required=True)
    e = ext.add_parser("central")
    e.add_argument("file")
    e.add_argument("--cocycles", help="JSON list of cocycles (E_ij strings or matrices)")
    e.add_argument("--parity", type=int, choices=(0, 1), default=0)
    e.set_defaults(func=cmd_extend_central)

    for name, func, help_ in (("double-extend", cmd_double_extend, "even or odd double extension"),
                              ("decompose", cmd_decompose, "split off a double extension")):
        c = sub.add_parser(name, help=help_)
        c.add_argument("file")
        g = c.add_mutually_exclusive_group(required=True)
        g.add_argument("--even", action="store_true")
        g.add_argument("--odd", action="store_true")
        if name == "double-extend":
            c.add_argument("--data", required=True, help="JSON with delta, a0, alpha or D, optional form")
        c.set_defaults(func=func)

    c = sub.add_parser("catalog", help="list, show or verify the catalog")
    c.add_argument("action", choices=("list", "show", "verify"))
    c.add_argument("name", nargs="?")
    c.set_defaults(func=cmd_catalog)

    c = sub.add_parser("lattice-verify", help="certify every strict inclusion of the lattice")
    c.set_defaults(func=cmd_lattice)

    c = sub.add_parser("grassmann-check", help="compare signed verdicts with the Grassmann envelope")
    c.add_argument("file")
    c.add_argument("--rank", type=int, default=3)
    c.set_defaults(func=cmd_grassmann)
    return p


def run(argv=None) -> tuple[Report, int]:
    argv = list(sys.argv[1:] if argv is None else argv)
    rep = Report(argv)
    args = build_parser().parse_args(argv)
    rep.as_json = args.json
    try:
        args.func(args, rep)
    except TheoremContradiction as exc:
        rep.alarm = str(exc)
    except (ParseError, UsageError, ValueError) as exc:
        rep.checks.append({"name": "input", "ok": False, "what": str(exc)})
        rep.result = {}
        rep.usage_error = True
    except PreconditionError as exc:
        rep.check(exc.condition, False, what=str(exc))
    except LatticeError as exc:  # pragma: no cover - lattice_report runs non-strict here
        rep.check("lattice", False, what=str(exc))
    return rep, rep.exit_code


def main(argv=None) -> int:
    try:
        rep, code = run(argv)
    except SystemExit as exc:  # argparse usage errors
        return USAGE if exc.code else 0
    as_json = rep.as_json
    if code == USAGE and not as_json:
        print(f"error: {rep.checks[-1]['what']}", file=sys.stderr)
        return code
    if as_json:
        print(dumps(rep))
    elif rep.raw is not None:
        print(rep.raw, end="" if rep.raw.endswith("\n") else "\n")
    else:
        print(render(rep))
    return code


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
