"""Command-line interface: ``nilsym <verb> ...``.

Exit status is 0 when every requested check passes, 1 when some check
fails, and 2 for usage or input errors.  ``--json PATH`` writes a
machine-readable report; relative paths are resolved against
``$NILSYM_REPORT_DIR`` when it is set.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import warnings
from pathlib import Path

from .algebra import (
    annihilator,
    check_left_symmetric,
    check_novikov,
    derivation_dimension,
    is_nilpotent,
    power_chain,
)
from .catalog import CATALOG, CatalogError, catalog_listing, instantiate, normalize_label
from .cohomology import format_cocycle, h2, parse_cocycle
from .degeneration import WitnessError, necessary_conditions, parse_witness, verify_degeneration
from .expressions import ExpressionError, parse_tscalar
from .extensions import ExtensionSpec, InvalidCocycle, SplitExtensionWarning, central_extension
from .isomorphism import distinctness_json, distinctness_report, distinctness_text, invariants
from .presentation import PresentationError, emit_presentation, parse_presentation
from .suites import SUITES, family_samples, run_suite

REPORT_DIR_ENV = "NILSYM_REPORT_DIR"


class UsageError(Exception):
    pass


def _parse_params(text: str | None) -> dict:
    if not text:
        return {}
    out = {}
    for item in text.split(","):
        if "=" not in item:
            raise UsageError(f"bad --params item {item!r}; expected name=value")
        k, v = item.split("=", 1)
        try:
            out[k.strip()] = parse_tscalar(v.strip())
        except ExpressionError as exc:
            raise UsageError(str(exc)) from exc
    return out


def _load(spec: str, params: dict, samples: int | None = None) -> list:
    """Algebras named by a file path or catalog label.

    A family label without ``--params`` expands to its default samples.
    """
    path = Path(spec)
    if path.is_file():
        try:
            return [parse_presentation(path.read_text(), params, label=path.stem)]
        except PresentationError as exc:
            raise UsageError(f"{spec}: {exc}") from exc
    try:
        key = normalize_label(spec)
    except CatalogError as exc:
        raise UsageError(f"{spec!r} is neither a readable file nor a catalog label") from exc
    if key.startswith("zero") or params or not CATALOG[key].params:
        return [instantiate(key, params)]
    return [instantiate(key, s) for s in family_samples(key, samples)]


def _load_one(spec: str, params: dict) -> object:
    algebras = _load(spec, params)
    if len(algebras) != 1:
        raise UsageError(f"{spec} is a parametric family; pass --params")
    return algebras[0]


def _report_path(path: str | None) -> Path | None:
    if path is None:
        return None
    p = Path(path)
    base = os.environ.get(REPORT_DIR_ENV)
    if base and not p.is_absolute():
        p = Path(base) / p
    return p


def _write_json(args, payload) -> None:
    p = _report_path(args.json)
    if p is None:
        return
    p.parent.mkdir(parents=True, exist_ok=True)
    text = payload if isinstance(payload, str) else json.dumps(payload, indent=2, sort_keys=True) + "\n"
    p.write_text(text)


def _say(args, text: str) -> None:
    if not args.quiet:
        print(text)


# verbs ----------------------------------------------------------------------

def cmd_check(args) -> int:
    records = []
    ok_all = True
    for A in _load(args.algebra, _parse_params(args.params), args.samples):
        ls = check_left_symmetric(A)
        nov = check_novikov(A)
        key = None
        try:
            key = normalize_label(A.label)
        except CatalogError:
            pass
        expect_novikov = None if key is None or key.startswith("zero") else CATALOG[key].kind == "N"
        ok = ls is None and (expect_novikov is None or (nov is None) == expect_novikov)
        ok_all &= ok
        rec = {
            "algebra": A.label,
            "left_symmetric": ls is None,
            "left_symmetric_violation": str(ls) if ls else None,
            "novikov": nov is None,
            "novikov_violation": str(nov) if nov else None,
            "nilpotent": is_nilpotent(A),
            "power_chain": [S.dim for S in power_chain(A)],
            "dim_ann": annihilator(A).dim,
            "dim_der": derivation_dimension(A),
            "passed": ok,
        }
        records.append(rec)
        lines = [f"{'PASS' if ok else 'FAIL'}  {A.label}"]
        lines.append(f"  left-symmetric: {'yes' if ls is None else 'no, ' + str(ls)}")
        lines.append(f"  Novikov: {'yes' if nov is None else 'no, ' + str(nov)}")
        lines.append(f"  nilpotent: {rec['nilpotent']}  power chain dims {rec['power_chain']}")
        lines.append(f"  dim Ann = {rec['dim_ann']}  dim Der = {rec['dim_der']}")
        _say(args, "\n".join(lines))
    _write_json(args, {"check": records, "passed": ok_all})
    return 0 if ok_all else 1


def cmd_cohomology(args) -> int:
    out = []
    for A in _load(args.algebra, _parse_params(args.params), args.samples):
        H = h2(A)
        rec = {"algebra": A.label, **H.summary()}
        out.append(rec)
        _say(args, f"{A.label}: dim Z2 = {H.dim_z2}, dim B2 = {H.dim_b2}, "
                   f"dim H2N = {H.dim_h2n}, dim H2L = {H.dim_h2}")
        _say(args, "  H2N: " + ", ".join(rec["H2N_reps"]))
        if rec["H2L_extra_reps"]:
            _say(args, "  extra: " + ", ".join(rec["H2L_extra_reps"]))
    _write_json(args, {"cohomology": out})
    return 0


def cmd_extend(args) -> int:
    params = _parse_params(args.params)
    base = _load_one(args.base, params)
    if not args.cocycle:
        raise UsageError("extend needs at least one --cocycle")
    try:
        thetas = [parse_cocycle(c, base.n, params) for c in args.cocycle]
    except ExpressionError as exc:
        raise UsageError(str(exc)) from exc
    issues = ExtensionSpec(base, thetas).issues()
    try:
        with warnings.catch_warnings():
            warnings.simplefilter("ignore", SplitExtensionWarning)
            E = central_extension(base, thetas, label=f"{base.label}+ext")
    except InvalidCocycle as exc:
        print(f"error: {exc}", file=sys.stderr)
        _write_json(args, {"base": base.label, "error": str(exc)})
        return 1
    for msg in issues:
        print(f"warning: split extension: {msg}", file=sys.stderr)
    text = emit_presentation(E)
    if not args.quiet:
        sys.stdout.write(text)
    _write_json(args, {
        "base": base.label,
        "cocycles": [format_cocycle(m) for m in thetas],
        "split": bool(issues),
        "issues": issues,
        "presentation": text,
    })
    return 0


def cmd_invariants(args) -> int:
    params = _parse_params(args.params)
    algebras = []
    for spec in args.algebras:
        algebras += _load(spec, params, args.samples)
    rows = []
    for A in algebras:
        inv = invariants(A)
        rows.append((A.label, inv))
        _say(args, f"{A.label:<20} ann={inv.dim_ann} sq={inv.dim_sq} cube={inv.dim_cube} der={inv.dim_der} "
                   f"lann={inv.left_ann_dim} rann={inv.right_ann_dim} comm={inv.commutative_rank}")
    payload = {"invariants": {label: inv.__dict__ for label, inv in rows}}
    if len(algebras) > 1:
        report = distinctness_report([(A.label, A) for A in algebras], args.search_budget, args.seed or 0)
        _say(args, distinctness_text(report))
        payload = json.loads(distinctness_json(report))
    _write_json(args, payload)
    return 0


def cmd_degenerate(args) -> int:
    params = _parse_params(args.params)
    try:
        witness = parse_witness(Path(args.witness).read_text())
    except OSError as exc:
        raise UsageError(f"cannot read witness file: {exc}") from exc
    except WitnessError as exc:
        raise UsageError(f"{args.witness}: {exc}") from exc
    target = _load_one(args.target, _parse_params(args.target_params))
    if witness.param_index:
        source = normalize_label(args.source)
    else:
        source = _load_one(args.source, params)
    res = verify_degeneration(source, witness, target)
    src_label = source if isinstance(source, str) else source.label
    _say(args, f"{'PASS' if res.ok else 'FAIL'}  {src_label} -> {target.label}: {res}")
    payload = {"source": src_label, "target": target.label, "passed": res.ok, "result": str(res)}
    if not isinstance(source, str) and source != target:
        nec = necessary_conditions(source, target)
        payload["necessary_conditions"] = {"ok": nec.ok, "violated": nec.violated}
        if not nec.ok:
            _say(args, "  necessary conditions violated: " + "; ".join(nec.violated))
    _write_json(args, payload)
    return 0 if res.ok else 1


def cmd_suite(args) -> int:
    report = run_suite(args.name, samples=args.samples, seed=args.seed or 0)
    print(report.to_text(quiet=args.quiet))
    if args.json is None and os.environ.get(REPORT_DIR_ENV):
        args.json = f"{args.name}.json"
    _write_json(args, report.to_json())
    return 0 if report.passed else 1


def cmd_catalog(args) -> int:
    if args.action == "list":
        listing = catalog_listing()
        for e in listing:
            params = f"({','.join(e['params'])})" if e["params"] else ""
            _say(args, f"{e['label'] + params:<18} dim {e['dim']}  {e['kind']:<15} {e['provenance']}")
        _write_json(args, {"catalog": listing})
        return 0
    if not args.label:
        raise UsageError("catalog show needs a label")
    A = _load_one(args.label, _parse_params(args.params))
    sys.stdout.write(emit_presentation(A))
    return 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--params", help="parameter bindings, e.g. lam=2,alpha=1/3")
    common.add_argument("--samples", type=int, help="number of default samples per family")
    common.add_argument("--seed", type=int, help="random seed")
    common.add_argument("--json", metavar="PATH", help="write a JSON report to PATH")
    common.add_argument("--quiet", action="store_true", help="print failures and summaries only")

    p = argparse.ArgumentParser(prog="nilsym", description="Exact checks for small nilpotent left-symmetric algebras.")
    sub = p.add_subparsers(dest="verb", required=True)

    s = sub.add_parser("check", parents=[common], help="identity, nilpotency and derivation checks")
    s.add_argument("algebra", help="presentation file or catalog label")
    s.set_defaults(func=cmd_check)

    s = sub.add_parser("cohomology", parents=[common], help="Z2, B2, H2N and H2L")
    s.add_argument("algebra")
    s.set_defaults(func=cmd_cohomology)

    s = sub.add_parser("extend", parents=[common], help="central extension by cocycles")
    s.add_argument("base")
    s.add_argument("--cocycle", action="append", default=[], help="Delta-expression such as 'D23' (repeatable)")
    s.set_defaults(func=cmd_extend)

    s = sub.add_parser("invariants", parents=[common], help="invariant vectors and pairwise distinctness")
    s.add_argument("algebras", nargs="+")
    s.add_argument("--search-budget", type=int, default=0, help="isomorphism search budget for unseparated pairs")
    s.set_defaults(func=cmd_invariants)

    s = sub.add_parser("degenerate", parents=[common], help="verify a degeneration witness")
    s.add_argument("source")
    s.add_argument("witness", help="witness file")
    s.add_argument("target")
    s.add_argument("--target-params", help="parameter bindings for the target")
    s.set_defaults(func=cmd_degenerate)

    s = sub.add_parser("suite", parents=[common], help="run a verification suite")
    s.add_argument("name", choices=sorted(SUITES))
    s.set_defaults(func=cmd_suite)

    s = sub.add_parser("catalog", parents=[common], help="list or show catalog entries")
    s.add_argument("action", choices=["list", "show"])
    s.add_argument("label", nargs="?")
    s.set_defaults(func=cmd_catalog)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, CatalogError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
