"""Command-line front end: analysis reports over catalog or file-supplied rings.

Exit codes: 0 success, 1 validation or theorem failure, 2 usage error.
All user-facing input and output uses labels, never basis indices; the
character rows are reported as value vectors named chi0, chi1, ...
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

import numpy as np

from . import catalog, grading, kernel, modular, spectral, subcat
from .errors import FusionRingError, NonCommutative, UnknownName, ValidationFailed
from .ring import FusionRing, exact_matvec, validate


def _complex_json(z: complex):
    return [float(z.real), float(z.imag)]


def _load_ring_arg(arg: str) -> tuple[FusionRing, object]:
    """Resolve --ring as a file path or a builtin name; returns (ring, entry|None)."""
    path = Path(arg)
    if arg.endswith(".json") or path.is_file():
        return catalog.load_ring(path), None
    entry = catalog.builtin(arg)
    return entry.ring, entry


def _character_block(ring: FusionRing, table: spectral.CharacterTable) -> dict:
    return {
        "labels": list(ring.labels),
        "characters": {
            f"chi{t}": [_complex_json(z) for z in table.characters[t]]
            for t in range(table.count)
        },
        "codegrees": [float(f) for f in table.codegrees],
        "fp_character": "chi0",
    }


def _simple_block(ring, fp, table, i, eps, seed) -> dict:
    block: dict = {
        "label": ring.labels[i],
        "faithful": subcat.is_faithful(ring, i),
        "index": grading.object_index(ring, i),
        "order": grading.object_order(ring, i),
    }
    grad = grading.universal_grading(ring, i, fp, table, eps=eps, seed=seed)
    block["grading_components"] = [
        [ring.labels[m] for m in comp] for comp in grad.components]
    block["grading_character_checked"] = grad.character_checked
    if table is not None:
        e = ring.basis_vector(i)
        block["kernel_characters"] = sorted(
            f"chi{t}" for t in kernel.kernel_of_class(ring, fp, table, e, eps=eps))
        block["center_characters"] = sorted(
            f"chi{t}" for t in kernel.center_of_class(ring, fp, table, e, eps=eps))
    return block


def _run_checks(ring, fp, table, eps, seed) -> list[dict]:
    """Theorem checks reported in analyze; one pass/fail entry each."""
    checks = []

    def record(name, fn):
        try:
            detail = fn()
            checks.append({"name": name, "passed": True, "detail": detail or "ok"})
        except (FusionRingError, AssertionError) as exc:
            checks.append({"name": name, "passed": False, "detail": str(exc)})

    def brauer_equivalence():
        for i in range(ring.rank):
            faithful = subcat.is_faithful(ring, i)
            indecomp = subcat.is_indecomposable_matrix(ring.fusion_matrix(i))
            assert faithful == indecomp, f"simple {ring.labels[i]}: faithful != indecomposable"
            if table is not None:
                report = kernel.verify_brauer(ring, fp, table, i, eps=eps)
                assert report.faithful_expected == faithful

    def residue_classes():
        for i in range(ring.rank):
            ind = grading.object_index(ring, i)
            cap = 3 * ring.rank * ind
            A = ring.fusion_matrix(i)
            v = ring.basis_vector(ring.unit)
            seen: dict[int, int] = {ring.unit: 0}
            for n in range(1, cap + 1):
                v = exact_matvec(A, v)
                for k in map(int, np.nonzero(v)[0]):
                    if k in seen:
                        assert (n - seen[k]) % ind == 0, (
                            f"simple {ring.labels[k]} occurs at exponents "
                            f"{seen[k]} and {n}, not congruent mod {ind}")
                    else:
                        seen[k] = n

    def index_divides_order():
        for i in range(ring.rank):
            ind = grading.object_index(ring, i)
            order = grading.object_order(ring, i)
            assert order % ind == 0, (
                f"simple {ring.labels[i]}: order {order} not divisible by index {ind}")

    def orthogonality():
        C = table.characters
        weights = 1.0 / table.codegrees
        gram = np.einsum("t,ti,tj->ij", weights, C, C.conj())
        residual = float(np.abs(gram - np.eye(ring.rank)).max())
        assert residual < spectral.AGGREGATE_EPS, f"orthogonality residual {residual:g}"
        return f"max residual {residual:.2e}"

    record("brauer_equivalence", brauer_equivalence)
    record("power_residue_classes", residue_classes)
    record("index_divides_order", index_divides_order)
    if table is not None:
        record("character_orthogonality", orthogonality)
    return checks


def _analyze_report(ring, eps, seed, with_checks=True) -> dict:
    fp = spectral.fp_character(ring, eps=eps)
    commutative = spectral.is_commutative(ring)
    table = spectral.character_table(ring, eps=eps, seed=seed) if commutative else None
    report: dict = {
        "ring": {
            "name": ring.name,
            "rank": ring.rank,
            "labels": list(ring.labels),
            "commutative": commutative,
            "fp_dims": {ring.labels[j]: float(fp.dims[j]) for j in range(ring.rank)},
            "global_dim": float(fp.global_dim),
        }
    }
    if table is not None:
        report["character_table"] = _character_block(ring, table)
    else:
        report["notice"] = "noncommutative Grothendieck ring: no character data"
    report["simples"] = [
        _simple_block(ring, fp, table, i, eps, seed) for i in range(ring.rank)]
    if with_checks:
        report["checks"] = _run_checks(ring, fp, table, eps, seed)
    return report


def _render_text(report: dict, out) -> None:
    def emit(line=""):
        print(line, file=out)

    if "validation" in report:
        v = report["validation"]
        emit(f"ring: {report.get('name', '')}")
        emit(f"valid: {v['valid']}")
        for name, witness in v["violations"]:
            emit(f"  violated {name} at ({', '.join(witness)})")
        return
    if "builtins" in report:
        for name in report["builtins"]:
            emit(name)
        return

    ring_info = report.get("ring")
    if ring_info:
        emit(f"ring: {ring_info['name'] or '(unnamed)'} "
             f"(rank {ring_info['rank']}, {'commutative' if ring_info['commutative'] else 'noncommutative'})")
        dims = ", ".join(f"{k} = {v:.12g}" for k, v in ring_info["fp_dims"].items())
        emit(f"FP dims: {dims}")
        emit(f"global dim: {ring_info['global_dim']:.12g}")
    if "notice" in report:
        emit(f"notice: {report['notice']}")
    ct = report.get("character_table")
    if ct:
        emit("characters (codegree | values on " + ", ".join(ct["labels"]) + "):")
        for t, name in enumerate(sorted(ct["characters"], key=lambda s: int(s[3:]))):
            values = ", ".join(
                f"{re:.10g}" if im == 0 else f"{re:.10g}{im:+.10g}i"
                for re, im in ct["characters"][name])
            emit(f"  {name}: {ct['codegrees'][t]:.10g} | {values}")
    for block in report.get("simples", []):
        emit(f"simple {block['label']}: faithful={block['faithful']} "
             f"ind={block['index']} order={block['order']}")
        comps = "; ".join(
            f"D{a}={{{', '.join(c)}}}" for a, c in enumerate(block["grading_components"]))
        emit(f"  grading: {comps}")
        if "kernel_characters" in block:
            emit(f"  kernel: {{{', '.join(block['kernel_characters'])}}} "
                 f"center: {{{', '.join(block['center_characters'])}}}")
    for extra in ("centralizers", "projective_centralizers"):
        if extra in report:
            emit(f"{extra.replace('_', ' ')}:")
            for label, members in report[extra].items():
                emit(f"  {label}: {{{', '.join(members)}}}")
    if "invertibles" in report:
        emit(f"invertibles: {{{', '.join(report['invertibles'])}}}")
    if "verlinde_round_trip" in report:
        emit(f"verlinde round trip: {'PASS' if report['verlinde_round_trip'] else 'FAIL'}")
    if "kernel" in report:
        emit(f"kernel characters: {{{', '.join(report['kernel'])}}}")
        emit(f"center characters: {{{', '.join(report['center'])}}}")
    if "grading" in report:
        g = report["grading"]
        emit(f"index: {g['index']}  order: {g['order']}")
        comps = "; ".join(f"D{a}={{{', '.join(c)}}}" for a, c in enumerate(g["components"]))
        emit(f"components: {comps}")
        emit(f"character cross-check: {'done' if g['character_checked'] else 'skipped'}")
    if "brauer" in report:
        b = report["brauer"]
        emit(f"faithful expected: {b['faithful_expected']} (cap {b['cap_used']})")
        for label, n in b["exponents"].items():
            emit(f"  {label}: first exponent {n}")
    for check in report.get("checks", []):
        emit(f"check {check['name']}: {'PASS' if check['passed'] else 'FAIL'} ({check['detail']})")


def _emit(report: dict, fmt: str, out) -> None:
    if fmt == "json":
        print(json.dumps(report, sort_keys=True, indent=2), file=out)
    else:
        _render_text(report, out)


def _add_common(p: argparse.ArgumentParser, ring_required=True):
    p.add_argument("--ring", required=ring_required,
                   help="builtin name (see list-builtins) or path to a ring JSON file")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--epsilon", type=float, default=spectral.DEFAULT_EPS)
    p.add_argument("--seed", type=int, default=spectral.DEFAULT_SEED)


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fusionring",
        description="Compute fusion ring invariants: FP dimensions, characters, "
                    "kernels, gradings, and S-matrix centralizers.")
    sub = parser.add_subparsers(dest="command", required=True)

    _add_common(sub.add_parser("validate", help="check the based-ring axioms"))
    p = sub.add_parser("analyze", help="full report with theorem checks")
    _add_common(p)
    p.add_argument("--no-verify", action="store_true", help="skip theorem checks")
    _add_common(sub.add_parser("characters", help="character table and codegrees"))
    p = sub.add_parser("kernel", help="kernel and center of one simple")
    _add_common(p)
    p.add_argument("--object", required=True, metavar="LABEL")
    p = sub.add_parser("grading", help="index, order and universal grading of one simple")
    _add_common(p)
    p.add_argument("--object", required=True, metavar="LABEL")
    p = sub.add_parser("brauer", help="tensor-power coverage of one simple")
    _add_common(p)
    p.add_argument("--object", required=True, metavar="LABEL")
    p.add_argument("--cap", type=int, default=None)
    p = sub.add_parser("modular", help="centralizer tables from an S-matrix")
    _add_common(p)
    p.add_argument("--smatrix", default=None,
                   help="path to an S-matrix JSON file (defaults to builtin modular data)")
    p = sub.add_parser("list-builtins", help="list built-in ring names")
    p.add_argument("--format", choices=("text", "json"), default="text")
    return parser


def _object_index(ring: FusionRing, label: str, parser) -> int:
    try:
        return ring.index_of(label)
    except KeyError:
        parser.error(f"ring has no simple labeled {label!r}")


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    out = sys.stdout
    try:
        if args.command == "list-builtins":
            report = {"builtins": catalog.all_builtin_names()}
            _emit(report, args.format, out)
            return 0

        try:
            ring, entry = _load_ring_arg(args.ring)
        except ValidationFailed as exc:
            # the validate subcommand still reports on a constructible-but-invalid ring
            if args.command != "validate" or exc.ring is None:
                raise
            ring, entry = exc.ring, None
        eps, seed = getattr(args, "epsilon", spectral.DEFAULT_EPS), getattr(args, "seed", 0)

        if args.command == "validate":
            report_obj = validate(ring)
            report = {"name": ring.name,
                      "validation": {"valid": report_obj.valid,
                                     "violations": [[n, [ring.labels[i] for i in w]]
                                                    for n, w in report_obj.violations]}}
            _emit(report, args.format, out)
            return 0 if report_obj.valid else 1

        if args.command == "analyze":
            report = _analyze_report(ring, eps, seed, with_checks=not args.no_verify)
            _emit(report, args.format, out)
            failed = any(not c["passed"] for c in report.get("checks", []))
            return 1 if failed else 0

        if args.command == "characters":
            table = spectral.character_table(ring, eps=eps, seed=seed)
            fp = spectral.fp_character(ring, eps=eps)
            report = {
                "ring": {"name": ring.name, "rank": ring.rank,
                         "labels": list(ring.labels), "commutative": True,
                         "fp_dims": {ring.labels[j]: float(fp.dims[j])
                                     for j in range(ring.rank)},
                         "global_dim": float(fp.global_dim)},
                "character_table": _character_block(ring, table),
            }
            _emit(report, args.format, out)
            return 0

        if args.command in ("kernel", "grading", "brauer"):
            i = _object_index(ring, args.object, parser)
            fp = spectral.fp_character(ring, eps=eps)
            commutative = spectral.is_commutative(ring)
            table = spectral.character_table(ring, eps=eps, seed=seed) if commutative else None
            if args.command == "kernel":
                if table is None:
                    raise NonCommutative("kernel of a class requires a commutative ring")
                e = ring.basis_vector(i)
                report = {
                    "label": args.object,
                    "kernel": sorted(f"chi{t}" for t in
                                     kernel.kernel_of_class(ring, fp, table, e, eps=eps)),
                    "center": sorted(f"chi{t}" for t in
                                     kernel.center_of_class(ring, fp, table, e, eps=eps)),
                }
            elif args.command == "grading":
                grad = grading.universal_grading(ring, i, fp, table, eps=eps, seed=seed)
                report = {"label": args.object,
                          "grading": {
                              "index": grad.index, "order": grad.order,
                              "components": [[ring.labels[m] for m in comp]
                                             for comp in grad.components],
                              "grades": {ring.labels[m]: g for m, g in sorted(grad.grades.items())},
                              "character_checked": grad.character_checked}}
            else:
                if table is None:
                    raise NonCommutative("the tensor-power check requires a commutative ring")
                rep = kernel.verify_brauer(ring, fp, table, i, cap=args.cap, eps=eps)
                report = {"label": args.object,
                          "brauer": {
                              "faithful_expected": rep.faithful_expected,
                              "faithful_actual": rep.faithful_actual,
                              "cap_used": rep.cap_used,
                              "exponents": {ring.labels[k]: n
                                            for k, n in sorted(rep.exponents.items())}}}
            _emit(report, args.format, out)
            return 0

        if args.command == "modular":
            if args.smatrix is not None:
                md = catalog.load_smatrix(args.smatrix, ring)
            elif entry is not None and entry.smatrix is not None:
                md = entry.smatrix
            else:
                parser.error("no built-in modular data for this ring; pass --smatrix")
            fp = spectral.fp_character(ring, eps=eps)
            inv = modular.invertibles(ring, fp, eps=eps)
            rebuilt = modular.verlinde_ring(md.S)
            report = {
                "ring": {"name": ring.name, "rank": ring.rank,
                         "labels": list(ring.labels),
                         "commutative": spectral.is_commutative(ring),
                         "fp_dims": {ring.labels[j]: float(fp.dims[j])
                                     for j in range(ring.rank)},
                         "global_dim": float(fp.global_dim)},
                "centralizers": {
                    ring.labels[i]: [ring.labels[m]
                                     for m in modular.centralizer(md, i, eps=eps).members]
                    for i in range(ring.rank)},
                "projective_centralizers": {
                    ring.labels[i]: sorted(ring.labels[m]
                                           for m in modular.projective_centralizer(md, i, eps=eps))
                    for i in range(ring.rank)},
                "invertibles": sorted(ring.labels[j] for j in inv),
                "verlinde_round_trip": bool(np.array_equal(rebuilt.N, ring.N)),
            }
            _emit(report, args.format, out)
            return 0 if report["verlinde_round_trip"] else 1

        parser.error(f"unknown command {args.command!r}")
    except UnknownName as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except FusionRingError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
