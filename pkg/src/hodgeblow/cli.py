"""Command-line front end.

Exit codes: 0 success, 2 parse/validation error, 3 unknown name,
4 precondition violated, 5 contract/audit failure.
"""

from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path

from . import catalog
from .birational import script_contract
from .blowup import BlowUpSpec, blow_up
from .diamond import effective_betti, hodge_symmetric, model_violations, serre_symmetric, validate_model
from .errors import HodgeError, NameResolutionError, ValidationError
from .render import render_diamond
from .spectral import ddbar_necessary, degenerates_at_E1

DIAMOND_HELP = (
    "Diamonds are printed with row k = p+q from k=0 at the top; within a row p "
    "decreases from left to right, so the left edge is h^{k,0}."
)


class Workspace:
    """Builtins overlaid by manifests, in command-line order."""

    def __init__(self, paths=(), lenient=False):
        self.lenient = lenient
        self.builtins = catalog.default_catalog()
        self.models = {}
        self.scripts = {}
        self.paths = [resolve_manifest(p) for p in paths]

    def load(self):
        for path in self.paths:
            doc = catalog.parse_manifest(_read(path), known=self.known(), lenient=self.lenient)
            for m in doc.manifolds:
                if m.name in self.models:
                    raise ValidationError(f"{path}: manifold {m.name!r} already defined")
                self.models[m.name] = m
            for s in doc.scripts:
                if s.name in self.scripts:
                    raise ValidationError(f"{path}: script {s.name!r} already defined")
                self.scripts[s.name] = s
        return self

    def known(self):
        return {**self.builtins, **self.models}

    def model(self, name):
        try:
            return self.known()[name]
        except KeyError:
            raise NameResolutionError(f"unknown manifold {name!r}") from None

    def script(self, name):
        try:
            return self.scripts[name]
        except KeyError:
            raise NameResolutionError(f"unknown script {name!r}") from None


def _read(path):
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise ValidationError(f"cannot read manifest {path}: {exc.strerror}") from None


def resolve_manifest(path: str) -> Path:
    """Look in the working directory, then ``HODGE_MANIFEST_PATH``, then shipped fixtures."""
    candidate = Path(path)
    if candidate.is_absolute() or candidate.exists():
        return candidate
    search = [d for d in os.environ.get("HODGE_MANIFEST_PATH", "").split(":") if d]
    search.append(str(catalog.DATA_DIR))
    for directory in search:
        if (Path(directory) / path).exists():
            return Path(directory) / path
    return candidate


def _yes(value):
    return "unknown" if value is None else ("true" if value else "false")


def describe(m) -> list:
    status = "connected" if m.connected else f"{m.diamond[0, 0]} components"
    lines = [f"{m.name} (dim {m.dim}, {status})", "hodge:"]
    lines += ["  " + row for row in render_diamond(m.diamond)]
    betti = effective_betti(m)
    if betti is None:
        lines.append("betti: unknown")
    else:
        suffix = " (derived)" if m.betti_derived or m.betti is None else ""
        lines.append("betti: " + " ".join(map(str, betti.b)) + suffix)
    lines.append("flags: " + " ".join(f"{k}={_yes(v)}" for k, v in m.flags.as_dict().items()))
    if betti is None:
        lines.append("defect: unknown (Betti data required)")
    else:
        lines.append("defect: " + " ".join(map(str, degenerates_at_E1(m).defect.d)))
    lines += [f"note: {n}" for n in m.notes]
    if m.source:
        lines.append(f"source: {m.source}")
    return lines


def _emit(lines, out):
    out.write("\n".join(lines) + "\n")


def _document(models, **extra):
    obj = catalog.document_to_obj(catalog.ManifestDocument(manifolds=tuple(models)))
    obj.update(extra)
    return catalog.canonical_json(obj)


def cmd_show(ws, args, out):
    m = ws.model(args.name)
    if args.json:
        out.write(_document([m]))
    else:
        _emit(describe(m), out)
    return 0


def cmd_blowup(ws, args, out):
    x, z = ws.model(args.ambient), ws.model(args.center)
    spec = BlowUpSpec(x, z)
    result = blow_up(spec)
    text = _document([result])
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
    if args.json:
        out.write(text)
    else:
        _emit([f"codimension: {spec.codim}"] + describe(result), out)
    return 0


def cmd_factor(ws, args, out):
    script = ws.script(args.script)
    final, trace, delta, report, problems = script_contract(script)
    h11 = [m.h(1, 1) for m in trace]
    bettis = [effective_betti(m) for m in trace]
    b2 = [None if b is None else b[2] for b in bettis]
    if args.json:
        result = {
            "script": script.name,
            "count_delta": delta,
            "h11_trace": h11,
            "b2_trace": b2,
            "problems": problems,
        }
        if args.audit:
            result["audit"] = [
                {"invariant": e.invariant, "left": e.left, "right": e.right, "equal": e.equal}
                for e in report.entries
            ]
        out.write(_document(trace, report=result))
    else:
        lines = [f"script: {script.name}", f"start: {script.start.name}"]
        for i, m in enumerate(trace):
            step = "" if i == 0 else f" [{script.steps[i - 1].direction.value} {script.steps[i - 1].center.name}]"
            b = "unknown" if b2[i] is None else str(b2[i])
            lines.append(f"  X_{i}: {m.name}{step} h11={h11[i]} b2={b}")
        lines.append(f"count_delta: {delta:+d}")
        lines.append(f"h11 delta: {h11[-1] - h11[0]:+d}")
        if b2[0] is not None and b2[-1] is not None:
            lines.append(f"b2 delta: {b2[-1] - b2[0]:+d}")
        if args.audit:
            lines.append(f"audit {report.left_name} -> {report.right_name}:")
            for e in report.entries:
                verdict = {True: "equal", False: "DIFFERENT", None: "unknown"}[e.equal]
                left = "unknown" if e.left is None else e.left
                right = "unknown" if e.right is None else e.right
                lines.append(f"  {e.invariant}: {left} {right} {verdict}")
        lines.append("result: ok" if not problems else "result: CONTRACT FAILURE")
        _emit(lines, out)
    for p in problems:
        print(f"contract failure: {p}", file=sys.stderr)
    return 5 if problems else 0


def _check_lines(m, problems):
    if problems:
        return [f"{m.name}: INVALID"] + [f"  - {p}" for p in problems]
    m = validate_model(m)
    lines = [
        f"{m.name}: valid",
        f"  serre symmetric: {'yes' if serre_symmetric(m.diamond) else 'no'}",
        f"  hodge symmetric: {'yes' if hodge_symmetric(m.diamond) else 'no'}",
    ]
    if effective_betti(m) is None:
        lines.append("  defect: unknown (Betti data required)")
        lines.append("  E1 degenerate: unknown")
        if not hodge_symmetric(m.diamond):
            lines.append("  ddbar necessary conditions: fail")
        else:
            lines.append("  ddbar necessary conditions: unknown")
        return lines
    rep = degenerates_at_E1(m)
    lines.append("  defect: " + " ".join(map(str, rep.defect.d)))
    if rep.degenerate:
        lines.append("  E1 degenerate: yes")
    else:
        lines.append(f"  E1 degenerate: no (first failing k={rep.first_failing_k})")
    verdict = "hold (not sufficient)" if ddbar_necessary(m) else "fail"
    lines.append(f"  ddbar necessary conditions: {verdict}")
    return lines


def cmd_check(ws, args, out):
    """Validate every model separately so one bad model does not hide another."""
    entries = {}
    errors = []
    known = dict(ws.builtins)
    for path in ws.paths:
        try:
            _, models, scripts = catalog.decode_manifest(_read(path), ws.lenient)
        except ValidationError as exc:
            errors.append(f"{path}: {exc}")
            continue
        for m in models:
            if m.name in entries:
                errors.append(f"{path}: manifold {m.name!r} already defined")
                continue
            entries[m.name] = (m, model_violations(m))
            known[m.name] = m
        for s in scripts:
            for ref in [s["start"]] + [st["center"] for st in s["steps"]]:
                if ref not in known:
                    errors.append(f"{path}: script {s['name']!r} references unknown {ref!r}")
    if not ws.paths:
        entries = {name: (m, []) for name, m in ws.builtins.items()}
    if args.name is not None:
        if args.name in entries:
            entries = {args.name: entries[args.name]}
        elif args.name in ws.builtins:
            entries = {args.name: (ws.builtins[args.name], [])}
        else:
            raise NameResolutionError(f"unknown manifold {args.name!r}")
    lines = []
    for name in sorted(entries):
        lines += _check_lines(*entries[name])
    invalid = sum(1 for m, problems in entries.values() if problems)
    ok = not invalid and not errors
    lines.append(f"{len(entries)} models checked, {invalid} invalid")
    if args.json:
        report = [
            {"name": name, "valid": not probs, "violations": probs}
            for name, (m, probs) in sorted(entries.items())
        ]
        valid_models = [validate_model(m) for name, (m, probs) in sorted(entries.items()) if not probs]
        out.write(_document(valid_models, report=report, errors=errors))
    else:
        _emit(lines, out)
    if not ok:
        for e in errors:
            print(f"error: {e}", file=sys.stderr)
        for name in sorted(entries):
            for p in entries[name][1]:
                print(f"error: {name}: {p}", file=sys.stderr)
    return 0 if ok else 2


def _common() -> argparse.ArgumentParser:
    # a fresh parent per parser: argparse shares action objects with children
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--manifest",
        action="append",
        default=argparse.SUPPRESS,
        metavar="PATH",
        help="manifest file; repeatable, later files may reference earlier names",
    )
    common.add_argument("--lenient", action="store_true", default=argparse.SUPPRESS,
                        help="ignore unknown keys in manifests")
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS,
                        help="machine-readable output")
    return common


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hodgeblow",
        description="Hodge-number calculus for blow-ups of compact complex manifolds. "
        + DIAMOND_HELP,
        parents=[_common()],
        epilog="Exit codes: 0 ok, 2 parse/validation, 3 unknown name, "
        "4 precondition, 5 contract failure.  HODGE_MANIFEST_PATH lists "
        "colon-separated directories searched for relative manifest paths.",
    )
    parser.set_defaults(manifest=[], lenient=False, json=False)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("show", parents=[_common()], help="print a model", description=DIAMOND_HELP)
    p.add_argument("name")
    p.set_defaults(func=cmd_show)

    p = sub.add_parser("blowup", parents=[_common()], help="blow up a model along a center",
                       description=DIAMOND_HELP)
    p.add_argument("--ambient", required=True)
    p.add_argument("--center", required=True)
    p.add_argument("--out", metavar="PATH", help="write the result as a manifest")
    p.set_defaults(func=cmd_blowup)

    p = sub.add_parser("factor", parents=[_common()], help="run a blow-up/blow-down script")
    p.add_argument("--script", required=True)
    p.add_argument("--audit", action="store_true", help="compare bimeromorphic invariants of the endpoints")
    p.set_defaults(func=cmd_factor)

    p = sub.add_parser("check", parents=[_common()], help="validate models and report E1-degeneration")
    p.add_argument("name", nargs="?")
    p.set_defaults(func=cmd_check)
    return parser


def main(argv=None, out=None) -> int:
    out = out if out is not None else sys.stdout
    args = build_parser().parse_args(argv)
    try:
        ws = Workspace(args.manifest, args.lenient)
        if args.command != "check":
            ws.load()
        return args.func(ws, args, out)
    except HodgeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.exit_code


if __name__ == "__main__":
    sys.exit(main())
