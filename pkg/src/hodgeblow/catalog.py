"""Built-in manifolds and the JSON manifest format.

A manifest is a JSON object::

    {
      "format_version": "1",
      "manifolds": [
        {"name": "CP2", "dim": 2, "hodge": [[1, 0, 0], [0, 1, 0], [0, 0, 1]],
         "betti": [1, 0, 1, 0, 1], "connected": true,
         "flags": {"kaehler": true}, "source": "..."}
      ],
      "scripts": [
        {"name": "s", "start": "CP3",
         "steps": [{"op": "blowup", "center": "point"}]}
      ]
    }

``hodge`` is row-major: ``hodge[p][q]`` is ``h^{p,q}``.  ``betti``,
``connected`` (default true), ``flags`` and ``source`` are optional.  When
``betti`` is missing and the model is E1-degenerate the Betti numbers are
derived from the diamond; derived values are not written back out.

:func:`serialize` emits a canonical form: sorted keys, two-space indent, LF
line endings, arrays of at most 16 scalars (or such arrays) on one line,
flat objects of scalars on one line.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from math import comb
from pathlib import Path
from typing import Mapping, Optional

from .birational import Direction, FactorizationScript, FactorizationStep
from .diamond import (
    FLAG_NAMES,
    BettiVector,
    Flags,
    HodgeDiamond,
    ManifoldModel,
    make_model,
    model_violations,
    validate_model,
)
from .errors import ManifestSyntaxError, NameResolutionError, ValidationError

FORMAT_VERSION = "1"
DATA_DIR = Path(__file__).parent / "data"

_MODEL_KEYS = {"name", "dim", "hodge", "betti", "connected", "flags", "source"}
_TOP_KEYS = {"format_version", "manifolds", "scripts"}
_SCRIPT_KEYS = {"name", "start", "steps"}
_STEP_KEYS = {"op", "center"}


# -- built-in manifolds ----------------------------------------------------


def point() -> ManifoldModel:
    return make_model("point", [[1]], flags=Flags.all_true())


def projective_space(n: int) -> ManifoldModel:
    if n < 0:
        raise ValidationError(f"projective space dimension must be >= 0, got {n}")
    h = [[int(p == q) for q in range(n + 1)] for p in range(n + 1)]
    return make_model(f"CP{n}", h, flags=Flags.all_true())


def curve(g: int) -> ManifoldModel:
    """Compact Riemann surface of genus ``g``."""
    if g < 0:
        raise ValidationError(f"genus must be >= 0, got {g}")
    return make_model(f"genus{g}curve", [[1, g], [g, 1]], flags=Flags.all_true())


def torus(n: int) -> ManifoldModel:
    """Complex torus of dimension ``n``: ``h^{s,t} = C(n,s) C(n,t)``."""
    if n < 0:
        raise ValidationError(f"torus dimension must be >= 0, got {n}")
    h = [[comb(n, s) * comb(n, t) for t in range(n + 1)] for s in range(n + 1)]
    return make_model(f"T{n}", h, flags=Flags.all_true())


def synthetic(name, dim, hodge, betti=None, flags=None, connected=True) -> ManifoldModel:
    m = make_model(name, hodge, betti=betti, flags=flags, connected=connected)
    if m.dim != dim:
        raise ValidationError(f"{name}: declared dimension {dim}, Hodge matrix has {m.dim}")
    return m


_BUILDERS = {
    "point": point,
    "projective_space": projective_space,
    "curve": curve,
    "torus": torus,
    "synthetic": synthetic,
}


def builtin(kind: str, *args, **params) -> ManifoldModel:
    """``builtin("projective_space", 2)``, ``builtin("curve", g=2)``, ..."""
    try:
        build = _BUILDERS[kind]
    except KeyError:
        raise NameResolutionError(
            f"unknown builtin kind {kind!r}; choose from {sorted(_BUILDERS)}"
        ) from None
    try:
        return build(*args, **params)
    except TypeError as exc:
        raise ValidationError(f"bad parameters for {kind}: {exc}") from None


def default_catalog() -> dict:
    """Named builtins available to every manifest."""
    models = [point()]
    models += [projective_space(n) for n in range(1, 9)]
    models += [curve(g) for g in range(4)]
    models += [torus(n) for n in range(1, 4)]
    return {m.name: m for m in models}


def fixture_path(name: str) -> Path:
    return DATA_DIR / f"{name}.json"


def load_fixture(name: str) -> "ManifestDocument":
    return parse_manifest(fixture_path(name).read_text(encoding="utf-8"))


def iwasawa() -> ManifoldModel:
    return load_fixture("iwasawa").model("iwasawa")


# -- documents -------------------------------------------------------------


@dataclass(frozen=True)
class ManifestDocument:
    format_version: str = FORMAT_VERSION
    manifolds: tuple = ()
    scripts: tuple = ()

    def model(self, name: str) -> ManifoldModel:
        for m in self.manifolds:
            if m.name == name:
                return m
        raise NameResolutionError(f"unknown manifold {name!r}")

    def script(self, name: str) -> FactorizationScript:
        for s in self.scripts:
            if s.name == name:
                return s
        raise NameResolutionError(f"unknown script {name!r}")


def _reject_duplicates(pairs):
    out = {}
    for key, value in pairs:
        if key in out:
            raise ManifestSyntaxError(f"duplicate key {key!r}")
        out[key] = value
    return out


def _decode(text: str):
    try:
        return json.loads(text, object_pairs_hook=_reject_duplicates)
    except json.JSONDecodeError as exc:
        raise ManifestSyntaxError(f"invalid JSON: {exc.msg}", exc.lineno, exc.colno) from None


def _check_keys(obj, allowed, where, lenient):
    if not isinstance(obj, dict):
        raise ValidationError(f"{where}: expected an object")
    extra = set(obj) - allowed
    if extra and not lenient:
        raise ValidationError(f"{where}: unknown keys {sorted(extra)}")


def _int(value, where):
    if isinstance(value, bool) or not isinstance(value, int):
        raise ValidationError(f"{where}: expected an integer, got {value!r}")
    return value


def _int_list(value, where):
    if not isinstance(value, list):
        raise ValidationError(f"{where}: expected an array")
    return [_int(x, where) for x in value]


def model_from_obj(obj, lenient: bool = False, where: str = "manifold") -> ManifoldModel:
    """Structural decoding only; see :func:`parse_manifest` for validation."""
    _check_keys(obj, _MODEL_KEYS, where, lenient)
    for key in ("name", "dim", "hodge"):
        if key not in obj:
            raise ValidationError(f"{where}: missing required key {key!r}")
    name = obj["name"]
    if not isinstance(name, str) or not name:
        raise ValidationError(f"{where}: name must be a non-empty string")
    where = f"manifold {name!r}"
    dim = _int(obj["dim"], f"{where} dim")
    hodge = obj["hodge"]
    if not isinstance(hodge, list):
        raise ValidationError(f"{where}: hodge must be an array of rows")
    rows = [_int_list(row, f"{where} hodge") for row in hodge]
    if len(rows) != dim + 1:
        raise ValidationError(f"{where}: dim {dim} needs {dim + 1} hodge rows, got {len(rows)}")
    diamond = HodgeDiamond(dim, rows)
    betti = None
    if obj.get("betti") is not None:
        betti = BettiVector(dim, _int_list(obj["betti"], f"{where} betti"))
    connected = obj.get("connected", True)
    if not isinstance(connected, bool):
        raise ValidationError(f"{where}: connected must be a boolean")
    flags_obj = obj.get("flags", {})
    _check_keys(flags_obj, set(FLAG_NAMES), f"{where} flags", lenient)
    flags = {}
    for key in FLAG_NAMES:
        value = flags_obj.get(key)
        if value is not None and not isinstance(value, bool):
            raise ValidationError(f"{where}: flag {key} must be a boolean")
        flags[key] = value
    source = obj.get("source", "")
    if not isinstance(source, str):
        raise ValidationError(f"{where}: source must be a string")
    return ManifoldModel(
        name=name,
        dim=dim,
        diamond=diamond,
        betti=betti,
        flags=Flags(**flags),
        connected=connected,
        source=source,
    )


def decode_manifest(text: str, lenient: bool = False):
    """Decode without semantic validation.

    Returns ``(format_version, models, raw_scripts)``; models are unvalidated.
    """
    doc = _decode(text)
    _check_keys(doc, _TOP_KEYS, "manifest", lenient)
    version = doc.get("format_version")
    if version != FORMAT_VERSION:
        raise ValidationError(f"unsupported format_version {version!r}; expected {FORMAT_VERSION!r}")
    manifolds = doc.get("manifolds")
    if not isinstance(manifolds, list):
        raise ValidationError("manifest: 'manifolds' must be an array")
    models = [model_from_obj(obj, lenient, f"manifolds[{i}]") for i, obj in enumerate(manifolds)]
    seen = set()
    for m in models:
        if m.name in seen:
            raise ValidationError(f"duplicate manifold name {m.name!r}")
        seen.add(m.name)
    scripts = doc.get("scripts", [])
    if not isinstance(scripts, list):
        raise ValidationError("manifest: 'scripts' must be an array")
    for i, s in enumerate(scripts):
        _check_keys(s, _SCRIPT_KEYS, f"scripts[{i}]", lenient)
        for key in _SCRIPT_KEYS:
            if key not in s:
                raise ValidationError(f"scripts[{i}]: missing required key {key!r}")
        if not isinstance(s["steps"], list):
            raise ValidationError(f"scripts[{i}]: steps must be an array")
        for j, step in enumerate(s["steps"]):
            _check_keys(step, _STEP_KEYS, f"scripts[{i}].steps[{j}]", lenient)
            if step.get("op") not in ("blowup", "blowdown"):
                raise ValidationError(
                    f"scripts[{i}].steps[{j}]: op must be 'blowup' or 'blowdown'"
                )
            if not isinstance(step.get("center"), str):
                raise ValidationError(f"scripts[{i}].steps[{j}]: center must be a name")
    return version, models, scripts


def _resolve(name, local, known, where):
    if name in local:
        return local[name]
    if known is not None and name in known:
        return known[name]
    raise NameResolutionError(f"{where}: unresolved manifold reference {name!r}")


def parse_manifest(
    text: str, known: Optional[Mapping[str, ManifoldModel]] = None, lenient: bool = False
) -> ManifestDocument:
    """Parse and fully validate a manifest.

    ``known`` supplies models from earlier manifests (or builtins) that
    scripts may reference.  All model violations are reported together.
    """
    version, raw_models, raw_scripts = decode_manifest(text, lenient)
    violations, models = [], []
    for m in raw_models:
        problems = model_violations(m)
        if problems:
            violations += [f"{m.name}: {v}" for v in problems]
        else:
            models.append(validate_model(m))
    if violations:
        raise ValidationError("; ".join(violations), violations)
    local = {m.name: m for m in models}
    scripts = []
    for s in raw_scripts:
        where = f"script {s['name']!r}"
        start = _resolve(s["start"], local, known, where)
        steps = [
            FactorizationStep(Direction(step["op"]), _resolve(step["center"], local, known, where))
            for step in s["steps"]
        ]
        scripts.append(FactorizationScript(start, tuple(steps), name=s["name"]))
    return ManifestDocument(version, tuple(models), tuple(scripts))


# -- canonical serialisation -----------------------------------------------


def model_to_obj(m: ManifoldModel) -> dict:
    obj = {"name": m.name, "dim": m.dim, "hodge": m.diamond.to_lists()}
    if not m.connected:
        obj["connected"] = False
    if m.betti is not None and not m.betti_derived:
        obj["betti"] = list(m.betti.b)
    flags = m.flags.known()
    if flags:
        obj["flags"] = flags
    if m.source:
        obj["source"] = m.source
    return obj


def script_to_obj(s: FactorizationScript) -> dict:
    return {
        "name": s.name,
        "start": s.start.name,
        "steps": [{"op": st.direction.value, "center": st.center.name} for st in s.steps],
    }


def document_to_obj(doc: ManifestDocument) -> dict:
    obj = {
        "format_version": doc.format_version,
        "manifolds": [model_to_obj(m) for m in doc.manifolds],
    }
    if doc.scripts:
        obj["scripts"] = [script_to_obj(s) for s in doc.scripts]
    return obj


def _scalar(value):
    return not isinstance(value, (dict, list))


def _one_line(value) -> bool:
    if isinstance(value, list):
        return len(value) <= 16 and all(_scalar(x) or (isinstance(x, list) and _one_line(x)) for x in value)
    if isinstance(value, dict):
        return all(_scalar(x) for x in value.values())
    return True


def _emit(value, indent: int) -> str:
    if _scalar(value):
        return json.dumps(value, ensure_ascii=False)
    if isinstance(value, list):
        if _one_line(value):
            return "[" + ", ".join(_emit(x, 0) for x in value) + "]"
        pad = "  " * (indent + 1)
        body = ",\n".join(pad + _emit(x, indent + 1) for x in value)
        return "[\n" + body + "\n" + "  " * indent + "]"
    items = sorted(value.items())
    if not items:
        return "{}"
    if _one_line(value):
        return "{" + ", ".join(f"{json.dumps(k, ensure_ascii=False)}: {_emit(v, 0)}" for k, v in items) + "}"
    pad = "  " * (indent + 1)
    body = ",\n".join(f"{pad}{json.dumps(k, ensure_ascii=False)}: {_emit(v, indent + 1)}" for k, v in items)
    return "{\n" + body + "\n" + "  " * indent + "}"


def canonical_json(obj) -> str:
    return _emit(obj, 0) + "\n"


def serialize(doc) -> str:
    """Canonical text of a document, a single model, or a script."""
    if isinstance(doc, ManifestDocument):
        obj = document_to_obj(doc)
    elif isinstance(doc, ManifoldModel):
        obj = model_to_obj(doc)
    elif isinstance(doc, FactorizationScript):
        obj = script_to_obj(doc)
    else:
        obj = doc
    return canonical_json(obj)
