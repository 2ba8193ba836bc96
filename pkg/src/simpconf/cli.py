"""Command line front end: ``simpconf <subcommand> --input complex.json ...``.

Exit codes: 0 ok, 2 schema violation, 3 mathematical precondition
failure (with witness when available), 4 I/O failure, 5 size cap
(``SIMPCONF_MAX_SIMPLICES``) exceeded.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .actions import (
    is_semiregular,
    orbit_partition,
    quotient_complex,
    regularity_witness,
)
from .complex import f_vector
from .homology import homology_profile
from .io import complex_to_doc, decode_label, validate_document
from .labels import to_json
from .pipeline import (
    InputOutputError,
    PipelineError,
    PipelineSpec,
    SchemaError,
    Step,
    _load_complex,
    _math,
    _read_json,
    _resolve_group,
    _State,
    apply_step,
    check_size,
    parse_step,
    run_pipeline,
    spec_from_doc,
)

CONSTRUCTIONS = {
    "power": ("n",), "bs": (), "fatdiag": ("n",), "diff": ("with",), "complement": ("with",),
    "conf": ("n",), "confbs": ("n",), "nerve": ("with",),
}
HELP = {
    "build": "validate a complex document and emit it normalized",
    "power": "ordered simplicial power X^n",
    "bs": "barycentric subdivision",
    "fatdiag": "fat diagonal subcomplex F_n of X^n",
    "diff": "simplicial difference X minus A",
    "complement": "complement model: subcomplex spanned by vertices outside A",
    "conf": "configuration-space model X^n minus F_n",
    "confbs": "configuration-space model via bs(X^n) and bs(F_n)",
    "quotient": "quotient by a regular action",
    "orbits": "orbits of k-simplices under an action",
    "check-action": "complete an action and test semiregularity/regularity",
    "homology": "integer homology (Betti numbers and torsion)",
    "fvector": "simplex counts per dimension",
    "nerve": "nerve of the minimal-non-face cover of X minus A",
    "pipeline": "run a sequence of steps from a JSON spec or --step flags",
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="simpconf", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    for name, text in HELP.items():
        p = sub.add_parser(name, help=text, description=text)
        p.add_argument("--input", metavar="PATH", required=name != "pipeline")
        p.add_argument("--out", metavar="PATH")
        p.add_argument("--pretty", action="store_true", help="human-readable output")
        p.add_argument("--no-timing", action="store_true", help="omit timing fields")
        if name in ("power", "fatdiag", "conf", "confbs"):
            p.add_argument("--n", type=int, required=True)
        if name in ("diff", "complement", "nerve"):
            p.add_argument("--with", dest="with_", metavar="PATH", required=True)
        if name in ("quotient", "orbits", "check-action"):
            p.add_argument("--action", metavar="PATH", required=True)
        if name == "orbits":
            p.add_argument("--dim", type=int, required=True)
        if name == "homology":
            p.add_argument("--reduced", action="store_true")
        if name == "pipeline":
            p.add_argument("spec", nargs="?", metavar="SPEC", help="pipeline JSON document")
            p.add_argument("--step", action="append", default=[],
                           help='one step, e.g. "conf 2" or "diff with:A.json"; repeatable')
    return parser


def _complex_output(state: _State, extra: dict | None = None) -> dict:
    out = {"complex": complex_to_doc(state.K), "fvector": list(f_vector(state.K))}
    if extra:
        out.update(extra)
    return out


# nesting depth of label lists under each key, for --pretty
_LABEL_DEPTH = {"vertices": 1, "facets": 2, "witness": 2, "orbits": 3}


def _as_text(obj, depth: int):
    if depth == 0:
        return str(decode_label(obj))
    return " ".join(_as_text(x, depth - 1) for x in obj) if depth == 1 else \
        [_as_text(x, depth - 1) for x in obj]


def _textify(obj):
    if isinstance(obj, dict):
        out = {}
        for k, v in obj.items():
            if k in _LABEL_DEPTH and isinstance(v, list):
                out[k] = _as_text(v, _LABEL_DEPTH[k])
            elif k == "projection" and isinstance(v, dict):
                out[k] = {a: str(decode_label(b)) for a, b in v.items()}
            else:
                out[k] = _textify(v)
        return out
    if isinstance(obj, list):
        return [_textify(x) for x in obj]
    return obj


def _pretty(obj, indent: int = 0) -> str:
    pad = "  " * indent
    if isinstance(obj, dict):
        lines = []
        for k, v in obj.items():
            if isinstance(v, (dict, list)) and v and any(isinstance(x, (dict, list)) for x in
                                                         (v.values() if isinstance(v, dict) else v)):
                lines.append(f"{pad}{k}:")
                lines.append(_pretty(v, indent + 1))
            else:
                lines.append(f"{pad}{k}: {json.dumps(v)}")
        return "\n".join(lines)
    if isinstance(obj, list):
        return "\n".join(_pretty(x, indent) if isinstance(x, dict) else f"{pad}- {json.dumps(x)}"
                         for x in obj)
    return pad + json.dumps(obj)


def _run(args) -> dict:
    cmd = args.command
    if cmd == "pipeline":
        if args.spec:
            doc = _read_json(args.spec, Path("."))
            spec = spec_from_doc(doc, Path(args.spec).resolve().parent)
            if args.input:
                spec.source = str(Path(args.input).resolve())
            spec.steps += [parse_step(s) for s in args.step]
        else:
            if not args.input:
                raise SchemaError("pipeline needs a SPEC file or --input with --step flags")
            spec = PipelineSpec(args.input, [parse_step(s) for s in args.step])
        return run_pipeline(spec, timing=not args.no_timing)

    if cmd == "build":
        try:
            diags = validate_document(args.input)
        except OSError as exc:
            raise InputOutputError(f"cannot read {args.input}: {exc}") from exc
        errors = [d for d in diags if d["level"] == "error"]
        if errors:
            raise SchemaError("; ".join(d["message"] for d in errors))
        K = _load_complex(args.input, Path("."))
        state = _State(K, Path("."))
        return _complex_output(state, {"diagnostics": diags})

    K = _load_complex(args.input, Path("."))
    check_size(K)
    state = _State(K, Path("."))
    if cmd in CONSTRUCTIONS:
        step_args = {}
        if "n" in CONSTRUCTIONS[cmd]:
            step_args["n"] = args.n
        if "with" in CONSTRUCTIONS[cmd]:
            step_args["with"] = args.with_
        parse_step({"op": cmd, **step_args})  # same validation as pipelines
        info = apply_step(state, Step(cmd, step_args))
        extra = {k: v for k, v in info.items() if k in ("notes", "group_order")}
        return _complex_output(state, extra)
    if cmd == "fvector":
        return {"fvector": list(f_vector(K))}
    if cmd == "homology":
        return homology_profile(K, args.reduced).to_json()

    act = _resolve_group(state, str(Path(args.action).resolve()) if args.action.endswith(".json")
                         else args.action)
    if cmd == "quotient":
        q, _ = _math(quotient_complex, act)
        state.K = q.complex
        proj = {str(v): to_json(o) for v, o in q.projection.items()}
        return _complex_output(state, {"projection": proj})
    if cmd == "orbits":
        orbs = orbit_partition(act, args.dim)
        return {"dim": args.dim, "orbits": [[[to_json(v) for v in s] for s in o] for o in orbs]}
    # check-action
    w = regularity_witness(act)
    out = {"order": act.order, "elements": list(act.names),
           "semiregular": is_semiregular(act), "regular": w is None}
    if w is not None:
        out["witness"] = [[to_json(v) for v in w[0]], [to_json(v) for v in w[1]]]
    return out


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        result = _run(args)
        code = 0
    except PipelineError as exc:
        result = {"error": str(exc), "exit_code": exc.exit_code}
        witness = getattr(exc, "witness", None)
        if witness is not None:
            result["witness"] = [[to_json(v) for v in part] for part in witness]
        code = exc.exit_code
    text = _pretty(_textify(result)) if args.pretty else json.dumps(result, sort_keys=False)
    if code == 0 and args.out:
        try:
            Path(args.out).write_text(text + "\n")
        except OSError as exc:
            print(json.dumps({"error": f"cannot write {args.out}: {exc}", "exit_code": 4}),
                  file=sys.stderr)
            return 4
    elif code == 0:
        print(text)
    else:
        print(text, file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
