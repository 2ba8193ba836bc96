"""Step-by-step construction pipelines shared by the CLI subcommands."""
from __future__ import annotations

import os
import time
import warnings
from dataclasses import dataclass, field
from math import factorial
from pathlib import Path
from typing import Any

from . import constructions as cons
from .actions import (
    ActionError,
    SimplicialAction,
    induced_action,
    is_invariant,
    is_semiregular,
    orbit_partition,
    quotient_complex,
    regularity_witness,
    symmetric_group_action,
)
from .complex import ComplexError, SimplicialComplex, f_vector
from .homology import homology_profile
from .io import DocumentError, action_from_doc, complex_from_doc, load_json
from .labels import to_json
from .nerve import minimal_nonface_nerve

DEFAULT_MAX_SIMPLICES = 5_000_000

COMPLEX_STEPS = {"power", "bs", "fatdiag", "diff", "complement", "conf", "confbs", "quotient", "nerve"}
# required arguments per step; the first one may be given positionally
STEP_ARGS = {
    "power": ("n",), "fatdiag": ("n",), "conf": ("n",), "confbs": ("n",),
    "diff": ("with",), "complement": ("with",), "nerve": ("with",),
    "quotient": ("group",), "orbits": ("dim",),
    "bs": (), "homology": (), "fvector": (), "check-semiregular": (), "check-regular": (),
}
INT_ARGS = {"n", "dim"}


class PipelineError(Exception):
    exit_code = 1


class SchemaError(PipelineError):
    exit_code = 2


class PreconditionError(PipelineError):
    exit_code = 3

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class InputOutputError(PipelineError):
    exit_code = 4


class SizeLimitError(PipelineError):
    exit_code = 5


def max_simplices() -> int:
    raw = os.environ.get("SIMPCONF_MAX_SIMPLICES")
    if not raw:
        return DEFAULT_MAX_SIMPLICES
    try:
        return int(float(raw))
    except ValueError as exc:
        raise SchemaError(f"SIMPCONF_MAX_SIMPLICES={raw!r} is not a number") from exc


def check_size(K: SimplicialComplex) -> None:
    cap = max_simplices()
    if len(K) > cap:
        raise SizeLimitError(f"complex has {len(K)} simplices, above the cap of {cap}")


@dataclass
class Step:
    op: str
    args: dict = field(default_factory=dict)


@dataclass
class PipelineSpec:
    source: Any  # complex document or path
    steps: list[Step]
    base_dir: Path = Path(".")


def parse_step(item: Any) -> Step:
    """Accept "conf 2", "diff with:A.json", "orbits dim:1" or {"op": ..., ...}."""
    if isinstance(item, str):
        tokens = item.split()
        if not tokens:
            raise SchemaError("empty step")
        op, args = tokens[0], {}
        for tok in tokens[1:]:
            if ":" in tok:
                k, v = tok.split(":", 1)
                args[k] = v
            elif "=" in tok:
                k, v = tok.split("=", 1)
                args[k] = v
            else:
                names = STEP_ARGS.get(op, ())
                if not names or names[0] in args:
                    raise SchemaError(f"unexpected argument {tok!r} for step {op!r}")
                args[names[0]] = tok
    elif isinstance(item, dict) and isinstance(item.get("op"), str):
        op = item["op"]
        args = {k: v for k, v in item.items() if k != "op"}
    else:
        raise SchemaError(f"cannot parse step {item!r}")
    if op not in STEP_ARGS:
        raise SchemaError(f"unknown step {op!r}")
    for name in STEP_ARGS[op]:
        if name not in args:
            raise SchemaError(f"step {op!r} needs argument {name!r}")
    for name in INT_ARGS & args.keys():
        try:
            args[name] = int(args[name])
        except (TypeError, ValueError) as exc:
            raise SchemaError(f"argument {name!r} of step {op!r} must be an integer") from exc
    if "n" in args and args["n"] < 1:
        raise SchemaError(f"step {op!r} needs n >= 1")
    if op == "homology" and "reduced" in args:
        args["reduced"] = str(args["reduced"]).lower() in ("1", "true", "yes")
    return Step(op, args)


def spec_from_doc(doc: Any, base_dir: Path = Path(".")) -> PipelineSpec:
    if not isinstance(doc, dict) or "source" not in doc or not isinstance(doc.get("steps"), list):
        raise SchemaError('pipeline document needs "source" and a "steps" list')
    return PipelineSpec(doc["source"], [parse_step(s) for s in doc["steps"]], base_dir)


def _read_json(path: Any, base_dir: Path) -> Any:
    p = Path(path)
    if not p.is_absolute():
        p = base_dir / p
    try:
        return load_json(p)
    except OSError as exc:
        raise InputOutputError(f"cannot read {p}: {exc}") from exc
    except ValueError as exc:
        raise SchemaError(f"{p} is not valid JSON: {exc}") from exc


def _load_complex(ref: Any, base_dir: Path) -> SimplicialComplex:
    doc = _read_json(ref, base_dir) if isinstance(ref, str) else ref
    try:
        return complex_from_doc(doc)
    except DocumentError as exc:
        raise SchemaError(str(exc)) from exc


def summary(K: SimplicialComplex, act: SimplicialAction | None) -> dict:
    out = {"fvector": list(f_vector(K)), "dim": K.dim}
    if act is not None:
        out["group_order"] = act.order
    return out


class _State:
    def __init__(self, K, base_dir):
        self.K = K
        self.act: SimplicialAction | None = None
        self.sym_n: int | None = None
        self.base_dir = base_dir
        self.notes: list[str] = []


def _math(fn, *args):
    try:
        with warnings.catch_warnings(record=True) as caught:
            warnings.simplefilter("always")
            result = fn(*args)
        return result, [str(w.message) for w in caught]
    except (ComplexError, ActionError) as exc:
        raise PreconditionError(str(exc), getattr(exc, "witness", None)) from exc


def _carry(state: _State, derived: SimplicialComplex, kind: str) -> SimplicialAction | None:
    if state.act is None:
        return None
    try:
        return induced_action(state.act, derived, kind)
    except ActionError:
        state.notes.append("tracked action does not preserve the subcomplex; dropped")
        return None


def apply_step(state: _State, step: Step) -> dict:
    op, a = step.op, step.args
    K = state.K
    out: dict
    if op == "power":
        P, _ = _math(cons.ordered_power, K, a["n"])
        check_size(P)
        state.K, state.act, state.sym_n = P, symmetric_group_action(K, a["n"], P), a["n"]
    elif op == "fatdiag":
        P, _ = _math(cons.ordered_power, K, a["n"])
        check_size(P)
        F, _ = _math(cons.fat_diagonal, K, a["n"], P)
        act = symmetric_group_action(K, a["n"], P)
        state.K, state.act, state.sym_n = F, induced_action(act, F, "induced-subcomplex"), a["n"]
    elif op in ("conf", "confbs"):
        n = a["n"]
        P, _ = _math(cons.ordered_power, K, n)
        check_size(P)
        F, _ = _math(cons.fat_diagonal, K, n, P)
        act = symmetric_group_action(K, n, P)
        if op == "conf":
            C, _ = _math(cons.simplicial_difference, P, F)
            state.act = induced_action(act, C, "difference")
        else:
            B, _ = _math(cons.barycentric_subdivision, P)
            check_size(B)
            C, _ = _math(cons.complement_model, B, cons.barycentric_subdivision(F))
            state.act = induced_action(induced_action(act, B, "bs"), C, "induced-subcomplex")
        state.K, state.sym_n = C, n
    elif op == "bs":
        B, _ = _math(cons.barycentric_subdivision, K)
        check_size(B)
        state.act = _carry(state, B, "bs")
        state.K = B
    elif op in ("diff", "complement", "nerve"):
        A = _load_complex(a["with"], state.base_dir)
        fn = {"diff": cons.simplicial_difference, "complement": cons.complement_model,
              "nerve": minimal_nonface_nerve}[op]
        D, w = _math(fn, K, A)
        state.notes.extend(w)
        check_size(D)
        if state.act is not None and not is_invariant(state.act, A):
            state.notes.append("tracked action does not preserve the subcomplex; dropped")
            state.act = None
        kind = {"diff": "difference", "complement": "induced-subcomplex", "nerve": "nerve"}[op]
        state.act = _carry(state, D, kind)
        state.K = D
    elif op == "quotient":
        act = _resolve_group(state, a["group"])
        q, _ = _math(quotient_complex, act)
        state.K, state.act, state.sym_n = q.complex, None, None
    if op in COMPLEX_STEPS:
        out = summary(state.K, state.act)
    elif op == "fvector":
        out = {"fvector": list(f_vector(K))}
    elif op == "homology":
        out = homology_profile(K, bool(a.get("reduced", False))).to_json()
    elif op == "check-semiregular":
        out = {"semiregular": is_semiregular(_need_action(state, a))}
    elif op == "check-regular":
        w = regularity_witness(_need_action(state, a))
        out = {"regular": w is None}
        if w is not None:
            out["witness"] = [[to_json(v) for v in w[0]], [to_json(v) for v in w[1]]]
    elif op == "orbits":
        orbs = orbit_partition(_need_action(state, a), a["dim"])
        out = {"dim": a["dim"], "orbits": [[[to_json(v) for v in s] for s in o] for o in orbs]}
    if state.notes:
        out["notes"] = state.notes
        state.notes = []
    return out


def _need_action(state: _State, args: dict) -> SimplicialAction:
    if "group" in args:
        return _resolve_group(state, args["group"])
    if state.act is None:
        raise SchemaError("this step needs a group action; none is tracked")
    return state.act


def _resolve_group(state: _State, g: Any) -> SimplicialAction:
    if isinstance(g, dict) or (isinstance(g, str) and g.endswith(".json")):
        doc = _read_json(g, state.base_dir) if isinstance(g, str) else g
        try:
            act, _ = _math(action_from_doc, state.K, doc)
        except DocumentError as exc:
            raise SchemaError(str(exc)) from exc
        return act
    if state.act is None:
        raise SchemaError(f"group {g!r} requested but no action is tracked")
    name = str(g)
    if name in ("tracked", "G"):
        return state.act
    if name.upper().startswith("S") and name[1:].isdigit():
        if state.sym_n != int(name[1:]):
            raise SchemaError(f"tracked group is S{state.sym_n}, not {name}")
        if factorial(int(name[1:])) != state.act.order:
            raise SchemaError(f"tracked action of order {state.act.order} is not a faithful {name}")
        return state.act
    raise SchemaError(f"unknown group {g!r}")


def run_pipeline(spec: PipelineSpec, timing: bool = True) -> dict:
    """Execute the steps in order and return the report document."""
    K = _load_complex(spec.source, spec.base_dir)
    check_size(K)
    state = _State(K, spec.base_dir)
    entries = []
    result: dict = {}
    for i, step in enumerate(spec.steps):
        before = summary(state.K, state.act)
        t0 = time.perf_counter()
        result = apply_step(state, step)
        entry = {"step": i, "op": step.op, "args": step.args, "input": before, "output": result}
        if timing:
            entry["seconds"] = round(time.perf_counter() - t0, 6)
        entries.append(entry)
    return {"source": summary(K, None), "steps": entries, "result": result}
