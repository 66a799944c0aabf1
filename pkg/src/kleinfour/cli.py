"""Command-line front end.

Every command has a fixed parameter table; the argparse options and the
validation of a :class:`CommandConfig` are both generated from it.  Output is
either a plain-text table or a JSON envelope::

    {"schema_version": 1, "command": ..., "parameters": {...}, "result": {...}}

Exit status: 0 on success, 1 on a usage error, 2 when a reproduced claim
does not match (only ``e6report`` carries claims).
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Callable

from . import casebook
from .autgrp import (
    AutoMap,
    AutomorphismError,
    compose,
    diagram_automorphism,
    inner_involution,
    involution_search,
    longest_element_involution,
    renamed,
)
from .chevalley import ChevalleyAlgebra, build_chevalley, compact_form
from .crit import CriterionError, cor12_decide, lemma2_witness, prop9_check, thm10_check
from .fixpoint import fixed_subalgebra, reductive_decompose
from .realform import RealFormError, noncompact_root_split, real_fixed_form
from .rootsys import RootSystemError, build_root_system, diagram_involution, highest_root

SCHEMA_VERSION = casebook.SCHEMA_VERSION

EXIT_OK, EXIT_USAGE, EXIT_MISMATCH = 0, 1, 2

E6_PRESETS = ("omega", "x0", "x1", "x4", "sigma1", "sigma2", "sigma3", "sigma4")


class UsageError(ValueError):
    pass


@dataclass(frozen=True)
class Param:
    kind: Callable[[str], Any]
    default: Any
    help: str
    multiple: bool = False
    flag: bool = False


def _bool(s: str) -> bool:
    if isinstance(s, bool):
        return s
    if s.lower() in ("1", "true", "yes", "on"):
        return True
    if s.lower() in ("0", "false", "no", "off"):
        return False
    raise UsageError(f"expected a boolean, got {s!r}")


PARAMS: dict[str, dict[str, Param]] = {
    "rootsys": {
        "type": Param(str, "E6", "simple type, e.g. E6, D5, A1"),
    },
    "algebra": {
        "type": Param(str, "E6", "simple type"),
        "verify": Param(_bool, False, "run the Jacobi and Killing-invariance checks", flag=True),
    },
    "involutions": {
        "type": Param(str, "E6", "simple type"),
        "twist": Param(str, "none", "family: none (inner torus), omega, or w0"),
        "decompose": Param(_bool, False, "decompose each fixed subalgebra", flag=True),
    },
    "fixalg": {
        "type": Param(str, "E6", "simple type"),
        "auto": Param(str, ["omega"], "automorphism (preset or comma-separated coroot vector); repeat for a joint fixed algebra", multiple=True),
    },
    "realform": {
        "type": Param(str, "E6", "simple type"),
        "theta": Param(str, "x4", "Cartan involution"),
        "gamma": Param(str, [], "group element; repeat for a Klein four group", multiple=True),
    },
    "criteria": {
        "type": Param(str, "E6", "simple type"),
        "theta": Param(str, "x4", "Cartan involution (inner, Hermitian or not)"),
        "sigma": Param(str, "x0", "first involution"),
        "tau": Param(str, "x1", "second involution"),
        "witness": Param(_bool, True, "construct the projection witness when the pair test holds"),
    },
    "e6report": {},
}


@dataclass
class CommandConfig:
    command: str
    parameters: dict = field(default_factory=dict)
    output_format: str = "text"
    output_path: str | None = None

    def resolved(self) -> dict:
        """Parameters with defaults filled in; unknown keys are rejected."""
        if self.command not in PARAMS:
            raise UsageError(f"unknown command {self.command!r}; accepted: {', '.join(PARAMS)}")
        if self.output_format not in ("text", "json"):
            raise UsageError(f"unknown format {self.output_format!r}; accepted: text, json")
        table = PARAMS[self.command]
        unknown = sorted(set(self.parameters) - set(table))
        if unknown:
            raise UsageError(
                f"unknown parameter(s) {', '.join(unknown)} for {self.command}; "
                f"accepted: {', '.join(table) or '(none)'}"
            )
        out = {}
        for name, p in table.items():
            value = self.parameters.get(name, p.default)
            if p.multiple:
                value = [p.kind(v) for v in (value if isinstance(value, (list, tuple)) else [value])]
            else:
                value = p.kind(value)
            out[name] = value
        return out


# -- automorphism specifications ----------------------------------------------------------


def algebra_for(type_label: str) -> ChevalleyAlgebra:
    try:
        rs = build_root_system(type_label)
    except RootSystemError as exc:
        raise UsageError(str(exc)) from exc
    if rs.name == "E6":
        return casebook.e6_algebra()
    return build_chevalley(rs, verify=False)


def resolve_auto(alg: ChevalleyAlgebra, spec: str) -> AutoMap:
    """A named preset or a comma-separated coroot vector H giving exp(i pi ad H)."""
    spec = spec.strip()
    rs = alg.root_system
    if spec and (spec[0].isdigit() or spec[0] == "-"):
        try:
            vec = [int(x) for x in spec.split(",")]
        except ValueError as exc:
            raise UsageError(f"cannot parse automorphism vector {spec!r}") from exc
        if len(vec) != rs.rank:
            raise UsageError(f"vector {spec!r} has {len(vec)} entries, rank is {rs.rank}")
        try:
            return renamed(inner_involution(alg, vec), spec)
        except AutomorphismError as exc:
            raise UsageError(str(exc)) from exc
    if spec == "omega":
        return renamed(diagram_automorphism(alg, diagram_involution(rs)), "omega")
    if spec in E6_PRESETS:
        if rs.name != "E6":
            raise UsageError(f"preset {spec!r} is defined for E6 only")
        st = casebook.case_study()
        omega = st.x0
        s1 = inner_involution(alg, [0, 1, 0, 0, 0, 0])
        table = {
            "x0": st.x0,
            "x1": st.x1,
            "x4": st.x4,
            "sigma1": s1,
            "sigma2": inner_involution(alg, [1, 0, 0, 0, 0, 1]),
            "sigma3": omega,
            "sigma4": compose(omega, s1),
        }
        return renamed(table[spec], spec)
    raise UsageError(
        f"unknown automorphism {spec!r}; accepted: omega, {', '.join(E6_PRESETS[1:])} (E6), "
        "or a comma-separated coroot vector"
    )


# -- commands -------------------------------------------------------------------------------


def _root_str(r) -> str:
    return "(" + ",".join(str(c) for c in r) + ")"


def cmd_rootsys(p: dict) -> tuple[dict, str, bool]:
    try:
        rs = build_root_system(p["type"])
    except RootSystemError as exc:
        raise UsageError(str(exc)) from exc
    hr = highest_root(rs)
    inv = diagram_involution(rs)
    result = {
        "type": rs.name,
        "rank": rs.rank,
        "cartan_matrix": [list(r) for r in rs.cartan],
        "num_roots": len(rs.roots),
        "num_positive": len(rs.positive_roots),
        "dimension": rs.dimension,
        "max_height": max(rs.heights),
        "highest_root": list(hr),
        "diagram_involution": [i + 1 for i in inv.permutation],
        "roots": [list(r) for r in rs.roots],
    }
    lines = [
        f"type {rs.name}  rank {rs.rank}  roots {len(rs.roots)} ({len(rs.positive_roots)} positive)  "
        f"dimension {rs.dimension}",
        f"highest root {_root_str(hr)}  height {max(rs.heights)}",
        f"diagram involution {result['diagram_involution']}",
        "",
        "height  root",
    ]
    lines += [f"{sum(r):>6}  {_root_str(r)}" for r in rs.roots]
    return result, "\n".join(lines), True


def cmd_algebra(p: dict) -> tuple[dict, str, bool]:
    alg = algebra_for(p["type"])
    cf = compact_form(alg)
    pos, neg = cf.signature()
    result = {
        "type": alg.root_system.name,
        "dim": alg.dim,
        "rank": alg.rank,
        "nonzero_brackets": sum(1 for line in alg.structure_constant_lines()),
        "compact_killing_signature": [pos, neg],
    }
    lines = [
        f"{alg.root_system.name}: dim {alg.dim}, rank {alg.rank}",
        f"compact form Killing signature (positive, negative) = ({pos}, {neg})",
    ]
    if p["verify"]:
        jac = alg.jacobi_violations()
        inv = alg.killing_invariance_violations()
        result["jacobi_violations"] = len(jac)
        result["killing_invariance_violations"] = len(inv)
        lines.append(f"Jacobi violations {len(jac)}, Killing invariance violations {len(inv)}")
    return result, "\n".join(lines), True


def cmd_involutions(p: dict) -> tuple[dict, str, bool]:
    alg = algebra_for(p["type"])
    twist = {"none": None}.get(p["twist"])
    if p["twist"] == "omega":
        twist = diagram_automorphism(alg, diagram_involution(alg.root_system))
    elif p["twist"] == "w0":
        twist = longest_element_involution(alg)
    elif p["twist"] != "none":
        raise UsageError(f"unknown twist {p['twist']!r}; accepted: none, omega, w0")
    found = involution_search(alg, twist=twist)
    rows = []
    for a in found:
        sub = fixed_subalgebra(alg, [a], certify=False)
        row = {"name": a.name, "fixed_dim": sub.dim}
        if p["decompose"]:
            row["fixed_type"] = reductive_decompose(sub).summary()
        rows.append(row)
    dims = sorted({r["fixed_dim"] for r in rows})
    result = {"type": alg.root_system.name, "twist": p["twist"], "count": len(rows),
              "fixed_dims": dims, "involutions": rows}
    lines = [f"{len(rows)} involutions, fixed dimensions {dims}", ""]
    width = max((len(r["name"]) for r in rows), default=4)
    for r in rows:
        lines.append(f"{r['name']:<{width}}  {r['fixed_dim']:>3}  {r.get('fixed_type', '')}".rstrip())
    return result, "\n".join(lines), True


def cmd_fixalg(p: dict) -> tuple[dict, str, bool]:
    alg = algebra_for(p["type"])
    maps = [resolve_auto(alg, s) for s in p["auto"]]
    dec = reductive_decompose(fixed_subalgebra(alg, maps))
    result = {
        "maps": [m.name for m in maps],
        "dim": dec.dim,
        "rank": dec.rank,
        "types": [f"{l}{r}" for l, r in dec.type_labels()],
        "center_dim": dec.center.dim,
        "summary": dec.summary(),
    }
    text = f"fixed subalgebra of {', '.join(result['maps'])}: dim {dec.dim}, rank {dec.rank}, type {dec.summary()}"
    return result, text, True


def cmd_realform(p: dict) -> tuple[dict, str, bool]:
    alg = algebra_for(p["type"])
    theta = resolve_auto(alg, p["theta"])
    gamma = [resolve_auto(alg, s) for s in p["gamma"]]
    try:
        d = real_fixed_form(alg, theta, gamma)
    except RealFormError as exc:
        raise UsageError(str(exc)) from exc
    result = d.to_dict()
    result["theta"] = theta.name
    result["gamma"] = [g.name for g in gamma]
    text = "\n".join([
        f"{d.label}  (dim {d.dim}, signature {d.signature}, Hermitian {d.hermitian})",
        f"maximal compact {d.compact_label}  (dim {d.dim_k})",
    ])
    return result, text, True


def cmd_criteria(p: dict) -> tuple[dict, str, bool]:
    alg = algebra_for(p["type"])
    theta = resolve_auto(alg, p["theta"])
    sigma = resolve_auto(alg, p["sigma"])
    tau = resolve_auto(alg, p["tau"])
    try:
        data = noncompact_root_split(alg, theta)
        st = compose(sigma, tau)
        triple = [prop9_check(data, m) for m in (sigma, tau, st)]
        pair = thm10_check(data, sigma, tau)
    except (CriterionError, RealFormError, AutomorphismError) as exc:
        raise UsageError(str(exc)) from exc
    verdict = cor12_decide(*triple, subject=f"<{sigma.name}, {tau.name}>")
    result = {
        "beta": list(data.beta),
        "hermitian": data.hermitian,
        "sigma_beta": {m.name: list(m.act_on_root(data.beta)) for m in (sigma, tau, st)},
        "single_tests": dict(zip((sigma.name, tau.name, st.name), triple)),
        "pair_test": pair,
        "verdict": verdict.result.value,
        "rule": verdict.rule,
    }
    lines = [f"beta = {_root_str(data.beta)}  (Hermitian {data.hermitian})"]
    for m, ok in zip((sigma, tau, st), triple):
        lines.append(f"  {m.name:<40} sigma(beta) = {_root_str(m.act_on_root(data.beta)):<20} != -beta: {ok}")
    lines.append(f"pair test sigma(beta) = -tau(beta) != +-beta: {pair}")
    lines.append(f"verdict {verdict.result.value}: {verdict.rule}")
    if p["witness"] and pair:
        w = lemma2_witness(alg, theta, sigma, tau, data)
        result["witness"] = {
            "projection": w.projection.to_dict(),
            "nilpotent": w.nilpotent,
            "fixed_by_group": w.fixed_by_group,
            "rescaled": w.rescaled,
        }
        lines.append(f"witness: nilpotent {w.nilpotent}, fixed by the group {w.fixed_by_group}")
    return result, "\n".join(lines), True


def cmd_e6report(p: dict) -> tuple[dict, str, bool]:
    report = casebook.verify_lemma17_thm18()
    d = report.to_dict()
    lines = ["realizations"]
    for k, r in report.realizations.items():
        lines.append(f"  {k:<7} {r['name']:<45} fixed dim {r['fixed_dim']}")
    lines.append("identifications")
    for r in report.identifications:
        lines.append(f"  [{'ok' if r['match'] else 'MISMATCH'}] {r['subject']}: {r['computed_label']}")
        if r["scope"]:
            lines.append(f"         scope: {r['scope']}")
    lines.append("criteria")
    for r in report.criteria:
        lines.append(f"  [{'ok' if r['match'] else 'MISMATCH'}] {r['subject']}: {r['result']}")
    lines.append("center-of-k facts")
    for r in report.facts:
        lines.append(f"  [{'ok' if r['match'] else 'MISMATCH'}] {r['subject']}: {r['result']}")
    lines.append("imported (not recomputed)")
    lines += [f"  - {r['statement']}" for r in report.imported]
    lines.append("")
    lines.append(report.final_verdict)
    return d, "\n".join(lines), report.ok


COMMANDS = {
    "rootsys": cmd_rootsys,
    "algebra": cmd_algebra,
    "involutions": cmd_involutions,
    "fixalg": cmd_fixalg,
    "realform": cmd_realform,
    "criteria": cmd_criteria,
    "e6report": cmd_e6report,
}


def _jsonable(x):
    if isinstance(x, Fraction):
        return [x.numerator, x.denominator]
    raise TypeError(f"not serializable: {type(x).__name__}")


def run(config: CommandConfig) -> tuple[int, str]:
    """Execute a command; returns (exit status, emitted document)."""
    try:
        params = config.resolved()
        result, text, ok = COMMANDS[config.command](params)
    except UsageError as exc:
        return EXIT_USAGE, f"usage error: {exc}"
    status = EXIT_OK if ok else EXIT_MISMATCH
    if config.output_format == "json":
        doc = json.dumps(
            {"schema_version": SCHEMA_VERSION, "command": config.command, "parameters": params, "result": result},
            indent=2,
            sort_keys=True,
            default=_jsonable,
        )
    else:
        doc = text
    return status, doc


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="kleinfour", description="Exact computations for Klein four symmetric pairs.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    for name, table in PARAMS.items():
        sp = sub.add_parser(name)
        for pname, p in table.items():
            if p.flag:
                sp.add_argument(f"--{pname}", action="store_true", help=p.help)
            elif p.multiple:
                sp.add_argument(f"--{pname}", action="append", help=p.help)
            else:
                sp.add_argument(f"--{pname}", help=f"{p.help} (default {p.default})")
        sp.add_argument("--format", choices=("text", "json"), default="text")
        sp.add_argument("--output", help="write the document to this path instead of stdout")
    return parser


def main(argv: list[str] | None = None) -> int:
    args, extra = build_parser().parse_known_args(argv)
    if extra:
        table = PARAMS[args.command]
        accepted = " ".join(f"--{k}" for k in table) + " --format --output"
        print(f"usage error: unrecognized arguments {' '.join(extra)} for {args.command}; accepted: {accepted}",
              file=sys.stderr)
        return EXIT_USAGE
    params = {k: v for k, v in vars(args).items() if k not in ("command", "format", "output") and v is not None}
    config = CommandConfig(args.command, params, args.format, args.output)
    status, doc = run(config)
    if status == EXIT_USAGE:
        print(doc, file=sys.stderr)
        return status
    if config.output_path:
        with open(config.output_path, "w", encoding="utf-8") as fh:
            fh.write(doc + "\n")
    else:
        print(doc)
    return status
