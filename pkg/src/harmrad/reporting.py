"""JSON and CSV serialization of reports.

Rational values always serialize as exact "p/q" strings (never
decimals); floats serialize as JSON numbers via repr, which round-trips
exactly.  JSON key order is fixed, so reports are byte-stable.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Union

from .bounds import BoundCheckResult
from .graphs import GraphClass, GraphKind
from .indices import IndexReport
from .sweep import Certificate, ExtremalWitness, MarginWitness, SweepReport

TOOL_VERSION = "0.1.0"

Value = Union[Fraction, float]


@dataclass(frozen=True)
class ReportEnvelope:
    command: str
    inputs: dict
    results: Any
    tool_version: str = TOOL_VERSION


def frac_str(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def parse_frac(s: str) -> Fraction:
    return Fraction(s)


def value_out(x: Value) -> Union[str, float]:
    # rationals as "p/q" strings, floats as JSON numbers
    return frac_str(x) if isinstance(x, Fraction) else x


def value_in(x: Union[str, float, int]) -> Value:
    return Fraction(x) if isinstance(x, str) else float(x)


def graph_class_out(cls: GraphClass) -> dict:
    return {"kind": cls.kind.value, "cyclomatic": cls.cyclomatic}


def graph_class_in(d: dict) -> GraphClass:
    return GraphClass(GraphKind(d["kind"]), d["cyclomatic"])


def index_report_out(rep: IndexReport) -> dict:
    return {
        "harmonic": frac_str(rep.harmonic),
        "randic": rep.randic,
        "radius": rep.radius,
        "cyclomatic": rep.cyclomatic,
        "graph_class": graph_class_out(rep.graph_class),
    }


def index_report_in(d: dict) -> IndexReport:
    return IndexReport(
        harmonic=Fraction(d["harmonic"]),
        randic=float(d["randic"]),
        radius=d["radius"],
        cyclomatic=d["cyclomatic"],
        graph_class=graph_class_in(d["graph_class"]),
    )


def check_result_out(res: BoundCheckResult) -> dict:
    return {
        "claim": res.claim,
        "status": res.status,
        "bound": value_out(res.bound),
        "actual": value_out(res.actual),
        "slack": value_out(res.slack),
    }


def check_result_in(d: dict) -> BoundCheckResult:
    return BoundCheckResult(
        claim=d["claim"],
        status=d["status"],
        bound=value_in(d["bound"]),
        actual=value_in(d["actual"]),
        slack=value_in(d["slack"]),
    )


def _edges_out(edges) -> list:
    return [[u, v] for u, v in edges]


def _edges_in(rows) -> tuple:
    return tuple((u, v) for u, v in rows)


def certificate_out(cert: Certificate) -> dict:
    return {
        "claim": cert.claim,
        "n": cert.n,
        "edges": _edges_out(cert.edges),
        "status": cert.status,
        "bound": value_out(cert.bound),
        "actual": value_out(cert.actual),
        "slack": value_out(cert.slack),
    }


def certificate_in(d: dict) -> Certificate:
    return Certificate(
        claim=d["claim"],
        n=d["n"],
        edges=_edges_in(d["edges"]),
        status=d["status"],
        bound=value_in(d["bound"]),
        actual=value_in(d["actual"]),
        slack=value_in(d["slack"]),
    )


def sweep_report_out(rep: SweepReport) -> dict:
    extremal = {}
    for claim, wit in rep.extremal.items():
        extremal[claim] = (
            None
            if wit is None
            else {"edges": _edges_out(wit.edges), "slack": value_out(wit.slack)}
        )
    aux = {
        name: {"edges": _edges_out(w.edges), "value": frac_str(w.value)}
        for name, w in rep.aux.items()
    }
    return {
        "family": rep.family,
        "n": rep.n,
        "dedup": rep.dedup,
        "claims": list(rep.claims),
        "graphs_examined": rep.graphs_examined,
        "tallies": {c: dict(t) for c, t in rep.tallies.items()},
        "violations": [certificate_out(c) for c in rep.violations],
        "extremal": extremal,
        "aux": aux,
    }


def sweep_report_in(d: dict) -> SweepReport:
    extremal = {}
    for claim, wit in d["extremal"].items():
        extremal[claim] = (
            None
            if wit is None
            else ExtremalWitness(_edges_in(wit["edges"]), value_in(wit["slack"]))
        )
    aux = {
        name: MarginWitness(_edges_in(w["edges"]), Fraction(w["value"]))
        for name, w in d["aux"].items()
    }
    return SweepReport(
        family=d["family"],
        n=d["n"],
        dedup=d["dedup"],
        claims=tuple(d["claims"]),
        graphs_examined=d["graphs_examined"],
        tallies={c: dict(t) for c, t in d["tallies"].items()},
        violations=tuple(certificate_in(c) for c in d["violations"]),
        extremal=extremal,
        aux=aux,
    )


def lemma2_result_out(res: dict) -> dict:
    return {
        "x_max": res["x_max"],
        "y_max": res["y_max"],
        "argmin": list(res["argmin"]),
        "minimum": frac_str(res["minimum"]),
    }


def lemma2_result_in(d: dict) -> dict:
    return {
        "x_max": d["x_max"],
        "y_max": d["y_max"],
        "argmin": tuple(d["argmin"]),
        "minimum": Fraction(d["minimum"]),
    }


def reduce_result_out(steps: list[dict]) -> dict:
    out = []
    for s in steps:
        out.append(
            {
                "step": s["step"],
                "deleted_edge": None
                if s["deleted_edge"] is None
                else list(s["deleted_edge"]),
                "n": s["n"],
                "m": s["m"],
                "cyclomatic": s["cyclomatic"],
                "harmonic": frac_str(s["harmonic"]),
                "radius": s["radius"],
            }
        )
    return {"steps": out}


def reduce_result_in(d: dict) -> list[dict]:
    steps = []
    for s in d["steps"]:
        steps.append(
            {
                "step": s["step"],
                "deleted_edge": None
                if s["deleted_edge"] is None
                else tuple(s["deleted_edge"]),
                "n": s["n"],
                "m": s["m"],
                "cyclomatic": s["cyclomatic"],
                "harmonic": Fraction(s["harmonic"]),
                "radius": s["radius"],
            }
        )
    return steps


_RESULT_OUT = {
    "index": index_report_out,
    "check": lambda results: [check_result_out(r) for r in results],
    "sweep": sweep_report_out,
    "lemma2": lemma2_result_out,
    "reduce": reduce_result_out,
}

_RESULT_IN = {
    "index": index_report_in,
    "check": lambda rows: [check_result_in(r) for r in rows],
    "sweep": sweep_report_in,
    "lemma2": lemma2_result_in,
    "reduce": reduce_result_in,
}


def envelope_to_json(env: ReportEnvelope) -> str:
    payload = {
        "command": env.command,
        "inputs": env.inputs,
        "results": _RESULT_OUT[env.command](env.results),
        "tool_version": env.tool_version,
    }
    return json.dumps(payload, indent=2)


def envelope_from_json(text: str) -> ReportEnvelope:
    d = json.loads(text)
    command = d["command"]
    return ReportEnvelope(
        command=command,
        inputs=d["inputs"],
        results=_RESULT_IN[command](d["results"]),
        tool_version=d["tool_version"],
    )


# --- flat CSV outputs ------------------------------------------------------


def _write_rows(header: list[str], rows: list[list]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def _csv_value(x) -> str:
    if isinstance(x, Fraction):
        return frac_str(x)
    return repr(x) if isinstance(x, float) else str(x)


def index_csv(graph_id: str, n: int, m: int, rep: IndexReport) -> str:
    header = [
        "graph",
        "n",
        "m",
        "harmonic",
        "randic",
        "radius",
        "cyclomatic",
        "graph_class",
    ]
    row = [
        graph_id,
        n,
        m,
        frac_str(rep.harmonic),
        repr(rep.randic),
        rep.radius,
        rep.cyclomatic,
        rep.graph_class.kind.value,
    ]
    return _write_rows(header, [row])


def check_csv(graph_id: str, results: list[BoundCheckResult]) -> str:
    header = ["graph", "claim", "status", "bound", "actual", "slack"]
    rows = [
        [
            graph_id,
            r.claim,
            r.status,
            _csv_value(r.bound),
            _csv_value(r.actual),
            _csv_value(r.slack),
        ]
        for r in results
    ]
    return _write_rows(header, rows)


def sweep_csv(rep: SweepReport) -> str:
    """One row per witness graph and claim (violations plus extremal)."""
    header = [
        "kind",
        "family",
        "n",
        "claim",
        "edges",
        "status",
        "bound",
        "actual",
        "slack",
    ]
    rows = []
    for cert in rep.violations:
        rows.append(
            [
                "violation",
                rep.family,
                rep.n,
                cert.claim,
                ";".join(f"{u}-{v}" for u, v in cert.edges),
                cert.status,
                _csv_value(cert.bound),
                _csv_value(cert.actual),
                _csv_value(cert.slack),
            ]
        )
    for claim in rep.claims:
        wit = rep.extremal.get(claim)
        if wit is None:
            continue
        rows.append(
            [
                "extremal",
                rep.family,
                rep.n,
                claim,
                ";".join(f"{u}-{v}" for u, v in wit.edges),
                "",
                "",
                "",
                _csv_value(wit.slack),
            ]
        )
    return _write_rows(header, rows)


def lemma2_csv(res: dict) -> str:
    header = ["x_max", "y_max", "argmin_x", "argmin_y", "minimum"]
    row = [
        res["x_max"],
        res["y_max"],
        res["argmin"][0],
        res["argmin"][1],
        frac_str(res["minimum"]),
    ]
    return _write_rows(header, [row])


def reduce_csv(steps: list[dict]) -> str:
    header = ["step", "deleted_edge", "n", "m", "cyclomatic", "harmonic", "radius"]
    rows = []
    for s in steps:
        e = s["deleted_edge"]
        rows.append(
            [
                s["step"],
                "" if e is None else f"{e[0]}-{e[1]}",
                s["n"],
                s["m"],
                s["cyclomatic"],
                frac_str(s["harmonic"]),
                s["radius"],
            ]
        )
    return _write_rows(header, rows)
