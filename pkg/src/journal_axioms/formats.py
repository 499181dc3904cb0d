"""Problem files (CSV and JSON) and JSON report documents."""

from __future__ import annotations

import csv
import io
import json
from fractions import Fraction
from pathlib import Path

from .axioms import ImpossibilityCertificate, IaViolation
from .core import Problem, ProblemError
from .decomp import Decomposition, Layer, SearchBounds
from .sc import DominanceWitness, ScViolation, WeakOrder

SCHEMA = "journal-axioms/1"


class ProblemFileError(ProblemError):
    pass


def parse_cell(text, row: int, col: int, journal: str = "") -> Fraction:
    where = f"row {row}, column {col}" + (f" ({journal})" if journal else "")
    if isinstance(text, bool) or text is None:
        raise ProblemFileError(f"{where}: unparseable entry {text!r}")
    try:
        value = Fraction(text.strip()) if isinstance(text, str) else Fraction(text)
    except (ValueError, ZeroDivisionError, TypeError):
        raise ProblemFileError(f"{where}: unparseable entry {text!r}") from None
    if value < 0:
        raise ProblemFileError(f"{where}: negative entry {text!r}")
    return value


def _assemble(journals: list[str], rows: list[list]) -> Problem:
    journals = [str(j).strip() for j in journals]
    seen = set()
    for name in journals:
        if name in seen:
            raise ProblemFileError(f"duplicate journal name {name!r}")
        seen.add(name)
    n = len(journals)
    if n == 0:
        raise ProblemFileError("no journals listed")
    if len(rows) != n:
        raise ProblemFileError(f"expected {n} matrix rows, found {len(rows)}")
    values = []
    for r, row in enumerate(rows, start=1):
        if len(row) != n:
            raise ProblemFileError(f"row {r} has {len(row)} entries, expected {n} (ragged matrix)")
        values.append([parse_cell(x, r, c, journals[c - 1]) for c, x in enumerate(row, start=1)])
    return Problem.from_rows(values, journals)


def parse_csv_text(text: str) -> Problem:
    records = [rec for rec in csv.reader(io.StringIO(text)) if any(cell.strip() for cell in rec)]
    if not records:
        raise ProblemFileError("empty CSV file")
    return _assemble(records[0], records[1:])


def parse_structured_text(text: str) -> Problem:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ProblemFileError(f"invalid JSON: {exc}") from None
    if isinstance(doc, dict) and "problem" in doc and "journals" not in doc:
        doc = doc["problem"]
    if not isinstance(doc, dict) or "journals" not in doc or "citations" not in doc:
        raise ProblemFileError('structured problem needs "journals" and "citations" fields')
    rows = doc["citations"]
    if not isinstance(rows, list) or not all(isinstance(r, list) for r in rows):
        raise ProblemFileError('"citations" must be a list of rows')
    return _assemble(list(doc["journals"]), rows)


def guess_format(path: str | Path) -> str:
    return "csv" if Path(path).suffix.lower() in (".csv", ".txt") else "structured"


def parse_problem(path: str | Path, format: str | None = None) -> Problem:
    format = format or guess_format(path)
    text = Path(path).read_text(encoding="utf-8")
    if format == "csv":
        return parse_csv_text(text)
    if format == "structured":
        return parse_structured_text(text)
    raise ValueError(f"unknown problem format {format!r}")


def fraction_str(x: Fraction) -> str:
    return str(Fraction(x))


def problem_to_csv(p: Problem) -> str:
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(p.journals)
    for row in p.citations:
        writer.writerow([fraction_str(x) for x in row])
    return out.getvalue()


def problem_to_dict(p: Problem) -> dict:
    return {
        "journals": list(p.journals),
        "citations": [[fraction_str(x) for x in row] for row in p.citations],
    }


def problem_from_dict(doc: dict) -> Problem:
    return _assemble(list(doc["journals"]), doc["citations"])


def order_to_dict(order: WeakOrder, journals) -> dict:
    return {"classes": order.names(journals), "indices": [list(c) for c in order.classes]}


def order_from_dict(doc: dict) -> WeakOrder:
    return WeakOrder(tuple(tuple(c) for c in doc["indices"]))


def bounds_to_dict(bounds: SearchBounds) -> dict:
    return {"granularity": fraction_str(bounds.granularity), "max_layers": bounds.max_layers, "cap": bounds.cap}


def bounds_from_dict(doc: dict) -> SearchBounds:
    return SearchBounds(Fraction(doc["granularity"]), doc["max_layers"], doc["cap"])


def witness_to_dict(w: DominanceWitness, journals) -> dict:
    return {
        "dominant": w.dominant,
        "dominated": w.dominated,
        "strict": w.strict,
        "layers": [problem_to_dict(layer.problem)["citations"] for layer in w.decomposition.layers],
        "bijections": [
            [{"from": journals[k], "to": journals[g], "indices": [k, g]} for k, g in layer]
            for layer in w.bijections
        ],
    }


def witness_from_dict(doc: dict, p: Problem) -> DominanceWitness:
    layers = tuple(
        Layer(Problem.from_rows([[Fraction(x) for x in row] for row in rows], p.journals), idx + 1)
        for idx, rows in enumerate(doc["layers"])
    )
    return DominanceWitness(
        doc["dominant"],
        doc["dominated"],
        Decomposition(layers, p),
        tuple(tuple(tuple(pair["indices"]) for pair in layer) for layer in doc["bijections"]),
        doc["strict"],
    )


def sc_violation_to_dict(v: ScViolation, journals) -> dict:
    i, j = v.pair
    return {
        "pair": [journals[i], journals[j]],
        "indices": [i, j],
        "observed": v.observed,
        "description": v.describe(journals),
        "witness": witness_to_dict(v.witness, journals),
    }


def ia_violation_to_dict(v: IaViolation) -> dict:
    names = v.problem.journals
    return {
        "merge": [names[k] for k in v.merge],
        "pair": [names[k] for k in v.pair],
        "indices": {"merge": list(v.merge), "pair": list(v.pair)},
        "before": v.before,
        "after": v.after,
        "mode": v.mode,
    }


def certificate_to_dict(cert: ImpossibilityCertificate) -> dict:
    p = cert.problem
    q = cert.merged_problem
    return {
        "kind": "impossibility-certificate",
        "problem": problem_to_dict(p),
        "target": [p.journals[k] for k in cert.target],
        "merge": [p.journals[k] for k in cert.merge],
        "indices": {"target": list(cert.target), "merge": list(cert.merge)},
        "before_relation": cert.before_relation,
        "after_relation": cert.after_relation,
        "refutes_weak_ia": cert.refutes_weak_ia,
        "before_set": [order_to_dict(o, p.journals) for o in cert.before_set],
        "merged_problem": problem_to_dict(q),
        "after_set": [order_to_dict(o, q.journals) for o in cert.after_set],
    }


def certificate_from_dict(doc: dict) -> ImpossibilityCertificate:
    return ImpossibilityCertificate(
        problem_from_dict(doc["problem"]),
        tuple(doc["indices"]["target"]),
        tuple(doc["indices"]["merge"]),
        tuple(order_from_dict(o) for o in doc["before_set"]),
        tuple(order_from_dict(o) for o in doc["after_set"]),
        doc["before_relation"],
        doc["after_relation"],
    )


def report(command: str, p: Problem | None, params: dict, result) -> dict:
    doc = {"schema": SCHEMA, "command": command, "params": params}
    if p is not None:
        doc["problem"] = problem_to_dict(p)
    doc["result"] = result
    return doc


def dumps(doc: dict) -> str:
    return json.dumps(doc, indent=2, ensure_ascii=False)
