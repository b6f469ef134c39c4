"""JSON certificate: encoding, schema validation and the markdown report.

Top-level keys are ``config``, ``solutions``, ``bounds``, ``reduction`` and
``meta``.  Integers above 2**53 are written as decimal strings and reals as
``{"digits", "exponent", "radius"}`` with value ``digits * 10**exponent``
and error at most ``radius * 10**exponent``.
"""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field
from decimal import Decimal

import jsonschema

from . import __version__
from .heights import BoundChain, PUBLISHED_ABSOLUTE_BOUND, PUBLISHED_CHAIN, PUBLISHED_MATVEEV
from .reduction import (
    PUBLISHED_MIN_EPSILON,
    PUBLISHED_STAGE_BOUNDS,
    ExceptionCase,
    ReductionCertificate,
    StageResult,
)
from .search import RepresentationSet, Solution, _group

SCHEMA_VERSION = 1
_EXACT_INT = 2**53


def encode_int(n: int):
    return str(n) if abs(n) > _EXACT_INT else n


def decode_int(v) -> int:
    return int(v)


def encode_real(x) -> dict:
    """Real as a digits/exponent/radius triple; accepts floats or (mid, rad, exp) tuples."""
    if isinstance(x, tuple):
        mid, rad, exp = x
        return {"digits": str(mid), "exponent": exp, "radius": str(rad)}
    sign, digits, exp = Decimal(repr(float(x))).as_tuple()
    mid = int("".join(map(str, digits)) or "0") * (-1 if sign else 1)
    return {"digits": str(mid), "exponent": exp, "radius": "0"}


def decode_real_triple(d: dict) -> tuple:
    return int(d["digits"]), int(d["radius"]), int(d["exponent"])


def decode_real_float(d: dict) -> float:
    return float(f"{d['digits']}e{d['exponent']}")


# --- schema -------------------------------------------------------------------------

_INT = {"anyOf": [{"type": "integer"}, {"type": "string", "pattern": "^-?[0-9]+$"}]}
_REAL = {
    "type": "object",
    "required": ["digits", "exponent", "radius"],
    "properties": {
        "digits": {"type": "string", "pattern": "^-?[0-9]+$"},
        "exponent": {"type": "integer"},
        "radius": {"type": "string", "pattern": "^[0-9]+$"},
    },
    "additionalProperties": False,
}
_STAGE = {
    "type": "object",
    "required": ["stage", "A", "q_index", "cases", "main_bound", "bound", "min_epsilon",
                 "min_epsilon_at", "max_bound_at", "escalated", "exceptions"],
    "properties": {
        "min_epsilon": _REAL,
        "exceptions": {"type": "array", "items": {
            "type": "object",
            "required": ["params", "mu_integer", "homogeneous_bound", "dna_threshold", "resolution"],
        }},
    },
}
SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "type": "object",
    "required": ["config", "solutions", "bounds", "reduction", "meta"],
    "additionalProperties": False,
    "properties": {
        "config": {"type": "object", "required": ["precision_digits", "n_max", "ell_max"]},
        "solutions": {"anyOf": [{"type": "null"}, {
            "type": "object",
            "required": ["n_max", "ell_max", "values", "representations", "no_solutions"],
            "properties": {
                "values": {"type": "array", "items": _INT},
                "representations": {"type": "array", "items": {
                    "type": "object",
                    "required": ["N", "n1", "n2", "n3", "d", "ell"],
                    "properties": {k: _INT for k in ["N", "n1", "n2", "n3", "d", "ell"]},
                }},
                "no_solutions": {"type": "boolean"},
            },
        }]},
        "bounds": {"anyOf": [{"type": "null"}, {
            "type": "object",
            "required": ["c1", "c2", "c3", "absolute_bound", "matveev", "a3"],
            "properties": {
                "c1": _REAL, "c2": _REAL, "c3": _REAL, "absolute_bound": _INT,
                "matveev": {"type": "array", "items": _REAL},
                "a3": {"type": "array", "items": _REAL},
            },
        }]},
        "reduction": {"anyOf": [{"type": "null"}, {
            "type": "object",
            "required": ["M", "digits", "q_index", "p", "q", "stage1", "stage2", "stage3",
                         "search_threshold", "contradiction"],
            "properties": {
                "M": _INT, "p": _INT, "q": _INT,
                "stage1": _STAGE, "stage2": _STAGE, "stage3": _STAGE,
                "contradiction": {"type": "boolean"},
            },
        }]},
        "meta": {"type": "object", "required": ["tool_version", "schema_version"]},
    },
}


class SchemaViolation(ValueError):
    pass


def validate(doc: dict) -> None:
    try:
        jsonschema.validate(doc, SCHEMA)
    except jsonschema.ValidationError as e:
        path = "/".join(map(str, e.absolute_path)) or "<root>"
        raise SchemaViolation(f"{path}: {e.message}") from None


# --- section codecs -------------------------------------------------------------------


def solutions_to_json(rs: RepresentationSet) -> dict:
    sols = rs.solutions()
    return {
        "n_max": rs.n_max,
        "ell_max": rs.ell_max,
        "values": [encode_int(v) for v in sorted(rs.values)],
        "representations": [{k: encode_int(v) for k, v in asdict(s).items()} for s in sols],
        "no_solutions": not sols,
    }


def solutions_from_json(d: dict) -> RepresentationSet:
    sols = [Solution(**{k: decode_int(v) for k, v in r.items()}) for r in d["representations"]]
    return _group(sols, d["n_max"], d["ell_max"])


def bounds_to_json(b: BoundChain) -> dict:
    return {
        "c1": encode_real(b.c1), "c2": encode_real(b.c2), "c3": encode_real(b.c3),
        "absolute_bound": encode_int(b.absolute_bound),
        "matveev": [encode_real(x) for x in b.matveev],
        "a3": [encode_real(x) for x in b.a3],
        "log_power_bound": encode_int(b.log_power_bound),
        "fixed_point": encode_int(b.fixed_point),
    }


def bounds_from_json(d: dict) -> BoundChain:
    return BoundChain(
        c1=decode_real_float(d["c1"]), c2=decode_real_float(d["c2"]), c3=decode_real_float(d["c3"]),
        absolute_bound=decode_int(d["absolute_bound"]),
        matveev=tuple(decode_real_float(x) for x in d["matveev"]),
        a3=tuple(decode_real_float(x) for x in d["a3"]),
        log_power_bound=decode_int(d.get("log_power_bound", 0)),
        fixed_point=decode_int(d.get("fixed_point", 0)),
    )


def _stage_to_json(s: StageResult) -> dict:
    return {
        "stage": s.stage, "A": s.A, "q_index": s.q_index, "cases": s.cases,
        "main_bound": s.main_bound, "bound": s.bound,
        "homogeneous_bound": s.homogeneous_bound,
        "min_epsilon": encode_real(s.min_epsilon),
        "min_epsilon_at": list(s.min_epsilon_at),
        "max_bound_at": list(s.max_bound_at),
        "escalated": s.escalated,
        "exceptions": [dict(asdict(e), params=list(e.params)) for e in s.exceptions],
    }


def _stage_from_json(d: dict) -> StageResult:
    return StageResult(
        stage=d["stage"], A=d["A"], q_index=d["q_index"], cases=d["cases"],
        main_bound=d["main_bound"], min_epsilon=decode_real_triple(d["min_epsilon"]),
        min_epsilon_at=tuple(d["min_epsilon_at"]), max_bound_at=tuple(d["max_bound_at"]),
        escalated=d["escalated"],
        exceptions=[ExceptionCase(**dict(e, params=tuple(e["params"]))) for e in d["exceptions"]],
    )


def reduction_to_json(r: ReductionCertificate) -> dict:
    return {
        "M": encode_int(r.M), "digits": r.digits, "q_index": r.q_index,
        "p": encode_int(r.p_q[0]), "q": encode_int(r.p_q[1]),
        "stage1": _stage_to_json(r.stage1),
        "stage2": _stage_to_json(r.stage2),
        "stage3": _stage_to_json(r.stage3),
        "search_threshold": r.search_threshold,
        "contradiction": r.contradiction,
    }


def reduction_from_json(d: dict) -> ReductionCertificate:
    return ReductionCertificate(
        M=decode_int(d["M"]), digits=d["digits"], q_index=d["q_index"],
        p_q=(decode_int(d["p"]), decode_int(d["q"])),
        stage1=_stage_from_json(d["stage1"]), stage2=_stage_from_json(d["stage2"]),
        stage3=_stage_from_json(d["stage3"]), search_threshold=d["search_threshold"],
    )


# --- the certificate ------------------------------------------------------------------


@dataclass
class Certificate:
    config: dict
    solutions: RepresentationSet | None = None
    bounds: BoundChain | None = None
    reduction: ReductionCertificate | None = None
    meta: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        meta = {"tool_version": __version__, "schema_version": SCHEMA_VERSION, **self.meta}
        return {
            "config": self.config,
            "solutions": solutions_to_json(self.solutions) if self.solutions is not None else None,
            "bounds": bounds_to_json(self.bounds) if self.bounds is not None else None,
            "reduction": reduction_to_json(self.reduction) if self.reduction is not None else None,
            "meta": meta,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True) + "\n"

    @classmethod
    def from_dict(cls, doc: dict) -> Certificate:
        validate(doc)
        return cls(
            config=doc["config"],
            solutions=solutions_from_json(doc["solutions"]) if doc["solutions"] else None,
            bounds=bounds_from_json(doc["bounds"]) if doc["bounds"] else None,
            reduction=reduction_from_json(doc["reduction"]) if doc["reduction"] else None,
            meta={k: v for k, v in doc["meta"].items() if k not in ("tool_version", "schema_version")},
        )

    @classmethod
    def from_json(cls, text: str) -> Certificate:
        try:
            doc = json.loads(text)
        except json.JSONDecodeError as e:
            raise SchemaViolation(f"not valid JSON: {e}") from None
        return cls.from_dict(doc)


# --- markdown ---------------------------------------------------------------------------


def _fmt(x: float) -> str:
    return f"{x:.6g}"


def render_markdown(cert: Certificate) -> str:
    out = ["# Padovan triple-sum repdigit verification report", ""]
    cfg = cert.config
    out += ["## Configuration", ""]
    out += [f"- `{k}`: {v}" for k, v in sorted(cfg.items())] + [""]

    if cert.solutions is not None:
        rs = cert.solutions
        out += ["## Search", "",
                f"Range 0 <= n3 <= n2 <= n1 <= {rs.n_max}, 2 <= l <= {rs.ell_max}.", ""]
        if not len(rs):
            out += ["No solutions.", ""]
        else:
            out += ["| N | representations (n1, n2, n3) |", "|---|---|"]
            for N, group in rs.by_value.items():
                reps = ", ".join(f"({s.n1}, {s.n2}, {s.n3})" for s in group)
                out.append(f"| {N} | {reps} |")
            out.append("")

    if cert.bounds is not None:
        b = cert.bounds
        out += ["## Baker bounds", "", "| case | Matveev coefficient | published | chain constant | published |",
                "|---|---|---|---|---|"]
        chain = (b.c1, b.c2, b.c3)
        for i in range(3):
            out.append(f"| {i + 1} | {_fmt(b.matveev[i])} | {_fmt(PUBLISHED_MATVEEV[i])} | "
                       f"{_fmt(chain[i])} | {_fmt(PUBLISHED_CHAIN[i])} |")
        out += ["", f"Absolute bound: n1 < {b.absolute_bound:.3e} (published: {PUBLISHED_ABSOLUTE_BOUND:.0e}).", ""]

    if cert.reduction is not None:
        r = cert.reduction
        out += ["## Reduction", "",
                f"M = {r.M}, convergent index {r.q_index} (0-based), q = {r.p_q[1]}.", "",
                "| stage | A | cases | escalated | min eps | at | bound | published bound | published min eps |",
                "|---|---|---|---|---|---|---|---|---|"]
        for s in (r.stage1, r.stage2, r.stage3):
            out.append(f"| {s.stage} | {s.A} | {s.cases} | {s.escalated} | {_fmt(s.min_epsilon_value)} | "
                       f"{s.min_epsilon_at} | {s.bound} | {PUBLISHED_STAGE_BOUNDS[s.stage]} | "
                       f"{PUBLISHED_MIN_EPSILON[s.stage]} |")
        out.append("")
        excs = [(s.stage, e) for s in (r.stage2, r.stage3) for e in s.exceptions]
        if excs:
            out += ["### Integer-shift exceptions", "",
                    "| stage | case | mu | Legendre bound | valid from w >= |", "|---|---|---|---|---|"]
            out += [f"| {st} | {e.params} | {e.mu_integer} | {e.homogeneous_bound} | {e.dna_threshold} |"
                    for st, e in excs]
            out.append("")
        verdict = "holds" if r.contradiction else "FAILS"
        out += [f"Reduced bound n1 <= {r.stage3_bound} vs. search threshold {r.search_threshold}: "
                f"contradiction {verdict}.", ""]
    return "\n".join(out)
