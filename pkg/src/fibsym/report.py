"""JSON, CSV and text renderings of verdicts and sweeps.

Big integers go into JSON as decimal strings so that no consumer ever
rounds them through a float.
"""

from __future__ import annotations

import csv
import io
import json
from collections import Counter
from typing import Any, Iterable, Optional, Sequence

from .classification import (
    Attempt,
    Family,
    OracleConfidence,
    Reason,
    Status,
    SweepRow,
    Verdict,
)
from .kernel import SymmetricCertificate

CSV_HEADER = [
    "family", "i1", "i2", "i3", "d1", "d2", "d3", "status", "reason",
    "lambda", "e1", "e2", "frobenius", "genus", "oracle",
]

# how each family names the two numerator exponents
CLOSED_FORM_NAMES = {
    Family.FIBONACCI: ("f1", "f2"),
    Family.LUCAS: ("l1", "l2"),
    Family.RAW: ("e1", "e2"),
}


def _s(n: Optional[int]) -> Optional[str]:
    return None if n is None else str(n)


def _ss(ns: Optional[Sequence[int]]) -> Optional[list[str]]:
    return None if ns is None else [str(n) for n in ns]


def _i(s: Optional[str]) -> Optional[int]:
    return None if s is None else int(s)


def _ii(ss: Optional[Sequence[str]]) -> Optional[tuple[int, ...]]:
    return None if ss is None else tuple(int(s) for s in ss)


def certificate_to_dict(c: SymmetricCertificate) -> dict[str, Any]:
    return {
        "generators": _ss(c.generators),
        "pair": _ss(c.pair),
        "third": _s(c.third),
        "lambda": _s(c.lam),
        "e1": _s(c.e1),
        "e2": _s(c.e2),
        "frobenius": _s(c.frobenius),
        "genus": _s(c.genus),
        "witness": _ss(c.witness),
    }


def certificate_from_dict(d: dict[str, Any]) -> SymmetricCertificate:
    return SymmetricCertificate(
        generators=_ii(d["generators"]),
        pair=_ii(d["pair"]),
        third=int(d["third"]),
        lam=int(d["lambda"]),
        e1=int(d["e1"]),
        e2=int(d["e2"]),
        frobenius=int(d["frobenius"]),
        genus=int(d["genus"]),
        witness=_ii(d["witness"]),
    )


def verdict_to_dict(v: Verdict, oracle: Optional[OracleConfidence] = None) -> dict[str, Any]:
    doc: dict[str, Any] = {
        "family": v.family.value,
        "indices": list(v.indices) if v.indices else None,
        "generators": _ss(v.generators),
        "status": v.status.value,
        "reason": v.reason.value,
        "minimal": v.minimal,
        "lambda": _s(v.lam),
        "pair": _ss(v.pair),
        "pair_indices": list(v.pair_indices) if v.pair_indices else None,
        "index_gcd": v.index_gcd,
        "witness": _ss(v.witness),
        "frobenius": _s(v.frobenius),
        "genus": _s(v.genus),
        "certificate": certificate_to_dict(v.certificate) if v.certificate else None,
        "hilbert": None,
        "closed_form_names": list(CLOSED_FORM_NAMES[v.family]),
        "attempts": [
            {
                "pair": _ss(a.pair),
                "third": _s(a.third),
                "lambda": _s(a.lam),
                "reason": a.reason.value,
                "witness": _ss(a.witness),
            }
            for a in v.attempts
        ],
        "oracle": oracle.value if oracle else None,
    }
    if v.certificate:
        h = v.certificate.hilbert
        doc["hilbert"] = {
            "numerator_exponents": _ss(h.numerator_exponents),
            "denominator_exponents": _ss(h.denominator_exponents),
            "display": h.render(),
        }
    return doc


def verdict_from_dict(d: dict[str, Any]) -> Verdict:
    return Verdict(
        family=Family(d["family"]),
        indices=tuple(d["indices"]) if d["indices"] else None,
        generators=_ii(d["generators"]),
        status=Status(d["status"]),
        reason=Reason(d["reason"]),
        certificate=certificate_from_dict(d["certificate"]) if d["certificate"] else None,
        lam=_i(d["lambda"]),
        pair=_ii(d["pair"]),
        pair_indices=tuple(d["pair_indices"]) if d["pair_indices"] else None,
        witness=_ii(d["witness"]),
        frobenius=_i(d["frobenius"]),
        genus=_i(d["genus"]),
        minimal=d["minimal"],
        attempts=tuple(
            Attempt(
                pair=_ii(a["pair"]),
                third=int(a["third"]),
                lam=int(a["lambda"]),
                reason=Reason(a["reason"]),
                witness=_ii(a["witness"]),
            )
            for a in d["attempts"]
        ),
    )


def csv_row(v: Verdict, oracle: Optional[OracleConfidence]) -> list[str]:
    idx = list(v.indices) if v.indices else ["", "", ""]
    c = v.certificate

    def cell(x):
        return "" if x is None else str(x)

    return [
        v.family.value,
        *map(cell, idx),
        *map(str, v.generators),
        v.status.value,
        v.reason.value,
        cell(v.lam),
        cell(c.e1 if c else None),
        cell(c.e2 if c else None),
        cell(v.frobenius),
        cell(v.genus),
        oracle.value if oracle else "",
    ]


def render_csv(rows: Iterable[tuple[Verdict, Optional[OracleConfidence]]]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_HEADER)
    for v, o in rows:
        w.writerow(csv_row(v, o))
    return buf.getvalue()


def render_text(v: Verdict, oracle: Optional[OracleConfidence] = None) -> str:
    lines = [f"family      {v.family.value}"]
    if v.indices:
        lines.append("indices     " + " ".join(map(str, v.indices)))
    lines.append("generators  " + " ".join(map(str, v.generators)))
    lines.append(f"status      {v.status.value} ({v.reason.value})")
    if not v.minimal and v.status is Status.SYMMETRIC:
        lines.append("minimal     no (one generator is redundant)")
    if v.status is Status.NON_MINIMAL and v.pair and v.witness:
        (x, y), (a, b) = v.pair, v.witness
        lines.append(f"dependence  {a*x + b*y} = {a}*{x} + {b}*{y}")
    elif v.pair is not None:
        where = f" [indices {v.pair_indices[0]}, {v.pair_indices[1]}]" if v.pair_indices else ""
        lam = f"lambda {v.lam}, " if v.lam is not None else ""
        lines.append(f"pair        {lam}({v.pair[0]}, {v.pair[1]}){where}")
        if v.index_gcd is not None:
            lines.append(f"index gcd   {v.index_gcd}")
    c = v.certificate
    if c is not None:
        n1, n2 = CLOSED_FORM_NAMES[v.family]
        lines.append(f"{n1}, {n2}      {c.e1}, {c.e2}")
    if v.frobenius is not None:
        lines.append(f"frobenius   {v.frobenius}")
        lines.append(f"genus       {v.genus}")
    if c is not None:
        lines.append(f"hilbert     {c.hilbert.render()}")
    if oracle is not None:
        lines.append(f"oracle      {oracle.value}")
    return "\n".join(lines) + "\n"


def sweep_summary(rows: Sequence[SweepRow]) -> dict[str, dict[str, int]]:
    return {
        "status": dict(sorted(Counter(r.verdict.status.value for r in rows).items())),
        "oracle": dict(sorted(Counter(r.oracle.value for r in rows).items())),
    }


def sweep_to_dict(rows: Sequence[SweepRow], **meta: Any) -> dict[str, Any]:
    return {
        **meta,
        "rows": [verdict_to_dict(r.verdict, r.oracle) for r in rows],
        "summary": sweep_summary(rows),
    }


def render_sweep_text(rows: Sequence[SweepRow]) -> str:
    out = []
    for r in rows:
        v = r.verdict
        extra = f" F={v.frobenius} G={v.genus}" if v.frobenius is not None else ""
        out.append(
            f"{r.triple[0]:>3} {r.triple[1]:>3} {r.triple[2]:>3}  "
            f"{v.status.value:<13} {v.reason.value:<27} {r.oracle.value:<9}{extra}"
        )
    summary = sweep_summary(rows)
    out.append(f"# {len(rows)} triples")
    out.append("# status: " + ", ".join(f"{k}={n}" for k, n in summary["status"].items()))
    out.append("# oracle: " + ", ".join(f"{k}={n}" for k, n in summary["oracle"].items()))
    return "\n".join(out) + "\n"


def dumps(doc: Any) -> str:
    return json.dumps(doc, indent=2) + "\n"
