"""Congruence reports: one verified claim instance, serializable as JSON or
CSV with a stable field order.

Schema (version 1):
    {schema, claim, p, params, mod_power, lhs: {val, unit}, rhs: {val, unit},
     diff_valuation, pass, ms}

Exact rational identities (the binomial/harmonic ones) are carried with p = 0
and mod_power = 0; their pass flag means "identically zero over Q".  The ms
field is null unless timing was explicitly requested, so that identical runs
serialize to identical bytes regardless of parallelism or wall clock.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .padic import PadicValue, congruent_mod

SCHEMA_VERSION = 1

CSV_COLUMNS = [
    "schema", "claim", "p", "params", "mod_power",
    "lhs_val", "lhs_unit", "rhs_val", "rhs_unit",
    "diff_valuation", "pass", "ms",
]


@dataclass
class CongruenceReport:
    claim: str
    p: int
    params: dict
    mod_power: int
    lhs_val: int | None
    lhs_unit: int
    rhs_val: int | None
    rhs_unit: int
    diff_valuation: int | None
    passed: bool
    ms: float | None = field(default=None, compare=False)

    @classmethod
    def from_sides(cls, claim: str, p: int, params: dict, k: int,
                   lhs: PadicValue, rhs: PadicValue,
                   ms: float | None = None) -> "CongruenceReport":
        diff = lhs - rhs
        dv = None if diff.is_zero else diff.valuation
        passed = congruent_mod(lhs, rhs, k)
        return cls(claim, p, dict(params), k,
                   lhs.valuation, lhs.unit, rhs.valuation, rhs.unit,
                   dv, passed, ms)

    @classmethod
    def exact_rational(cls, claim: str, params: dict, difference,
                       ms: float | None = None) -> "CongruenceReport":
        """A claim of exact equality over Q; difference must be 0 to pass."""
        zero = difference == 0
        return cls(claim, 0, dict(params), 0, None, 0, None, 0,
                   None if zero else -(10**9), zero, ms)

    def sort_key(self) -> tuple:
        return (self.claim, self.p,
                json.dumps(self.params, sort_keys=True, default=str))

    def to_dict(self, timing: bool = False) -> dict:
        return {
            "schema": SCHEMA_VERSION,
            "claim": self.claim,
            "p": self.p,
            "params": self.params,
            "mod_power": self.mod_power,
            "lhs": {"val": self.lhs_val, "unit": self.lhs_unit},
            "rhs": {"val": self.rhs_val, "unit": self.rhs_unit},
            "diff_valuation": self.diff_valuation,
            "pass": self.passed,
            "ms": round(self.ms, 3) if (timing and self.ms is not None) else None,
        }

    def to_csv_row(self, timing: bool = False) -> list:
        d = self.to_dict(timing)
        return [d["schema"], d["claim"], d["p"],
                json.dumps(d["params"], sort_keys=True, default=str),
                d["mod_power"],
                d["lhs"]["val"], d["lhs"]["unit"],
                d["rhs"]["val"], d["rhs"]["unit"],
                d["diff_valuation"], d["pass"], d["ms"]]

    def human_line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        ps = ",".join(f"{k}={v}" for k, v in self.params.items())
        mod = f"p^{self.mod_power}" if self.mod_power else "exact"
        dv = "oo" if self.diff_valuation is None else self.diff_valuation
        t = f"  ({self.ms:.1f} ms)" if self.ms is not None else ""
        return f"[{status}] {self.claim:<18} p={self.p:<3} {mod:<5} v(diff)={dv:<4} {ps}{t}"


def sort_reports(reports) -> list[CongruenceReport]:
    return sorted(reports, key=CongruenceReport.sort_key)


def reports_to_json(reports, timing: bool = False) -> str:
    rows = [r.to_dict(timing) for r in sort_reports(reports)]
    return json.dumps(rows, indent=2, default=str) + "\n"


def reports_to_csv(reports, timing: bool = False) -> str:
    import csv
    import io

    buf = io.StringIO()
    w = csv.writer(buf)
    w.writerow(CSV_COLUMNS)
    for r in sort_reports(reports):
        w.writerow(r.to_csv_row(timing))
    return buf.getvalue()


def reports_to_human(reports) -> str:
    lines = [r.human_line() for r in sort_reports(reports)]
    n_pass = sum(r.passed for r in reports)
    lines.append(f"-- {n_pass}/{len(reports)} passed")
    return "\n".join(lines) + "\n"
