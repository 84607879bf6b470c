"""Check/oracle report containers and their canonical JSON form."""

import json
from dataclasses import dataclass, field
from fractions import Fraction


def jsonable(x):
    """Recursively convert package values into JSON-encodable primitives."""
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, dict):
        return {str(k): jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [jsonable(v) for v in x]
    if hasattr(x, "to_json"):
        return x.to_json()
    return x


@dataclass
class CheckReport:
    """Result of one identity-verification run."""

    identity: str
    params: dict
    pairs_checked: int = 0
    status: str = "pass"  # "pass" | "fail" | "inconclusive"
    failures: list = field(default_factory=list)
    extras: dict = field(default_factory=dict)

    def record(self, comparison, context):
        """Fold one window comparison into the report."""
        self.pairs_checked += 1
        if comparison.status == "fail":
            self.status = "fail"
            entry = dict(context)
            entry["first_mismatch"] = comparison.first_mismatch
            self.failures.append(entry)
        elif comparison.status == "inconclusive" and self.status == "pass":
            self.status = "inconclusive"
            entry = dict(context)
            entry["width"] = comparison.width
            self.failures.append(entry)

    @property
    def ok(self) -> bool:
        return self.status == "pass"

    def to_json(self) -> dict:
        return {
            "identity": self.identity,
            "params": jsonable(self.params),
            "pairs_checked": self.pairs_checked,
            "status": self.status,
            "failures": jsonable(self.failures),
            **({"extras": jsonable(self.extras)} if self.extras else {}),
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True)


@dataclass
class OracleReport:
    """One oracle-vs-engine comparison."""

    target: str
    instance: str
    oracle_value: object
    engine_value: object
    verdict: str  # "pass" | "fail"

    @property
    def ok(self) -> bool:
        return self.verdict == "pass"

    def to_json(self) -> dict:
        return {
            "target": self.target,
            "instance": self.instance,
            "oracle_value": jsonable(self.oracle_value),
            "engine_value": jsonable(self.engine_value),
            "verdict": self.verdict,
        }


def merge_status(statuses) -> str:
    """Worst-of merge: any fail dominates, then inconclusive, else pass."""
    out = "pass"
    for s in statuses:
        if s == "fail":
            return "fail"
        if s == "inconclusive":
            out = "inconclusive"
    return out
