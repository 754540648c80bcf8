"""
Per-graph verification records and the campaign summaries they roll up into.
"""

from collections import Counter
from dataclasses import dataclass, field, fields
from typing import Any, Dict, List, Optional

from .bounds import BoundEvaluation, NUMERIC_TOL
from .types import BoundId, RecordStatus, Keep
from .version import SCHEMA_VERSION


# Number of example graph6 strings retained per category in a summary.
EXAMPLE_LIMIT = 10


@dataclass
class GraphRecord:
    """
    One verification row. Every field but source and the evaluations can be
    recomputed from the graph6 string alone (modulo solver tolerances).
    """

    source: str
    graph6: str
    n: int
    m: int
    d: Optional[float] = None
    mu: Optional[float] = None
    mu_min: Optional[float] = None
    pi: Optional[int] = None
    nu: Optional[int] = None
    gamma: Optional[int] = None
    s_plus: Optional[float] = None
    s_minus: Optional[float] = None
    t: Optional[int] = None
    triangle_free: Optional[bool] = None
    omega: Optional[int] = None
    omega_witness: List[int] = field(default_factory=list)
    chi: Optional[int] = None
    chi_witness: List[int] = field(default_factory=list)
    weakly_perfect: Optional[bool] = None
    isolated_vertices: int = 0
    connected: Optional[bool] = None
    regular: Optional[bool] = None
    ando_lin_exceeds_omega: bool = False
    status: RecordStatus = RecordStatus.OK
    evaluations: List[BoundEvaluation] = field(default_factory=list)
    violations: List[BoundId] = field(default_factory=list)
    anomalies: List[str] = field(default_factory=list)
    failed_checks: List[str] = field(default_factory=list)

    def evaluation(self, id: BoundId) -> Optional[BoundEvaluation]:
        for e in self.evaluations:
            if e.id == id:
                return e
        return None

    @property
    def falsifiable_violations(self) -> List[BoundId]:
        return [v for v in self.violations if v.falsifiable]

    @property
    def proven_violations(self) -> List[BoundId]:
        return [v for v in self.violations if not v.falsifiable]

    @property
    def noteworthy(self) -> bool:
        """
        True for rows a violations-only report keeps.
        """
        return bool(self.violations or self.failed_checks or self.status != RecordStatus.OK)

    def to_dict(self) -> Dict[str, Any]:
        data = {"schema_version": SCHEMA_VERSION}
        for f in fields(self):
            value = getattr(self, f.name)
            if f.name == "evaluations":
                value = [e.to_dict() for e in value]
            elif f.name == "violations":
                value = [str(v) for v in value]
            elif f.name == "status":
                value = str(value)
            elif isinstance(value, list):
                value = list(value)
            data[f.name] = value
        return data

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "GraphRecord":
        kwargs = {}
        for f in fields(cls):
            if f.name not in data:
                continue
            value = data[f.name]
            if f.name == "evaluations":
                value = [BoundEvaluation.from_dict(e) for e in value]
            elif f.name == "violations":
                value = [BoundId(v) for v in value]
            elif f.name == "status":
                value = RecordStatus(value)
            kwargs[f.name] = value
        return cls(**kwargs)


def _empty_counts() -> Dict[str, int]:
    return {str(id): 0 for id in BoundId}


def _merge_max(a: Optional[float], b: Optional[float]) -> Optional[float]:
    if a is None:
        return b
    if b is None:
        return a
    return max(a, b)


def _merge_min(a: Optional[float], b: Optional[float]) -> Optional[float]:
    if a is None:
        return b
    if b is None:
        return a
    return min(a, b)


@dataclass
class CampaignSummary:
    """
    Totals for a campaign. Summaries of shards merge associatively, so the totals
    do not depend on how many workers processed the shards.
    """

    campaign: str = ""
    total: int = 0
    processed: int = 0
    skipped: int = 0
    aborted: int = 0
    inconsistent: int = 0
    evaluated: Dict[str, int] = field(default_factory=_empty_counts)
    violations: Dict[str, int] = field(default_factory=_empty_counts)
    tight: Dict[str, int] = field(default_factory=_empty_counts)
    numerical_artifacts: int = 0
    undefined_conjecture1: int = 0
    omega_witnesses: int = 0
    omega_witness_examples: List[str] = field(default_factory=list)
    counterexamples: List[str] = field(default_factory=list)
    proven_violation_examples: List[str] = field(default_factory=list)
    inconsistent_examples: List[str] = field(default_factory=list)
    omega_sum: int = 0
    omega_count: int = 0
    omega_min: Optional[int] = None
    conjecture1_sum: float = 0.0
    conjecture1_count: int = 0
    conjecture1_max: Optional[float] = None
    counters: Dict[str, int] = field(default_factory=dict)
    families: List[Dict[str, Any]] = field(default_factory=list)
    extra: Dict[str, Any] = field(default_factory=dict)
    wall_time: float = 0.0
    config: Dict[str, Any] = field(default_factory=dict)

    def add(self, record: GraphRecord, tol: float = NUMERIC_TOL):
        """
        Accounts for one evaluated graph.
        """
        self.total += 1
        if record.status == RecordStatus.ABORTED:
            self.aborted += 1
        else:
            self.processed += 1

        if record.status == RecordStatus.INCONSISTENT:
            self.inconsistent += 1
            self._example(self.inconsistent_examples, record.graph6)

        for e in record.evaluations:
            if e.holds is None:
                continue
            key = str(e.id)
            self.evaluated[key] += 1
            if e.violated:
                self.violations[key] += 1
            if e.tight(tol):
                self.tight[key] += 1

        if record.falsifiable_violations:
            self._example(self.counterexamples, record.graph6, limit=None)
        if record.proven_violations:
            self._example(self.proven_violation_examples, record.graph6)

        self.numerical_artifacts += sum(1 for a in record.anomalies if a.endswith(":numerical-artifact"))
        self.undefined_conjecture1 += sum(1 for a in record.anomalies if a == "conjecture1:undefined-denominator")

        if record.ando_lin_exceeds_omega:
            self.omega_witnesses += 1
            self._example(self.omega_witness_examples, record.graph6)

        for name, flag in (("triangle_free", record.triangle_free), ("regular", record.regular),
                           ("connected", record.connected), ("weakly_perfect", record.weakly_perfect)):
            if flag:
                self.count(name)

        if record.omega is not None:
            self.omega_sum += record.omega
            self.omega_count += 1
            self.omega_min = _merge_min(self.omega_min, record.omega)

        conj = record.evaluation(BoundId.CONJECTURE1)
        if conj is not None and conj.value is not None:
            self.conjecture1_sum += conj.value
            self.conjecture1_count += 1
            self.conjecture1_max = _merge_max(self.conjecture1_max, conj.value)

    def count(self, name: str, value: int = 1):
        self.counters[name] = self.counters.get(name, 0) + value

    def skip(self, count: int = 1):
        self.total += count
        self.skipped += count

    def merge(self, other: "CampaignSummary") -> "CampaignSummary":
        """
        Folds another summary into this one and returns self.
        """
        for name in ("total", "processed", "skipped", "aborted", "inconsistent",
                     "numerical_artifacts", "undefined_conjecture1", "omega_witnesses",
                     "omega_sum", "omega_count", "conjecture1_sum", "conjecture1_count"):
            setattr(self, name, getattr(self, name) + getattr(other, name))

        for name in ("evaluated", "violations", "tight"):
            counts = Counter(getattr(self, name))
            counts.update(getattr(other, name))
            setattr(self, name, {str(id): counts[str(id)] for id in BoundId})

        for name in ("omega_witness_examples", "proven_violation_examples", "inconsistent_examples"):
            for example in getattr(other, name):
                self._example(getattr(self, name), example)
        self.counterexamples.extend(other.counterexamples)

        for name, value in other.counters.items():
            self.count(name, value)
        self.counters = dict(sorted(self.counters.items()))

        self.omega_min = _merge_min(self.omega_min, other.omega_min)
        self.conjecture1_max = _merge_max(self.conjecture1_max, other.conjecture1_max)
        self.families.extend(other.families)
        self.extra.update(other.extra)
        return self

    @staticmethod
    def _example(examples: List[str], graph6: str, limit: int = EXAMPLE_LIMIT):
        if limit is None or len(examples) < limit:
            examples.append(graph6)

    @property
    def omega_mean(self) -> Optional[float]:
        return self.omega_sum / self.omega_count if self.omega_count else None

    @property
    def conjecture1_mean(self) -> Optional[float]:
        return self.conjecture1_sum / self.conjecture1_count if self.conjecture1_count else None

    @property
    def falsifiable_violations(self) -> int:
        return sum(self.violations[str(id)] for id in BoundId if id.falsifiable)

    @property
    def proven_violations(self) -> int:
        return sum(self.violations[str(id)] for id in BoundId if not id.falsifiable)

    @property
    def exit_code(self) -> int:
        """
        0 clean, 1 a falsifiable bound was violated, 3 an internal consistency
        failure (trace identity, chain relation or proven theorem).
        """
        if self.inconsistent or self.proven_violations:
            return 3
        if self.falsifiable_violations:
            return 1
        return 0

    def to_dict(self, timing: bool = True) -> Dict[str, Any]:
        data = {"schema_version": SCHEMA_VERSION}
        for f in fields(self):
            if f.name == "wall_time" and not timing:
                continue
            data[f.name] = getattr(self, f.name)
        data["omega_mean"] = self.omega_mean
        data["conjecture1_mean"] = self.conjecture1_mean
        data["exit_code"] = self.exit_code
        return data


def default_keep(campaign: str) -> Keep:
    """
    Corpus and family campaigns keep every record; sweeps and random searches keep
    only the rows that need attention.
    """
    if campaign in ("corpus", "kneser", "invariants"):
        return Keep.ALL
    return Keep.VIOLATIONS


def should_keep(record: GraphRecord, keep: Keep) -> bool:
    if keep == Keep.ALL:
        return True
    if keep == Keep.VIOLATIONS:
        return record.noteworthy
    return False
