"""Experiment runners producing activation records and CSV tables.

Records file header::

    k_w,k_i,N,method,exact,sampled,shots,seed,n_1q,n_cnot,n_c2z,n_cNz,depth

``sampled``, ``shots`` and ``seed`` are empty in exact mode.  ``seed`` is the
per-record seed, ``base_seed ^ (k_w * 2**m + k_i)``, so every record can be
resampled on its own.  ``n_c2z`` counts CZ gates on two qubits and ``n_cNz``
controlled-Z gates spanning all N encoding qubits (the two coincide at N=2).
"""

from __future__ import annotations

import csv
import io
from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from . import oracle
from .circuit import GateCensus, census, lower_circuit, run
from .encoding import SignVector, hamming_distance, label_to_pattern
from .neuron import (
    DEFAULT_THRESHOLD,
    HSGS,
    SynthesisMethod,
    Strategy,
    build_perceptron,
    build_ui,
    classify,
)
from .state import probability_of_one, sample_shots

RECORD_HEADER = (
    "k_w", "k_i", "N", "method", "exact", "sampled", "shots", "seed",
    "n_1q", "n_cnot", "n_c2z", "n_cNz", "depth",
)


def fmt(x: float) -> str:
    return format(float(x), ".12g")


@dataclass(frozen=True)
class ActivationRecord:
    k_w: int
    k_i: int
    n: int
    method: SynthesisMethod
    exact: float
    census: GateCensus
    sampled: float | None = None
    n_shots: int | None = None
    seed: int | None = None

    def row(self) -> list[str]:
        c = self.census
        return [
            str(self.k_w),
            str(self.k_i),
            str(self.n),
            self.method.label,
            fmt(self.exact),
            "" if self.sampled is None else fmt(self.sampled),
            "" if self.n_shots is None else str(self.n_shots),
            "" if self.seed is None else str(self.seed),
            str(c.single_qubit),
            str(c.cnot(1)),
            str(c.cz(2)),
            str(c.cz(self.n)),
            str(c.depth),
        ]


def record_seed(base_seed: int, k_w: int, k_i: int, m: int) -> int:
    return base_seed ^ (k_w * (1 << m) + k_i)


def evaluate(
    k_w: int,
    k_i: int,
    n: int,
    method: SynthesisMethod = HSGS,
    shots: int = 0,
    seed: int = 0,
    lowered: bool = False,
) -> ActivationRecord:
    """Simulate one (weight, input) pair; ``shots=0`` means exact only."""
    m = 1 << n
    w = SignVector.from_label(k_w, m)
    i = SignVector.from_label(k_i, m)
    pc = build_perceptron(i, w, method)
    circuit = lower_circuit(pc.circuit) if lowered else pc.circuit
    exact = probability_of_one(run(circuit), pc.ancilla_index)
    if shots <= 0:
        return ActivationRecord(k_w, k_i, n, method, exact, census(circuit))
    rs = record_seed(seed, k_w, k_i, m)
    count = sample_shots(exact, shots, rs)
    return ActivationRecord(k_w, k_i, n, method, exact, census(circuit), count / shots, shots, rs)


def records_csv(records: Iterable[ActivationRecord]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(RECORD_HEADER)
    for r in records:
        writer.writerow(r.row())
    return buf.getvalue()


def matrix_csv(values: np.ndarray) -> str:
    return "".join(",".join(fmt(v) for v in row) + "\n" for row in values)


def table_csv(header: Sequence[str], rows: Iterable[Sequence]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([fmt(v) if isinstance(v, float) else v for v in row])
    return buf.getvalue()


# -- N = 2 exhaustive sweep ---------------------------------------------------


@dataclass
class SweepResult:
    records: list[ActivationRecord]
    matrix: np.ndarray
    oracle: np.ndarray

    def files(self) -> dict[str, str]:
        return {
            "records.csv": records_csv(self.records),
            "matrix.csv": matrix_csv(self.matrix),
            "oracle_matrix.csv": matrix_csv(self.oracle),
        }


def run_n2_sweep(
    method: SynthesisMethod = HSGS,
    shots: int = 0,
    seed: int = 0,
    lowered: bool = False,
) -> SweepResult:
    """Every (k_w, k_i) pair at N=2; the matrix holds sampled values when ``shots > 0``."""
    n, m = 2, 4
    size = 1 << m
    records = []
    matrix = np.zeros((size, size))
    for k_w in range(size):
        for k_i in range(size):
            rec = evaluate(k_w, k_i, n, method, shots, seed, lowered)
            records.append(rec)
            matrix[k_w, k_i] = rec.exact if rec.sampled is None else rec.sampled
    return SweepResult(records, matrix, oracle.full_matrix(n).values)


# -- N = 4 pattern classification -------------------------------------------

N4_TABLE_HEADER = ("k_i", "pattern", "d_w", "d_neg_w", "oracle", "exact", "sampled", "active")


@dataclass
class PatternResult:
    k_w: int
    records: list[ActivationRecord]
    table: list[tuple]
    threshold: float = DEFAULT_THRESHOLD

    def files(self) -> dict[str, str]:
        return {
            "records.csv": records_csv(self.records),
            "patterns.csv": table_csv(N4_TABLE_HEADER, self.table),
        }


def random_labels(count: int, m: int, seed: int) -> list[int]:
    rng = np.random.default_rng(seed)
    return [int(k) for k in rng.integers(0, 1 << m, size=count)]


def run_n4_patterns(
    k_w: int,
    inputs: Sequence[int],
    method: SynthesisMethod = HSGS,
    shots: int = 0,
    seed: int = 0,
    threshold: float = DEFAULT_THRESHOLD,
    lowered: bool = False,
) -> PatternResult:
    n, m = 4, 16
    for k in (k_w, *inputs):
        if not 0 <= k < (1 << m):
            raise ValueError(f"label {k} out of range for 16-pixel patterns")
    w_pat = label_to_pattern(k_w, m)
    neg_w_pat = label_to_pattern((1 << m) - 1 - k_w, m)
    w = SignVector.from_label(k_w, m)
    records = []
    table = []
    for k_i in inputs:
        rec = evaluate(k_w, k_i, n, method, shots, seed, lowered)
        records.append(rec)
        p = label_to_pattern(k_i, m)
        reference = oracle.ideal_activation(SignVector.from_label(k_i, m), w)
        shown = rec.exact if rec.sampled is None else rec.sampled
        table.append((
            k_i,
            str(p),
            hamming_distance(p, w_pat),
            hamming_distance(p, neg_w_pat),
            reference,
            rec.exact,
            "" if rec.sampled is None else rec.sampled,
            int(classify(shown, threshold)),
        ))
    return PatternResult(k_w, records, table, threshold)


# -- resource comparison ------------------------------------------------------

GATE_REPORT_MAX_N = 6
GATE_REPORT_METHODS = (
    SynthesisMethod(Strategy.SIGNFLIP, canonicalize=False),
    SynthesisMethod(Strategy.SIGNFLIP, canonicalize=True),
    HSGS,
)
GATE_REPORT_HEADER = ("N", "method", "metric", "min", "mean", "max")


def _metrics(c: GateCensus, n: int) -> dict[str, int]:
    return {
        "total": c.total,
        "n_1q": c.single_qubit,
        "n_cnot": c.cnot(1),
        "n_multi": c.total - c.single_qubit,
        "n_cNz": c.cz(n) if n > 1 else c.get("z"),
        "depth": c.depth,
    }


@dataclass
class GateReport:
    n: int
    samples: int
    per_method: dict[str, list[dict[str, int]]] = field(default_factory=dict)

    def rows(self) -> list[tuple]:
        out = []
        for label, samples in self.per_method.items():
            for metric in samples[0]:
                vals = np.array([s[metric] for s in samples], dtype=float)
                out.append((self.n, label, metric, int(vals.min()), float(vals.mean()), int(vals.max())))
        return out

    def mean(self, label: str, metric: str) -> float:
        return float(np.mean([s[metric] for s in self.per_method[label]]))

    def files(self) -> dict[str, str]:
        return {"gate_report.csv": table_csv(GATE_REPORT_HEADER, self.rows())}


def random_sign_vectors(count: int, m: int, seed: int) -> list[SignVector]:
    rng = np.random.default_rng(seed)
    draws = rng.choice([-1, 1], size=(count, m))
    return [SignVector(tuple(int(v) for v in row)) for row in draws]


def run_gate_report(n: int, sample: int, seed: int = 0, lowered: bool = False) -> GateReport:
    """Census of the input unitary for ``sample`` random sign vectors, per method."""
    if not 1 <= n <= GATE_REPORT_MAX_N:
        raise ValueError(f"gate report supports 1 <= N <= {GATE_REPORT_MAX_N}, got {n}")
    if sample < 1:
        raise ValueError(f"sample must be >= 1, got {sample}")
    vectors = random_sign_vectors(sample, 1 << n, seed)
    report = GateReport(n, sample)
    for method in GATE_REPORT_METHODS:
        samples = []
        for s in vectors:
            c = build_ui(s, method)
            samples.append(_metrics(census(lower_circuit(c) if lowered else c), n))
        report.per_method[method.label] = samples
    return report


def write_files(out_dir: Path, files: dict[str, str]) -> list[Path]:
    out_dir.mkdir(parents=True, exist_ok=True)
    written = []
    for name, text in files.items():
        path = out_dir / name
        path.write_text(text, encoding="utf-8")
        written.append(path)
    return written
