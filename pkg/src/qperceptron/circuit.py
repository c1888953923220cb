"""Typed circuits, lowering to CNOT + single-qubit gates, and gate census.

Text dump format, one gate per line::

    # n_qubits=3
    # global_sign=1
    H 0
    CPZ 0,1,2
    CPNOT 0,1,2
    P 2,-0.7853981633974483

The fields after the kind are comma-separated qubit indices; for ``CPNOT``
the last index is the target.  ``P`` (phase gate) carries its angle in
radians as the final field.  Lines starting with ``#`` are metadata.
"""

from __future__ import annotations

import enum
import math
from collections import Counter
from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field

import numpy as np

from . import state as st


class GateKind(str, enum.Enum):
    H = "H"
    X = "X"
    Z = "Z"
    P = "P"
    CPZ = "CPZ"
    CPNOT = "CPNOT"


SINGLE_QUBIT_KINDS = frozenset({GateKind.H, GateKind.X, GateKind.Z, GateKind.P})

UNITARY_MAX_QUBITS = 10


@dataclass(frozen=True)
class Gate:
    kind: GateKind
    qubits: tuple[int, ...]
    angle: float | None = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "kind", GateKind(self.kind))
        object.__setattr__(self, "qubits", tuple(int(q) for q in self.qubits))
        qs = self.qubits
        if len(set(qs)) != len(qs):
            raise ValueError(f"duplicate qubits in {self.kind.value} gate: {qs}")
        if any(q < 0 for q in qs):
            raise ValueError(f"negative qubit index in {qs}")
        if self.kind in SINGLE_QUBIT_KINDS and len(qs) != 1:
            raise ValueError(f"{self.kind.value} acts on exactly one qubit, got {qs}")
        if self.kind is GateKind.CPZ and len(qs) < 2:
            raise ValueError("CPZ needs at least 2 qubits; use Z for one")
        if self.kind is GateKind.CPNOT and len(qs) < 2:
            raise ValueError("CPNOT needs at least one control and a target")
        if (self.kind is GateKind.P) != (self.angle is not None):
            raise ValueError("an angle is required for P gates and only for them")

    @classmethod
    def h(cls, q: int) -> Gate:
        return cls(GateKind.H, (q,))

    @classmethod
    def x(cls, q: int) -> Gate:
        return cls(GateKind.X, (q,))

    @classmethod
    def z(cls, q: int) -> Gate:
        return cls(GateKind.Z, (q,))

    @classmethod
    def phase(cls, q: int, angle: float) -> Gate:
        return cls(GateKind.P, (q,), float(angle))

    @classmethod
    def cpz(cls, qubits: Iterable[int]) -> Gate:
        """Z on a single qubit, CPZ otherwise."""
        qs = tuple(qubits)
        if len(qs) == 1:
            return cls.z(qs[0])
        return cls(GateKind.CPZ, qs)

    @classmethod
    def cpnot(cls, controls: Iterable[int], target: int) -> Gate:
        return cls(GateKind.CPNOT, (*controls, target))

    @property
    def controls(self) -> tuple[int, ...]:
        if self.kind is not GateKind.CPNOT:
            raise AttributeError(f"{self.kind.value} gate has no controls")
        return self.qubits[:-1]

    @property
    def target(self) -> int:
        return self.qubits[-1]

    @property
    def arity(self) -> int:
        return len(self.qubits)

    def census_key(self) -> str:
        """``h``, ``x``, ``z``, ``p``, ``cz<qubits>`` or ``cnot<controls>``."""
        if self.kind is GateKind.CPZ:
            return f"cz{self.arity}"
        if self.kind is GateKind.CPNOT:
            return f"cnot{self.arity - 1}"
        return self.kind.value.lower()

    def to_text(self) -> str:
        fields = [str(q) for q in self.qubits]
        if self.angle is not None:
            fields.append(repr(self.angle))
        return f"{self.kind.value} {','.join(fields)}"

    @classmethod
    def from_text(cls, line: str) -> Gate:
        kind_s, _, rest = line.strip().partition(" ")
        kind = GateKind(kind_s)
        fields = [f for f in rest.split(",") if f.strip()]
        if kind is GateKind.P:
            return cls(kind, tuple(int(f) for f in fields[:-1]), float(fields[-1]))
        return cls(kind, tuple(int(f) for f in fields))


@dataclass(frozen=True)
class Circuit:
    """Immutable gate sequence.

    ``global_sign`` is an overall +-1 factor carried alongside the gates; it
    never counts as a gate.
    """

    n_qubits: int
    gates: tuple[Gate, ...] = ()
    global_sign: int = 1

    def __post_init__(self) -> None:
        object.__setattr__(self, "gates", tuple(self.gates))
        if self.n_qubits < 1:
            raise ValueError(f"n_qubits must be positive, got {self.n_qubits}")
        if self.global_sign not in (1, -1):
            raise ValueError(f"global_sign must be +1 or -1, got {self.global_sign}")
        for g in self.gates:
            if max(g.qubits) >= self.n_qubits:
                raise ValueError(f"{g.to_text()} exceeds {self.n_qubits} qubits")

    def __len__(self) -> int:
        return len(self.gates)

    def __iter__(self):
        return iter(self.gates)

    def then(self, other: Circuit) -> Circuit:
        """This circuit followed by ``other`` on the wider of the two registers."""
        return Circuit(
            max(self.n_qubits, other.n_qubits),
            self.gates + other.gates,
            self.global_sign * other.global_sign,
        )

    def widened(self, n_qubits: int) -> Circuit:
        return Circuit(n_qubits, self.gates, self.global_sign)

    def dumps(self) -> str:
        lines = [f"# n_qubits={self.n_qubits}", f"# global_sign={self.global_sign}"]
        lines.extend(g.to_text() for g in self.gates)
        return "\n".join(lines) + "\n"

    @classmethod
    def loads(cls, text: str) -> Circuit:
        meta: dict[str, str] = {}
        gates = []
        for raw in text.splitlines():
            line = raw.strip()
            if not line:
                continue
            if line.startswith("#"):
                key, _, value = line[1:].strip().partition("=")
                meta[key.strip()] = value.strip()
                continue
            gates.append(Gate.from_text(line))
        if "n_qubits" in meta:
            n = int(meta["n_qubits"])
        else:
            n = 1 + max((max(g.qubits) for g in gates), default=0)
        return cls(n, gates, int(meta.get("global_sign", 1)))


def apply_gate(state: st.QuantumState, gate: Gate) -> st.QuantumState:
    kind = gate.kind
    if kind is GateKind.H:
        return st.apply_hadamard(state, gate.qubits[0])
    if kind is GateKind.X:
        return st.apply_x(state, gate.qubits[0])
    if kind is GateKind.Z or kind is GateKind.CPZ:
        return st.apply_cpz(state, gate.qubits)
    if kind is GateKind.P:
        return st.apply_phase(state, gate.qubits[0], gate.angle)
    return st.apply_cpnot(state, gate.controls, gate.target)


def apply_circuit(state: st.QuantumState, circuit: Circuit) -> st.QuantumState:
    if state.n_qubits != circuit.n_qubits:
        raise ValueError(
            f"circuit on {circuit.n_qubits} qubits applied to {state.n_qubits}-qubit state"
        )
    for gate in circuit.gates:
        apply_gate(state, gate)
    if circuit.global_sign == -1:
        state.amplitudes *= -1
    return state


def run(circuit: Circuit) -> st.QuantumState:
    """Apply ``circuit`` to ``|0...0>``."""
    return apply_circuit(st.new_zero_state(circuit.n_qubits), circuit)


def unitary_of(circuit: Circuit) -> np.ndarray:
    n = circuit.n_qubits
    if n > UNITARY_MAX_QUBITS:
        raise ValueError(f"unitary_of supports at most {UNITARY_MAX_QUBITS} qubits, got {n}")
    dim = 1 << n
    u = np.empty((dim, dim), dtype=np.complex128)
    for j in range(dim):
        amps = np.zeros(dim, dtype=np.complex128)
        amps[j] = 1.0
        u[:, j] = apply_circuit(st.QuantumState(n, amps), circuit).amplitudes
    return u


# -- lowering ---------------------------------------------------------------


def lower_cpz_via_hadamards(gate: Gate) -> list[Gate]:
    """C^pZ as H(target) C^pNOT H(target), with the last listed qubit as target."""
    if gate.kind is not GateKind.CPZ:
        raise ValueError(f"expected a CPZ gate, got {gate.kind.value}")
    *controls, target = gate.qubits
    return [Gate.h(target), Gate.cpnot(controls, target), Gate.h(target)]


def lower_toffoli(gate: Gate) -> list[Gate]:
    """Exact Toffoli from 6 CNOTs, H and T/T-dagger phase gates."""
    if gate.kind is not GateKind.CPNOT or len(gate.controls) != 2:
        raise ValueError(f"expected a 2-control CPNOT, got {gate.to_text()}")
    a, b = gate.controls
    t = gate.target
    q = math.pi / 4
    cx = Gate.cpnot
    ph = Gate.phase
    return [
        Gate.h(t),
        cx((b,), t), ph(t, -q),
        cx((a,), t), ph(t, q),
        cx((b,), t), ph(t, -q),
        cx((a,), t), ph(b, q), ph(t, q),
        Gate.h(t),
        cx((a,), b), ph(a, q), ph(b, -q),
        cx((a,), b),
    ]


def lower_circuit(circuit: Circuit) -> Circuit:
    """Rewrite CZ, CCZ and Toffoli into CNOT + single-qubit gates.

    Gates with three or more controls are kept as they are.
    """
    out: list[Gate] = []

    def emit(g: Gate) -> None:
        if g.kind is GateKind.CPZ and g.arity <= 3:
            for sub in lower_cpz_via_hadamards(g):
                emit(sub)
        elif g.kind is GateKind.CPNOT and g.arity == 3:
            out.extend(lower_toffoli(g))
        else:
            out.append(g)

    for g in circuit.gates:
        emit(g)
    return Circuit(circuit.n_qubits, out, circuit.global_sign)


# -- census -----------------------------------------------------------------


@dataclass(frozen=True)
class GateCensus:
    counts: dict[str, int] = field(default_factory=dict)
    depth: int = 0

    @property
    def total(self) -> int:
        return sum(self.counts.values())

    @property
    def single_qubit(self) -> int:
        return sum(self.counts.get(k, 0) for k in ("h", "x", "z", "p"))

    @property
    def max_arity(self) -> int:
        arities = [1 if k in ("h", "x", "z", "p") else _arity_of_key(k) for k in self.counts]
        return max(arities, default=0)

    def get(self, key: str) -> int:
        return self.counts.get(key, 0)

    def cz(self, n_qubits: int) -> int:
        """Number of controlled-Z gates spanning exactly ``n_qubits`` qubits."""
        return self.get(f"cz{n_qubits}")

    def cnot(self, n_controls: int) -> int:
        return self.get(f"cnot{n_controls}")


def _arity_of_key(key: str) -> int:
    if key.startswith("cnot"):
        return int(key[4:]) + 1
    return int(key[2:])


def circuit_depth(gates: Sequence[Gate]) -> int:
    """Greedy layering: each gate goes one layer past the latest gate sharing a qubit."""
    frontier: dict[int, int] = {}
    depth = 0
    for g in gates:
        layer = 1 + max((frontier.get(q, 0) for q in g.qubits), default=0)
        for q in g.qubits:
            frontier[q] = layer
        depth = max(depth, layer)
    return depth


def census(circuit: Circuit) -> GateCensus:
    counts = Counter(g.census_key() for g in circuit.gates)
    return GateCensus(dict(sorted(counts.items())), circuit_depth(circuit.gates))
