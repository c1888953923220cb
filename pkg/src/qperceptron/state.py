"""Dense state-vector simulator.

Amplitudes live in a flat complex array of length ``2**n``.  Basis index ``j``
reads qubit 0 as the MOST significant bit, so for three qubits ``|100>`` is
index 4.  Reshaping the array to ``(2,) * n`` (C order) therefore puts qubit
``l`` on axis ``l``; every gate below relies on that.

Gates mutate the state in place and return it, so calls can be chained.
"""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass

import numpy as np

MAX_QUBITS = 24
ATOL = 1e-12

_INV_SQRT2 = 1.0 / np.sqrt(2.0)


def basis_index(bits: Iterable[int]) -> int:
    """Index of the basis state whose qubit ``l`` holds ``bits[l]`` (qubit 0 = MSB)."""
    j = 0
    for b in bits:
        j = (j << 1) | (1 if b else 0)
    return j


def qubit_bit(j: int, qubit: int, n_qubits: int) -> int:
    """Value of ``qubit`` in basis state ``j``."""
    return (j >> (n_qubits - 1 - qubit)) & 1


@dataclass(eq=False)
class QuantumState:
    n_qubits: int
    amplitudes: np.ndarray

    def __post_init__(self) -> None:
        if self.amplitudes.shape != (1 << self.n_qubits,):
            raise ValueError(
                f"expected {1 << self.n_qubits} amplitudes, got shape {self.amplitudes.shape}"
            )

    @classmethod
    def from_amplitudes(cls, amplitudes) -> QuantumState:
        amps = np.array(amplitudes, dtype=np.complex128).reshape(-1)
        n = amps.size.bit_length() - 1
        if amps.size == 0 or (1 << n) != amps.size:
            raise ValueError(f"amplitude count {amps.size} is not a power of two")
        return cls(n, amps)

    def copy(self) -> QuantumState:
        return QuantumState(self.n_qubits, self.amplitudes.copy())

    def norm(self) -> float:
        return float(np.vdot(self.amplitudes, self.amplitudes).real)

    def tensor(self) -> np.ndarray:
        """View of the amplitudes with one axis per qubit."""
        return self.amplitudes.reshape((2,) * self.n_qubits)

    def __len__(self) -> int:
        return self.amplitudes.size

    def __repr__(self) -> str:
        return f"QuantumState(n_qubits={self.n_qubits}, amplitudes={self.amplitudes!r})"


def new_zero_state(n_qubits: int) -> QuantumState:
    if not 1 <= n_qubits <= MAX_QUBITS:
        raise ValueError(f"n_qubits must be in [1, {MAX_QUBITS}], got {n_qubits}")
    amps = np.zeros(1 << n_qubits, dtype=np.complex128)
    amps[0] = 1.0
    return QuantumState(n_qubits, amps)


def _check_qubit(state: QuantumState, qubit: int) -> None:
    if not 0 <= qubit < state.n_qubits:
        raise IndexError(f"qubit {qubit} out of range for {state.n_qubits}-qubit state")


def _check_qubit_set(state: QuantumState, qubits, what: str) -> tuple[int, ...]:
    qs = tuple(qubits)
    if not qs:
        raise ValueError(f"{what} must not be empty")
    if len(set(qs)) != len(qs):
        raise ValueError(f"duplicate qubits in {what}: {qs}")
    for q in qs:
        if not 0 <= q < state.n_qubits:
            raise ValueError(f"qubit {q} in {what} out of range for {state.n_qubits} qubits")
    return qs


def _key(n: int, fixed: dict[int, int]) -> tuple:
    return tuple(fixed.get(axis, slice(None)) for axis in range(n))


def apply_hadamard(state: QuantumState, target: int) -> QuantumState:
    _check_qubit(state, target)
    t = state.tensor()
    k0 = _key(state.n_qubits, {target: 0})
    k1 = _key(state.n_qubits, {target: 1})
    a = t[k0].copy()
    b = t[k1]
    t[k0] = (a + b) * _INV_SQRT2
    t[k1] = (a - b) * _INV_SQRT2
    return state


def apply_x(state: QuantumState, target: int) -> QuantumState:
    _check_qubit(state, target)
    t = state.tensor()
    k0 = _key(state.n_qubits, {target: 0})
    k1 = _key(state.n_qubits, {target: 1})
    a = t[k0].copy()
    t[k0] = t[k1]
    t[k1] = a
    return state


def apply_z(state: QuantumState, target: int) -> QuantumState:
    return apply_cpz(state, (target,))


def apply_phase(state: QuantumState, target: int, angle: float) -> QuantumState:
    """diag(1, e^{i angle}) on ``target``; the T gate is ``angle = pi/4``."""
    _check_qubit(state, target)
    t = state.tensor()
    t[_key(state.n_qubits, {target: 1})] *= np.exp(1j * angle)
    return state


def apply_cpz(state: QuantumState, qubits) -> QuantumState:
    """Negate every amplitude whose listed qubits are all 1.

    Symmetric in its qubits; a single qubit gives the Z gate.
    """
    qs = _check_qubit_set(state, qubits, "C^pZ qubits")
    t = state.tensor()
    t[_key(state.n_qubits, {q: 1 for q in qs})] *= -1
    return state


def apply_cpnot(state: QuantumState, controls, target: int) -> QuantumState:
    cs = _check_qubit_set(state, controls, "controls")
    if not 0 <= target < state.n_qubits:
        raise ValueError(f"target {target} out of range for {state.n_qubits} qubits")
    if target in cs:
        raise ValueError(f"target {target} is also a control")
    t = state.tensor()
    fixed = {c: 1 for c in cs}
    k0 = _key(state.n_qubits, {**fixed, target: 0})
    k1 = _key(state.n_qubits, {**fixed, target: 1})
    a = t[k0].copy()
    t[k0] = t[k1]
    t[k1] = a
    return state


def amplitude(state: QuantumState, j: int) -> complex:
    if not 0 <= j < len(state):
        raise IndexError(f"basis index {j} out of range [0, {len(state)})")
    return complex(state.amplitudes[j])


def probability_of_one(state: QuantumState, qubit: int) -> float:
    _check_qubit(state, qubit)
    sub = state.tensor()[_key(state.n_qubits, {qubit: 1})]
    return float(np.sum(np.abs(sub) ** 2))


def sample_shots(p: float, n_shots: int, seed: int) -> int:
    """Number of 1 outcomes in ``n_shots`` seeded Bernoulli(p) trials."""
    if not -ATOL <= p <= 1 + ATOL:
        raise ValueError(f"probability {p} outside [0, 1]")
    if n_shots < 1:
        raise ValueError(f"n_shots must be >= 1, got {n_shots}")
    p = min(max(p, 0.0), 1.0)
    rng = np.random.Generator(np.random.PCG64(seed))
    return int(rng.binomial(n_shots, p))


def inner_product(a: QuantumState, b: QuantumState) -> complex:
    """<a|b>, conjugating the first argument."""
    if a.n_qubits != b.n_qubits:
        raise ValueError(f"dimension mismatch: {a.n_qubits} vs {b.n_qubits} qubits")
    return complex(np.vdot(a.amplitudes, b.amplitudes))
