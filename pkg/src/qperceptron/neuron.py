"""Perceptron circuits: input/weight unitaries, ancilla readout, activation.

Two ways to imprint a sign vector on the uniform superposition:

* ``SIGNFLIP``: one sign-flip block (X-dressed C^N Z) per -1 amplitude.
* ``HSGS``: the hypergraph-state routine, which fixes signs level by level
  (basis states with p = 1, 2, ..., N ones) using one Z / C^pZ per wrong
  sign, so the C^N Z appears at most once.

The encoding qubits are 0..N-1 and the ancilla is qubit N.
"""

from __future__ import annotations

import enum
from collections.abc import Iterator
from dataclasses import dataclass

from .circuit import Circuit, Gate, run
from .encoding import SignVector, n_qubits_for, negate
from .state import probability_of_one, sample_shots

DEFAULT_THRESHOLD = 0.5


class Strategy(str, enum.Enum):
    SIGNFLIP = "signflip"
    HSGS = "hsgs"


@dataclass(frozen=True)
class SynthesisMethod:
    """Synthesis strategy plus whether to exploit the global-sign symmetry.

    With ``canonicalize`` the prepared state is only correct up to a global
    -1 (see :func:`global_factor`).  SIGNFLIP then flips whichever of ``s``
    and ``-s`` has fewer -1 entries, so at most ``m/2`` blocks are needed.
    HSGS always synthesizes the representative with entry 0 = +1; without
    ``canonicalize`` it restores the removed factor via ``global_sign``.
    """

    strategy: Strategy = Strategy.HSGS
    canonicalize: bool = False

    def __post_init__(self) -> None:
        object.__setattr__(self, "strategy", Strategy(self.strategy))

    @property
    def label(self) -> str:
        return self.strategy.value + ("-canon" if self.canonicalize else "")

    @classmethod
    def parse(cls, text: str) -> SynthesisMethod:
        """Inverse of :attr:`label`."""
        name, _, suffix = text.partition("-")
        if suffix not in ("", "canon"):
            raise ValueError(f"unknown synthesis method {text!r}")
        return cls(Strategy(name), suffix == "canon")


SIGNFLIP = SynthesisMethod(Strategy.SIGNFLIP)
HSGS = SynthesisMethod(Strategy.HSGS)


def _support(j: int, n: int) -> tuple[int, ...]:
    """Qubits that are 1 in basis state ``j``."""
    return tuple(q for q in range(n) if (j >> (n - 1 - q)) & 1)


def sign_flip_block(n: int, j: int) -> list[Gate]:
    """Gates negating only the amplitude of ``|j>`` on ``n`` qubits; self-inverse."""
    if not 0 <= j < (1 << n):
        raise IndexError(f"basis index {j} out of range for {n} qubits")
    dressing = [Gate.x(q) for q in range(n) if not (j >> (n - 1 - q)) & 1]
    return [*dressing, Gate.cpz(range(n)), *dressing]


def signflip_representative(signs: SignVector) -> tuple[SignVector, int]:
    """``(+-signs, factor)`` with at most m/2 entries equal to -1.

    On a tie the representative with entry 0 = +1 is used.
    """
    negatives = signs.signs.count(-1)
    half = signs.m // 2
    if negatives > half or (negatives == half and signs[0] == -1):
        return negate(signs), -1
    return signs, 1


def sign_flip_indices(signs: SignVector, canonicalize: bool = False) -> list[int]:
    """Basis indices that receive a sign-flip block, ascending."""
    target = signflip_representative(signs)[0] if canonicalize else signs
    return [j for j, s in enumerate(target) if s == -1]


def global_factor(signs: SignVector, method: SynthesisMethod) -> int:
    """Sign by which ``build_ui(signs, method)`` misses ``signs / sqrt(m)``."""
    if not method.canonicalize:
        return 1
    if method.strategy is Strategy.SIGNFLIP:
        return signflip_representative(signs)[1]
    return signs.canonical()[1]


def hsgs_levels(signs: SignVector) -> Iterator[tuple[int, list[Gate], tuple[int, ...]]]:
    """Run the hypergraph-state routine level by level.

    Yields ``(p, gates, current)`` after level ``p``: the Z / C^pZ gates
    added at that level and the signs they produce on the uniform
    superposition together with all earlier levels.
    """
    target = signs.signs
    if target[0] != 1:
        raise ValueError("hsgs needs signs[0] == +1; canonicalize the vector first")
    m = len(target)
    n = n_qubits_for(m)
    current = [1] * m
    for p in range(1, n + 1):
        level = []
        for j in range(1, m):
            if j.bit_count() != p or current[j] == target[j]:
                continue
            level.append(Gate.cpz(_support(j, n)))
            # C^pZ on the support of j flips every index containing that support
            for k in range(j, m):
                if k & j == j:
                    current[k] = -current[k]
        yield p, level, tuple(current)


def hsgs(signs: SignVector) -> list[Gate]:
    """Z / C^pZ gates turning the uniform superposition into ``signs / sqrt(m)``."""
    return [g for _, level, _ in hsgs_levels(signs) for g in level]


def _sign_gates(signs: SignVector, method: SynthesisMethod) -> tuple[list[Gate], int]:
    """Sign-imprinting gates and the global sign the circuit must carry."""
    n = signs.n_qubits
    if method.strategy is Strategy.SIGNFLIP:
        gates = []
        for j in sign_flip_indices(signs, method.canonicalize):
            gates.extend(sign_flip_block(n, j))
        return gates, 1
    canon, removed = signs.canonical()
    return hsgs(canon), 1 if method.canonicalize else removed


def build_ui(signs: SignVector, method: SynthesisMethod = HSGS) -> Circuit:
    """Circuit taking ``|0...0>`` to ``signs / sqrt(m)`` (up to sign if canonicalized)."""
    n = signs.n_qubits
    gates, sign = _sign_gates(signs, method)
    return Circuit(n, [*(Gate.h(q) for q in range(n)), *gates], sign)


def build_uw(signs: SignVector, method: SynthesisMethod = HSGS) -> Circuit:
    """Circuit taking ``signs / sqrt(m)`` to ``|1...1>`` (up to sign if canonicalized)."""
    n = signs.n_qubits
    gates, sign = _sign_gates(signs, method)
    return Circuit(
        n,
        [*gates, *(Gate.h(q) for q in range(n)), *(Gate.x(q) for q in range(n))],
        sign,
    )


@dataclass(frozen=True)
class PerceptronCircuit:
    circuit: Circuit
    ancilla_index: int
    ui: Circuit
    uw: Circuit

    @property
    def n_qubits(self) -> int:
        return self.circuit.n_qubits

    @property
    def n_encoding(self) -> int:
        return self.ancilla_index


def build_perceptron(
    i: SignVector, w: SignVector, method: SynthesisMethod = HSGS
) -> PerceptronCircuit:
    if i.m != w.m:
        raise ValueError(f"input and weight lengths differ: {i.m} vs {w.m}")
    n = i.n_qubits
    ui = build_ui(i, method)
    uw = build_uw(w, method)
    readout = Circuit(n + 1, [Gate.cpnot(range(n), n)])
    circuit = ui.widened(n + 1).then(uw.widened(n + 1)).then(readout)
    return PerceptronCircuit(circuit, n, ui, uw)


def exact_activation(i: SignVector, w: SignVector, method: SynthesisMethod = HSGS) -> float:
    """Probability of reading the ancilla as 1."""
    pc = build_perceptron(i, w, method)
    return probability_of_one(run(pc.circuit), pc.ancilla_index)


def sampled_activation(
    i: SignVector,
    w: SignVector,
    method: SynthesisMethod,
    n_shots: int,
    seed: int,
) -> float:
    return sample_shots(exact_activation(i, w, method), n_shots, seed) / n_shots


def classify(activation: float, threshold: float = DEFAULT_THRESHOLD) -> bool:
    return activation > threshold
