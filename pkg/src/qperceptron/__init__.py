"""State-vector simulation of a binary-valued quantum perceptron."""

from .circuit import Circuit, Gate, GateCensus, GateKind, apply_circuit, census, unitary_of
from .encoding import BitPattern, SignVector
from .neuron import HSGS, SIGNFLIP, Strategy, SynthesisMethod, exact_activation
from .state import QuantumState, new_zero_state

__all__ = [
    "BitPattern",
    "Circuit",
    "Gate",
    "GateCensus",
    "GateKind",
    "HSGS",
    "QuantumState",
    "SIGNFLIP",
    "SignVector",
    "Strategy",
    "SynthesisMethod",
    "apply_circuit",
    "census",
    "exact_activation",
    "new_zero_state",
    "unitary_of",
]
