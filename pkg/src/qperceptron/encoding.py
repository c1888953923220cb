"""Integer labels, black/white pixel patterns, +-1 sign vectors and encoded states.

A pattern of ``m`` pixels is read left to right, top to bottom; pixel ``n_j``
is 0 for white and 1 for black, and its label is the binary string
``n_0 n_1 ... n_{m-1}`` read with ``n_0`` most significant.  The sign vector
has entries ``(-1)**n_j`` and the encoded state has amplitudes
``sign_j / sqrt(m)``.  Because basis index ``j`` also reads qubit 0 as its
most significant bit, pixel ``j`` lands on basis state ``|j>``.
"""

from __future__ import annotations

import math
from collections.abc import Iterable
from dataclasses import dataclass

import numpy as np

from .state import QuantumState


def is_power_of_two(m: int) -> bool:
    return m >= 1 and (m & (m - 1)) == 0


def n_qubits_for(m: int) -> int:
    """Number of qubits N with ``m = 2**N``."""
    if not is_power_of_two(m):
        raise ValueError(f"length {m} is not a power of two")
    return m.bit_length() - 1


@dataclass(frozen=True)
class BitPattern:
    bits: tuple[int, ...]

    def __post_init__(self) -> None:
        bits = tuple(int(b) for b in self.bits)
        if any(b not in (0, 1) for b in bits):
            raise ValueError(f"pattern bits must be 0 or 1, got {self.bits}")
        if not is_power_of_two(len(bits)):
            raise ValueError(f"pattern length {len(bits)} is not a power of two")
        object.__setattr__(self, "bits", bits)

    @property
    def m(self) -> int:
        return len(self.bits)

    @property
    def label(self) -> int:
        return pattern_to_label(self)

    def __str__(self) -> str:
        return "".join(map(str, self.bits))

    def render(self, black: str = "#", white: str = ".") -> str:
        """Square image, one text row per pixel row."""
        side = math.isqrt(self.m)
        if side * side != self.m:
            raise ValueError(f"pattern of {self.m} pixels is not a square image")
        rows = []
        for r in range(side):
            row = self.bits[r * side:(r + 1) * side]
            rows.append("".join(black if b else white for b in row))
        return "\n".join(rows)


@dataclass(frozen=True)
class SignVector:
    signs: tuple[int, ...]

    def __post_init__(self) -> None:
        signs = tuple(int(s) for s in self.signs)
        if any(s not in (-1, 1) for s in signs):
            raise ValueError(f"sign entries must be +1 or -1, got {self.signs}")
        if not signs:
            raise ValueError("empty sign vector")
        object.__setattr__(self, "signs", signs)

    @classmethod
    def from_label(cls, k: int, m: int) -> SignVector:
        return pattern_to_signs(label_to_pattern(k, m))

    @property
    def m(self) -> int:
        return len(self.signs)

    @property
    def n_qubits(self) -> int:
        return n_qubits_for(self.m)

    @property
    def label(self) -> int:
        return pattern_to_label(signs_to_pattern(self))

    def __len__(self) -> int:
        return len(self.signs)

    def __getitem__(self, j: int) -> int:
        return self.signs[j]

    def __iter__(self):
        return iter(self.signs)

    def as_array(self) -> np.ndarray:
        return np.array(self.signs, dtype=np.int64)

    def canonical(self) -> tuple[SignVector, int]:
        """Representative with a +1 first entry, and the factor that was removed."""
        s0 = self.signs[0]
        if s0 == 1:
            return self, 1
        return negate(self), -1


def label_to_pattern(k: int, m: int) -> BitPattern:
    if not is_power_of_two(m):
        raise ValueError(f"pattern length {m} is not a power of two")
    if not 0 <= k < (1 << m):
        raise ValueError(f"label {k} out of range [0, 2**{m})")
    return BitPattern(tuple((k >> (m - 1 - j)) & 1 for j in range(m)))


def pattern_to_label(p: BitPattern) -> int:
    k = 0
    for b in p.bits:
        k = (k << 1) | b
    return k


def pattern_to_signs(p: BitPattern) -> SignVector:
    return SignVector(tuple(1 - 2 * b for b in p.bits))


def signs_to_pattern(s: SignVector) -> BitPattern:
    return BitPattern(tuple((1 - v) // 2 for v in s.signs))


def signs_to_state(s: SignVector | Iterable[int]) -> QuantumState:
    signs = s.signs if isinstance(s, SignVector) else tuple(s)
    m = len(signs)
    n = n_qubits_for(m)
    amps = np.array(signs, dtype=np.complex128) / math.sqrt(m)
    return QuantumState(n, amps)


def negate(s: SignVector) -> SignVector:
    return SignVector(tuple(-v for v in s.signs))


def hamming_distance(a: BitPattern, b: BitPattern) -> int:
    if a.m != b.m:
        raise ValueError(f"pattern lengths differ: {a.m} vs {b.m}")
    return sum(x != y for x, y in zip(a.bits, b.bits))


def parse_pattern(text: str, m: int | None = None) -> BitPattern:
    """Parse a CLI pattern literal.

    With ``m`` given, ``text`` is a decimal label of an ``m``-pixel pattern;
    otherwise it must be a string of 0/1 characters.
    """
    text = text.strip()
    if m is not None:
        try:
            k = int(text, 10)
        except ValueError:
            raise ValueError(f"expected a decimal label, got {text!r}") from None
        return label_to_pattern(k, m)
    if not text or set(text) - {"0", "1"}:
        raise ValueError(f"expected a string of 0/1 characters, got {text!r}")
    return BitPattern(tuple(int(c) for c in text))
