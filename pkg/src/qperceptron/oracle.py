"""Classical reference values for the perceptron, by direct enumeration."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .encoding import SignVector

FULL_MATRIX_MAX_N = 2
WEIGHT_ROW_MAX_M = 16


def dot(i: SignVector, w: SignVector) -> int:
    if i.m != w.m:
        raise ValueError(f"length mismatch: {i.m} vs {w.m}")
    return sum(a * b for a, b in zip(i.signs, w.signs))


def activation_from_dot(d: int, m: int) -> float:
    return (d / m) ** 2


def ideal_activation(i: SignVector, w: SignVector) -> float:
    return activation_from_dot(dot(i, w), i.m)


def _label_sign_table(m: int) -> np.ndarray:
    """Row ``k`` holds the sign vector of label ``k`` (pixel 0 is the MSB)."""
    labels = np.arange(1 << m, dtype=np.int64)[:, None]
    shifts = np.arange(m - 1, -1, -1, dtype=np.int64)[None, :]
    return 1 - 2 * ((labels >> shifts) & 1)


@dataclass(frozen=True)
class ActivationMatrix:
    """``values[k_w, k_i]`` is the ideal activation of input ``k_i`` under weight ``k_w``."""

    m: int
    values: np.ndarray


def full_matrix(n: int) -> ActivationMatrix:
    if not 1 <= n <= FULL_MATRIX_MAX_N:
        raise ValueError(f"full matrix only for 1 <= N <= {FULL_MATRIX_MAX_N}, got {n}")
    m = 1 << n
    table = _label_sign_table(m)
    dots = table @ table.T
    return ActivationMatrix(m, (dots / m) ** 2)


def weight_row(n: int, k_w: int) -> np.ndarray:
    """Ideal activation of every input label against weight label ``k_w``."""
    m = 1 << n
    if n < 0 or m > WEIGHT_ROW_MAX_M:
        raise ValueError(f"weight row only for m <= {WEIGHT_ROW_MAX_M}, got N={n}")
    if not 0 <= k_w < (1 << m):
        raise ValueError(f"weight label {k_w} out of range for m={m}")
    table = _label_sign_table(m)
    dots = table @ table[k_w]
    return (dots / m) ** 2
