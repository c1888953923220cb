import math

import numpy as np
import pytest

from qperceptron.encoding import SignVector, hamming_distance, label_to_pattern, negate
from qperceptron.oracle import dot, full_matrix, ideal_activation, weight_row

FIG2_I = SignVector(tuple(-1 if j in (0, 1) else 1 for j in range(16)))
FIG2_W = SignVector(tuple(-1 if j in (2, 3, 4) else 1 for j in range(16)))


def test_dot():
    s = SignVector.from_label(9, 4)
    assert dot(s, s) == 4
    assert dot(SignVector.from_label(11, 4), SignVector.from_label(7, 4)) == 0
    assert dot(s, negate(s)) == -4
    with pytest.raises(ValueError):
        dot(s, SignVector.from_label(1, 2))


def test_ideal_activation():
    assert dot(FIG2_I, FIG2_W) == 6
    assert ideal_activation(FIG2_I, FIG2_W) == 0.140625
    assert ideal_activation(SignVector.from_label(11, 4), SignVector.from_label(7, 4)) == 0
    s = SignVector.from_label(6, 4)
    assert ideal_activation(s, s) == 1 == ideal_activation(s, negate(s))


def test_full_matrix_n2():
    mat = full_matrix(2).values
    assert mat.shape == (16, 16)
    assert set(np.flatnonzero(mat[5] == 1)) == {5, 10}
    assert np.all(np.diag(mat) == 1)
    assert np.all(mat[np.arange(16), 15 - np.arange(16)] == 1)
    assert np.array_equal(mat, mat.T)
    off = mat[mat != 1]
    assert set(off.tolist()) <= {0.0, 0.25}


def test_full_matrix_matches_scalar_path():
    mat = full_matrix(2).values
    for k_w in range(16):
        for k_i in range(16):
            ref = ideal_activation(SignVector.from_label(k_i, 4), SignVector.from_label(k_w, 4))
            assert mat[k_w, k_i] == ref


def test_full_matrix_size_limit():
    with pytest.raises(ValueError):
        full_matrix(3)


def test_weight_row_n4():
    k_w = 20292
    row = weight_row(4, k_w)
    assert row.shape == (65536,)
    assert row[k_w] == 1 and row[65535 - k_w] == 1
    above = np.flatnonzero(row > 0.5)
    assert len(above) == 2 * (math.comb(16, 0) + math.comb(16, 1) + math.comb(16, 2)) == 274
    w = label_to_pattern(k_w, 16)
    nw = label_to_pattern(65535 - k_w, 16)
    for k in above[:40]:
        p = label_to_pattern(int(k), 16)
        assert hamming_distance(p, w) <= 2 or hamming_distance(p, nw) <= 2


def test_weight_row_matches_scalar_samples():
    rng = np.random.default_rng(5)
    k_w = 1234
    row = weight_row(4, k_w)
    w = SignVector.from_label(k_w, 16)
    for k in rng.integers(0, 65536, 100):
        assert row[k] == ideal_activation(SignVector.from_label(int(k), 16), w)


def test_dot_identity_sampled_m16():
    rng = np.random.default_rng(6)
    for a, b in rng.integers(0, 65536, (200, 2)):
        d = hamming_distance(label_to_pattern(int(a), 16), label_to_pattern(int(b), 16))
        assert dot(SignVector.from_label(int(a), 16), SignVector.from_label(int(b), 16)) == 16 - 2 * d


def test_weight_row_limits():
    with pytest.raises(ValueError):
        weight_row(5, 0)
    with pytest.raises(ValueError):
        weight_row(2, 16)
