"""Exit criteria; each test prints a PASS/FAIL line in the terminal summary."""

import itertools
import math
import time

import numpy as np
import pytest

from qperceptron import cli
from qperceptron.circuit import (
    Circuit,
    Gate,
    census,
    lower_circuit,
    lower_cpz_via_hadamards,
    lower_toffoli,
    run,
    unitary_of,
)
from qperceptron.config import DEFAULTS
from qperceptron.encoding import SignVector
from qperceptron.harness import evaluate, run_n2_sweep
from qperceptron.neuron import (
    HSGS,
    SIGNFLIP,
    Strategy,
    SynthesisMethod,
    build_ui,
    build_uw,
    exact_activation,
    sampled_activation,
)
from qperceptron.oracle import dot, ideal_activation, weight_row
from qperceptron.state import amplitude

SHOTS = 8192
SIGNFLIP_CANON = SynthesisMethod(Strategy.SIGNFLIP, canonicalize=True)
HSGS_CANON = SynthesisMethod(Strategy.HSGS, canonicalize=True)
N2_SIGNS = [SignVector.from_label(k, 4) for k in range(16)]


def random_signs(rng, n):
    return SignVector(tuple(int(v) for v in rng.choice([-1, 1], 2**n)))


@pytest.mark.criterion(1, "N=2 exhaustive matrix equals oracle for both methods (<5 s)")
def test_c1_n2_exhaustive():
    start = time.perf_counter()
    for method in (SIGNFLIP, HSGS):
        values = np.empty((16, 16))
        for k_w, k_i in itertools.product(range(16), repeat=2):
            i, w = N2_SIGNS[k_i], N2_SIGNS[k_w]
            values[k_w, k_i] = exact_activation(i, w, method)
            assert abs(values[k_w, k_i] - (dot(i, w) / 4) ** 2) < 1e-10
        assert set(np.round(values, 10).ravel().tolist()) == {0.0, 0.25, 1.0}
        for k_w, k_i in itertools.product(range(16), repeat=2):
            is_one = abs(values[k_w, k_i] - 1) < 1e-10
            assert is_one == (k_i == k_w or k_i == 15 - k_w)
    assert time.perf_counter() - start < 5


@pytest.mark.criterion(2, "amplitude m-1 after U_w U_i equals dot/m, 500 pairs per N=2..6 (<30 s)")
def test_c2_amplitude_identity():
    start = time.perf_counter()
    rng = np.random.default_rng(20260101)
    for n in range(2, 7):
        m = 2**n
        for _ in range(500):
            i, w = random_signs(rng, n), random_signs(rng, n)
            ref = dot(i, w) / m
            for method in (SIGNFLIP, HSGS):
                c = amplitude(run(build_ui(i, method).then(build_uw(w, method))), m - 1)
                assert abs(c - ref) < 1e-12
            for method in (SIGNFLIP_CANON, HSGS_CANON):
                c = amplitude(run(build_ui(i, method).then(build_uw(w, method))), m - 1)
                assert abs(abs(c) - abs(ref)) < 1e-12
    assert time.perf_counter() - start < 30


@pytest.mark.criterion(3, "SIGNFLIP and HSGS ancilla probabilities agree within 1e-12")
def test_c3_method_equivalence():
    for i, w in itertools.product(N2_SIGNS, repeat=2):
        assert abs(exact_activation(i, w, SIGNFLIP) - exact_activation(i, w, HSGS)) < 1e-12
    rng = np.random.default_rng(3)
    for n in (3, 4, 5):
        for _ in range(200):
            i, w = random_signs(rng, n), random_signs(rng, n)
            assert abs(exact_activation(i, w, SIGNFLIP) - exact_activation(i, w, HSGS)) < 1e-12


@pytest.mark.criterion(4, "CZ/CCZ/Toffoli lowering is unitarily exact; Toffoli uses 6 CNOTs")
def test_c4_lowering():
    for native in (Gate.cpz((0, 1)), Gate.cpz((0, 1, 2))):
        lowered = Circuit(3, lower_cpz_via_hadamards(native))
        assert np.max(np.abs(unitary_of(lowered) - unitary_of(Circuit(3, [native])))) < 1e-12
    tof = Gate.cpnot((0, 1), 2)
    lowered = Circuit(3, lower_toffoli(tof))
    assert np.max(np.abs(unitary_of(lowered) - unitary_of(Circuit(3, [tof])))) < 1e-12
    c = census(lowered)
    assert c.cnot(1) == 6
    assert c.total - c.single_qubit == 6
    native_ccz = Circuit(3, [Gate.cpz((0, 1, 2))])
    full = lower_circuit(native_ccz)
    assert census(full).max_arity == 2
    assert np.max(np.abs(unitary_of(full) - unitary_of(native_ccz))) < 1e-12


@pytest.mark.criterion(5, "N=4 cross weight: activation > 0.5 exactly on 274 inputs within 2 bits (<60 s)")
def test_c5_n4_classification():
    start = time.perf_counter()
    k_w = DEFAULTS.n4_weight.label
    row = weight_row(4, k_w)
    labels = np.arange(1 << 16)
    d_w = np.array([bin(int(k) ^ k_w).count("1") for k in labels])
    in_ball = (d_w <= 2) | (16 - d_w <= 2)
    assert int(in_ball.sum()) == 2 * (math.comb(16, 0) + math.comb(16, 1) + math.comb(16, 2)) == 274
    assert np.array_equal(row > 0.5, in_ball)
    rng = np.random.default_rng(5)
    w = SignVector.from_label(k_w, 16)
    for k in rng.integers(0, 1 << 16, 200):
        i = SignVector.from_label(int(k), 16)
        assert abs(exact_activation(i, w, HSGS) - row[k]) < 1e-10
    assert time.perf_counter() - start < 60


@pytest.mark.criterion(6, "8192-shot estimates within 0.02 of exact; records byte-reproducible")
def test_c6_shot_sampling(tmp_path):
    fig2_i = SignVector(tuple(-1 if j in (0, 1) else 1 for j in range(16)))
    fig2_w = SignVector(tuple(-1 if j in (2, 3, 4) else 1 for j in range(16)))
    assert ideal_activation(fig2_i, fig2_w) == 0.140625
    for seed in (0, 1, 2):
        got = sampled_activation(fig2_i, fig2_w, HSGS, SHOTS, seed)
        assert abs(got - 0.140625) <= 0.02
    rng = np.random.default_rng(6)
    for k_w, k_i in rng.integers(0, 1 << 16, (50, 2)):
        rec = evaluate(int(k_w), int(k_i), 4, HSGS, SHOTS, seed=42)
        assert abs(rec.sampled - rec.exact) <= 0.02
        again = evaluate(int(k_w), int(k_i), 4, HSGS, SHOTS, seed=42)
        assert again.row() == rec.row()
    outputs = []
    for run_dir in ("a", "b"):
        out = tmp_path / run_dir
        assert cli.main(["n2-sweep", "--shots", str(SHOTS), "--seed", "7", "--out", str(out)]) == 0
        outputs.append({p.name: p.read_bytes() for p in sorted(out.iterdir())})
    assert outputs[0] == outputs[1]


@pytest.mark.criterion(7, "HSGS <= one C^N Z; SIGNFLIP block bounds; mean HSGS gates <= SIGNFLIP")
def test_c7_resources():
    rng = np.random.default_rng(7)
    for n in (2, 3, 4, 5):
        vectors = N2_SIGNS if n == 2 else [random_signs(rng, n) for _ in range(200)]
        totals = {"hsgs": [], "signflip": [], "signflip-canon": []}
        for s in vectors:
            h = census(build_ui(s, HSGS))
            raw = census(build_ui(s, SIGNFLIP))
            canon = census(build_ui(s, SIGNFLIP_CANON))
            assert h.cz(n) <= 1
            assert raw.cz(n) == list(s).count(-1) <= 2**n
            assert canon.cz(n) <= 2 ** (n - 1)
            totals["hsgs"].append(h.total)
            totals["signflip"].append(raw.total)
            totals["signflip-canon"].append(canon.total)
        mean_hsgs = np.mean(totals["hsgs"])
        assert mean_hsgs <= np.mean(totals["signflip"])
        assert mean_hsgs <= np.mean(totals["signflip-canon"])


@pytest.mark.criterion(8, "every N=2 activation at 8192 shots is > 0.75 or < 0.3")
def test_c8_noiseless_band():
    for method in (SIGNFLIP, HSGS):
        for seed in (0, 1):
            res = run_n2_sweep(method, shots=SHOTS, seed=seed)
            assert np.all((res.matrix > 0.75) | (res.matrix < 0.3))
