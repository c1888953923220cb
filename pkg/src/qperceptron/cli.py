"""Command line entry point: ``qperceptron <subcommand> ...``."""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .circuit import lower_circuit
from .config import DEFAULTS
from .encoding import parse_pattern, pattern_to_signs
from .harness import (
    evaluate,
    random_labels,
    run_gate_report,
    run_n2_sweep,
    run_n4_patterns,
    write_files,
)
from .neuron import Strategy, SynthesisMethod, build_perceptron, classify
from .oracle import ideal_activation


def _method(args) -> SynthesisMethod:
    return SynthesisMethod(Strategy(args.method), args.canonicalize == "on")


def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--method", choices=[s.value for s in Strategy], default="hsgs")
    p.add_argument("--canonicalize", choices=["on", "off"], default="off")
    p.add_argument("--shots", type=int, default=DEFAULTS.shots,
                   help="shots per record; 0 = exact only")
    p.add_argument("--seed", type=int, default=DEFAULTS.seed)
    p.add_argument("--threshold", type=float, default=DEFAULTS.threshold)
    p.add_argument("--lowered", action="store_true",
                   help="simulate and count the circuit after CZ/CCZ/Toffoli lowering")
    p.add_argument("--out", type=Path, default=None,
                   help="output directory; without it the main table goes to stdout")


def _n4_label(text: str) -> int:
    text = text.strip()
    if len(text) == 16 and not set(text) - {"0", "1"}:
        return parse_pattern(text).label
    return parse_pattern(text, 16).label


def _emit(args, files: dict[str, str], main: str) -> None:
    if args.out is None:
        sys.stdout.write(files[main])
        return
    for path in write_files(args.out, files):
        print(f"wrote {path}")


def cmd_n2_sweep(args) -> None:
    result = run_n2_sweep(_method(args), args.shots, args.seed, args.lowered)
    _emit(args, result.files(), "records.csv")


def cmd_n4_patterns(args) -> None:
    k_w = _n4_label(args.weight) if args.weight else DEFAULTS.n4_weight.label
    inputs = [_n4_label(t) for t in args.inputs]
    if args.random:
        inputs += random_labels(args.random, 16, args.seed)
    if not inputs:
        raise ValueError("give input labels or --random R")
    result = run_n4_patterns(k_w, inputs, _method(args), args.shots, args.seed,
                             args.threshold, args.lowered)
    _emit(args, result.files(), "patterns.csv")


def cmd_gate_report(args) -> None:
    report = run_gate_report(args.N, args.sample, args.seed, args.lowered)
    _emit(args, report.files(), "gate_report.csv")


def cmd_activate(args) -> None:
    i_pat = parse_pattern(args.input, args.size)
    w_pat = parse_pattern(args.weight, args.size)
    if i_pat.m != w_pat.m:
        raise ValueError(f"input has {i_pat.m} pixels, weight has {w_pat.m}")
    method = _method(args)
    n = pattern_to_signs(i_pat).n_qubits
    rec = evaluate(w_pat.label, i_pat.label, n, method, args.shots, args.seed, args.lowered)
    reference = ideal_activation(pattern_to_signs(i_pat), pattern_to_signs(w_pat))
    shown = rec.exact if rec.sampled is None else rec.sampled
    lines = [
        f"input   k_i={i_pat.label} bits={i_pat}",
        f"weight  k_w={w_pat.label} bits={w_pat}",
        f"method  {method.label}",
        f"oracle  {reference:.12g}",
        f"exact   {rec.exact:.12g}",
    ]
    if rec.sampled is not None:
        lines.append(f"sampled {rec.sampled:.12g} ({rec.n_shots} shots, seed {rec.seed})")
    lines.append(f"active  {int(classify(shown, args.threshold))} (threshold {args.threshold:g})")
    lines.append(f"census  {rec.census.counts} depth={rec.census.depth}")
    text = "\n".join(lines) + "\n"
    pc = build_perceptron(pattern_to_signs(i_pat), pattern_to_signs(w_pat), method)
    circuit = lower_circuit(pc.circuit) if args.lowered else pc.circuit
    if args.dump:
        text += circuit.dumps()
    if args.out is None:
        sys.stdout.write(text)
    else:
        write_files(args.out, {"activation.txt": text, "circuit.txt": circuit.dumps()})
        print(f"wrote {args.out / 'activation.txt'}")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="qperceptron",
                                 description="Quantum perceptron simulation experiments.")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("n2-sweep", help="all 256 input/weight pairs at N=2")
    _add_common(p)
    p.set_defaults(func=cmd_n2_sweep)

    p = sub.add_parser("n4-patterns", help="one N=4 weight against chosen inputs")
    p.add_argument("inputs", nargs="*",
                   help="input labels (decimal, or 16 characters of 0/1)")
    p.add_argument("--weight", default=None,
                   help="weight label or bit string (default: configured cross)")
    p.add_argument("--random", type=int, default=0, metavar="R",
                   help="add R random inputs drawn with --seed")
    _add_common(p)
    p.set_defaults(func=cmd_n4_patterns)

    p = sub.add_parser("gate-report", help="gate counts of both synthesis strategies")
    p.add_argument("-N", type=int, default=4, help="encoding qubits")
    p.add_argument("--sample", type=int, default=200, help="random sign vectors")
    p.add_argument("--seed", type=int, default=DEFAULTS.seed)
    p.add_argument("--lowered", action="store_true",
                   help="count gates after CZ/CCZ/Toffoli lowering")
    p.add_argument("--out", type=Path, default=None)
    p.set_defaults(func=cmd_gate_report)

    p = sub.add_parser("activate", help="a single input/weight pair")
    p.add_argument("--input", required=True, help="pattern bits, or a label with --size")
    p.add_argument("--weight", required=True, help="pattern bits, or a label with --size")
    p.add_argument("--size", type=int, default=None,
                   help="pixel count m; makes --input/--weight decimal labels")
    p.add_argument("--dump", action="store_true", help="append the circuit text dump")
    _add_common(p)
    p.set_defaults(func=cmd_activate)
    return ap


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        args.func(args)
    except (ValueError, IndexError, OSError) as exc:
        print(f"qperceptron: error: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
