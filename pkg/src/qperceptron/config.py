"""Shipped defaults (data/defaults.json)."""

from __future__ import annotations

import json
from dataclasses import dataclass
from importlib import resources

from .encoding import BitPattern, parse_pattern


@dataclass(frozen=True)
class Defaults:
    n4_weight: BitPattern
    shots: int
    paper_shots: int
    seed: int
    threshold: float


def load_defaults() -> Defaults:
    raw = json.loads(resources.files(__package__).joinpath("data/defaults.json").read_text())
    return Defaults(
        n4_weight=parse_pattern(raw["n4_weight_bits"]),
        shots=int(raw["shots"]),
        paper_shots=int(raw["paper_shots"]),
        seed=int(raw["seed"]),
        threshold=float(raw["threshold"]),
    )


DEFAULTS = load_defaults()
