"""Campaign descriptions and deterministic per-trial randomness."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from ..bitcore import BoolMatrix, BoolVector
from ..gadgets.registry import GADGETS

DEFAULT_SIZES = ((4, 4, 4), (8, 8, 4), (16, 16, 4))


@dataclass(frozen=True)
class Campaign:
    """Everything a run needs; identical campaigns (same seed included)
    reproduce identical verify reports byte for byte."""

    seed: int = 0
    trials: int = 5
    sizes: tuple[tuple[int, int, int], ...] = DEFAULT_SIZES
    density: Fraction = Fraction(1, 2)
    targets: tuple[str, ...] = ()
    undo_mode: str = "undo"
    epsilon: Fraction = Fraction(1)
    delta: Fraction = Fraction(1, 2)
    inject_fault: Optional[int] = None

    def resolved_targets(self) -> tuple[str, ...]:
        if self.targets:
            return self.targets
        return tuple(sorted(GADGETS)) + ("naive", "lookup", "multiphase")


def trial_rng(campaign: Campaign, target: str, size: tuple[int, int, int], trial: int) -> random.Random:
    """Independent substream per (campaign, target, size, trial): the
    label string seeds the generator, so execution order cannot matter."""
    n1, n2, n3 = size
    label = f"{campaign.seed}|{target}|{n1}x{n2}x{n3}|{trial}"
    return random.Random(label)


def random_bits(rng: random.Random, n: int, density: Fraction) -> BoolVector:
    p, q = density.numerator, density.denominator
    v = BoolVector.zeros(n)
    for i in range(n):
        if rng.randrange(q) < p:
            v.set_bit(i, 1)
    return v


def random_matrix(rng: random.Random, n1: int, n2: int, density: Fraction) -> BoolMatrix:
    return BoolMatrix(random_bits(rng, n2, density) for _ in range(n1))


def random_pairs(rng: random.Random, n1: int, n2: int, n3: int,
                 density: Fraction) -> list[tuple[BoolVector, BoolVector]]:
    return [(random_bits(rng, n1, density), random_bits(rng, n2, density))
            for _ in range(n3)]


def parse_sizes(text: str) -> tuple[tuple[int, int, int], ...]:
    """"n1xn2xn3[,n1xn2xn3...]"; a single number n means n x n x n."""
    sizes = []
    for part in text.split(","):
        part = part.strip()
        if not part:
            continue
        dims = part.split("x")
        if len(dims) == 1:
            n = int(dims[0])
            sizes.append((n, n, n))
        elif len(dims) == 3:
            sizes.append((int(dims[0]), int(dims[1]), int(dims[2])))
        else:
            raise ValueError(f"bad size {part!r}; expected n1xn2xn3")
    if not sizes:
        raise ValueError("no sizes given")
    for n1, n2, n3 in sizes:
        if n1 < 1 or n2 < 1 or n3 < 1:
            raise ValueError(f"sizes must be positive, got {n1}x{n2}x{n3}")
    return tuple(sizes)
