"""Tunable knobs of the comparison pipeline."""

from __future__ import annotations

import math
from dataclasses import dataclass


@dataclass(frozen=True)
class MergeConfig:
    """Weights and thresholds of the scoring and merge steps.

    broad_link_threshold: an item linked to at least this many secondary
    items counts as "too broad" and its label is discounted during merging.
    None means the default max(5, 25% of the secondary set size); a value
    in (0, 1) is a fraction of the secondary set size; an integer >= 1 is
    absolute.

    weight_unique / weight_plus_alpha scale the two point-scoring label
    kinds when computing coverage (both default to 1).
    """

    broad_link_threshold: int | float | None = None
    weight_unique: float = 1.0
    weight_plus_alpha: float = 1.0

    def __post_init__(self) -> None:
        if self.broad_link_threshold is not None and self.broad_link_threshold <= 0:
            raise ValueError("broad_link_threshold must be positive")
        if self.weight_unique < 0 or self.weight_plus_alpha < 0:
            raise ValueError("weights must be nonnegative")


def resolve_broad_link_threshold(config: MergeConfig, secondary_size: int) -> int:
    value = config.broad_link_threshold
    if value is None:
        return max(5, math.ceil(0.25 * secondary_size))
    if isinstance(value, float) and value < 1:
        return max(1, math.ceil(value * secondary_size))
    return max(1, int(value))
