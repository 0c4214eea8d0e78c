"""
linkage-lab - Hilbert-Samuel tables
"""
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

import numpy as np


def difference_rows(values: List[int], depth: int) -> List[List[int]]:
    """Iterated finite differences of `values` (prefixed by λ = 0 at s = 0), orders 1..depth."""
    row = np.array([0] + list(values), dtype=object)
    rows = []
    for _ in range(depth):
        row = np.diff(row)
        rows.append([int(v) for v in row])
    return rows


@dataclass
class HilbertSamuelTable:
    """λ(R/(A + q^s)) for s = 1..len(values), with finite-difference rows."""
    base: Any
    filter_ideal: Any
    dimension: int
    s: List[int] = field(default_factory=list)
    values: List[int] = field(default_factory=list)
    differences: List[List[int]] = field(default_factory=list)
    multiplicity: Optional[int] = None

    def extend(self, value: int):
        self.s.append(len(self.s) + 1)
        self.values.append(value)
        self.differences = difference_rows(self.values, max(self.dimension, 1))

    def top_row(self) -> List[int]:
        """The d-th difference row; the values themselves when d = 0."""
        if self.dimension == 0:
            return list(self.values)
        return self.differences[self.dimension - 1] if self.differences else []

    def to_dict(self) -> Dict[str, Any]:
        return {
            "s": list(self.s),
            "lambda": list(self.values),
            "differences": [list(r) for r in self.differences],
            "multiplicity": self.multiplicity,
            "dimension": self.dimension,
        }
