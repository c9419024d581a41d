"""
Scan grids and discrepancy reports
"""
import math
from dataclasses import dataclass
from typing import Tuple

import pandas as pd

from utils.errors import DomainError
from utils.helpers import uniform_grid

REPORT_COLUMNS = ["x", "y", "k_approx", "l_approx", "k_ref", "l_ref", "delta_re", "delta_im"]


@dataclass(frozen=True)
class ScanGrid:
    """Rectangular grid: x_steps uniform x nodes times each y level"""

    x_min: float
    x_max: float
    x_steps: int
    y_values: Tuple[float, ...]

    def __post_init__(self):
        y_values = tuple(float(y) for y in self.y_values)
        if not (math.isfinite(self.x_min) and math.isfinite(self.x_max)):
            raise DomainError("❌ x range must be finite")
        if not self.x_min < self.x_max:
            raise DomainError(f"❌ x_min must be < x_max, got [{self.x_min}, {self.x_max}]")
        if int(self.x_steps) != self.x_steps or self.x_steps < 2:
            raise DomainError(f"❌ x_steps must be an integer >= 2, got {self.x_steps!r}")
        if not y_values:
            raise DomainError("❌ y_values must not be empty")
        if any(not math.isfinite(y) or y < 0 for y in y_values):
            raise DomainError(f"❌ every y must be finite and >= 0, got {list(y_values)}")
        if any(b <= a for a, b in zip(y_values, y_values[1:])):
            raise DomainError(f"❌ y_values must be strictly increasing, got {list(y_values)}")
        object.__setattr__(self, "x_min", float(self.x_min))
        object.__setattr__(self, "x_max", float(self.x_max))
        object.__setattr__(self, "x_steps", int(self.x_steps))
        object.__setattr__(self, "y_values", y_values)

    def x_nodes(self):
        return uniform_grid(self.x_min, self.x_max, self.x_steps)

    @property
    def size(self):
        return self.x_steps * len(self.y_values)


@dataclass(frozen=True)
class MaxLocation:
    value: float
    x: float
    y: float


def _locate_max(rows, column):
    # first occurrence wins on ties
    position = int(rows[column].to_numpy().argmax())
    row = rows.iloc[position]
    return MaxLocation(value=float(row[column]), x=float(row["x"]), y=float(row["y"]))


@dataclass(eq=False)
class DiscrepancyReport:
    """Per-point approximation vs. reference values with their maxima"""

    rows: pd.DataFrame
    max_re: MaxLocation
    max_im: MaxLocation

    @classmethod
    def from_rows(cls, rows):
        """Build a report, deriving the maxima from the rows"""
        rows = rows[REPORT_COLUMNS].reset_index(drop=True)
        if rows.empty:
            raise DomainError("❌ Report needs at least one row")
        return cls(rows=rows, max_re=_locate_max(rows, "delta_re"), max_im=_locate_max(rows, "delta_im"))

    def recompute_maxima(self):
        """Re-derive (max_re, max_im) from the stored rows"""
        return _locate_max(self.rows, "delta_re"), _locate_max(self.rows, "delta_im")

    def per_y_maxima(self):
        """Max delta_re / delta_im and their x location for every y level"""
        records = []
        for y, group in self.rows.groupby("y", sort=True):
            re_max = _locate_max(group, "delta_re")
            im_max = _locate_max(group, "delta_im")
            records.append({
                "y": float(y),
                "max_delta_re": re_max.value,
                "x_at_max_re": re_max.x,
                "max_delta_im": im_max.value,
                "x_at_max_im": im_max.x,
            })
        return pd.DataFrame.from_records(records)
