"""Multivariate sample container."""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import DataError


@dataclass(frozen=True)
class SeriesMatrix:
    """A T-by-d panel of observations with column names.

    values: (T, d) float array, no missing entries.
    names: one label per column.
    index: optional per-row labels (e.g. dates) carried through outputs.
    """

    values: np.ndarray
    names: tuple = ()
    index: tuple = field(default=(), repr=False)

    def __post_init__(self):
        v = np.asarray(self.values, dtype=float)
        if v.ndim != 2:
            raise DataError(f"series values must be 2-D, got shape {v.shape}")
        if v.shape[0] < 2 or v.shape[1] < 1:
            raise DataError(f"series too small: shape {v.shape}")
        if not np.all(np.isfinite(v)):
            bad = np.argwhere(~np.isfinite(v))[0]
            raise DataError(f"non-finite value at row {bad[0] + 1}, column {bad[1] + 1}")
        object.__setattr__(self, "values", v)
        names = tuple(self.names) if self.names else tuple(f"x{i + 1}" for i in range(v.shape[1]))
        if len(names) != v.shape[1]:
            raise DataError(f"{len(names)} names for {v.shape[1]} columns")
        object.__setattr__(self, "names", names)
        if self.index:
            if len(self.index) != v.shape[0]:
                raise DataError(f"{len(self.index)} row labels for {v.shape[0]} rows")
            object.__setattr__(self, "index", tuple(str(i) for i in self.index))

    @property
    def T(self) -> int:
        return self.values.shape[0]

    @property
    def d(self) -> int:
        return self.values.shape[1]

    def rescale(self, factors):
        """Return a copy with column i multiplied by factors[i]."""
        f = np.asarray(factors, dtype=float)
        return SeriesMatrix(self.values * f[None, :], self.names, self.index)

    def head(self, n):
        """First n rows as a new series."""
        idx = self.index[:n] if self.index else ()
        return SeriesMatrix(self.values[:n], self.names, idx)
