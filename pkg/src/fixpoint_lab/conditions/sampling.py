"""
Seeded sample sets of ordered point pairs
"""
import math
import numpy as np
import numpy.typing as npt
import fixpoint_lab.base as fp_base
from fixpoint_lab.conditions.element import Box


class SampleSet:
    """
    Ordered pairs (x, y) in E x E stored as two arrays of shape (m, d)
    """

    def __init__(self, xs: npt.ArrayLike, ys: npt.ArrayLike) -> None:
        self.xs = np.atleast_2d(np.asarray(xs, dtype=np.float64))
        self.ys = np.atleast_2d(np.asarray(ys, dtype=np.float64))
        if self.xs.shape != self.ys.shape:
            raise ValueError(f"Pair arrays differ in shape: {self.xs.shape} != {self.ys.shape}")

    def __len__(self) -> int:
        return self.xs.shape[0]

    @classmethod
    def from_pairs(cls, pairs: list[tuple[npt.ArrayLike, npt.ArrayLike]]) -> "SampleSet":
        """
        Builds sample set from explicit (x, y) tuples
        """
        xs = [np.atleast_1d(np.asarray(x, dtype=np.float64)) for x, _ in pairs]
        ys = [np.atleast_1d(np.asarray(y, dtype=np.float64)) for _, y in pairs]
        return cls(np.stack(xs), np.stack(ys))

    @classmethod
    def grid_pairs(cls, domain: Box, points_per_axis: int) -> "SampleSet":
        """
        All ordered pairs of a regular grid (including x == y)
        """
        points = domain.grid(points_per_axis)
        count = points.shape[0]
        xs = np.repeat(points, count, axis=0)
        ys = np.tile(points, (count, 1))
        return cls(xs, ys)

    @classmethod
    def random_pairs(cls, domain: Box, count: int, seed: int = fp_base.DEFAULT_SEED) -> "SampleSet":
        """
        count pairs drawn uniformly with a fixed seed
        """
        rng = np.random.default_rng(seed)
        return cls(domain.uniform(rng, count), domain.uniform(rng, count))

    @classmethod
    def generate(cls,
                 domain: Box,
                 grid_budget: int = fp_base.GRID_POINT_BUDGET,
                 random_count: int = 0,
                 seed: int = fp_base.DEFAULT_SEED) -> "SampleSet":
        """
        Grid pairs with at most grid_budget grid points followed by seeded random pairs.

        A budget of 100 yields 10,000 grid pairs in any dimension that allows it.
        """
        points_per_axis = max(2, int(math.floor(grid_budget ** (1.0 / domain.dimension) + 1e-9)))
        samples = cls.grid_pairs(domain, points_per_axis)
        if random_count > 0:
            samples = samples.concat(cls.random_pairs(domain, random_count, seed))
        return samples

    def concat(self, other: "SampleSet") -> "SampleSet":
        """
        Returns new sample set with the pairs of other appended
        """
        return SampleSet(np.concatenate([self.xs, other.xs]), np.concatenate([self.ys, other.ys]))
