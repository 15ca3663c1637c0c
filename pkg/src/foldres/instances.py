"""Problem instances: lattice grids, cardinality vectors, sampled rotamer counts.

Every model reduces to a cardinality vector, the per-residue count of
available conformations.  For coordinate lattices the counts follow a
checkerboard split of the grid sites (odd chain positions use the
ceiling half, even positions the floor half); for turn models the count
is the lattice coordination number; side-chain instances carry their
counts explicitly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import DomainError

CardinalityVector = tuple[int, ...]


@dataclass(frozen=True)
class GridSpec:
    """A rectangular or box lattice grid with canonically sorted sides."""

    sides: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.sides) not in (2, 3):
            raise DomainError("grids have 2 or 3 sides")
        if any(s < 1 for s in self.sides):
            raise DomainError(f"grid sides must be positive: {self.sides}")
        object.__setattr__(self, "sides", tuple(sorted(self.sides)))

    @property
    def sites(self) -> int:
        return math.prod(self.sides)

    @property
    def label(self) -> str:
        return "x".join(str(s) for s in self.sides)


@dataclass(frozen=True)
class CoordinateLattice:
    dim: int
    grid: GridSpec
    n: int

    def __post_init__(self) -> None:
        if self.dim not in (2, 3):
            raise DomainError("lattice dimension must be 2 or 3")
        if len(self.grid.sides) != self.dim:
            raise DomainError(
                f"{self.dim}-dimensional lattice needs {self.dim} grid sides"
            )
        if self.n < 1:
            raise DomainError("chain length must be >= 1")
        if self.grid.sites < self.n:
            raise DomainError(
                f"grid {self.grid.label} has {self.grid.sites} sites, "
                f"fewer than {self.n} beads"
            )


@dataclass(frozen=True)
class TurnLattice:
    dim: int
    n: int

    def __post_init__(self) -> None:
        if self.dim not in (2, 3):
            raise DomainError("lattice dimension must be 2 or 3")
        if self.n < 1:
            raise DomainError("chain length must be >= 1")


@dataclass(frozen=True)
class SideChain:
    confs: CardinalityVector

    def __post_init__(self) -> None:
        object.__setattr__(self, "confs", tuple(int(c) for c in self.confs))
        if not self.confs or any(c < 1 for c in self.confs):
            raise DomainError("conformation counts must be positive and non-empty")


ModelInstance = CoordinateLattice | TurnLattice | SideChain

COORDINATION = {2: 4, 3: 6}


def cardinality_vector(instance: ModelInstance) -> CardinalityVector:
    """Per-residue conformation counts for any model instance."""
    if isinstance(instance, CoordinateLattice):
        s = instance.grid.sites
        hi, lo = (s + 1) // 2, s // 2
        return tuple(hi if i % 2 == 0 else lo for i in range(instance.n))
    if isinstance(instance, TurnLattice):
        return (COORDINATION[instance.dim],) * instance.n
    return instance.confs


def _grids_in_window(lo: int, hi: int, dim: int) -> list[GridSpec]:
    out = []
    if dim == 2:
        for a in range(2, math.isqrt(hi) + 1):
            for b in range(a, hi // a + 1):
                if lo <= a * b <= hi:
                    out.append(GridSpec((a, b)))
    else:
        for a in range(2, round(hi ** (1 / 3)) + 2):
            for b in range(a, hi // a + 1):
                for c in range(b, hi // (a * b) + 1):
                    if lo <= a * b * c <= hi:
                        out.append(GridSpec((a, b, c)))
    return sorted(out, key=lambda grd: grd.sides)


def enumerate_grids(n: int, dim: int, slack: float = 1.5) -> list[GridSpec]:
    """All canonical grids with sides >= 2 and n <= sites <= floor(slack*n).

    Canonical means sides sorted non-decreasing, so 3x5 and 5x3 are the
    same instance.  Listed in lexicographic order of the side tuples.
    When the window contains no grid with sides >= 2 (small n), falls
    back to the single smallest such grid with sites >= n, so sweeps at
    small n are never empty.
    """
    if dim not in (2, 3):
        raise DomainError("lattice dimension must be 2 or 3")
    if n < 3:
        raise DomainError("grid enumeration requires n >= 3")
    if slack < 1:
        return []
    hi = math.floor(slack * n + 1e-9)
    grids = _grids_in_window(n, hi, dim)
    if grids:
        return grids
    sites = n
    while True:
        candidates = _grids_in_window(sites, sites, dim)
        if candidates:
            return [candidates[0]]
        sites += 1


def instance_rng(seed: int, n: int, index: int) -> np.random.Generator:
    """Independent generator for instance ``index`` of chain length ``n``.

    Streams are derived from (master seed, n, index), so a sweep that
    fans instances out to parallel workers reproduces serial output.
    """
    return np.random.default_rng([seed, n, index])


def sample_sidechain_instance(
    n: int, c_min: int, c_max: int, rng: np.random.Generator
) -> CardinalityVector:
    """Draw n conformation counts uniformly from [c_min, c_max] inclusive."""
    if not 2 <= c_min <= c_max:
        raise DomainError(f"need 2 <= c_min <= c_max, got [{c_min}, {c_max}]")
    if n < 1:
        raise DomainError("chain length must be >= 1")
    return tuple(int(c) for c in rng.integers(c_min, c_max + 1, size=n))


def parse_grid(text: str) -> GridSpec:
    """Parse a side string like '3x5' or '2x2x3'."""
    try:
        sides = tuple(int(part) for part in text.lower().split("x"))
    except ValueError as exc:
        raise DomainError(f"bad grid spec {text!r}") from exc
    return GridSpec(sides)
