"""Feasible-solution-set sizes and ratios.

A bitstring is feasible when every residue's slice decodes to exactly
one conformation.  Because residues are independent, the feasible count
has the closed form ``prod_i c_i`` against a search space of ``2^M``
bitstrings, with ``M`` the total qubit count; ratios are carried in
log2 form since the plain ratio underflows double precision for long
unary chains.  An exhaustive enumerator over the full ``2^M`` space
provides an independent check for small instances.

The coordinate-lattice model additionally gets the standard relaxed
count that keeps the one-site-per-bead and one-bead-per-site
constraints but ignores chain connectivity: odd-position beads choose
distinct sites of one checkerboard parity, even-position beads of the
other, giving a product of two falling factorials.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .encodings import Encoding, code_length, decode_codeword
from .errors import DomainError
from .instances import COORDINATION, CardinalityVector, GridSpec
from .resources import qubit_count

_MIN_NORMAL_LOG2 = -1022


@dataclass(frozen=True)
class FeasibilityReport:
    """Size of the feasible set relative to all 2**qubits bitstrings."""

    qubits: int
    log2_ratio: float
    method: str
    feasible_count: int | None = None

    @property
    def total_count(self) -> int:
        return 1 << self.qubits

    @property
    def ratio(self) -> float | None:
        """Linear-domain ratio, or None when it would underflow doubles."""
        if self.log2_ratio < _MIN_NORMAL_LOG2:
            return None
        return 2.0 ** self.log2_ratio


def _width(encoding: Encoding, c: int) -> int:
    return code_length(encoding, c)


def feasible_ratio_formula(
    confs: CardinalityVector, encoding: Encoding
) -> FeasibilityReport:
    """Closed form: per residue, c_i feasible codewords out of 2^w_i."""
    log2_ratio = sum(math.log2(c) - _width(encoding, c) for c in confs)
    return FeasibilityReport(
        qubits=qubit_count(confs, encoding),
        log2_ratio=log2_ratio,
        method="formula",
        feasible_count=math.prod(confs),
    )


def feasible_ratio_exact(
    confs: CardinalityVector, encoding: Encoding, qubit_cap: int = 24
) -> FeasibilityReport:
    """Count feasible strings by scanning all 2^M bitstrings.

    Each candidate is checked residue by residue against decode tables
    built from the codec, so the count is independent of the closed
    form.  Refuses instances above ``qubit_cap`` qubits.
    """
    widths = [_width(encoding, c) for c in confs]
    total_bits = sum(widths)
    if total_bits > qubit_cap:
        raise DomainError(
            f"exact enumeration needs {total_bits} qubits, cap is {qubit_cap}"
        )
    tables = []
    shift = total_bits
    for c, width in zip(confs, widths):
        shift -= width
        table = np.zeros(1 << width, dtype=bool)
        for value in range(1 << width):
            bits = format(value, f"0{width}b") if width else ""
            table[value] = decode_codeword(bits, encoding, c) is not None
        tables.append((shift, (1 << width) - 1, table))

    count = 0
    chunk = 1 << 20
    for start in range(0, 1 << total_bits, chunk):
        stop = min(start + chunk, 1 << total_bits)
        candidates = np.arange(start, stop, dtype=np.uint64)
        ok = np.ones(stop - start, dtype=bool)
        for shift, mask, table in tables:
            ok &= table[(candidates >> np.uint64(shift)) & np.uint64(mask)]
        count += int(ok.sum())

    return FeasibilityReport(
        qubits=total_bits,
        log2_ratio=math.log2(count) - total_bits,
        method="exact-enumeration",
        feasible_count=count,
    )


def coordinate_feasible_count(grid: GridSpec, n: int) -> int:
    """Injective parity-respecting placements of an n-bead chain.

    Chain connectivity is deliberately ignored: the count is the relaxed
    upper bound used when comparing encodings, not the true fold count.
    """
    if grid.sites < n:
        raise DomainError(
            f"grid {grid.label} has {grid.sites} sites, fewer than {n} beads"
        )
    odd_sites, even_sites = (grid.sites + 1) // 2, grid.sites // 2
    odd_beads, even_beads = (n + 1) // 2, n // 2
    if odd_beads > odd_sites or even_beads > even_sites:
        return 0
    return math.perm(odd_sites, odd_beads) * math.perm(even_sites, even_beads)


def coordinate_feasible_report(
    grid: GridSpec, n: int, encoding: Encoding
) -> FeasibilityReport:
    """Relaxed coordinate-model feasibility against the encoded space."""
    count = coordinate_feasible_count(grid, n)
    s = grid.sites
    confs = tuple((s + 1) // 2 if i % 2 == 0 else s // 2 for i in range(n))
    total_bits = qubit_count(confs, encoding)
    return FeasibilityReport(
        qubits=total_bits,
        log2_ratio=math.log2(count) - total_bits,
        method="coordinate-approximate",
        feasible_count=count,
    )


def turn_feasible_ratio(n: int, dim: int, encoding: Encoding) -> FeasibilityReport:
    """Closed-form ratio for the turn model's conformation register.

    Auxiliary qubits are excluded; they carry derived values and do not
    change which conformation strings are feasible.  On the square
    lattice the binary encoding is exact (4 directions fill 2 bits), so
    the ratio is 1 for every chain length.
    """
    if n < 1:
        raise DomainError("chain length must be >= 1")
    if dim not in COORDINATION:
        raise DomainError("lattice dimension must be 2 or 3")
    report = feasible_ratio_formula((COORDINATION[dim],) * n, encoding)
    return report
