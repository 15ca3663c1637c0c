"""Closed-form resource counts for pairwise-interaction cost Hamiltonians.

Covers the coordinate-lattice and side-chain models, whose energy is a
dense sum over residue pairs.  After mapping classical bits to spin
variables, every term of the cost function expands into products of
Pauli-z operators; this module counts those products by interaction
order without constructing them.

Counting rules per encoding, for a cardinality vector ``C`` with
per-residue code lengths ``q_i``:

* orders 1 and 2 are complete for every encoding: one term per qubit
  plus one per qubit pair (validity penalties supply the pairs that
  cross-residue products do not).
* unary stops at order 2.
* binary pairs couple all qubits of two residues, giving
  ``binom(q_i + q_j, m)`` terms of order ``m >= 3`` per pair.  Subsets
  lying inside a single residue repeat across that residue's N-1
  pairings and are deduplicated: order ``m`` keeps
  ``sum_{i<j} binom(q_i+q_j, m) - (N-2) * sum_i binom(q_i, m)``.
* block-unary-binary couples blocks pairwise.  With ``B`` total blocks
  of ``b`` qubits each, order ``m >= 3`` keeps
  ``binom(B, 2) * binom(2b, m) - B*(B-2) * binom(b, m)``: subsets inside
  one block repeat across its B-1 block pairings and are likewise kept
  once.  (Validated term-by-term against the brute-force census.)

Every decomposed ``m``-body term costs ``2(m-1)`` two-qubit gates via a
CNOT-ladder construction; single-qubit terms cost none.

All counts are exact Python integers.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from math import comb
from typing import Mapping, Sequence

from .encodings import Encoding, code_length
from .errors import DomainError
from .instances import (
    CoordinateLattice,
    ModelInstance,
    SideChain,
    TurnLattice,
    cardinality_vector,
)


@dataclass(frozen=True)
class ResourceEstimate:
    """Qubit, interaction, and gate totals for one problem instance."""

    qubits: int
    k_locality: int
    interactions_by_order: dict[int, int] = field(default_factory=dict)
    total_interactions: int = 0
    two_qubit_gates: int = 0
    correction_subtracted: int = 0


def qubit_count(confs: Sequence[int], encoding: Encoding) -> int:
    """Total code length over all residues."""
    return sum(code_length(encoding, c) for c in confs)


def k_locality(confs: Sequence[int], encoding: Encoding) -> int:
    """Largest interaction order appearing in the cost Hamiltonian.

    Unary is always 2-local.  Binary locality is set by the two widest
    residues (counting multiplicity, so a repeated maximum pairs with
    itself).  Block encodings are 2b-local with b bits per block.
    """
    if encoding.scheme == "unary":
        return 2
    if encoding.scheme == "bubinary":
        return 2 * encoding.block_bits
    if len(confs) < 2:
        raise DomainError("binary locality needs at least two residues")
    widths = sorted((code_length(encoding, c) for c in confs), reverse=True)
    return widths[0] + widths[1]


def _binary_orders(widths: Counter[int], n: int) -> tuple[dict[int, int], int]:
    ordered = sorted(widths)
    top = sorted(widths.elements(), reverse=True)[:2]
    k = sum(top)
    counts: dict[int, int] = {}
    correction = 0
    for m in range(3, k + 1):
        raw = 0
        for ai, a in enumerate(ordered):
            for b in ordered[ai:]:
                npairs = (
                    comb(widths[a], 2) if a == b else widths[a] * widths[b]
                )
                raw += npairs * comb(a + b, m)
        dup = (n - 2) * sum(widths[a] * comb(a, m) for a in ordered)
        correction += dup
        if raw - dup:
            counts[m] = raw - dup
    return counts, correction


def _bub_orders(total_blocks: int, b: int) -> tuple[dict[int, int], int]:
    counts: dict[int, int] = {}
    correction = 0
    for m in range(3, 2 * b + 1):
        raw = comb(total_blocks, 2) * comb(2 * b, m)
        dup = total_blocks * (total_blocks - 2) * comb(b, m)
        correction += dup
        if raw - dup:
            counts[m] = raw - dup
    return counts, correction


def _counts_and_correction(
    confs: Sequence[int], encoding: Encoding
) -> tuple[dict[int, int], int]:
    n = len(confs)
    if n < 2:
        raise DomainError("interaction counting needs at least two residues")
    q = qubit_count(confs, encoding)
    counts: dict[int, int] = {}
    if q:
        counts[1] = q
    if comb(q, 2):
        counts[2] = comb(q, 2)
    correction = 0
    if encoding.scheme == "binary":
        widths = Counter(code_length(encoding, c) for c in confs)
        higher, correction = _binary_orders(widths, n)
        counts.update(higher)
    elif encoding.scheme == "bubinary":
        total_blocks = sum(-(-c // encoding.g) for c in confs)
        higher, correction = _bub_orders(total_blocks, encoding.block_bits)
        counts.update(higher)
    return counts, correction


def interaction_counts(confs: Sequence[int], encoding: Encoding) -> dict[int, int]:
    """Number of Hamiltonian terms per interaction order (orders with
    zero count are omitted)."""
    counts, _ = _counts_and_correction(confs, encoding)
    return counts


def two_qubit_gate_count(counts_by_order: Mapping[int, int]) -> int:
    """CNOT-ladder cost: 2(m-1) two-qubit gates per m-body term."""
    return sum(cnt * 2 * (m - 1) for m, cnt in counts_by_order.items())


def estimate(instance: ModelInstance, encoding: Encoding) -> ResourceEstimate:
    """Full resource estimate for a coordinate-lattice or side-chain instance.

    Turn-lattice instances follow different counting rules and are
    rejected here; see :mod:`foldres.turn_model`.
    """
    if isinstance(instance, TurnLattice):
        raise DomainError("turn-lattice instances use turn_model.turn_estimate")
    if not isinstance(instance, (CoordinateLattice, SideChain)):
        raise DomainError(f"unsupported instance type {type(instance).__name__}")
    confs = cardinality_vector(instance)
    counts, correction = _counts_and_correction(confs, encoding)
    return ResourceEstimate(
        qubits=qubit_count(confs, encoding),
        k_locality=k_locality(confs, encoding),
        interactions_by_order=counts,
        total_interactions=sum(counts.values()),
        two_qubit_gates=two_qubit_gate_count(counts),
        correction_subtracted=correction,
    )
