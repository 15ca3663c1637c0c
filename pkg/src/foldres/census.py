"""Brute-force census of Hamiltonian terms, independent of the closed forms.

The estimator in :mod:`foldres.resources` counts interaction terms with
combinatorial formulas.  This module recomputes the same counts the hard
way: it builds the dense pairwise energy symbolically, expands every
term into spin monomials, and counts the distinct monomial supports per
order.  Agreement between the two is the package's primary correctness
gate for the closed forms and their duplicate-term corrections.

Construction of the energy, per encoding:

* every residue pair (i, j) and every value pair (r_i, r_j) contributes
  one term with its own independent symbolic coefficient, so no two
  terms can cancel each other;
* unary terms touch the two chosen indicator qubits; binary terms
  constrain every bit of both residues to the value pair's pattern;
  block terms constrain every bit of the two active blocks;
* one-per-residue validity penalties are added where the scheme needs
  them: ``(sum_a x_a - 1)^2`` over the indicator qubits for unary, and
  the same form over block-activity indicators for block encodings
  (a block is active when its bits are not all zero).

Each term is expanded exactly (Fraction coefficients) in the spin basis,
where ``x -> (1 - z)/2`` and squares of spins collapse via symmetric
difference of supports.  A support is counted when any term gives it a
structurally non-vanishing coefficient.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .encodings import Encoding, code_length
from .errors import DomainError
from .instances import CardinalityVector
from .resources import interaction_counts, qubit_count

SpinPoly = dict[int, Fraction]

_HALF = Fraction(1, 2)


def _poly_mul(p: SpinPoly, q: SpinPoly) -> SpinPoly:
    out: SpinPoly = {}
    for s1, c1 in p.items():
        for s2, c2 in q.items():
            key = s1 ^ s2
            val = out.get(key, 0) + c1 * c2
            if val:
                out[key] = val
            elif key in out:
                del out[key]
    return out


def _bit_factor(index: int, value: int) -> SpinPoly:
    # x -> (1 - z)/2 when the bit must be 1, (1 + z)/2 when it must be 0
    return {0: _HALF, 1 << index: -_HALF if value else _HALF}


def _pattern_poly(bit_values: list[tuple[int, int]]) -> SpinPoly:
    poly: SpinPoly = {0: Fraction(1)}
    for index, value in bit_values:
        poly = _poly_mul(poly, _bit_factor(index, value))
    return poly


@dataclass(frozen=True)
class MonomialCensus:
    counts_by_order: dict[int, int]
    qubit_count: int

    @property
    def total(self) -> int:
        return sum(self.counts_by_order.values())


@dataclass(frozen=True)
class CensusComparison:
    matches: bool
    first_divergent_order: int | None = None
    census_count: int | None = None
    estimate_count: int | None = None


def _value_pattern(
    residue_offset: int, r: int, c: int, encoding: Encoding
) -> list[tuple[int, int]]:
    """Constrained (qubit index, bit) pairs selecting value r."""
    if encoding.scheme == "unary":
        return [(residue_offset + r, 1)]
    if encoding.scheme == "binary":
        width = code_length(encoding, c)
        return [
            (residue_offset + pos, (r >> (width - 1 - pos)) & 1)
            for pos in range(width)
        ]
    g, b = encoding.g, encoding.block_bits
    nblocks = code_length(encoding, c) // b
    block = r // g
    value = r % g + 1
    base = residue_offset + (nblocks - 1 - block) * b
    return [(base + pos, (value >> (b - 1 - pos)) & 1) for pos in range(b)]


def _one_per_residue_penalty(
    residue_offset: int, c: int, encoding: Encoding
) -> SpinPoly | None:
    """(sum of activity indicators - 1)^2, expanded; None where unneeded."""
    if encoding.scheme == "binary":
        return None
    acc: SpinPoly = {0: Fraction(-1)}
    if encoding.scheme == "unary":
        activities = [_pattern_poly([(residue_offset + a, 1)]) for a in range(c)]
    else:
        g, b = encoding.g, encoding.block_bits
        nblocks = code_length(encoding, c) // b
        activities = []
        for block in range(nblocks):
            base = residue_offset + block * b
            all_zero = _pattern_poly([(base + pos, 0) for pos in range(b)])
            active = {s: -coef for s, coef in all_zero.items()}
            active[0] = active.get(0, Fraction(0)) + 1
            activities.append(active)
    for poly in activities:
        for support, coef in poly.items():
            val = acc.get(support, Fraction(0)) + coef
            if val:
                acc[support] = val
            elif support in acc:
                del acc[support]
    return _poly_mul(acc, acc)


def census_dense_pairwise(
    confs: CardinalityVector, encoding: Encoding, qubit_cap: int = 24
) -> MonomialCensus:
    """Census the dense pairwise energy over encoded variables."""
    if len(confs) < 2:
        raise DomainError("census needs at least two residues")
    total_bits = qubit_count(confs, encoding)
    if total_bits > qubit_cap:
        raise DomainError(
            f"census needs {total_bits} qubits, cap is {qubit_cap}"
        )
    offsets = []
    offset = 0
    for c in confs:
        offsets.append(offset)
        offset += code_length(encoding, c)

    value_polys: list[list[SpinPoly]] = [
        [
            _pattern_poly(_value_pattern(offsets[i], r, c, encoding))
            for r in range(c)
        ]
        for i, c in enumerate(confs)
    ]

    supports: set[int] = set()
    n = len(confs)
    for i in range(n):
        for j in range(i + 1, n):
            for pi in value_polys[i]:
                masks_i = [s for s, coef in pi.items() if coef]
                for pj in value_polys[j]:
                    # residues occupy disjoint qubits, so the product's
                    # supports are unions and no coefficients can collide
                    for sj, coef in pj.items():
                        if coef:
                            supports.update(si | sj for si in masks_i)
    for i, c in enumerate(confs):
        penalty = _one_per_residue_penalty(offsets[i], c, encoding)
        if penalty:
            supports.update(s for s, coef in penalty.items() if coef)
    supports.discard(0)

    counts: dict[int, int] = {}
    for support in supports:
        order = support.bit_count()
        counts[order] = counts.get(order, 0) + 1
    return MonomialCensus(counts_by_order=counts, qubit_count=total_bits)


def census_equals_estimate(
    confs: CardinalityVector, encoding: Encoding, qubit_cap: int = 24
) -> CensusComparison:
    """Compare the census against the closed-form per-order counts."""
    census = census_dense_pairwise(confs, encoding, qubit_cap)
    expected = interaction_counts(confs, encoding)
    orders = sorted(set(census.counts_by_order) | set(expected))
    for order in orders:
        got = census.counts_by_order.get(order, 0)
        want = expected.get(order, 0)
        if got != want:
            return CensusComparison(
                matches=False,
                first_divergent_order=order,
                census_count=got,
                estimate_count=want,
            )
    return CensusComparison(matches=True)
