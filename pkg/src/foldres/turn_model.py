"""Resource counting for the turn-based lattice model.

The turn model stores each bead's direction of travel instead of its
coordinates.  That keeps the conformation register small but moves the
complexity into the constraint machinery:

* distance registers: for every bead pair at even chain separation of
  at least 4 (the pairs that can collide on a bipartite lattice), an
  auxiliary register wide enough to hold the squared distance plus a
  slack variable enforcing distance >= 1;
* contact flags: one auxiliary qubit per pair at odd separation of at
  least 3 (the pairs that can be lattice neighbors);
* a back-turn penalty whose term count is 11*(2N-10) on the square
  lattice and 20*(N-5) on the cubic lattice;
* the squared overlap penalty, expanded operator by operator into five
  interaction classes with fixed localities per encoding.

The per-pair distance register width is ceil(2u) with u the width of
one distance value: u = d for unary, log2(d) for binary, and
ceil(d/g)*ceil(log2(g+1)) for block encodings, where d is the chain
separation.

Conformation registers hold 2*dim*N qubits under unary and dim*N - c1
under binary, where c1 defaults to 3*dim - 1: fixing the first bead,
the second bead's direction, and half of the third bead's turn removes
that many free qubits.  The default can be overridden for sensitivity
checks.  Block encodings use ceil(log2(g+1)) * ceil(N*dim/g).

Totals here follow the literal counting rules above.  Empty summation
ranges at small N evaluate to zero rather than erroring, but N < 4 is
rejected outright since no constrained pair exists.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import ceil, comb, log2

from .encodings import Encoding
from .errors import DomainError


@dataclass(frozen=True)
class OperatorClass:
    """One family of Hamiltonian terms: how many and how local."""

    name: str
    count: int
    locality: int

    @property
    def two_qubit_gates(self) -> int:
        return self.count * 2 * (self.locality - 1)


@dataclass(frozen=True)
class TurnResourceBreakdown:
    conformation_qubits: int
    aux_dist_qubits: int
    aux_pair_qubits: int
    total_qubits: int
    hback_terms: int
    hback_locality: int
    operator_classes: tuple[OperatorClass, ...] = field(default_factory=tuple)
    total_interactions: int = 0
    k_locality: int = 0
    two_qubit_gates: int = 0


def _require_chain(n: int) -> None:
    if n < 4:
        raise DomainError("turn model needs n >= 4 (no constrained pairs below)")


def conformation_qubits(
    n: int, dim: int, encoding: Encoding, c1_override: int | None = None
) -> int:
    _require_chain(n)
    if dim not in (2, 3):
        raise DomainError("lattice dimension must be 2 or 3")
    if encoding.scheme == "unary":
        return 2 * dim * n
    if encoding.scheme == "binary":
        c1 = (3 * dim - 1) if c1_override is None else c1_override
        return dim * n - c1
    return encoding.block_bits * ceil(n * dim / encoding.g)


def _dist_register_width(d: int, encoding: Encoding) -> int:
    if encoding.scheme == "unary":
        u: float = d
    elif encoding.scheme == "binary":
        u = log2(d)
    else:
        u = ceil(d / encoding.g) * encoding.block_bits
    return ceil(2 * u)


def aux_dist_qubits(n: int, encoding: Encoding) -> int:
    """Distance-register qubits summed over even-separation pairs."""
    _require_chain(n)
    total = 0
    for i in range(n - 4):
        for j in range(i + 4, n):
            if (j - i) % 2 == 0:
                total += _dist_register_width(j - i, encoding)
    return total


def aux_pair_qubits(n: int) -> int:
    """Contact-flag qubits: one per odd-separation pair at distance >= 3."""
    _require_chain(n)
    return sum(
        1
        for j in range(n - 3)
        for k in range(j + 3, n)
        if (k - j) % 2 == 1
    )


def hback_terms(n: int, dim: int) -> int:
    _require_chain(n)
    if dim == 3:
        return 20 * max(n - 5, 0)
    if dim == 2:
        return 11 * max(2 * n - 10, 0)
    raise DomainError("lattice dimension must be 2 or 3")


def overlap_and_pair_classes(
    n: int, dim: int, encoding: Encoding
) -> tuple[OperatorClass, ...]:
    """Interaction classes from the squared overlap penalty plus the
    contact-mediated pair energy."""
    _require_chain(n)
    m_dist = aux_dist_qubits(n, encoding)
    m_pair = aux_pair_qubits(n)
    pairs = comb(n, 2)
    unary = encoding.scheme == "unary"
    dist_sq_loc = 4 if unary else 4 * (dim - 1)
    cross_loc = 3 if unary else 2 * (dim - 1) + 1
    return (
        OperatorClass("dist_squared", comb(pairs, 2), dist_sq_loc),
        OperatorClass("slack_squared", comb(m_dist, 2), 2),
        OperatorClass("dist_slack_cross", pairs * m_dist, cross_loc),
        OperatorClass("slack_linear", m_dist, 1),
        OperatorClass("pair_contact", pairs * m_pair, cross_loc),
    )


def hback_locality(dim: int, encoding: Encoding) -> int:
    return 2 if encoding.scheme == "unary" else 2 * dim


def turn_estimate(
    n: int, dim: int, encoding: Encoding, c1_override: int | None = None
) -> TurnResourceBreakdown:
    """Assemble the full turn-model breakdown for one chain length."""
    _require_chain(n)
    conf = conformation_qubits(n, dim, encoding, c1_override)
    m_dist = aux_dist_qubits(n, encoding)
    m_pair = aux_pair_qubits(n)
    classes = overlap_and_pair_classes(n, dim, encoding)
    hback = hback_terms(n, dim)
    hb_loc = hback_locality(dim, encoding)

    localities = [cls.locality for cls in classes if cls.count]
    if hback:
        localities.append(hb_loc)
    gates = sum(cls.two_qubit_gates for cls in classes)
    gates += hback * 2 * (hb_loc - 1)

    return TurnResourceBreakdown(
        conformation_qubits=conf,
        aux_dist_qubits=m_dist,
        aux_pair_qubits=m_pair,
        total_qubits=conf + m_dist + m_pair,
        hback_terms=hback,
        hback_locality=hb_loc,
        operator_classes=classes,
        total_interactions=hback + sum(cls.count for cls in classes),
        k_locality=max(localities, default=0),
        two_qubit_gates=gates,
    )
