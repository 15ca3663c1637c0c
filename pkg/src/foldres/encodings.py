"""Integer-to-bitstring codecs for the three conformation encodings.

Three schemes map a conformation index ``r`` in ``[0, c)`` onto qubits:

* ``unary``: one qubit per conformation, a single 1 at position ``r``
  (leftmost bit is position 0).
* ``binary``: ``r`` written MSB-first in ``ceil(log2 c)`` bits.
* ``bubinary`` (block-unary-binary): a one-hot choice among blocks of
  capacity ``g``, with the value written in binary inside the active
  block.  Block ``r // g`` is counted from the right end of the string,
  and the active block holds ``(r mod g) + 1`` in ``ceil(log2(g+1))``
  bits, so an all-zero block always means "inactive".

With ``g = 1`` the block scheme degenerates to unary: one 1-bit block
per conformation.  With ``g`` at or above ``c`` it approaches binary
with the all-zero word unused.

Decoding is total: every bitstring of the right length either decodes
to exactly one conformation or is reported infeasible (``None``), which
lets the feasibility module enumerate whole solution spaces.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DomainError

SCHEMES = ("unary", "binary", "bubinary")


@dataclass(frozen=True)
class Encoding:
    """A conformation encoding scheme plus its block-size parameter.

    ``g`` is meaningful only for ``bubinary`` and is stored as 1 for the
    other schemes.
    """

    scheme: str
    g: int = 1

    def __post_init__(self) -> None:
        if self.scheme not in SCHEMES:
            raise DomainError(f"unknown encoding scheme {self.scheme!r}")
        if self.g < 1:
            raise DomainError(f"block size g must be >= 1, got {self.g}")
        if self.scheme != "bubinary" and self.g != 1:
            object.__setattr__(self, "g", 1)

    @property
    def block_bits(self) -> int:
        """Qubits per block, ceil(log2(g+1)).  Only used by bubinary."""
        return self.g.bit_length()

    def __str__(self) -> str:
        if self.scheme == "bubinary":
            return f"bubinary(g={self.g})"
        return self.scheme


UNARY = Encoding("unary")
BINARY = Encoding("binary")


def bubinary(g: int) -> Encoding:
    return Encoding("bubinary", g)


def parse_encoding(name: str, g: int = 3) -> Encoding:
    name = name.lower()
    if name == "bubinary":
        return bubinary(g)
    return Encoding(name)


@dataclass(frozen=True)
class Codeword:
    """A bitstring together with the capacity it was encoded against."""

    bits: str
    capacity: int


def binary_bits(c: int) -> int:
    """ceil(log2 c); 0 for c = 1."""
    return (c - 1).bit_length()


def block_count(c: int, g: int) -> int:
    """Number of blocks needed for c values with block capacity g."""
    return -(-c // g)


def code_length(encoding: Encoding, c: int) -> int:
    """Qubits needed to encode one variable with ``c`` conformations.

    ``c = 1`` yields a zero-length binary code; callers must tolerate
    zero-width codewords.
    """
    if c < 1:
        raise DomainError(f"capacity must be >= 1, got {c}")
    if encoding.scheme == "unary":
        return c
    if encoding.scheme == "binary":
        return binary_bits(c)
    return block_count(c, encoding.g) * encoding.block_bits


def encode_integer(r: int, encoding: Encoding, c: int) -> Codeword:
    """Encode conformation index ``r`` (0-based, ``0 <= r < c``)."""
    if not 0 <= r < c:
        raise DomainError(f"value {r} out of range for capacity {c}")
    if encoding.scheme == "unary":
        bits = "0" * r + "1" + "0" * (c - r - 1)
    elif encoding.scheme == "binary":
        width = binary_bits(c)
        bits = format(r, f"0{width}b") if width else ""
    else:
        g, b = encoding.g, encoding.block_bits
        nblocks = block_count(c, g)
        k = r // g
        v = r % g + 1
        blocks = ["0" * b] * nblocks
        blocks[nblocks - 1 - k] = format(v, f"0{b}b")
        bits = "".join(blocks)
    return Codeword(bits, c)


def decode_codeword(bits: str, encoding: Encoding, c: int) -> int | None:
    """Invert :func:`encode_integer`; ``None`` for infeasible strings.

    Infeasible means: unary Hamming weight != 1, binary value >= c, or a
    block string without exactly one active block, an active value above
    the block capacity, or a decoded index >= c.
    """
    expected = code_length(encoding, c)
    if len(bits) != expected:
        raise DomainError(
            f"codeword length {len(bits)} != {expected} for {encoding}, c={c}"
        )
    if encoding.scheme == "unary":
        if bits.count("1") != 1:
            return None
        return bits.index("1")
    if encoding.scheme == "binary":
        r = int(bits, 2) if bits else 0
        return r if r < c else None
    g, b = encoding.g, encoding.block_bits
    nblocks = block_count(c, g)
    active = [
        (k, int(bits[(nblocks - 1 - k) * b : (nblocks - k) * b], 2))
        for k in range(nblocks)
    ]
    active = [(k, v) for k, v in active if v]
    if len(active) != 1:
        return None
    k, v = active[0]
    if v > g:
        return None
    r = k * g + v - 1
    return r if r < c else None
