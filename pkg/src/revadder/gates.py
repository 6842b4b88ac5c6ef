"""Reversible gates stored as permutation tables.

A k-line gate is a bijection on {0,1}^k. Words are encoded MSB-first: the
first port of a gate (``A``) is the most significant bit, so ascending
integer order is the usual truth-table row order.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable, Iterator, Sequence, Union

from .errors import (
    LengthMismatch,
    NotBijective,
    UnknownGate,
    ValueOutOfRange,
    WidthMismatch,
)

MAX_ARITY = 8


@dataclass(frozen=True)
class BitWord:
    """A fixed-width bit vector; position 0 is the most significant bit."""

    width: int
    value: int

    def __post_init__(self):
        if not 1 <= self.width <= MAX_ARITY:
            raise ValueOutOfRange(f"width {self.width} not in 1..{MAX_ARITY}")
        if not 0 <= self.value < (1 << self.width):
            raise ValueOutOfRange(f"value {self.value} does not fit in {self.width} bits")

    @classmethod
    def from_bits(cls, bits: Iterable[int]) -> "BitWord":
        bits = tuple(bits)
        value = 0
        for b in bits:
            if b not in (0, 1):
                raise ValueOutOfRange(f"bit value {b!r} is not 0 or 1")
            value = (value << 1) | b
        return cls(len(bits), value)

    @classmethod
    def parse(cls, text: str) -> "BitWord":
        """Build a word from a string such as ``"0101"``."""
        return cls.from_bits(int(ch) for ch in text if ch in "01")

    @property
    def bits(self) -> tuple[int, ...]:
        return tuple((self.value >> (self.width - 1 - i)) & 1 for i in range(self.width))

    def __iter__(self) -> Iterator[int]:
        return iter(self.bits)

    def __getitem__(self, i: int) -> int:
        return self.bits[i]

    def __len__(self) -> int:
        return self.width

    def __str__(self) -> str:
        return format(self.value, f"0{self.width}b")


WordLike = Union[BitWord, Sequence[int], str]


def _as_word(word: WordLike) -> BitWord:
    if isinstance(word, BitWord):
        return word
    if isinstance(word, str):
        return BitWord.parse(word)
    return BitWord.from_bits(word)


@dataclass(frozen=True)
class TlcTriple:
    """Total logical calculation: counts of 2-input XOR, 2-input AND and NOT."""

    alpha: int = 0
    beta: int = 0
    delta: int = 0

    def __add__(self, other: "TlcTriple") -> "TlcTriple":
        return TlcTriple(self.alpha + other.alpha, self.beta + other.beta, self.delta + other.delta)

    def __mul__(self, k: int) -> "TlcTriple":
        return TlcTriple(self.alpha * k, self.beta * k, self.delta * k)

    __rmul__ = __mul__

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.alpha, self.beta, self.delta)

    def __str__(self) -> str:
        return f"{self.alpha}a+{self.beta}b+{self.delta}d"


@dataclass(frozen=True)
class CostProfile:
    alpha: int = 0
    beta: int = 0
    delta: int = 0
    # metadata only, never used in computation
    transistor_count: int | None = None
    unit_delay: int = 1

    def __post_init__(self):
        for name in ("alpha", "beta", "delta", "unit_delay"):
            if getattr(self, name) < 0:
                raise ValueOutOfRange(f"{name} must be non-negative")
        if self.transistor_count is not None and self.transistor_count < 0:
            raise ValueOutOfRange("transistor_count must be non-negative")

    @property
    def tlc(self) -> TlcTriple:
        return TlcTriple(self.alpha, self.beta, self.delta)


@dataclass(frozen=True, eq=False)
class GateDefinition:
    """An immutable reversible gate. Build with :func:`make_gate`."""

    name: str
    arity: int
    mapping: tuple[int, ...]
    inverse_mapping: tuple[int, ...]
    cost: CostProfile = CostProfile()

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GateDefinition):
            return NotImplemented
        return (self.name, self.arity, self.mapping) == (other.name, other.arity, other.mapping)

    def __hash__(self) -> int:
        return hash((self.name, self.arity, self.mapping))

    def _check(self, word: BitWord) -> None:
        if word.width != self.arity:
            raise WidthMismatch(f"{self.name} takes {self.arity} bits, got {word.width}")

    def forward(self, word: WordLike) -> BitWord:
        word = _as_word(word)
        self._check(word)
        return BitWord(self.arity, self.mapping[word.value])

    def backward(self, word: WordLike) -> BitWord:
        word = _as_word(word)
        self._check(word)
        return BitWord(self.arity, self.inverse_mapping[word.value])

    def is_self_inverse(self) -> bool:
        return self.mapping == self.inverse_mapping

    def __repr__(self) -> str:
        return f"GateDefinition({self.name!r}, arity={self.arity})"


def make_gate(
    name: str, arity: int, mapping: Sequence[int], cost: CostProfile | None = None
) -> GateDefinition:
    """Validate ``mapping`` as a permutation of ``range(2**arity)`` and wrap it.

    Raises :class:`NotBijective` naming the first colliding pair of inputs.
    """
    if not 1 <= arity <= MAX_ARITY:
        raise ValueOutOfRange(f"arity {arity} not in 1..{MAX_ARITY}")
    size = 1 << arity
    if len(mapping) != size:
        raise LengthMismatch(f"{name}: expected {size} rows, got {len(mapping)}")
    inverse = [-1] * size
    for x, y in enumerate(mapping):
        if not 0 <= y < size:
            raise ValueOutOfRange(f"{name}: row {x} maps to {y}, outside 0..{size - 1}")
        if inverse[y] >= 0:
            raise NotBijective(inverse[y], x, y, arity)
        inverse[y] = x
    return GateDefinition(name, arity, tuple(int(y) for y in mapping), tuple(inverse), cost or CostProfile())


def gate_from_function(
    name: str, arity: int, fn: Callable[..., Sequence[int]], cost: CostProfile | None = None
) -> GateDefinition:
    """Tabulate a bitwise output function ``fn(*input_bits) -> output_bits``."""
    mapping = []
    for x in range(1 << arity):
        bits = BitWord(arity, x).bits
        mapping.append(BitWord.from_bits(v & 1 for v in fn(*bits)).value)
    return make_gate(name, arity, mapping, cost)


def invert(gate: GateDefinition) -> GateDefinition:
    """Return the gate computing the inverse permutation.

    Self-inverse gates are returned unchanged; otherwise the name gets a
    ``"'"`` suffix (or loses it when inverting an inverse).
    """
    if gate.is_self_inverse():
        return gate
    name = gate.name[:-1] if gate.name.endswith("'") else gate.name + "'"
    return GateDefinition(name, gate.arity, gate.inverse_mapping, gate.mapping, gate.cost)


def identity(arity: int, name: str | None = None) -> GateDefinition:
    return make_gate(name or f"ID{arity}", arity, list(range(1 << arity)))


def truth_table(gate: GateDefinition) -> list[tuple[BitWord, BitWord]]:
    return [
        (BitWord(gate.arity, x), BitWord(gate.arity, y)) for x, y in enumerate(gate.mapping)
    ]


# Rows of the Inventive0 truth table, inputs ABCD ascending -> outputs PQRS.
INV0_TABLE = (
    0b0001, 0b0010, 0b1100, 0b1111,
    0b0100, 0b0111, 0b1010, 0b1001,
    0b0101, 0b0110, 0b1011, 0b1000,
    0b0011, 0b0000, 0b1110, 0b1101,
)


def _build_catalog() -> dict[str, GateDefinition]:
    catalog = [
        gate_from_function(
            "FG", 2, lambda a, b: (a, a ^ b), CostProfile(1, 0, 0, transistor_count=8)
        ),
        gate_from_function(
            "F2G", 3, lambda a, b, c: (a, a ^ b, a ^ c), CostProfile(2, 0, 0)
        ),
        gate_from_function(
            "FRG",
            3,
            lambda a, b, c: (a, (1 - a) & b | a & c, a & b | (1 - a) & c),
            CostProfile(2, 4, 2, transistor_count=4),
        ),
        gate_from_function(
            "TG", 3, lambda a, b, c: (a, b, a & b ^ c), CostProfile(1, 1, 0, transistor_count=6)
        ),
        gate_from_function(
            "HNG",
            4,
            lambda a, b, c, d: (a, b, a ^ b ^ c, (a ^ b) & c ^ a & b ^ d),
            CostProfile(5, 2, 0),
        ),
        make_gate("INV0", 4, INV0_TABLE, CostProfile(5, 4, 8)),
    ]
    return {g.name: g for g in catalog}


CATALOG: dict[str, GateDefinition] = _build_catalog()


def builtin(name: str) -> GateDefinition:
    """Look up a catalog gate: FG, F2G, FRG, TG, HNG or INV0."""
    try:
        return CATALOG[name.upper()]
    except KeyError:
        raise UnknownGate(f"unknown gate {name!r}; known: {', '.join(CATALOG)}") from None


def resolve(name: str) -> GateDefinition:
    """Like :func:`builtin` but also accepts inverse names (``"INV0'"``)."""
    if name.endswith("'"):
        return invert(builtin(name[:-1]))
    return builtin(name)
