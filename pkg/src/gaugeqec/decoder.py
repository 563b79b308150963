"""Syndrome extraction and lookup-table recovery modulo the gauge group.

Recovery applies the stored coset representative for the measured syndrome;
success means the residual operator is a gauge transformation, failure means
it acts on the encoded qubits.  Syndromes outside the table are reported as
unrecoverable rather than silently mapped to identity.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from itertools import combinations, product

from .code import SubsystemCode, validated
from .distance import Kind, OperatorClass, _tables
from .pauli import PauliOp, identity, multiply, pauli_to_string, single


@dataclass(frozen=True)
class Syndrome:
    """Stabilizer measurement outcomes; bit j set means generator j read -1."""

    width: int
    bits: int

    def __str__(self) -> str:
        return "".join("1" if (self.bits >> j) & 1 else "0" for j in range(self.width))

    def outcomes(self) -> tuple[int, ...]:
        return tuple(-1 if (self.bits >> j) & 1 else 1 for j in range(self.width))

    @property
    def trivial(self) -> bool:
        return self.bits == 0


class Outcome(enum.Enum):
    GAUGE_SUCCESS = "gauge_success"
    LOGICAL_FAILURE = "logical_failure"
    UNRECOVERABLE = "unrecoverable"


@dataclass(frozen=True)
class Recovery:
    outcome: Outcome
    logical_class: OperatorClass | None = None
    residual: PauliOp | None = None


@dataclass(frozen=True)
class DecodingTable:
    """Map from syndrome bits to a minimum-weight coset representative."""

    code: SubsystemCode
    t: int
    entries: dict[int, PauliOp]

    def __post_init__(self) -> None:
        object.__setattr__(self, "entries", dict(self.entries))

    def __len__(self) -> int:
        return len(self.entries)

    def dump(self) -> str:
        """One line per entry: '<syndrome bits> <pauli string>', sorted."""
        width = self.code.s
        lines = []
        for bits, rep in self.entries.items():
            key = "".join("1" if (bits >> j) & 1 else "0" for j in range(width))
            lines.append(f"{key} {pauli_to_string(rep)}")
        return "\n".join(sorted(lines)) + "\n"


def syndrome(code: SubsystemCode, e: PauliOp) -> Syndrome:
    """Commutation pattern of ``e`` against the stabilizer generators."""
    c = validated(code)
    if e.n != c.n:
        raise ValueError(f"error is on {e.n} qubits, code has {c.n}")
    return Syndrome(c.s, _tables(c).syndrome_bits(e.vec))


def _errors_by_weight(n: int, t: int):
    """All phase-free Paulis of weight 0..t, lowest weight first.

    Within one weight the order is lexicographic in (qubit indices, letters
    with X < Y < Z), which fixes the representative chosen for each syndrome.
    """
    yield identity(n)
    for w in range(1, t + 1):
        for qubits in combinations(range(n), w):
            for letters in product("XYZ", repeat=w):
                e = identity(n)
                for q, letter in zip(qubits, letters):
                    e = multiply(e, single(n, q, letter))
                yield e


def build_table(code: SubsystemCode, t: int) -> DecodingTable:
    """Tabulate the first (minimum-weight) error seen for every syndrome."""
    c = validated(code)
    if t < 0:
        raise ValueError("max corrected weight must be >= 0")
    if t > c.n:
        raise ValueError(f"max corrected weight {t} exceeds {c.n} qubits")
    tables = _tables(c)
    entries: dict[int, PauliOp] = {}
    for e in _errors_by_weight(c.n, t):
        entries.setdefault(tables.syndrome_bits(e.vec), e)
    return DecodingTable(c, t, entries)


def recover_and_classify(
    code: SubsystemCode, table: DecodingTable, e: PauliOp
) -> Recovery:
    """Look up the syndrome, apply the representative, classify the residual."""
    c = validated(code)
    if table.code != c:
        raise ValueError("decoding table was built for a different code")
    if e.n != c.n:
        raise ValueError(f"error is on {e.n} qubits, code has {c.n}")
    tables = _tables(c)
    rep = table.entries.get(tables.syndrome_bits(e.vec))
    if rep is None:
        return Recovery(Outcome.UNRECOVERABLE)
    residual = multiply(rep, e)
    cls = tables.classify_vec(residual.vec)
    # equal syndromes force the residual back into the normalizer
    assert cls.kind is not Kind.OUTSIDE_N
    if cls.kind is Kind.GAUGE:
        return Recovery(Outcome.GAUGE_SUCCESS, residual=residual)
    return Recovery(Outcome.LOGICAL_FAILURE, logical_class=cls, residual=residual)
