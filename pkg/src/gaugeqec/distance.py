"""Operator classification, code distance and correctability of error sets.

Any Pauli falls into exactly one of three classes against a valid code: it
anticommutes with some stabilizer generator, or it lies in the gauge group,
or it acts nontrivially on the encoded qubits.  The distance is the minimum
weight over the third class.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from . import gf2
from .code import SubsystemCode, validated
from .pauli import PauliOp, multiply, swap_halves, vec_weight
from .tableau import centralizer_basis

DEFAULT_BUDGET = 1 << 30


class BudgetExceededError(RuntimeError):
    """The enumeration would visit more elements than the configured cap."""


class Kind(enum.Enum):
    OUTSIDE_N = "outside_normalizer"
    GAUGE = "gauge"
    LOGICAL = "logical"


@dataclass(frozen=True)
class OperatorClass:
    kind: Kind
    # For logical operators: coefficients on (x1, z1, x2, z2, ...) mod gauge.
    label: tuple[int, ...] = ()

    def label_str(self) -> str:
        if self.kind is not Kind.LOGICAL:
            return self.kind.value
        letters = {(1, 0): "X", (0, 1): "Z", (1, 1): "Y", (0, 0): "I"}
        parts = []
        k = len(self.label) // 2
        for j in range(k):
            letter = letters[self.label[2 * j], self.label[2 * j + 1]]
            if letter != "I":
                parts.append(letter if k == 1 else f"{letter}{j + 1}")
        return "".join(parts)


@dataclass(frozen=True)
class CorrectabilityResult:
    correctable: bool
    witness: tuple[PauliOp, PauliOp] | None = None
    witness_class: OperatorClass | None = None


class _Tables:
    """Per-code precomputation shared by the classify/decode hot paths."""

    __slots__ = (
        "code", "n", "swapped_stab", "gauge_elim", "normalizer_matrix",
        "logical_offset",
    )

    def __init__(self, code: SubsystemCode):
        self.code = code
        self.n = code.n
        self.swapped_stab = tuple(swap_halves(g.vec, code.n) for g in code.stabilizer)
        self.gauge_elim = gf2.Eliminator(g.vec for g in code.group_generators())
        rows = tuple(op.vec for op in code.normalizer_generators())
        self.normalizer_matrix = gf2.BinMatrix(2 * code.n, rows)
        self.logical_offset = code.s + 2 * code.r

    def syndrome_bits(self, vec: int) -> int:
        bits = 0
        for i, sw in enumerate(self.swapped_stab):
            if (vec & sw).bit_count() & 1:
                bits |= 1 << i
        return bits

    def classify_vec(self, vec: int) -> OperatorClass:
        if self.syndrome_bits(vec):
            return OperatorClass(Kind.OUTSIDE_N)
        if self.gauge_elim.contains(vec):
            return OperatorClass(Kind.GAUGE)
        comb = gf2.solve_membership(self.normalizer_matrix, vec)
        assert comb is not None, "commuting operator must lie in the normalizer span"
        label = tuple(
            (comb >> (self.logical_offset + i)) & 1 for i in range(2 * self.code.k)
        )
        return OperatorClass(Kind.LOGICAL, label)


@lru_cache(maxsize=256)
def _tables(code: SubsystemCode) -> _Tables:
    return _Tables(code)


def classify(code: SubsystemCode, p: PauliOp) -> OperatorClass:
    c = validated(code)
    if p.n != c.n:
        raise ValueError(f"operator is on {p.n} qubits, code has {c.n}")
    return _tables(c).classify_vec(p.vec)


def _gray_walk(start: int, rows: Sequence[int]):
    """Yield start XOR every combination of rows, one row flip per step."""
    v = start
    yield v
    for i in range(1, 1 << len(rows)):
        v ^= rows[(i & -i).bit_length() - 1]
        yield v


def distance(
    code: SubsystemCode,
    method: str = "coset",
    budget: int = DEFAULT_BUDGET,
) -> int:
    """Minimum weight of a normalizer element outside the gauge group.

    ``exhaustive`` walks the whole centralizer row space; ``coset`` walks the
    gauge-group cosets of each nontrivial logical class.  Both enumerations
    use a Gray-code order so every step is one XOR plus a popcount.
    """
    c = validated(code)
    if c.k == 0:
        raise ValueError("distance is undefined for a code with no logical qubits")
    tables = _tables(c)
    n = c.n
    best = 2 * n  # above any weight

    if method == "exhaustive":
        basis = [op.vec for op in centralizer_basis(n, c.stabilizer)]
        if 1 << len(basis) > budget:
            raise BudgetExceededError(
                f"2^{len(basis)} centralizer elements exceed the budget {budget}"
            )
        for v in _gray_walk(0, basis):
            if v == 0:
                continue
            w = vec_weight(v, n)
            if w < best and not tables.gauge_elim.contains(v):
                best = w
                if best == 1:
                    break
    elif method == "coset":
        group_rows = [op.vec for op in c.group_generators()]
        logical_rows = [op.vec for op in c.logical_ops()]
        classes = (1 << len(logical_rows)) - 1
        if classes * (1 << len(group_rows)) > budget:
            raise BudgetExceededError(
                f"{classes} classes x 2^{len(group_rows)} gauge elements exceed the budget {budget}"
            )
        done = False
        for label in range(1, classes + 1):
            offset = 0
            for i in range(len(logical_rows)):
                if (label >> i) & 1:
                    offset ^= logical_rows[i]
            for v in _gray_walk(offset, group_rows):
                w = vec_weight(v, n)
                if w < best:
                    best = w
                    if best == 1:
                        done = True
                        break
            if done:
                break
    else:
        raise ValueError(f"unknown method {method!r}; use 'exhaustive' or 'coset'")
    return best


def is_correctable_set(
    code: SubsystemCode, errors: Sequence[PauliOp]
) -> CorrectabilityResult:
    """Pairwise product test: no product of two errors may act logically.

    Products landing outside the normalizer or inside the gauge group are
    harmless; the first pair whose product classifies as logical is returned
    as a witness.
    """
    c = validated(code)
    if not errors:
        raise ValueError("empty error set")
    tables = _tables(c)
    for i in range(len(errors)):
        for j in range(i, len(errors)):
            # i == j gives the identity (mod phase), which is always gauge
            prod = multiply(errors[i], errors[j])
            cls = tables.classify_vec(prod.vec)
            if cls.kind is Kind.LOGICAL:
                return CorrectabilityResult(False, (errors[i], errors[j]), cls)
    return CorrectabilityResult(True)
