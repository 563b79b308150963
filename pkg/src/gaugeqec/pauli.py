"""Phased n-qubit Pauli operators in binary-symplectic form.

An operator is ``i**phase_exp * prod_j X_j**x_j * Z_j**z_j`` with the X
factor to the left of the Z factor on every qubit, so Y = iXZ contributes
x_j = z_j = 1 and +1 to the phase exponent.  ``x`` and ``z`` are packed
little-endian: bit j covers qubit j, matching the leftmost character of the
IXYZ string form.

Commutation, weight and group membership never look at the phase; the phase
exponent only matters for exact products and for stabilizer sign checks.
"""

from __future__ import annotations

from dataclasses import dataclass

_LETTER_BITS = {"I": (0, 0, 0), "X": (1, 0, 0), "Y": (1, 1, 1), "Z": (0, 1, 0)}
_BITS_LETTER = {(0, 0): "I", (1, 0): "X", (1, 1): "Y", (0, 1): "Z"}
_SIGN_PREFIX = {0: "", 1: "+i", 2: "-", 3: "-i"}


class PauliFormatError(ValueError):
    """Bad Pauli string; ``position`` is the 1-based offending index."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (position {position})")
        self.position = position


@dataclass(frozen=True)
class PauliOp:
    """A phased Pauli operator on ``n`` qubits."""

    n: int
    phase_exp: int
    x: int
    z: int

    def __post_init__(self) -> None:
        mask = (1 << self.n) - 1
        if self.n < 0:
            raise ValueError("negative qubit count")
        if not 0 <= self.phase_exp <= 3:
            raise ValueError("phase exponent must be in 0..3")
        if self.x < 0 or self.x & ~mask or self.z < 0 or self.z & ~mask:
            raise ValueError(f"x/z bits outside {self.n} qubits")

    @property
    def vec(self) -> int:
        """Symplectic (x|z) vector: x in bits 0..n-1, z in bits n..2n-1."""
        return self.x | (self.z << self.n)

    @property
    def weight(self) -> int:
        return (self.x | self.z).bit_count()

    @property
    def sign_exponent(self) -> int:
        """k with self == i**k * (positive Hermitian Pauli on the same bits)."""
        return (self.phase_exp - (self.x & self.z).bit_count()) % 4

    def is_identity(self) -> bool:
        return self.x == 0 and self.z == 0

    def __str__(self) -> str:
        return pauli_to_string(self)


def identity(n: int) -> PauliOp:
    return PauliOp(n, 0, 0, 0)


def hermitian(n: int, x: int, z: int) -> PauliOp:
    """The +1-signed Hermitian Pauli with the given bit pattern."""
    return PauliOp(n, (x & z).bit_count() % 4, x, z)


def from_vec(n: int, vec: int, phase_exp: int = 0) -> PauliOp:
    mask = (1 << n) - 1
    return PauliOp(n, phase_exp, vec & mask, vec >> n)


def single(n: int, qubit: int, letter: str) -> PauliOp:
    """One-qubit X, Y or Z embedded at ``qubit`` (0-based), positive sign."""
    xb, zb, ph = _LETTER_BITS[letter]
    return PauliOp(n, ph, xb << qubit, zb << qubit)


def pauli_from_string(s: str) -> PauliOp:
    """Parse an optional sign prefix (+, -, +i, -i) and IXYZ letters."""
    if s.startswith(("+i", "-i")):
        phase, k = (1, 2) if s[0] == "+" else (3, 2)
    elif s.startswith(("+", "-")):
        phase, k = (0, 1) if s[0] == "+" else (2, 1)
    else:
        phase, k = 0, 0
    letters = s[k:]
    if not letters:
        raise PauliFormatError("empty Pauli string", k + 1)
    x = z = 0
    for i, ch in enumerate(letters):
        try:
            xb, zb, ph = _LETTER_BITS[ch]
        except KeyError:
            raise PauliFormatError(f"invalid character {ch!r}", k + i + 1) from None
        x |= xb << i
        z |= zb << i
        phase += ph
    return PauliOp(len(letters), phase % 4, x, z)


def pauli_to_string(p: PauliOp) -> str:
    """Inverse of :func:`pauli_from_string`; positive operators get no prefix."""
    letters = "".join(
        _BITS_LETTER[(p.x >> j) & 1, (p.z >> j) & 1] for j in range(p.n)
    )
    return _SIGN_PREFIX[p.sign_exponent] + letters


def multiply(p: PauliOp, q: PauliOp) -> PauliOp:
    """Group product p*q; the phase picks up 2*(p.z . q.x) from ZX reordering."""
    if p.n != q.n:
        raise ValueError(f"qubit count mismatch: {p.n} != {q.n}")
    phase = (p.phase_exp + q.phase_exp + 2 * ((p.z & q.x).bit_count() & 1)) % 4
    return PauliOp(p.n, phase, p.x ^ q.x, p.z ^ q.z)


def inverse(p: PauliOp) -> PauliOp:
    square_phase = (2 * p.phase_exp + 2 * (p.x & p.z).bit_count()) % 4
    return PauliOp(p.n, (p.phase_exp - square_phase) % 4, p.x, p.z)


def symplectic_inner(p: PauliOp, q: PauliOp) -> int:
    if p.n != q.n:
        raise ValueError(f"qubit count mismatch: {p.n} != {q.n}")
    return ((p.x & q.z).bit_count() + (p.z & q.x).bit_count()) & 1


def commutes(p: PauliOp, q: PauliOp) -> bool:
    return symplectic_inner(p, q) == 0


def weight(p: PauliOp) -> int:
    return p.weight


# -- raw (x|z) vector helpers used by the enumeration-heavy modules --------


def swap_halves(vec: int, n: int) -> int:
    """Swap the x and z halves; symplectic product = parity(v & swap(w))."""
    mask = (1 << n) - 1
    return ((vec & mask) << n) | (vec >> n)


def vec_weight(vec: int, n: int) -> int:
    mask = (1 << n) - 1
    return ((vec | (vec >> n)) & mask).bit_count()


def vec_hermitian(n: int, vec: int) -> PauliOp:
    mask = (1 << n) - 1
    return hermitian(n, vec & mask, vec >> n)
