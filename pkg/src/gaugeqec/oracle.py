"""Dense-matrix ground truth for small qubit counts.

Everything here works on explicit 2^n x 2^n complex matrices and never
consults the symplectic machinery, so it can cross-check the group-theoretic
results independently.  Matrices are capped at n = 10; beyond that the
functions refuse instead of degrading.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from .code import SubsystemCode, validated
from .pauli import PauliOp

MAX_QUBITS = 10
TOL = 1e-10

_FACTORS = {
    (0, 0): np.eye(2, dtype=complex),
    (1, 0): np.array([[0, 1], [1, 0]], dtype=complex),
    (0, 1): np.array([[1, 0], [0, -1]], dtype=complex),
    (1, 1): np.array([[0, -1], [1, 0]], dtype=complex),  # X @ Z
}


def dense(p: PauliOp) -> np.ndarray:
    """Kronecker product of the single-qubit factors times i**phase_exp.

    Qubit 0 is the leftmost tensor factor.  The map is a multiplicative
    homomorphism: dense(multiply(p, q)) == dense(p) @ dense(q).
    """
    if p.n > MAX_QUBITS:
        raise ValueError(f"dense matrices are limited to {MAX_QUBITS} qubits")
    m = np.ones((1, 1), dtype=complex)
    for j in range(p.n):
        m = np.kron(m, _FACTORS[(p.x >> j) & 1, (p.z >> j) & 1])
    return (1j ** p.phase_exp) * m


@dataclass(frozen=True, eq=False)
class CodeProjector:
    code: SubsystemCode
    matrix: np.ndarray


@lru_cache(maxsize=8)
def code_projector(code: SubsystemCode) -> CodeProjector:
    """Projector onto the joint +1 eigenspace of the stabilizer generators."""
    c = validated(code)
    if c.n > MAX_QUBITS:
        raise ValueError(f"dense matrices are limited to {MAX_QUBITS} qubits")
    dim = 1 << c.n
    proj = np.eye(dim, dtype=complex)
    for g in c.stabilizer:
        proj = proj @ (np.eye(dim, dtype=complex) + dense(g)) / 2
    return CodeProjector(c, proj)


@dataclass
class OracleReport:
    ok: bool
    failures: list[str] = field(default_factory=list)
    max_residual: float = 0.0
    failing_pair: tuple[PauliOp, PauliOp] | None = None


def _comm_norm(a: np.ndarray, b: np.ndarray) -> float:
    return float(np.linalg.norm(a @ b - b @ a))


@lru_cache(maxsize=8)
def _logical_actions(code: SubsystemCode) -> tuple[np.ndarray, ...]:
    proj = code_projector(code).matrix
    return tuple(dense(op) @ proj for op in code.logical_ops())


def verify_subsystem_structure(code: SubsystemCode, tol: float = TOL) -> OracleReport:
    """Check that gauge and logical actions factorize over the code space.

    Every compressed gauge action must commute with every logical action and
    vice versa, and each logical pair must anticommute on the code space.
    """
    c = validated(code)
    proj = code_projector(c).matrix
    logical_actions = _logical_actions(c)
    report = OracleReport(ok=True)

    for gi, g in enumerate(c.gauge_ops()):
        gact = proj @ dense(g) @ proj
        for li, lact in enumerate(logical_actions):
            resid = _comm_norm(gact, lact)
            report.max_residual = max(report.max_residual, resid)
            if resid > tol:
                report.ok = False
                report.failures.append(
                    f"gauge op {gi} does not commute with logical op {li} on the code space"
                )
    for li, lop in enumerate(c.logical_ops()):
        lcomp = proj @ dense(lop) @ proj
        for gi, g in enumerate(c.gauge_ops()):
            resid = _comm_norm(lcomp, dense(g) @ proj)
            report.max_residual = max(report.max_residual, resid)
            if resid > tol:
                report.ok = False
                report.failures.append(
                    f"logical op {li} does not commute with gauge op {gi} on the code space"
                )
    for j, (lx, lz) in enumerate(c.logical_pairs):
        anti = proj @ dense(lx) @ dense(lz) @ proj + proj @ dense(lz) @ dense(lx) @ proj
        resid = float(np.linalg.norm(anti))
        report.max_residual = max(report.max_residual, resid)
        if resid > tol:
            report.ok = False
            report.failures.append(f"logical pair {j} fails to anticommute on the code space")
    return report


def verify_correctability(
    code: SubsystemCode, errors: list[PauliOp], tol: float = TOL
) -> OracleReport:
    """Check the compressed pair products against the logical algebra.

    For every pair the operator P Ea' Eb P must commute with every logical
    action on the code space; the commutant of the logical algebra there is
    exactly the gauge side, so commuting means the pair is harmless.
    """
    c = validated(code)
    proj = code_projector(c).matrix
    logical_actions = _logical_actions(c)
    compressed = [dense(e) @ proj for e in errors]
    report = OracleReport(ok=True)
    for a in range(len(errors)):
        left = compressed[a].conj().T  # = P Ea'
        for b in range(a, len(errors)):
            m = left @ compressed[b]
            for lact in logical_actions:
                resid = _comm_norm(m, lact)
                report.max_residual = max(report.max_residual, resid)
                if resid > tol:
                    report.ok = False
                    if report.failing_pair is None:
                        report.failing_pair = (errors[a], errors[b])
                    report.failures.append(
                        f"pair ({errors[a]}, {errors[b]}) acts on the encoded qubits"
                    )
                    break
            if not report.ok and report.failing_pair is not None:
                # keep scanning pairs only until the first witness
                return report
    return report


def acts_as_gauge(code: SubsystemCode, p: PauliOp, tol: float = TOL) -> bool:
    """Dense test: nonzero on the code space and in the logical commutant."""
    c = validated(code)
    proj = code_projector(c).matrix
    compressed = proj @ dense(p) @ proj
    if float(np.linalg.norm(compressed)) <= tol:
        return False
    return all(
        _comm_norm(compressed, lact) <= tol for lact in _logical_actions(c)
    )


def vanishes_on_code_space(code: SubsystemCode, p: PauliOp, tol: float = TOL) -> bool:
    c = validated(code)
    proj = code_projector(c).matrix
    return float(np.linalg.norm(proj @ dense(p) @ proj)) <= tol
