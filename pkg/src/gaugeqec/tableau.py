"""Symplectic frames over the Pauli group: centralizers, completion, membership.

A frame is a choice of 2n operators behaving like single-qubit X and Z on n
virtual qubits: same-kind rows commute, and the x row of slot i anticommutes
with the z row of slot i only.  Frames are the scaffolding for splitting the
virtual qubits into stabilizer / gauge / logical sectors.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Sequence

from . import gf2
from .pauli import PauliOp, from_vec, multiply, swap_halves, symplectic_inner


@dataclass(frozen=True)
class SymplecticFrame:
    """Full set of n (x, z) operator pairs generating the Pauli group mod phase."""

    n: int
    x_ops: tuple[PauliOp, ...]
    z_ops: tuple[PauliOp, ...]

    def check(self) -> None:
        """Verify the single-qubit commutation pattern and full GF(2) rank."""
        n = self.n
        if len(self.x_ops) != n or len(self.z_ops) != n:
            raise ValueError("frame must hold exactly n x-rows and n z-rows")
        ops = list(self.x_ops) + list(self.z_ops)
        for i in range(n):
            for j in range(n):
                if symplectic_inner(self.x_ops[i], self.x_ops[j]) != 0:
                    raise ValueError(f"x rows {i},{j} anticommute")
                if symplectic_inner(self.z_ops[i], self.z_ops[j]) != 0:
                    raise ValueError(f"z rows {i},{j} anticommute")
                expected = 1 if i == j else 0
                if symplectic_inner(self.x_ops[i], self.z_ops[j]) != expected:
                    raise ValueError(f"x row {i} / z row {j} break the pairing")
        m = gf2.BinMatrix(2 * n, tuple(op.vec for op in ops))
        if gf2.rank(m) != 2 * n:
            raise ValueError("frame rows are GF(2)-dependent")


def centralizer_basis(n: int, gens: Sequence[PauliOp]) -> list[PauliOp]:
    """Basis (phase 0) of all Paulis commuting with every generator, mod phase.

    Computed as the kernel of the symplectic-product map; the result always
    has 2n - rank(gens) elements.
    """
    for g in gens:
        if g.n != n:
            raise ValueError("generator qubit count mismatch")
    rows = tuple(swap_halves(g.vec, n) for g in gens)
    kernel = gf2.kernel_basis(gf2.BinMatrix(2 * n, rows))
    return [from_vec(n, v) for v in kernel]


def in_group_mod_phase(gens: Sequence[PauliOp], p: PauliOp) -> bool:
    """Whether p's (x|z) vector lies in the row space of the generators."""
    elim = gf2.Eliminator(g.vec for g in gens)
    return elim.contains(p.vec)


def in_group_exact(gens: Sequence[PauliOp], p: PauliOp) -> int | None:
    """Phase offset of p against the reconstructed generator product.

    If p's vector is in the generator row space, rebuilds the product of the
    matching generators in ascending index order and returns d such that
    p == i**d * product; otherwise None.
    """
    m = gf2.BinMatrix(2 * p.n, tuple(g.vec for g in gens))
    comb = gf2.solve_membership(m, p.vec)
    if comb is None:
        return None
    prod = PauliOp(p.n, 0, 0, 0)
    for i, g in enumerate(gens):
        if (comb >> i) & 1:
            prod = multiply(prod, g)
    return (p.phase_exp - prod.phase_exp) % 4


def symplectic_complete(
    n: int,
    z_ops: Mapping[int, PauliOp] | None = None,
    x_ops: Mapping[int, PauliOp] | None = None,
) -> SymplecticFrame:
    """Extend a partial slot assignment to a full symplectic frame.

    ``z_ops`` / ``x_ops`` map 0-based slot indices to supplied operators.  The
    supplied operators must be GF(2)-independent and already satisfy the
    commutation pattern their slots demand.  Missing rows are filled by a
    symplectic Gram-Schmidt sweep over the slots in ascending order, taking
    a canonical admissible vector at every step, so the completion is
    deterministic for a given input.
    """
    z_given = dict(z_ops or {})
    x_given = dict(x_ops or {})
    for op in list(z_given.values()) + list(x_given.values()):
        if op.n != n:
            raise ValueError("operator qubit count mismatch")
    supplied: list[tuple[str, int, PauliOp]] = [
        ("z", j, op) for j, op in sorted(z_given.items())
    ] + [("x", j, op) for j, op in sorted(x_given.items())]
    for kind, j, _ in supplied:
        if not 0 <= j < n:
            raise ValueError(f"slot {j} outside 0..{n - 1}")
    # Declared commutation pattern among the supplied operators.
    for a, (ka, ja, opa) in enumerate(supplied):
        for kb, jb, opb in supplied[a + 1 :]:
            expected = 1 if (ja == jb and ka != kb) else 0
            if symplectic_inner(opa, opb) != expected:
                raise ValueError(
                    f"supplied {ka}'{ja} and {kb}'{jb} violate the slot pattern"
                )
    elim_all = gf2.Eliminator()
    for _, _, op in supplied:
        if not elim_all.add(op.vec):
            raise ValueError("supplied operators are GF(2)-dependent")

    fixed_vecs: list[int] = []  # vectors of completed slots, in slot order
    out_x: list[PauliOp | None] = [None] * n
    out_z: list[PauliOp | None] = [None] * n

    def later_supplied(slot: int) -> list[int]:
        vecs = []
        for kind, j, op in supplied:
            if j > slot:
                vecs.append(op.vec)
        return vecs

    def solve_vector(commute_with: list[int], anti_with: int | None, taken: gf2.Eliminator) -> int:
        rows = [(swap_halves(w, n), 0) for w in commute_with]
        if anti_with is not None:
            rows.append((swap_halves(anti_with, n), 1))
        sol = gf2.solve_affine(rows, 2 * n)
        if sol is None:
            raise ValueError("inconsistent commutation constraints")
        particular, kernel = sol
        # Any admissible vector differs from the particular solution by a
        # kernel element; if neither the particular solution nor one basis
        # shift leaves span(taken), the whole affine space is inside it.
        if particular and not taken.contains(particular):
            return particular
        for k in kernel:
            v = particular ^ k
            if v and not taken.contains(v):
                return v
        raise ValueError("no admissible completion vector")

    for slot in range(n):
        vz = z_given.get(slot)
        vx = x_given.get(slot)
        later = later_supplied(slot)
        taken = elim_all.copy()
        if vx is None and vz is None:
            xvec = solve_vector(fixed_vecs + later, None, taken)
            taken.add(xvec)
            zvec = solve_vector(fixed_vecs + later, xvec, taken)
            out_x[slot] = from_vec(n, xvec)
            out_z[slot] = from_vec(n, zvec)
        elif vx is None:
            xvec = solve_vector(fixed_vecs + later, vz.vec, taken)
            out_x[slot] = from_vec(n, xvec)
            out_z[slot] = vz
            zvec = vz.vec
        elif vz is None:
            zvec = solve_vector(fixed_vecs + later, vx.vec, taken)
            out_z[slot] = from_vec(n, zvec)
            out_x[slot] = vx
            xvec = vx.vec
        else:
            out_x[slot], out_z[slot] = vx, vz
            xvec, zvec = vx.vec, vz.vec
        fixed_vecs.extend((xvec, zvec))
        elim_all.add(xvec)
        elim_all.add(zvec)

    frame = SymplecticFrame(n, tuple(out_x), tuple(out_z))  # type: ignore[arg-type]
    frame.check()
    return frame
