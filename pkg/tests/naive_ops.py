"""Slow string-based Pauli arithmetic used as an independent test oracle.

Everything here works on IXYZ strings and 0/1 lists, deliberately avoiding
the packed-integer representation and the library's elimination code.
"""

from itertools import combinations, product

# single-qubit products: (phase exponent of i, letter)
_TABLE = {
    ("I", "I"): (0, "I"), ("I", "X"): (0, "X"), ("I", "Y"): (0, "Y"), ("I", "Z"): (0, "Z"),
    ("X", "I"): (0, "X"), ("Y", "I"): (0, "Y"), ("Z", "I"): (0, "Z"),
    ("X", "X"): (0, "I"), ("Y", "Y"): (0, "I"), ("Z", "Z"): (0, "I"),
    ("X", "Y"): (1, "Z"), ("Y", "X"): (3, "Z"),
    ("Y", "Z"): (1, "X"), ("Z", "Y"): (3, "X"),
    ("Z", "X"): (1, "Y"), ("X", "Z"): (3, "Y"),
}


def mul(a: str, b: str) -> tuple[int, str]:
    """Product of two Pauli strings: (phase exponent of i, letters)."""
    phase = 0
    letters = []
    for ca, cb in zip(a, b):
        ph, letter = _TABLE[(ca, cb)]
        phase = (phase + ph) % 4
        letters.append(letter)
    return phase, "".join(letters)


def anticommute(a: str, b: str) -> bool:
    count = 0
    for ca, cb in zip(a, b):
        if ca != "I" and cb != "I" and ca != cb:
            count += 1
    return count % 2 == 1


def weight(a: str) -> int:
    return sum(1 for c in a if c != "I")


def to_bits(a: str) -> list[int]:
    xs = [1 if c in "XY" else 0 for c in a]
    zs = [1 if c in "ZY" else 0 for c in a]
    return xs + zs


def in_span(rows: list[list[int]], vec: list[int]) -> bool:
    """Membership by fresh Gaussian elimination on 0/1 lists."""
    work = [row[:] for row in rows]
    v = vec[:]
    ncols = len(v)
    used: list[list[int]] = []
    for col in range(ncols):
        pivot = None
        for row in work:
            if row[col] == 1:
                pivot = row
                break
        if pivot is None:
            continue
        work.remove(pivot)
        work = [
            [(x + y) % 2 for x, y in zip(row, pivot)] if row[col] else row
            for row in work
        ]
        if v[col]:
            v = [(x + y) % 2 for x, y in zip(v, pivot)]
        used.append(pivot)
    return all(x == 0 for x in v)


def rank(rows: list[list[int]]) -> int:
    work = [row[:] for row in rows]
    ncols = len(rows[0]) if rows else 0
    r = 0
    for col in range(ncols):
        pivot = None
        for row in work:
            if row[col] == 1:
                pivot = row
                break
        if pivot is None:
            continue
        work.remove(pivot)
        work = [
            [(x + y) % 2 for x, y in zip(row, pivot)] if row[col] else row
            for row in work
        ]
        r += 1
    return r


def all_paulis_up_to_weight(n: int, wmax: int, include_identity: bool = True):
    if include_identity:
        yield "I" * n
    for w in range(1, wmax + 1):
        for qubits in combinations(range(n), w):
            for letters in product("XYZ", repeat=w):
                s = ["I"] * n
                for q, letter in zip(qubits, letters):
                    s[q] = letter
                yield "".join(s)


def classify_string(stab: list[str], group: list[str], p: str) -> str:
    """'outside', 'gauge' or 'logical' by definition-level checks."""
    if any(anticommute(p, g) for g in stab):
        return "outside"
    rows = [to_bits(g) for g in group]
    if in_span(rows, to_bits(p)):
        return "gauge"
    return "logical"


def brute_distance(stab: list[str], group: list[str], n: int, wmax: int) -> int | None:
    """Minimum weight of a commuting operator outside the group span."""
    for w in range(1, wmax + 1):
        for p in all_paulis_up_to_weight(n, w, include_identity=False):
            if weight(p) != w:
                continue
            if classify_string(stab, group, p) == "logical":
                return w
    return None
