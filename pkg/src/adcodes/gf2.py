"""Small GF(2) linear-algebra toolkit on bit-packed integer rows.

A vector over GF(2)^m is an int whose bit j is the j-th coordinate; a matrix
is a list of such row ints.  Everything here is exact integer arithmetic.
"""

from __future__ import annotations

__all__ = ["rank", "rref", "reduce_vector", "nullspace", "solve", "invert"]


def rref(rows: list[int]) -> tuple[list[int], list[int]]:
    """Reduced row echelon form.

    Returns (reduced nonzero rows, pivot bit positions), with rows ordered by
    descending pivot bit and each pivot bit cleared from all other rows.
    """
    out: list[int] = []
    pivots: list[int] = []
    for r in rows:
        for p, b in zip(pivots, out):
            if (r >> p) & 1:
                r ^= b
        if r:
            p = r.bit_length() - 1
            # clear this pivot from earlier rows
            out = [b ^ r if (b >> p) & 1 else b for b in out]
            out.append(r)
            pivots.append(p)
    order = sorted(range(len(out)), key=lambda i: -pivots[i])
    return [out[i] for i in order], [pivots[i] for i in order]


def rank(rows: list[int]) -> int:
    return len(rref(rows)[0])


def reduce_vector(v: int, basis: list[int], pivots: list[int]) -> int:
    """Reduce v by an rref basis; result is 0 iff v is in the row space."""
    for p, b in zip(pivots, basis):
        if (v >> p) & 1:
            v ^= b
    return v


def nullspace(rows: list[int], ncols: int) -> list[int]:
    """Basis of {v : parity(v & row) = 0 for every row}, as vectors."""
    basis, pivots = rref(rows)
    free = [j for j in range(ncols) if j not in pivots]
    out = []
    for f in free:
        v = 1 << f
        for p, b in zip(pivots, basis):
            if (b >> f) & 1:
                v |= 1 << p
        out.append(v)
    return out


def solve(rows: list[int], targets: list[int], ncols: int) -> int | None:
    """One solution v of parity(v & rows[i]) = targets[i], or None.

    Solves the system by eliminating on the augmented rows; free coordinates
    are set to zero.
    """
    aug = [(r << 1) | (t & 1) for r, t in zip(rows, targets)]
    basis: list[int] = []
    pivots: list[int] = []
    for a in aug:
        for p, b in zip(pivots, basis):
            if (a >> (p + 1)) & 1:
                a ^= b
        if a >> 1:
            p = (a >> 1).bit_length() - 1
            basis = [b ^ a if (b >> (p + 1)) & 1 else b for b in basis]
            basis.append(a)
            pivots.append(p)
        elif a & 1:
            return None
    v = 0
    for p, b in zip(pivots, basis):
        if b & 1:
            v |= 1 << p
    return v


def invert(rows: list[int], m: int) -> list[int] | None:
    """Inverse of an m x m GF(2) matrix given as m row ints, or None."""
    work = [(rows[i] << m) | (1 << i) for i in range(m)]
    basis: list[int] = []
    pivots: list[int] = []
    for w in work:
        for p, b in zip(pivots, basis):
            if (w >> (p + m)) & 1:
                w ^= b
        hi = w >> m
        if not hi:
            return None
        p = hi.bit_length() - 1
        basis = [b ^ w if (b >> (p + m)) & 1 else b for b in basis]
        basis.append(w)
        pivots.append(p)
    inv = [0] * m
    for p, b in zip(pivots, basis):
        inv[p] = b & ((1 << m) - 1)
    return inv
