"""Dense Gaussian elimination over a prime field.

Matrices are lists of rows of ints.  Nothing here is clever; systems
are a few hundred unknowns at most.
"""

from __future__ import annotations


def row_reduce(rows, ncols: int, p: int):
    """Reduced row echelon form.  Returns (nonzero rows, pivot columns)."""
    m = [[x % p for x in r] for r in rows]
    pivots = []
    r = 0
    for c in range(ncols):
        piv = None
        for i in range(r, len(m)):
            if m[i][c]:
                piv = i
                break
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = pow(m[r][c], -1, p)
        m[r] = [(x * inv) % p for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c]:
                f = m[i][c]
                ri = m[r]
                m[i] = [(a - f * b) % p for a, b in zip(m[i], ri)]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def rank(rows, ncols: int, p: int) -> int:
    return len(row_reduce(rows, ncols, p)[1])


def nullspace(rows, ncols: int, p: int) -> list[list[int]]:
    """Basis of {v : A v = 0}."""
    red, pivots = row_reduce(rows, ncols, p)
    free = [c for c in range(ncols) if c not in set(pivots)]
    basis = []
    for fc in free:
        v = [0] * ncols
        v[fc] = 1
        for row, pc in zip(red, pivots):
            v[pc] = (-row[fc]) % p
        basis.append(v)
    return basis


def in_span(vector, rows, ncols: int, p: int) -> bool:
    return rank(list(rows) + [vector], ncols, p) == rank(rows, ncols, p)


def mat_vec(rows, v, p: int) -> list[int]:
    return [sum(a * b for a, b in zip(r, v)) % p for r in rows]
