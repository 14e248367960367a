"""Exact linear algebra over the integers and rationals.

Rank is computed by fraction-free (Bareiss) elimination, so every intermediate
entry is an integer minor of the input and no floating point is involved.
Ranks can additionally be cross-checked modulo two large primes: a modular
rank never exceeds the rational rank, and equality at two independent primes
makes an elimination bug or degenerate reduction extremely unlikely.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

# Distinct primes > 2**30 used for the modular cross-checks.
DUAL_PRIMES: tuple[int, int] = (2**31 - 1, 2**61 - 1)

Matrix = list[list[int]]


def _copy_checked(rows) -> Matrix:
    m = [list(r) for r in rows]
    if m:
        width = len(m[0])
        if any(len(r) != width for r in m):
            raise ValueError("matrix rows have unequal lengths")
    return m


def exact_rank(rows) -> int:
    """Rank over the rationals of an integer matrix, by Bareiss elimination."""
    m = _copy_checked(rows)
    nrows = len(m)
    ncols = len(m[0]) if nrows else 0
    rank = 0
    prev = 1
    for col in range(ncols):
        if rank == nrows:
            break
        piv = next((i for i in range(rank, nrows) if m[i][col] != 0), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        prow = m[rank]
        pivot = prow[col]
        for i in range(rank + 1, nrows):
            row = m[i]
            f = row[col]
            # Fraction-free update: the division by the previous pivot is exact.
            m[i] = [0] * col + [
                (pivot * x - f * y) // prev for x, y in zip(row[col:], prow[col:])
            ]
        prev = pivot
        rank += 1
    return rank


def rank_mod_p(rows, p: int) -> int:
    """Rank of the matrix over GF(p).  Always <= the rational rank."""
    if p < 2:
        raise ValueError(f"modulus must be a prime >= 2, got {p}")
    m = [[x % p for x in r] for r in _copy_checked(rows)]
    nrows = len(m)
    ncols = len(m[0]) if nrows else 0
    rank = 0
    for col in range(ncols):
        if rank == nrows:
            break
        piv = next((i for i in range(rank, nrows) if m[i][col]), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        prow = m[rank]
        pivot = prow[col]
        for i in range(rank + 1, nrows):
            f = m[i][col]
            if f:
                row = m[i]
                m[i] = [0] * col + [
                    (pivot * x - f * y) % p for x, y in zip(row[col:], prow[col:])
                ]
        rank += 1
    return rank


def checked_rank(rows) -> tuple[int, bool]:
    """(exact rank, True iff both modular ranks agree with it)."""
    r = exact_rank(rows)
    confirmed = all(rank_mod_p(rows, p) == r for p in DUAL_PRIMES)
    return r, confirmed


def fraction_rank(rows) -> int:
    """Plain Gaussian elimination over Fraction; independent slow oracle."""
    m = [[Fraction(x) for x in r] for r in _copy_checked(rows)]
    nrows = len(m)
    ncols = len(m[0]) if nrows else 0
    rank = 0
    for col in range(ncols):
        if rank == nrows:
            break
        piv = next((i for i in range(rank, nrows) if m[i][col] != 0), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        prow = m[rank]
        pivot = prow[col]
        for i in range(rank + 1, nrows):
            f = m[i][col]
            if f:
                m[i] = [a - (f / pivot) * b for a, b in zip(m[i], prow)]
        rank += 1
    return rank


def _primitive_int_vector(vec: list[Fraction]) -> list[int]:
    denom = 1
    for x in vec:
        denom = denom * x.denominator // gcd(denom, x.denominator)
    ints = [int(x * denom) for x in vec]
    g = 0
    for x in ints:
        g = gcd(g, abs(x))
    if g > 1:
        ints = [x // g for x in ints]
    lead = next((x for x in ints if x != 0), 0)
    if lead < 0:
        ints = [-x for x in ints]
    return ints


def integer_kernel_basis(rows) -> list[list[int]]:
    """Basis of {x : A x = 0} over the rationals as primitive integer vectors.

    Deterministic: reduced row echelon form with one basis vector per free
    column, denominators cleared and content divided out.
    """
    m = [[Fraction(x) for x in r] for r in _copy_checked(rows)]
    nrows = len(m)
    ncols = len(m[0]) if nrows else 0
    pivots: list[int] = []
    r = 0
    for col in range(ncols):
        if r == nrows:
            break
        piv = next((i for i in range(r, nrows) if m[i][col] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        pivot = m[r][col]
        m[r] = [x / pivot for x in m[r]]
        for i in range(nrows):
            if i != r and m[i][col] != 0:
                f = m[i][col]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(col)
        r += 1
    pivot_set = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        vec = [Fraction(0)] * ncols
        vec[free] = Fraction(1)
        for i, pc in enumerate(pivots):
            vec[pc] = -m[i][free]
        basis.append(_primitive_int_vector(vec))
    return basis


def transpose(rows) -> Matrix:
    m = _copy_checked(rows)
    if not m:
        return []
    return [list(col) for col in zip(*m)]
