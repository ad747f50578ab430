"""Exact dense linear algebra over :class:`Scalar` entries."""

from __future__ import annotations

from typing import Sequence

from .scalars import ONE, ZERO, Scalar


def _pivot_rank(s: Scalar) -> tuple:
    # prefer rational pivots, then the simplest expressions
    return (0 if s.is_rational() else 1, s.complexity())


def rref(rows: Sequence[Sequence]) -> tuple[list[list[Scalar]], list[int]]:
    """Reduced row echelon form; returns (nonzero rows, pivot columns)."""
    a = [[Scalar.coerce(v) for v in row] for row in rows]
    if not a:
        return [], []
    ncols = len(a[0])
    pivots: list[int] = []
    r = 0
    for col in range(ncols):
        cands = [i for i in range(r, len(a)) if a[i][col]]
        if not cands:
            continue
        p = min(cands, key=lambda i: _pivot_rank(a[i][col]))
        a[r], a[p] = a[p], a[r]
        inv = a[r][col].inverse()
        a[r] = [v * inv for v in a[r]]
        for i in range(len(a)):
            if i != r and a[i][col]:
                f = a[i][col]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(col)
        r += 1
        if r == len(a):
            break
    return a[:r], pivots


def rank(rows: Sequence[Sequence]) -> int:
    return len(rref(rows)[1])


def inverse(mat: Sequence[Sequence]) -> list[list[Scalar]]:
    n = len(mat)
    aug = [list(row) + [ONE if i == j else ZERO for j in range(n)] for i, row in enumerate(mat)]
    red, piv = rref(aug)
    if piv[:n] != list(range(n)) or len(piv) < n:
        raise ZeroDivisionError("matrix is singular")
    return [row[n:] for row in red]


def matmul(a: Sequence[Sequence], b: Sequence[Sequence]) -> list[list[Scalar]]:
    inner = len(b)
    cols = len(b[0]) if b else 0
    out = []
    for row in a:
        new = []
        for j in range(cols):
            acc = ZERO
            for k in range(inner):
                if row[k] and b[k][j]:
                    acc = acc + row[k] * b[k][j]
            new.append(acc)
        out.append(new)
    return out


def transpose(a: Sequence[Sequence]) -> list[list]:
    return [list(col) for col in zip(*a)] if a else []


def nullspace(rows: Sequence[Sequence], ncols: int) -> list[list[Scalar]]:
    """Basis of {v : rows * v = 0}, one vector per free column."""
    red, piv = rref(rows) if rows else ([], [])
    free = [c for c in range(ncols) if c not in piv]
    basis = []
    for f in free:
        v = [ZERO] * ncols
        v[f] = ONE
        for row, p in zip(red, piv):
            v[p] = -row[f]
        basis.append(v)
    return basis
