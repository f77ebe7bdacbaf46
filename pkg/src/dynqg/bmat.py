"""Small dense matrices over a base field (lists of lists of RatFunc)."""

from __future__ import annotations

from typing import Sequence

from .coeff import BaseSpec, RatFunc


def bmatrix(base: BaseSpec, rows: Sequence[Sequence]) -> list:
    """Build a matrix from RatFunc, numbers or expression strings."""
    out = []
    for row in rows:
        r = []
        for x in row:
            if isinstance(x, RatFunc):
                r.append(x)
            elif isinstance(x, str):
                r.append(base.parse(x))
            else:
                r.append(base.const(x))
        out.append(r)
    if any(len(r) != len(out) for r in out):
        raise ValueError("matrix must be square")
    return out


def identity(base: BaseSpec, n: int) -> list:
    return [[base.one if i == j else base.zero for j in range(n)] for i in range(n)]


def diag(base: BaseSpec, entries: Sequence) -> list:
    n = len(entries)
    return [[entries[i] if i == j else base.zero for j in range(n)] for i in range(n)]


def mul(A: list, B: list) -> list:
    n, m, p = len(A), len(B), len(B[0])
    base = A[0][0].base
    out = []
    for i in range(n):
        row = []
        for j in range(p):
            acc = base.zero
            for k in range(m):
                if not A[i][k].is_zero() and not B[k][j].is_zero():
                    acc = acc + A[i][k] * B[k][j]
            row.append(acc)
        out.append(row)
    return out


def transpose(A: list) -> list:
    return [list(col) for col in zip(*A)]


def scale(c: RatFunc, A: list) -> list:
    return [[c * x for x in row] for row in A]


def inverse(A: list) -> list:
    """Gauss-Jordan inverse over the (commutative) base field."""
    n = len(A)
    base = A[0][0].base
    M = [list(row) + [base.one if i == j else base.zero for j in range(n)] for i, row in enumerate(A)]
    for col in range(n):
        piv = next((r for r in range(col, n) if not M[r][col].is_zero()), None)
        if piv is None:
            raise ZeroDivisionError("singular matrix")
        M[col], M[piv] = M[piv], M[col]
        inv = M[col][col].inv()
        M[col] = [x * inv for x in M[col]]
        for r in range(n):
            if r != col and not M[r][col].is_zero():
                f = M[r][col]
                M[r] = [a - f * b for a, b in zip(M[r], M[col])]
    return [row[n:] for row in M]


def power(A: list, k: int) -> list:
    base = A[0][0].base
    if k < 0:
        return power(inverse(A), -k)
    out = identity(base, len(A))
    for _ in range(k):
        out = mul(out, A)
    return out


def conj(A: list) -> list:
    """Entrywise involution."""
    return [[x.base.involve(x) for x in row] for row in A]


def adjoint(A: list) -> list:
    return transpose(conj(A))


def equal(A: list, B: list) -> bool:
    return all(a == b for ra, rb in zip(A, B) for a, b in zip(ra, rb))


def is_scalar_multiple(A: list, B: list):
    """Return c with A = c*B for a constant c, else None."""
    ratio = None
    for ra, rb in zip(A, B):
        for a, b in zip(ra, rb):
            if b.is_zero():
                if not a.is_zero():
                    return None
                continue
            q = a / b
            if ratio is None:
                ratio = q
            elif not q == ratio:
                return None
    if ratio is None or not ratio.is_constant():
        return None
    return ratio


def act(base: BaseSpec, g: tuple, A: list) -> list:
    return [[base.act(g, x) for x in row] for row in A]


def fmt(A: list) -> list:
    return [[str(x) for x in row] for row in A]
