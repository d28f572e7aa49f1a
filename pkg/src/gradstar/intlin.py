"""Exact integer linear algebra: determinants, kernel lattices, and bounded
nonnegative solving of linear Diophantine systems."""

from __future__ import annotations

from itertools import combinations


def int_det(rows):
    """Determinant of a small square integer matrix (fraction-free Bareiss)."""
    n = len(rows)
    if n == 0:
        return 1
    m = [list(r) for r in rows]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k]:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[-1][-1]


def max_minor(rows):
    """Largest |det| over all square minors of an integer matrix (any size)."""
    nr = len(rows)
    nc = len(rows[0]) if nr else 0
    best = 0
    for size in range(1, min(nr, nc) + 1):
        for ri in combinations(range(nr), size):
            for ci in combinations(range(nc), size):
                d = int_det([[rows[i][j] for j in ci] for i in ri])
                if abs(d) > best:
                    best = abs(d)
    return best


def _row_reduce(vectors):
    """Unimodular row reduction of the matrix with the given rows.

    Returns (reduced rows, transform U) with U unimodular and
    U @ vectors == reduced.
    """
    m = len(vectors)
    w = [list(v) for v in vectors]
    u = [[int(i == j) for j in range(m)] for i in range(m)]
    k = len(w[0]) if m else 0
    row = 0
    for col in range(k):
        while True:
            piv = None
            for i in range(row, m):
                if w[i][col] and (piv is None or abs(w[i][col]) < abs(w[piv][col])):
                    piv = i
            if piv is None:
                break
            w[row], w[piv] = w[piv], w[row]
            u[row], u[piv] = u[piv], u[row]
            p = w[row][col]
            clean = True
            for i in range(row + 1, m):
                if w[i][col]:
                    q = w[i][col] // p
                    w[i] = [a - q * b for a, b in zip(w[i], w[row])]
                    u[i] = [a - q * b for a, b in zip(u[i], u[row])]
                    if w[i][col]:
                        clean = False
            if clean:
                row += 1
                break
    return w, u


def kernel_basis(vectors):
    """Z-basis of {c in Z^m : sum c_i * vectors[i] == 0}.

    `vectors` are the rows; the returned rows span the full kernel lattice
    because the reduction transform is unimodular.
    """
    if not vectors:
        return []
    w, u = _row_reduce(vectors)
    return [u[i] for i in range(len(vectors)) if not any(w[i])]


def in_row_lattice(vectors, target):
    """Whether target lies in the Z-span of the given row vectors."""
    if not any(target):
        return True
    if not vectors:
        return False
    w, _ = _row_reduce(vectors)
    t = list(target)
    for row in w:
        lead = next((j for j, a in enumerate(row) if a), None)
        if lead is None:
            continue
        if t[lead] % row[lead] == 0:
            q = t[lead] // row[lead]
            t = [a - q * b for a, b in zip(t, row)]
    return not any(t)


def solve_nonneg(vectors, target, bound=None):
    """Nonnegative integer c with sum c_i * vectors[i] == target, else None.

    Complete: when a solution exists, one exists with every entry bounded by
    the largest |minor| of the augmented matrix, so exhausting the boxed
    search certifies non-membership.
    """
    m = len(vectors)
    if not any(target):
        return tuple(0 for _ in range(m))
    if m == 0:
        return None
    if bound is None:
        cols = [[v[j] for v in vectors] + [target[j]] for j in range(len(target))]
        bound = max(1, max_minor(cols))
    k = len(target)
    failed = set()

    def search(idx, rem):
        if all(a == 0 for a in rem):
            return (0,) * (m - idx)
        if idx == m:
            return None
        key = (idx, rem)
        if key in failed:
            return None
        for j in range(k):
            neg_ok = any(vectors[i][j] < 0 for i in range(idx, m))
            pos_ok = any(vectors[i][j] > 0 for i in range(idx, m))
            if rem[j] > 0 and not pos_ok:
                failed.add(key)
                return None
            if rem[j] < 0 and not neg_ok:
                failed.add(key)
                return None
        v = vectors[idx]
        cur = rem
        for c in range(bound + 1):
            sub = search(idx + 1, cur)
            if sub is not None:
                return (c,) + sub
            cur = tuple(a - b for a, b in zip(cur, v))
        failed.add(key)
        return None

    return search(0, tuple(target))
