"""Independent oracles the tests check library results against.

Everything here is deliberately naive: cofactor expansion instead of
elimination, textbook normal equations instead of QR, bitmask
enumeration instead of greedy search.  Slow is fine; different is the
point.
"""

from fractions import Fraction
from itertools import combinations


def cofactor_det(rows):
    """Determinant by recursive cofactor expansion on Fraction rows."""
    n = len(rows)
    if n == 1:
        return Fraction(rows[0][0])
    total = Fraction(0)
    for j in range(n):
        if rows[0][j] == 0:
            continue
        minor = [r[:j] + r[j + 1 :] for r in rows[1:]]
        sign = -1 if j % 2 else 1
        total += sign * Fraction(rows[0][j]) * cofactor_det(minor)
    return total


def rref_rank(rows):
    """Rank via plain reduced row echelon form over Fractions."""
    m = [[Fraction(x) for x in row] for row in rows]
    if not m:
        return 0
    nrows, ncols = len(m), len(m[0])
    rank = 0
    for col in range(ncols):
        pivot = next((r for r in range(rank, nrows) if m[r][col] != 0), None)
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        pv = m[rank][col]
        m[rank] = [x / pv for x in m[rank]]
        for r in range(nrows):
            if r != rank and m[r][col] != 0:
                factor = m[r][col]
                m[r] = [a - factor * b for a, b in zip(m[r], m[rank])]
        rank += 1
        if rank == nrows:
            break
    return rank


def normal_eq_residual_sq(cols, b):
    """Least-squares residual squared from the normal equations, exact.

    cols: list of column vectors (Fractions), assumed independent.
    """
    k = len(cols)
    gram = [[sum(ci * cj for ci, cj in zip(cols[i], cols[j])) for j in range(k)] for i in range(k)]
    rhs = [sum(ci * bi for ci, bi in zip(cols[i], b)) for i in range(k)]
    aug = [gram[i] + [rhs[i]] for i in range(k)]
    # solve by Gaussian elimination with Fractions
    for i in range(k):
        pivot = next(r for r in range(i, k) if aug[r][i] != 0)
        aug[i], aug[pivot] = aug[pivot], aug[i]
        pv = aug[i][i]
        aug[i] = [x / pv for x in aug[i]]
        for r in range(k):
            if r != i and aug[r][i] != 0:
                f = aug[r][i]
                aug[r] = [a - f * c for a, c in zip(aug[r], aug[i])]
    x = [aug[i][k] for i in range(k)]
    resid = [bi - sum(cols[j][i] * x[j] for j in range(k)) for i, bi in enumerate(b)]
    return sum(r * r for r in resid)


def brute_force_max_free_set(n, f):
    """Largest free set by bitmask enumeration; n must stay small."""
    fsets = [frozenset(s) for s in f]
    best = 0
    for mask in range(1 << n):
        members = [a for a in range(n) if mask >> a & 1]
        ok = True
        for a in members:
            if (fsets[a] - {a}) & set(members):
                ok = False
                break
        if ok and len(members) > best:
            best = len(members)
    return best


def prefix_min_table(members, length):
    """N_alpha for alpha in [0, length] as a plain double loop."""
    table = []
    for alpha in range(length + 1):
        table.append(min(sum(abs(c) for c in v[:alpha]) for v in members))
    return table


def subsets_of_size(n, k):
    return combinations(range(n), k)
