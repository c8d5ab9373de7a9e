"""Independent reference implementations used only by the tests.

Everything here recomputes a quantity by a route different from the library:
pair-indexed recursion for the doubled products, Leibniz determinants,
Fraction-based Gaussian elimination, classical cofactor adjugates. None of
it is imported by the package itself.
"""

from fractions import Fraction
from itertools import permutations

from jordal.jordan import JordanElement


def doubled_mul(x, y):
    """(a,b)(c,d) = (ac - d~b, da + b c~) on explicit halves, recursively."""
    n = len(x)
    if n == 1:
        return (x[0] * y[0],)
    h = n // 2
    a, b = x[:h], x[h:]
    c, d = y[:h], y[h:]
    ac = doubled_mul(a, c)
    db = doubled_mul(conj_half(d), b)
    da = doubled_mul(d, a)
    bc = doubled_mul(b, conj_half(c))
    return tuple(p - q for p, q in zip(ac, db)) + tuple(p + q for p, q in zip(da, bc))


def conj_half(x):
    if len(x) == 1:
        return x
    return (x[0],) + tuple(-v for v in x[1:])


def sign(perm) -> int:
    s = 1
    p = list(perm)
    for i in range(len(p)):
        while p[i] != i:
            j = p[i]
            p[i], p[j] = p[j], p[i]
            s = -s
    return s


def leibniz_det(entries, size: int, delta: int):
    """Sum over permutations of entry products, real part; delta <= 2 only.

    For real and complex Hermitian matrices this is the honest determinant;
    beyond delta = 2 the naive permutation sum is not well defined.
    """
    if delta > 2:
        raise ValueError("permutation determinant needs commutative entries")
    total = Fraction(0)
    for perm in permutations(range(size)):
        term = (1,) + (0,) * (delta - 1)
        for i in range(size):
            term = doubled_mul(term, entries[i][perm[i]])
        total += sign(perm) * term[0]
    return total


def gauss_rank(rows) -> int:
    """Row reduction over Fraction, no cleverness."""
    m = [[Fraction(v) for v in row] for row in rows]
    if not m:
        return 0
    ncols = len(m[0])
    rank = 0
    col = 0
    for col in range(ncols):
        piv = None
        for r in range(rank, len(m)):
            if m[r][col] != 0:
                piv = r
                break
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        inv = 1 / m[rank][col]
        m[rank] = [v * inv for v in m[rank]]
        for r in range(len(m)):
            if r != rank and m[r][col] != 0:
                f = m[r][col]
                m[r] = [a - f * b for a, b in zip(m[r], m[rank])]
        rank += 1
    return rank


def gauss_solve(rows, rhs):
    """Unique solution over Fraction or ValueError."""
    n = len(rows)
    m = [[Fraction(v) for v in row] + [Fraction(b)] for row, b in zip(rows, rhs)]
    for c in range(n):
        piv = next((r for r in range(c, n) if m[r][c] != 0), None)
        if piv is None:
            raise ValueError("singular system")
        m[c], m[piv] = m[piv], m[c]
        inv = 1 / m[c][c]
        m[c] = [v * inv for v in m[c]]
        for r in range(n):
            if r != c and m[r][c] != 0:
                f = m[r][c]
                m[r] = [a - f * b for a, b in zip(m[r], m[c])]
    return [m[r][n] for r in range(n)]


def gauss_det(rows):
    n = len(rows)
    m = [[Fraction(v) for v in row] for row in rows]
    det = Fraction(1)
    for c in range(n):
        piv = next((r for r in range(c, n) if m[r][c] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != c:
            m[c], m[piv] = m[piv], m[c]
            det = -det
        det *= m[c][c]
        inv = 1 / m[c][c]
        for r in range(c + 1, n):
            if m[r][c] != 0:
                f = m[r][c] * inv
                m[r] = [a - f * b for a, b in zip(m[r], m[c])]
    return det


def classical_adjugate(spec, a: JordanElement) -> JordanElement:
    """Cofactor matrix of a 3x3 symmetric matrix with scalar entries."""
    assert spec.size == 3 and spec.delta == 1
    g = [[a.entry(i, j)[0] for j in range(3)] for i in range(3)]
    adj = [[0] * 3 for _ in range(3)]
    for i in range(3):
        for j in range(3):
            r = [x for x in range(3) if x != j]
            c = [x for x in range(3) if x != i]
            minor = g[r[0]][c[0]] * g[r[1]][c[1]] - g[r[0]][c[1]] * g[r[1]][c[0]]
            adj[i][j] = (-1) ** (i + j) * minor
    diag = [adj[i][i] for i in range(3)]
    upper = [(adj[i][j],) for (i, j) in spec.pairs]
    return JordanElement(spec, diag, upper)


def dense_symmetric_product(a: JordanElement, b: JordanElement) -> JordanElement:
    """(AB + BA)/2 assembled entry by entry from the matrix grids."""
    spec = a.spec
    ga, gb = a.grid(), b.grid()
    size, delta = spec.size, spec.delta
    prod = [[None] * size for _ in range(size)]
    for i in range(size):
        for j in range(size):
            acc = [0] * delta
            for l in range(size):
                acc = [p + q for p, q in
                       zip(acc, doubled_mul(ga[i][l], gb[l][j]))]
                acc = [p + q for p, q in
                       zip(acc, doubled_mul(gb[i][l], ga[l][j]))]
            prod[i][j] = tuple(Fraction(v, 2) for v in acc)
    diag = [prod[i][i][0] for i in range(size)]
    upper = [prod[i][j] for (i, j) in spec.pairs]
    return JordanElement(spec, diag, upper)
