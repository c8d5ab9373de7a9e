"""Hermitian Jordan algebras H_{k+1}(K) over composition algebras.

Elements are (k+1)x(k+1) matrices with scalar diagonal and entries in the
dimension-delta composition algebra above the diagonal, the conjugates
below. The product is the symmetrized one, A*B = (AB + BA)/2.

Canonical coordinates: the k+1 diagonal units first, then for each pair
i < j (lexicographic) and each algebra basis unit e_s the matrix E_ij(e_s)
carrying e_s at (i, j) and conj(e_s) at (j, i). So

    dimV = (k+1)(2 + k delta)/2.

The generic characteristic coefficients sigma_1..sigma_{k+1} come from
Newton's identities over the power traces p_m = T(A^m); the generic norm is
Q = sigma_{k+1}, normalized so Q(identity) = 1. Power traces are computed
on doubled powers D_m = 2^(m-1) A^m, which satisfy the division-free
recursion D_{m+1} = A D_m + (A D_m)^H, so integer input stays integer until
the final trace normalization.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .composition import ALLOWED_DIMS, basis_table, cd_conj, cd_mul, DimensionMismatch
from .linalg import LinearOperator
from .polarization import PolarizedForm

HALF = Fraction(1, 2)


class SpecMismatch(ValueError):
    pass


@dataclass(frozen=True)
class JordanSpec:
    """Shape parameters: matrices of size k+1, entry algebra of dimension delta."""

    k: int
    delta: int

    def __post_init__(self):
        if self.k < 2:
            raise ValueError(f"k must be at least 2, got {self.k}")
        if self.delta not in ALLOWED_DIMS:
            raise DimensionMismatch(f"delta must be one of {ALLOWED_DIMS}, got {self.delta}")

    @property
    def size(self) -> int:
        return self.k + 1

    @property
    def degree(self) -> int:
        """Degree of the generic norm form."""
        return self.k + 1

    @property
    def dim(self) -> int:
        return (self.k + 1) * (2 + self.k * self.delta) // 2

    @property
    def ambient(self) -> int:
        """n = k*delta, the dimension of the projective rank-one variety."""
        return self.k * self.delta

    @property
    def is_jordan(self) -> bool:
        """The Jordan identity holds iff the entries associate enough."""
        return self.k == 2 or self.delta <= 4

    @property
    def pairs(self) -> tuple:
        return _pairs(self.k)

    def pair_offset(self, i: int, j: int) -> int:
        """Start of the coordinate block of the (i, j) off-diagonal entry."""
        return self.size + _pair_index(self.k, i, j) * self.delta


@lru_cache(maxsize=None)
def _pairs(k: int) -> tuple:
    return tuple((i, j) for i in range(k + 1) for j in range(i + 1, k + 1))


def _pair_index(k: int, i: int, j: int) -> int:
    return _pairs(k).index((i, j))


class JordanElement:
    """Immutable element in canonical coordinates (diagonal + upper blocks)."""

    __slots__ = ("spec", "diag", "upper")

    def __init__(self, spec: JordanSpec, diag, upper):
        object.__setattr__(self, "spec", spec)
        object.__setattr__(self, "diag", tuple(diag))
        object.__setattr__(self, "upper", tuple(tuple(u) for u in upper))

    def __setattr__(self, *_):
        raise AttributeError("JordanElement is immutable")

    @classmethod
    def from_coords(cls, spec: JordanSpec, vec) -> "JordanElement":
        vec = tuple(vec)
        if len(vec) != spec.dim:
            raise SpecMismatch(f"expected {spec.dim} coordinates, got {len(vec)}")
        s = spec.size
        d = spec.delta
        diag = vec[:s]
        upper = tuple(vec[s + t * d: s + (t + 1) * d] for t in range(len(spec.pairs)))
        return cls(spec, diag, upper)

    @classmethod
    def zero(cls, spec: JordanSpec) -> "JordanElement":
        return cls.from_coords(spec, (0,) * spec.dim)

    def coords(self) -> tuple:
        flat = list(self.diag)
        for block in self.upper:
            flat.extend(block)
        return tuple(flat)

    def entry(self, i: int, j: int):
        """The (i, j) matrix entry as a coordinate tuple of length delta."""
        d = self.spec.delta
        if i == j:
            return (self.diag[i],) + (0,) * (d - 1)
        if i < j:
            return self.upper[_pair_index(self.spec.k, i, j)]
        return cd_conj(self.upper[_pair_index(self.spec.k, j, i)])

    def grid(self):
        """Full matrix as nested lists of coordinate tuples (conjugated lower)."""
        return _grid_from_coords(self.spec, self.coords())

    def is_zero(self) -> bool:
        return all(v == 0 for v in self.diag) and all(
            v == 0 for block in self.upper for v in block)

    def max_abs(self):
        return max(abs(v) for v in self.coords())

    def _check(self, other):
        if not isinstance(other, JordanElement):
            raise SpecMismatch(f"expected JordanElement, got {type(other).__name__}")
        if other.spec != self.spec:
            raise SpecMismatch(f"mixing specs {self.spec} and {other.spec}")

    def __add__(self, other):
        self._check(other)
        return JordanElement(
            self.spec,
            tuple(a + b for a, b in zip(self.diag, other.diag)),
            tuple(tuple(a + b for a, b in zip(u, v)) for u, v in zip(self.upper, other.upper)))

    def __sub__(self, other):
        self._check(other)
        return JordanElement(
            self.spec,
            tuple(a - b for a, b in zip(self.diag, other.diag)),
            tuple(tuple(a - b for a, b in zip(u, v)) for u, v in zip(self.upper, other.upper)))

    def __neg__(self):
        return self.scale(-1)

    def scale(self, c) -> "JordanElement":
        return JordanElement(self.spec,
                             tuple(c * v for v in self.diag),
                             tuple(tuple(c * v for v in u) for u in self.upper))

    def __rmul__(self, other):
        if isinstance(other, JordanElement):
            return NotImplemented
        return self.scale(other)

    def __mul__(self, other):
        if isinstance(other, JordanElement):
            return jordan_mul(self, other)
        return self.scale(other)

    def __eq__(self, other):
        if not isinstance(other, JordanElement):
            return NotImplemented
        return (self.spec == other.spec and self.diag == other.diag
                and self.upper == other.upper)

    def __hash__(self):
        return hash((self.spec, self.diag, self.upper))

    def __repr__(self):
        return f"JordanElement({self.spec.k}, {self.spec.delta}, {self.coords()})"


def identity(spec: JordanSpec) -> JordanElement:
    vec = [0] * spec.dim
    for i in range(spec.size):
        vec[i] = 1
    return JordanElement.from_coords(spec, vec)


def basis_element(spec: JordanSpec, idx: int) -> JordanElement:
    vec = [0] * spec.dim
    vec[idx] = 1
    return JordanElement.from_coords(spec, vec)


def diagonal_element(spec: JordanSpec, values) -> JordanElement:
    values = tuple(values)
    if len(values) != spec.size:
        raise SpecMismatch(f"expected {spec.size} diagonal values")
    return JordanElement.from_coords(spec, values + (0,) * (spec.dim - spec.size))


def basis_label(spec: JordanSpec, idx: int) -> str:
    s = spec.size
    if idx < s:
        return f"E{idx}{idx}"
    t, u = divmod(idx - s, spec.delta)
    i, j = spec.pairs[t]
    return f"E{i}{j}(e{u})"


def random_element(spec: JordanSpec, rng, lo: int = -9, hi: int = 9) -> JordanElement:
    return JordanElement.from_coords(
        spec, tuple(rng.randint(lo, hi) for _ in range(spec.dim)))


# ---------------------------------------------------------------------------
# grid arithmetic (nested lists of coordinate tuples)

def _grid_from_coords(spec: JordanSpec, vec):
    s, d = spec.size, spec.delta
    zero_tail = (0,) * (d - 1)
    grid = [[None] * s for _ in range(s)]
    for i in range(s):
        grid[i][i] = (vec[i],) + zero_tail
    base = s
    for (i, j) in spec.pairs:
        x = tuple(vec[base:base + d])
        grid[i][j] = x
        grid[j][i] = cd_conj(x)
        base += d
    return grid


def _grid_matmul(a, b, size: int, delta: int):
    """Plain (nonassociative-entry) matrix product of grids."""
    out = [[None] * size for _ in range(size)]
    rng = range(size)
    if delta == 1:
        for i in rng:
            ai = a[i]
            for j in rng:
                out[i][j] = (sum(ai[l][0] * b[l][j][0] for l in rng),)
        return out
    if delta == 2:
        for i in rng:
            ai = a[i]
            for j in rng:
                a0 = a1 = 0
                for l in rng:
                    x0, x1 = ai[l]
                    y0, y1 = b[l][j]
                    a0 += x0 * y0 - x1 * y1
                    a1 += x0 * y1 + x1 * y0
                out[i][j] = (a0, a1)
        return out
    if delta == 4:
        # Hamilton product in the table's basis (e1 e2 = e3, cyclic)
        for i in rng:
            ai = a[i]
            for j in rng:
                a0 = a1 = a2 = a3 = 0
                for l in rng:
                    x0, x1, x2, x3 = ai[l]
                    y0, y1, y2, y3 = b[l][j]
                    a0 += x0 * y0 - x1 * y1 - x2 * y2 - x3 * y3
                    a1 += x0 * y1 + x1 * y0 + x2 * y3 - x3 * y2
                    a2 += x0 * y2 - x1 * y3 + x2 * y0 + x3 * y1
                    a3 += x0 * y3 + x1 * y2 - x2 * y1 + x3 * y0
                out[i][j] = (a0, a1, a2, a3)
        return out
    if delta == 8:
        # doubled Hamilton product, unrolled from the doubling table
        for i in rng:
            ai = a[i]
            for j in rng:
                a0 = a1 = a2 = a3 = a4 = a5 = a6 = a7 = 0
                for l in rng:
                    x0, x1, x2, x3, x4, x5, x6, x7 = ai[l]
                    y0, y1, y2, y3, y4, y5, y6, y7 = b[l][j]
                    a0 += x0*y0 - x1*y1 - x2*y2 - x3*y3 - x4*y4 - x5*y5 - x6*y6 - x7*y7
                    a1 += x0*y1 + x1*y0 + x2*y3 - x3*y2 + x4*y5 - x5*y4 - x6*y7 + x7*y6
                    a2 += x0*y2 - x1*y3 + x2*y0 + x3*y1 + x4*y6 + x5*y7 - x6*y4 - x7*y5
                    a3 += x0*y3 + x1*y2 - x2*y1 + x3*y0 + x4*y7 - x5*y6 + x6*y5 - x7*y4
                    a4 += x0*y4 - x1*y5 - x2*y6 - x3*y7 + x4*y0 + x5*y1 + x6*y2 + x7*y3
                    a5 += x0*y5 + x1*y4 - x2*y7 + x3*y6 - x4*y1 + x5*y0 - x6*y3 + x7*y2
                    a6 += x0*y6 + x1*y7 + x2*y4 - x3*y5 - x4*y2 + x5*y3 + x6*y0 - x7*y1
                    a7 += x0*y7 - x1*y6 + x2*y5 + x3*y4 - x4*y3 - x5*y2 + x6*y1 + x7*y0
                out[i][j] = (a0, a1, a2, a3, a4, a5, a6, a7)
        return out
    table = basis_table(delta)
    for i in rng:
        ai = a[i]
        for j in rng:
            acc = [0] * delta
            for l in rng:
                y = b[l][j]
                for s, xs in enumerate(ai[l]):
                    if xs == 0:
                        continue
                    row = table[s]
                    for t, yt in enumerate(y):
                        if yt == 0:
                            continue
                        kk, sg = row[t]
                        if sg > 0:
                            acc[kk] += xs * yt
                        else:
                            acc[kk] -= xs * yt
            out[i][j] = tuple(acc)
    return out


def _grid_sym_double(p, size: int):
    """P + P^H (conjugate transpose) entrywise."""
    out = [[None] * size for _ in range(size)]
    for i in range(size):
        for j in range(size):
            x = p[i][j]
            y = p[j][i]
            out[i][j] = (x[0] + y[0],) + tuple(
                x[s] - y[s] for s in range(1, len(x)))
    return out


def _grid_flat_dot(a, b, size: int):
    """Sum of coordinatewise products over every entry of both grids."""
    total = 0
    for i in range(size):
        for j in range(size):
            x = a[i][j]
            y = b[i][j]
            for s in range(len(x)):
                if x[s] != 0 and y[s] != 0:
                    total += x[s] * y[s]
    return total


def _grid_trace(g, size: int):
    return sum(g[i][i][0] for i in range(size))


_HALF_POW = tuple(Fraction(1, 2 ** m) for m in range(12))


def _doubled_traces_from_grid(grid, size: int, delta: int, upto: int):
    """[T(D_1), ..., T(D_upto)] for D_m = 2^(m-1) A^m; division-free.

    D_{m+1} = A D_m + (A D_m)^H and T(D_{m+1}) = 2 <A, D_m> in flat
    coordinates, so the final power needs no matrix product at all.
    """
    doubled = [_grid_trace(grid, size)]
    d = grid
    for m in range(2, upto + 1):
        doubled.append(2 * _grid_flat_dot(grid, d, size))
        if m < upto:
            d = _grid_sym_double(_grid_matmul(grid, d, size, delta), size)
    return doubled


def _scalar_doubled_traces(spec: JordanSpec, vec, upto: int):
    """delta = 1 specialization on plain scalar symmetric matrices."""
    size = spec.size
    rows = [[0] * size for _ in range(size)]
    for i in range(size):
        rows[i][i] = vec[i]
    base = size
    for (i, j) in spec.pairs:
        rows[i][j] = vec[base]
        rows[j][i] = vec[base]
        base += 1
    doubled = [sum(rows[i][i] for i in range(size))]
    d = rows
    rng = range(size)
    for m in range(2, upto + 1):
        doubled.append(2 * sum(x * y for ar, dr in zip(rows, d)
                               for x, y in zip(ar, dr)))
        if m < upto:
            cols = list(zip(*d))
            p = [[sum(x * y for x, y in zip(ar, col)) for col in cols] for ar in rows]
            d = [[p[i][j] + p[j][i] for j in rng] for i in rng]
    return doubled


def _power_traces_from_grid(grid, size: int, delta: int, upto: int):
    """[p_1, ..., p_upto] with p_m = T(A^m), exact for int/Fraction input."""
    doubled = _doubled_traces_from_grid(grid, size, delta, upto)
    return [t * _HALF_POW[m] for m, t in enumerate(doubled)]


@lru_cache(maxsize=None)
def _newton_tables(degree: int):
    """Integer-only Newton data: coefficients and final scale factors.

    With P_m = T(D_m) = 2^(m-1) p_m and f_j = sigma_j j! 2^j, Newton's
    identities become the integer recursion (f_0 = 1)

        f_j = 2 sum_{i=1..j} (-1)^(i-1) [(j-1)!/(j-i)!] f_{j-i} P_i,

    and sigma_j = f_j / (j! 2^j).
    """
    from math import factorial
    coeffs = []
    for j in range(1, degree + 1):
        row = []
        for i in range(1, j + 1):
            c = factorial(j - 1) // factorial(j - i)
            row.append((j - i, c if i % 2 else -c))
        coeffs.append(tuple(row))
    scales = tuple(Fraction(1, factorial(j) * 2 ** j) for j in range(1, degree + 1))
    return tuple(coeffs), scales


def _char_from_doubled(doubled, degree: int):
    coeffs, scales = _newton_tables(degree)
    f = [1]
    for row in coeffs:
        acc = 0
        for idx, c in row:
            acc += c * f[idx] * doubled[len(f) - 1 - idx]
        f.append(2 * acc)
    return tuple(fj * s for fj, s in zip(f[1:], scales))


def _norm_from_doubled(doubled, degree: int):
    coeffs, scales = _newton_tables(degree)
    f = [1]
    for row in coeffs:
        acc = 0
        for idx, c in row:
            acc += c * f[idx] * doubled[len(f) - 1 - idx]
        f.append(2 * acc)
    return f[degree] * scales[degree - 1]


# ---------------------------------------------------------------------------
# public operations

def jordan_mul(a: JordanElement, b: JordanElement) -> JordanElement:
    """Symmetrized product (AB + BA)/2."""
    a._check(b)
    spec = a.spec
    size, delta = spec.size, spec.delta
    ga = a.grid()
    gb = b.grid()
    diag = []
    for i in range(size):
        # ((AB+BA)/2)_ii = sum_l Re(A_il conj(B_il)) = flat dot of row i
        acc = 0
        for l in range(size):
            x = ga[i][l]
            y = gb[i][l]
            for s in range(delta):
                if x[s] != 0 and y[s] != 0:
                    acc += x[s] * y[s]
        diag.append(acc)
    table = basis_table(delta) if delta > 1 else None
    upper = []
    for (i, j) in spec.pairs:
        acc = [0] * delta
        for l in range(size):
            for x, y in ((ga[i][l], gb[l][j]), (gb[i][l], ga[l][j])):
                if delta == 1:
                    if x[0] != 0 and y[0] != 0:
                        acc[0] += x[0] * y[0]
                    continue
                for s, xs in enumerate(x):
                    if xs == 0:
                        continue
                    row = table[s]
                    for t, yt in enumerate(y):
                        if yt == 0:
                            continue
                        kk, sg = row[t]
                        if sg > 0:
                            acc[kk] += xs * yt
                        else:
                            acc[kk] -= xs * yt
        upper.append(tuple(HALF * v for v in acc))
    return JordanElement(spec, diag, upper)


def jordan_power(a: JordanElement, m: int) -> JordanElement:
    """Left-iterated power, A^0 = I, A^{m+1} = A * A^m."""
    if m < 0:
        raise ValueError("negative power")
    result = identity(a.spec)
    for _ in range(m):
        result = jordan_mul(a, result)
    return result


def generic_trace(a: JordanElement):
    return sum(a.diag)


def power_traces(a: JordanElement, upto: int):
    spec = a.spec
    return _power_traces_from_grid(a.grid(), spec.size, spec.delta, upto)


def _newton_coeffs(p, degree: int):
    """sigma_1..sigma_degree from power sums via Newton's identities."""
    e = [1]
    for j in range(1, degree + 1):
        acc = 0
        sign = 1
        for i in range(1, j + 1):
            acc = acc + sign * e[j - i] * p[i - 1]
            sign = -sign
        e.append(acc * Fraction(1, j))
    return tuple(e[1:])


def char_coeffs(a: JordanElement) -> tuple:
    """(sigma_1, ..., sigma_{k+1}): generic characteristic coefficients."""
    spec = a.spec
    q = spec.degree
    doubled = _doubled_traces_from_grid(a.grid(), spec.size, spec.delta, q)
    return _char_from_doubled(doubled, q)


def generic_norm(a: JordanElement):
    """Q(A) = sigma_{k+1}; Q(I) = 1 and Q(diagonal) is the product."""
    return char_coeffs(a)[-1]


def jordan_rank(a: JordanElement, tol=0) -> int:
    """Largest j with sigma_j != 0 (float backend: above a scaled tolerance)."""
    sigma = char_coeffs(a)
    if tol:
        norm = sum(float(c) * float(c) for c in a.coords()) ** 0.5
        nonzero = [j + 1 for j, s in enumerate(sigma)
                   if abs(float(s)) > tol * (1 + norm ** (j + 1))]
    else:
        nonzero = [j + 1 for j, s in enumerate(sigma) if s != 0]
    return max(nonzero, default=0)


def mult_operator(a: JordanElement) -> LinearOperator:
    """Matrix of B -> A*B in canonical coordinates."""
    spec = a.spec
    cols = [jordan_mul(a, basis_element(spec, j)).coords() for j in range(spec.dim)]
    return LinearOperator(tuple(zip(*cols)), "V", "V")


def quadratic_rep(a: JordanElement) -> LinearOperator:
    """P(A) = 2 M(A)^2 - M(A^2)."""
    m = mult_operator(a)
    m2 = mult_operator(jordan_mul(a, a))
    mm = m.compose(m)
    mat = tuple(tuple(2 * x - y for x, y in zip(r1, r2))
                for r1, r2 in zip(mm.matrix, m2.matrix))
    return LinearOperator(mat, "V", "V")


def jordan_identity_residual(a: JordanElement, b: JordanElement):
    """Max residual coordinate of (A*B)*A^2 - A*(B*A^2)."""
    a2 = jordan_mul(a, a)
    lhs = jordan_mul(jordan_mul(a, b), a2)
    rhs = jordan_mul(a, jordan_mul(b, a2))
    return (lhs - rhs).max_abs()


@lru_cache(maxsize=None)
def norm_form(spec: JordanSpec) -> PolarizedForm:
    """The generic norm as a polarizable degree-(k+1) form on coordinates."""
    size, delta, q = spec.size, spec.delta, spec.degree

    if delta == 1:
        def evaluate(vec):
            return _norm_from_doubled(_scalar_doubled_traces(spec, vec, q), q)
    else:
        def evaluate(vec):
            grid = _grid_from_coords(spec, vec)
            return _norm_from_doubled(
                _doubled_traces_from_grid(grid, size, delta, q), q)

    return PolarizedForm(degree=q, dim=spec.dim, func=evaluate,
                         name=f"Q[k={spec.k},delta={spec.delta}]")
