"""Rank-one locus geometry: tangent frames, secant dimensions, duality.

The projectivized rank-one elements form the variety whose secant behavior
drives everything else in this package. All dimension counts here are exact
integer statements computed over the rationals.
"""

from fractions import Fraction

from .composition import cd_conj, cd_mul
from .jordan import (JordanElement, JordanSpec, SpecMismatch, char_coeffs,
                     jordan_rank, mult_operator)
from .linalg import exact_det, exact_nullspace, exact_rank, exact_solve, proportional
from .polarization import PolarizedForm, covector_slot, full_polarize, partial_polarize
from .reconstruction import NormFrame, inner, tau, tau_covector, unit_pairing


class DegenerateFrame(ValueError):
    """Tangent frame with unexpected rank (bad sample)."""


class SingularConfiguration(ValueError):
    """A sampled configuration hit the norm hypersurface; resample."""


class DegenerateIntersection(ValueError):
    """Tangent intersection with the wrong dimension or degenerate pairing."""


def _outer_sym(spec: JordanSpec, u, v) -> JordanElement:
    """The Hermitian element u v^H + v u^H from two coordinate vectors."""
    diag = []
    for ui, vi in zip(u, v):
        prod = cd_mul(ui, cd_conj(vi), spec.delta)
        diag.append(2 * prod[0])
    upper = []
    for (i, j) in spec.pairs:
        a = cd_mul(u[i], cd_conj(v[j]), spec.delta)
        b = cd_mul(v[i], cd_conj(u[j]), spec.delta)
        upper.append(tuple(x + y for x, y in zip(a, b)))
    return JordanElement(spec, diag, upper)


class RankOnePoint:
    """A column vector v over the coordinate algebra and x = v v^H.

    One coordinate of v is required to be scalar so that the entries of v
    generate an associative subalgebra and x genuinely has rank one. The
    index of that coordinate is kept as the chart for tangent computations.
    """

    __slots__ = ("spec", "v", "element", "scalar_slot")

    def __init__(self, spec: JordanSpec, v):
        v = tuple(tuple(c) for c in v)
        if len(v) != spec.size:
            raise ValueError(f"need {spec.size} coordinates, got {len(v)}")
        object.__setattr__(self, "spec", spec)
        object.__setattr__(self, "v", v)
        scalar = [i for i, vi in enumerate(v) if all(c == 0 for c in vi[1:])]
        # a chart needs a nonzero scalar coordinate; settle for any scalar one
        slot = next((i for i in scalar if v[i][0] != 0),
                    scalar[0] if scalar else None)
        object.__setattr__(self, "scalar_slot", slot)
        diag = [sum(c * c for c in vi) for vi in v]
        upper = [cd_mul(v[i], cd_conj(v[j]), spec.delta) for (i, j) in spec.pairs]
        x = JordanElement(spec, diag, upper)
        if x.is_zero():
            raise ValueError("zero vector does not define a point")
        sigma = char_coeffs(x)
        if any(s != 0 for s in sigma[1:]):
            raise ValueError("v v^H is not rank one; coordinates of v "
                             "probably fail to associate")
        object.__setattr__(self, "element", x)

    def __setattr__(self, *_):
        raise AttributeError("RankOnePoint is immutable")

    def __repr__(self):
        return f"RankOnePoint({self.spec.k},{self.spec.delta})"


def sample_rank_one(spec: JordanSpec, rng, lo: int = -9, hi: int = 9) -> RankOnePoint:
    """Random rank-one point with small integer coordinates.

    A randomly rotated coordinate of v is forced scalar, which keeps the
    entries of v inside a two-generator (hence associative) subalgebra even
    over the octonions.
    """
    if not spec.is_jordan:
        raise SpecMismatch(
            "octonion columns of size >= 4 generically give v v^H of rank > 1, "
            "so rejection sampling would not terminate")
    size, delta = spec.size, spec.delta
    nonzero = [c for c in range(lo, hi + 1) if c != 0]
    while True:
        v = [[rng.randint(lo, hi) for _ in range(delta)] for _ in range(size)]
        scalar_slot = rng.randrange(size)
        v[scalar_slot] = [rng.choice(nonzero)] + [0] * (delta - 1)
        try:
            return RankOnePoint(spec, v)
        except ValueError:
            continue


class TangentFrame:
    """Spanning set w v^H + v w^H of the tangent space at a rank-one point."""

    __slots__ = ("base", "vectors")

    def __init__(self, base: RankOnePoint, vectors):
        object.__setattr__(self, "base", base)
        object.__setattr__(self, "vectors", tuple(vectors))

    def __setattr__(self, *_):
        raise AttributeError("TangentFrame is immutable")

    def rows(self):
        return [list(vec.coords()) for vec in self.vectors]

    def rank(self) -> int:
        return exact_rank(self.rows())


def expected_tangent_rank(spec: JordanSpec) -> int:
    """Affine dimension of the rank-one cone: k*delta + 1."""
    return spec.k * spec.delta + 1


def tangent_frame(x: RankOnePoint, check: bool = True) -> TangentFrame:
    """Differentiate (v+tw)(v+tw)^H at t=0 over chart coordinate directions w.

    The directions keep the scalar slot of v scalar, so every perturbed
    vector still has pairwise associating entries and the curve stays inside
    the rank-one cone. That chart has exactly k*delta + 1 directions; outside
    it (nonassociative deltas) the naive derivative leaves the cone.
    """
    spec = x.spec
    size, delta = spec.size, spec.delta
    if x.scalar_slot is None:
        raise DegenerateFrame("point has no scalar chart coordinate")
    vectors = []
    for p in range(size):
        for s in range(delta):
            if p == x.scalar_slot and s > 0:
                continue
            w = [(0,) * delta] * size
            w[p] = tuple(int(t == s) for t in range(delta))
            vectors.append(_outer_sym(spec, w, x.v))
    fr = TangentFrame(x, vectors)
    if check and fr.rank() != expected_tangent_rank(spec):
        raise DegenerateFrame(
            f"tangent rank {fr.rank()} != {expected_tangent_rank(spec)}")
    return fr


def terracini_expected(spec: JordanSpec, l: int) -> int:
    """(l+1)(k delta + 1) - delta l(l+1)/2, capped at the ambient dimension."""
    raw = (l + 1) * (spec.k * spec.delta + 1) - spec.delta * l * (l + 1) // 2
    return min(spec.dim, raw)


def terracini_dim(spec: JordanSpec, l: int, rng) -> int:
    """Measured rank of l+1 stacked tangent frames at random points."""
    if not 0 <= l <= spec.k:
        raise ValueError(f"l must lie in [0, {spec.k}]")
    rows = []
    for _ in range(l + 1):
        rows.extend(tangent_frame(sample_rank_one(spec, rng)).rows())
    return exact_rank(rows)


def secant_membership(a: JordanElement, l: int) -> bool:
    """Whether A lies on the l-th secant locus, i.e. has rank at most l+1."""
    if not 0 <= l <= a.spec.k:
        raise ValueError(f"l must lie in [0, {a.spec.k}]")
    sigma = char_coeffs(a)
    return all(s == 0 for s in sigma[l + 1:])


def rank_one_double_slot(fr: NormFrame, x: RankOnePoint, fillers):
    """Q(x, x, C_3, ..., C_q); vanishes identically on the rank-one cone."""
    args = [x.element.coords(), x.element.coords()]
    args.extend(c.coords() for c in fillers)
    return full_polarize(fr.form, args)


def dual_point(fr: NormFrame, x: RankOnePoint, a: JordanElement):
    """The hypersurface point x' cut out by x and A, with its tangent covector.

    Returns (x', tau_A(x)). x' = A - [Q(A) / (q Q(x,A,...,A))] x lands on
    {Q = 0} exactly, and tau_A(x) is the (projective) tangent hyperplane of
    the hypersurface there: it is proportional to the gradient covector of Q
    at x' and kills the gradient's nullspace.
    """
    q = fr.q
    qa = fr.norm(a)
    if qa == 0:
        raise SingularConfiguration("Q(A) = 0")
    xe = x.element
    pairing = partial_polarize(fr.form, a.coords(), q - 1, [xe.coords()])
    if pairing == 0:
        raise SingularConfiguration("Q(x, A, ..., A) = 0")
    xp = a - xe.scale(Fraction(qa) / (q * pairing))
    assert fr.norm(xp) == 0
    cov = tau_covector(fr, a, xe)
    grad_a = covector_slot(fr.form, [a.coords()] * (q - 1))
    mixed = covector_slot(fr.form, [a.coords()] * (q - 2) + [xe.coords()])
    coef = (q - 1) * qa * Fraction(1, q) / pairing
    displayed = tuple(g - coef * m for g, m in zip(grad_a, mixed))
    assert proportional(cov, displayed)
    hyper_grad = covector_slot(fr.form, [xp.coords()] * (q - 1))
    if all(v == 0 for v in hyper_grad):
        raise SingularConfiguration("x' is a singular hypersurface point")
    for w in exact_nullspace([list(hyper_grad)]):
        assert sum(c * t for c, t in zip(cov, w)) == 0
    return xp, cov


def homogeneity_witness(fr: NormFrame, a: JordanElement, b: JordanElement,
                        x: RankOnePoint) -> JordanElement:
    """tau_A^{-1} tau_B applied to a rank-one point; stays rank one."""
    if fr.norm(a) == 0 or fr.norm(b) == 0:
        raise SingularConfiguration("need Q(A) != 0 and Q(B) != 0")
    target = tau_covector(fr, b, x.element)
    ta = tau(fr, a)
    y = fr.element(exact_solve([list(r) for r in ta.matrix], list(target)))
    assert jordan_rank(y) == 1
    return y


def tangent_intersection(fr: NormFrame, xa: RankOnePoint, xb: RankOnePoint):
    """Basis of T_A int T_B via stacked annihilator covectors."""
    fa = tangent_frame(xa)
    fb = tangent_frame(xb)
    stacked = []
    for frame_rows in (fa.rows(), fb.rows()):
        stacked.extend(list(row) for row in exact_nullspace(frame_rows))
    return exact_nullspace(stacked)


def product_projection(fr: NormFrame, xa: RankOnePoint, xb: RankOnePoint,
                       require_expected_dim: bool = True) -> JordanElement:
    """Orthogonal projection of the distinguished multiple of I.

    Projects [(k+1)^2 Q(I,..,I,A) Q(I,..,I,B) - k(k+1)/2 Q(I,..,I,A,B)] I
    onto the intersection of the two tangent spaces; for generic rank-one
    pairs this reproduces the bilinear product of the two points.
    """
    spec = fr.spec
    k, q = spec.k, fr.q
    basis = tangent_intersection(fr, xa, xb)
    if require_expected_dim and len(basis) != spec.delta:
        raise DegenerateIntersection(
            f"intersection dimension {len(basis)} != {spec.delta}")
    if not basis:
        raise DegenerateIntersection("empty tangent intersection")
    a, b = xa.element, xb.element
    pa = unit_pairing(fr, a)
    pb = unit_pairing(fr, b)
    cross = partial_polarize(fr.form, fr.unit_coords, q - 2,
                             [a.coords(), b.coords()])
    scal = (k + 1) * (k + 1) * pa * pb - Fraction(k * (k + 1), 2) * cross
    elems = [fr.element(w) for w in basis]
    gram = [[inner(fr, wi, wj) for wj in elems] for wi in elems]
    if exact_det([list(r) for r in gram]) == 0:
        raise DegenerateIntersection("intersection meets its orthogonal space")
    # <scal*I, w> = scal * Q(I,...,I,w) because tau_I fixes I
    rhs = [scal * unit_pairing(fr, w) for w in elems]
    coeffs = exact_solve(gram, rhs)
    out = JordanElement.zero(spec)
    for c, w in zip(coeffs, elems):
        out = out + w.scale(c)
    return out


def expected_mult_kernel_dim(spec: JordanSpec) -> int:
    """k + delta k(k-1)/2: nullity of multiplication by a rank-one element."""
    return spec.k + spec.delta * spec.k * (spec.k - 1) // 2


def mult_kernel_dim(x: RankOnePoint) -> int:
    """Measured nullity of B -> x * B."""
    op = mult_operator(x.element)
    return x.spec.dim - exact_rank([list(r) for r in op.matrix])


def cone_vertex_stack(form: PolarizedForm, rng, rows=None,
                      lo: int = -9, hi: int = 9):
    """Stack of covectors v -> F(v, A_i, ..., A_i) for random A_i."""
    dim, q = form.dim, form.degree
    if rows is None:
        rows = dim + 2
    out = []
    for _ in range(rows):
        a = tuple(rng.randint(lo, hi) for _ in range(dim))
        out.append(list(covector_slot(form, [a] * (q - 1))))
    return out


def cone_vertex_check(form: PolarizedForm, rng, rows=None) -> bool:
    """True iff no nonzero v kills every slot: the zero locus is not a cone."""
    stack = cone_vertex_stack(form, rng, rows)
    return exact_rank(stack) == form.dim
