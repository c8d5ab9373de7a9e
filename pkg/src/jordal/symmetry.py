"""Point-level symmetry checks: norm similarities, automorphisms, derivations.

Nothing here represents a group; we sample finitely many constructible
operators (signed permutation conjugations and structural maps) and verify
the identities they are supposed to satisfy.
"""

from fractions import Fraction

from .jordan import (JordanElement, JordanSpec, basis_element, identity,
                     jordan_mul, random_element)
from .linalg import LinearOperator
from .reconstruction import NormFrame, SingularPoint, inner, structural_map, tau


class DegenerateSample(ValueError):
    """A sampled operator failed its construction probes."""


def _operator_from_action(spec: JordanSpec, action) -> LinearOperator:
    cols = [action(basis_element(spec, j)).coords() for j in range(spec.dim)]
    return LinearOperator(tuple(zip(*cols)), "V", "V")


def _conjugate_signed_permutation(a: JordanElement, perm, signs) -> JordanElement:
    """P A P^H for P the signed permutation e_i -> signs[i] e_perm[i]."""
    spec = a.spec
    grid = a.grid()
    diag = [grid[perm[i]][perm[i]][0] for i in range(spec.size)]
    upper = []
    for (i, j) in spec.pairs:
        x = grid[perm[i]][perm[j]]
        s = signs[i] * signs[j]
        upper.append(tuple(s * c for c in x))
    return JordanElement(spec, diag, upper)


class GroupElementSample:
    """A sampled norm-similarity operator with a provenance label.

    Construction probes that Q(g M) = lam * Q(M) for one constant lam on
    several random M; anything else raises DegenerateSample.
    """

    __slots__ = ("operator", "provenance", "norm_factor", "frame")

    def __init__(self, fr: NormFrame, operator: LinearOperator,
                 provenance: str, rng, probes: int = 10):
        lam = None
        for _ in range(probes):
            m = fr.random_invertible(rng)
            qm = fr.norm(m)
            qg = fr.norm(fr.element(operator.apply(m.coords())))
            ratio = Fraction(qg) / qm if not isinstance(qg, float) else qg / qm
            if lam is None:
                lam = ratio
            elif ratio != lam:
                raise DegenerateSample(
                    f"{provenance}: norm ratio not constant ({ratio} vs {lam})")
        if lam == 0:
            raise DegenerateSample(f"{provenance}: norm factor vanishes")
        object.__setattr__(self, "frame", fr)
        object.__setattr__(self, "operator", operator)
        object.__setattr__(self, "provenance", provenance)
        object.__setattr__(self, "norm_factor", lam)

    def __setattr__(self, *_):
        raise AttributeError("GroupElementSample is immutable")

    def apply(self, a: JordanElement) -> JordanElement:
        return self.frame.element(self.operator.apply(a.coords()))

    def __repr__(self):
        return f"GroupElementSample({self.provenance}, factor={self.norm_factor})"


def permutation_conjugation_sample(fr: NormFrame, rng) -> GroupElementSample:
    """Conjugation by a random signed permutation of the diagonal frame."""
    spec = fr.spec
    perm = list(range(spec.size))
    rng.shuffle(perm)
    signs = [rng.choice((1, -1)) for _ in range(spec.size)]
    op = _operator_from_action(
        spec, lambda e: _conjugate_signed_permutation(e, perm, signs))
    return GroupElementSample(fr, op, "permutation-conjugation", rng)


def structural_sample(fr: NormFrame, rng, avoid_unit_norm: bool = True) -> GroupElementSample:
    """H_A for a random A; with avoid_unit_norm, insists on Q(A) not in {0, 1, -1}."""
    while True:
        a = fr.random_invertible(rng)
        qa = fr.norm(a)
        if avoid_unit_norm and qa * qa == 1:
            continue
        return GroupElementSample(fr, structural_map(fr, a), "structural", rng)


def identity_sample(fr: NormFrame, rng) -> GroupElementSample:
    from .linalg import identity_matrix
    op = LinearOperator(tuple(tuple(r) for r in identity_matrix(fr.spec.dim)),
                        "V", "V")
    return GroupElementSample(fr, op, "identity", rng)


def composite_sample(fr: NormFrame, rng) -> GroupElementSample:
    g = permutation_conjugation_sample(fr, rng)
    h = structural_sample(fr, rng, avoid_unit_norm=False)
    return GroupElementSample(fr, g.operator.compose(h.operator), "composite", rng)


def automorphism_trichotomy(g: GroupElementSample, rng, probes: int = 5):
    """Probe three conditions: product preserved, unit fixed, pairing preserved.

    Returns (cond1, cond2, cond3) over the sampled probes and checks the
    logical couplings: 1 and 2 come together, and 1 forces 3.
    """
    fr = g.frame
    spec = fr.spec
    cond1 = True
    cond3 = True
    witnesses = []
    for _ in range(probes):
        a = random_element(spec, rng)
        b = random_element(spec, rng)
        lhs = jordan_mul(g.apply(a), g.apply(b))
        rhs = g.apply(jordan_mul(a, b))
        if lhs != rhs:
            cond1 = False
            witnesses.append(("product", a, b))
        if inner(fr, g.apply(a), g.apply(b)) != inner(fr, a, b):
            cond3 = False
            witnesses.append(("pairing", a, b))
    cond2 = g.apply(identity(spec)) == identity(spec)
    if cond1 != cond2:
        raise AssertionError("conditions 1 and 2 must agree on samples")
    if cond1 and not cond3:
        raise AssertionError("condition 1 must force condition 3")
    return cond1, cond2, cond3


def operator_symmetry_check(fr: NormFrame, a: JordanElement) -> bool:
    """tau_A, viewed as a bilinear form, equals its transpose exactly."""
    if fr.norm(a) == 0:
        raise SingularPoint("Q(A) = 0")
    return tau(fr, a).is_symmetric()


def lie_triple_residual(a: JordanElement, b: JordanElement,
                        x: JordanElement, y: JordanElement):
    """Residual of the derivation law for D = [M_A, M_B] on the pair (X, Y)."""
    def d(z):
        return jordan_mul(a, jordan_mul(b, z)) - jordan_mul(b, jordan_mul(a, z))

    lhs = d(jordan_mul(x, y))
    rhs = jordan_mul(d(x), y) + jordan_mul(x, d(y))
    return (lhs - rhs).max_abs()
