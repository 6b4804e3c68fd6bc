"""The deformed (star) product with time-dependent deformation matrix.

The product of two functions is the exponential bidifferential series

    f * g = sum_n (1/n!) (i/2)^n theta^{i1 j1}(t) ... theta^{in jn}(t)
                  (d_{i1}..d_{in} f) (d_{j1}..d_{jn} g)

with spatial indices only; theta(t) is an antisymmetric 3x3 matrix whose
entries are polynomials in t.  Because no time derivative appears inside the
series, t acts as a parameter: the product is associative fiberwise in t and
terminates on polynomials.

Consequences implemented and tested here:

* spatial partials are derivations of the product;
* the time partial is NOT: its defect is (1/2) i thetadot^{ij} (d_i f)*(d_j g)
  (``dt_leibniz_defect``);
* conjugation is an anti-homomorphism, conj(f*g) = conj(g)*conj(f)
  (``star_conj_defect``);
* the integral trace property (integral of f*g equals integral of fg) is not
  expressible on polynomials and is verified numerically by the grid module.

On monomials the series collapses to a finite sum over "contraction
matrices": nonnegative integers m[i][j] counting how many derivative pairs
hit the ordered index pair (i, j).  Only the six off-diagonal entries
matter, and each is bounded by the spatial exponents, so the enumeration
below is exact and fast.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Union

from .rationals import CRat
from .poly import Poly

EntryLike = Union[Poly, CRat, int, Fraction]

# (i/2)^n for the series prefactor; extended on demand.
_IHALF: list[CRat] = [CRat(1)]


def _ihalf(n: int) -> CRat:
    while len(_IHALF) <= n:
        _IHALF.append(_IHALF[-1] * CRat(0, Fraction(1, 2)))
    return _IHALF[n]


_ORDERED_PAIRS = ((1, 2), (2, 1), (1, 3), (3, 1), (2, 3), (3, 2))


class ThetaProfile:
    """Antisymmetric 3x3 deformation matrix with entries polynomial in t.

    Constructed from the upper triangle: a mapping {(i, j): entry} with
    1 <= i < j <= 3.  Entries may be Poly (in t only), CRat, Fraction or
    int.  The lower triangle is filled by antisymmetry and the diagonal is
    zero.
    """

    __slots__ = ("_upper", "_pow_cache", "_prod_cache")

    def __init__(self, entries: Mapping[tuple[int, int], EntryLike] | None = None):
        upper: dict[tuple[int, int], Poly] = {}
        if entries:
            for (i, j), v in entries.items():
                if not (1 <= i < j <= 3):
                    raise ValueError(f"theta entry index {(i, j)} must satisfy 1 <= i < j <= 3")
                p = v if isinstance(v, Poly) else Poly.const(v)
                if not p.uses_only(("t",)):
                    raise ValueError(f"theta entry {(i, j)} may only involve t, got {p!r}")
                if not p.is_real_valued():
                    raise ValueError(f"theta entry {(i, j)} must be real")
                if p:
                    upper[(i, j)] = p
        object.__setattr__(self, "_upper", upper)
        object.__setattr__(self, "_pow_cache", {})
        object.__setattr__(self, "_prod_cache", {})

    def __setattr__(self, name, value):
        raise AttributeError("ThetaProfile is immutable")

    @classmethod
    def zero(cls) -> "ThetaProfile":
        return cls()

    @classmethod
    def constant(cls, t12: EntryLike = 0, t13: EntryLike = 0,
                 t23: EntryLike = 0) -> "ThetaProfile":
        return cls({(1, 2): t12, (1, 3): t13, (2, 3): t23})

    def entry(self, i: int, j: int) -> Poly:
        """Signed entry theta^{ij}; antisymmetry is built in."""
        if i == j:
            return Poly.zero()
        if i < j:
            return self._upper.get((i, j), Poly.zero())
        return -self._upper.get((j, i), Poly.zero())

    def upper_entries(self) -> dict[tuple[int, int], Poly]:
        return dict(self._upper)

    def is_zero(self) -> bool:
        return not self._upper

    def theta_dot(self) -> "ThetaProfile":
        return ThetaProfile({k: v.partial(0) for k, v in self._upper.items()})

    def is_static(self) -> bool:
        return self.theta_dot().is_zero()

    def __eq__(self, other) -> bool:
        if not isinstance(other, ThetaProfile):
            return NotImplemented
        return self._upper == other._upper

    def __hash__(self) -> int:
        return hash(frozenset(self._upper.items()))

    def __repr__(self) -> str:
        return f"ThetaProfile({self._upper!r})"

    # -- caches used by the star expansion ---------------------------------

    def _entry_power(self, i: int, j: int, m: int) -> Poly:
        key = (i, j, m)
        hit = self._pow_cache.get(key)
        if hit is None:
            hit = self.entry(i, j) ** m
            self._pow_cache[key] = hit
        return hit

    def _contraction_product(self, m6: tuple[int, ...]) -> Poly:
        """Product of theta entry powers over the six ordered pairs."""
        hit = self._prod_cache.get(m6)
        if hit is None:
            hit = Poly.one()
            for (i, j), m in zip(_ORDERED_PAIRS, m6):
                if m:
                    hit = hit * self._entry_power(i, j, m)
            self._prod_cache[m6] = hit
        return hit


@dataclass(frozen=True)
class StarContext:
    """Carries the deformation profile and the eps truncation order.

    eps_cutoff=None keeps all eps orders; an integer N drops every term of
    eps-degree > N as soon as it would be produced, which is both the
    mod-eps^{N+1} semantics of the gauge sector and a large speedup.
    """

    theta: ThetaProfile
    eps_cutoff: int | None = None

    def reduce(self, p: Poly) -> Poly:
        if self.eps_cutoff is None:
            return p
        return p.truncate_eps(self.eps_cutoff)


def star(f: Poly, g: Poly, ctx: StarContext) -> Poly:
    """Exact star product of two polynomials (terminating series)."""
    theta = ctx.theta
    cutoff = ctx.eps_cutoff
    if theta.is_zero():
        return ctx.reduce(f * g)

    # Caps for each ordered pair: 0 when the entry vanishes identically.
    caps = [0 if theta.entry(i, j).is_zero() else 10 ** 9
            for (i, j) in _ORDERED_PAIRS]
    c12, c21, c13, c31, c23, c32 = caps

    out: dict[tuple[int, ...], CRat] = {}
    fterms = list(f.items())
    gterms = list(g.items())
    for ef, cf in fterms:
        a1, a2, a3 = ef[1], ef[2], ef[3]
        for eg, cg in gterms:
            if cutoff is not None and ef[4] + eg[4] > cutoff:
                continue
            b1, b2, b3 = eg[1], eg[2], eg[3]
            base = cf * cg
            t0 = ef[0] + eg[0]
            e4 = ef[4] + eg[4]
            for m12 in range(min(a1, b2, c12) + 1):
                for m13 in range(min(a1 - m12, b3, c13) + 1):
                    for m21 in range(min(a2, b1, c21) + 1):
                        for m23 in range(min(a2 - m21, b3 - m13, c23) + 1):
                            for m31 in range(min(a3, b1 - m21, c31) + 1):
                                for m32 in range(min(a3 - m31, b2 - m12, c32) + 1):
                                    n = m12 + m13 + m21 + m23 + m31 + m32
                                    # row sums differentiate f, column sums g
                                    r1, r2, r3 = m12 + m13, m21 + m23, m31 + m32
                                    s1, s2, s3 = m21 + m31, m12 + m32, m13 + m23
                                    num = (math.perm(a1, r1) * math.perm(a2, r2)
                                           * math.perm(a3, r3)
                                           * math.perm(b1, s1) * math.perm(b2, s2)
                                           * math.perm(b3, s3))
                                    if not num:
                                        continue
                                    den = (math.factorial(m12) * math.factorial(m13)
                                           * math.factorial(m21) * math.factorial(m23)
                                           * math.factorial(m31) * math.factorial(m32))
                                    coeff = base * _ihalf(n) * Fraction(num, den)
                                    xk = (a1 - r1 + b1 - s1,
                                          a2 - r2 + b2 - s2,
                                          a3 - r3 + b3 - s3)
                                    if n == 0:
                                        key = (t0, *xk, e4)
                                        acc = out.get(key)
                                        tot = coeff if acc is None else acc + coeff
                                        if tot.is_zero():
                                            out.pop(key, None)
                                        else:
                                            out[key] = tot
                                        continue
                                    tp = theta._contraction_product(
                                        (m12, m21, m13, m31, m23, m32))
                                    for et, ct in tp.items():
                                        key = (t0 + et[0], *xk, e4)
                                        c = coeff * ct
                                        acc = out.get(key)
                                        tot = c if acc is None else acc + c
                                        if tot.is_zero():
                                            out.pop(key, None)
                                        else:
                                            out[key] = tot
    res = Poly.__new__(Poly)
    object.__setattr__(res, "_terms", out)
    return res


def star_commutator(f: Poly, g: Poly, ctx: StarContext) -> Poly:
    return star(f, g, ctx) - star(g, f, ctx)


def dt_leibniz_defect(f: Poly, g: Poly, ctx: StarContext) -> Poly:
    """d_t(f*g) - (d_t f)*g - f*(d_t g).

    Identically equal to (1/2) i thetadot^{ij} (d_i f)*(d_j g); the equality
    is a test contract, this function computes the left side from scratch.
    """
    return (star(f, g, ctx).partial(0)
            - star(f.partial(0), g, ctx)
            - star(f, g.partial(0), ctx))


def dt_leibniz_correction(f: Poly, g: Poly, ctx: StarContext) -> Poly:
    """(1/2) i thetadot^{ij} (d_i f)*(d_j g), the closed form of the defect."""
    dot = ctx.theta.theta_dot()
    acc = Poly.zero()
    for i in (1, 2, 3):
        for j in (1, 2, 3):
            ent = dot.entry(i, j)
            if ent.is_zero():
                continue
            acc = acc + ent * star(f.partial(i), g.partial(j), ctx)
    return ctx.reduce(CRat(0, Fraction(1, 2)) * acc)


def star_conj_defect(f: Poly, g: Poly, ctx: StarContext) -> Poly:
    """conj(f*g) - conj(g)*conj(f); identically zero."""
    return star(f, g, ctx).conj() - star(g.conj(), f.conj(), ctx)


def spatial_derivation_defect(f: Poly, g: Poly, i: int, ctx: StarContext) -> Poly:
    """d_i(f*g) - (d_i f)*g - f*(d_i g) for spatial i; identically zero."""
    if not 1 <= i <= 3:
        raise ValueError("spatial index must be 1..3")
    return (star(f, g, ctx).partial(i)
            - star(f.partial(i), g, ctx)
            - star(f, g.partial(i), ctx))


def star_exp(lam: Poly, order: int, ctx: StarContext) -> Poly:
    """Truncated star exponential U = sum_{n<=order} (eps*lam)^{*n} / n!.

    lam must be purely imaginary valued (so that conj(U) is the inverse mod
    eps^{order+1}) and must not itself involve eps.
    """
    if not isinstance(order, int) or order < 0:
        raise ValueError("star_exp order must be a nonnegative int")
    if lam.eps_degree() > 0:
        raise ValueError("star_exp argument must not involve eps")
    if not lam.is_imaginary_valued():
        raise ValueError("star_exp argument must be purely imaginary valued")
    n_max = order
    if ctx.eps_cutoff is not None:
        n_max = min(n_max, ctx.eps_cutoff)
    eps = Poly.variable("eps")
    out = Poly.one()
    power = Poly.one()
    eps_pow = Poly.one()
    fact = 1
    for n in range(1, n_max + 1):
        power = star(power, lam, ctx)
        eps_pow = eps_pow * eps
        fact *= n
        out = out + eps_pow * power * Fraction(1, fact)
    return out
