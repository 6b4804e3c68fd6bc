"""Differential forms over the deformed algebra.

Basis one-forms are dt, dx1, dx2, dx3.  They anticommute with each other,
and a wedge monomial is stored as a 4-bit mask (bit 0 = dt, bit k = dxk)
whose factors are read in increasing bit order.  A form is a mask -> Poly
mapping with every coefficient standing to the LEFT of its monomial; this
"normal order" is a real constraint because the basis one-forms do not
commute with functions:

    dx^j g = g dx^j - (1/2) i thetadot^{ij} (d_i g) dt,        dt g = g dt.

The correction is forced by requiring d to satisfy the graded Leibniz rule
even though the time derivative is not a derivation of the star product:
the dt coefficient picked up while reordering exactly cancels the time
non-Leibniz defect.  Consequences, all tested:

    d(d(w)) = 0
    d(a ^ b) = d(a) ^ b + (-1)^p a ^ d(b)       (p = degree of a)
    conj(a ^ b) = conj(b) ^ conj(a)

Conjugation of a wedge monomial reverses its factors, hence the
(-1)^{p(p-1)/2} sign, and leaves the conjugated coefficient on the right;
``form_conj`` moves it back into normal order.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping

from .rationals import CRat
from .poly import Poly
from .star import StarContext, star

_HALF_I = CRat(0, Fraction(1, 2))

_ALL_MASKS = range(16)


def _degree(mask: int) -> int:
    return bin(mask).count("1")


def _prepend_sign(mu: int, mask: int) -> int:
    """Sign from normal-ordering e_mu ^ (monomial of mask); 0 if absorbed."""
    bit = 1 << mu
    if mask & bit:
        return 0
    below = mask & (bit - 1)
    return -1 if _degree(below) & 1 else 1


def _wedge_masks(m1: int, m2: int) -> tuple[int, int]:
    """(sign, mask) for (monomial m1) ^ (monomial m2); sign 0 on overlap."""
    if m1 & m2:
        return 0, 0
    inv = 0
    rest = m1
    while rest:
        low = rest & -rest
        inv += _degree(m2 & (low - 1))
        rest ^= low
    return (-1 if inv & 1 else 1), m1 | m2


class DifferentialForm:
    """Normal-ordered form: {mask: coefficient}, coefficient on the left."""

    __slots__ = ("_parts",)

    def __init__(self, parts: Mapping[int, Poly] | None = None):
        store: dict[int, Poly] = {}
        if parts:
            for mask, p in parts.items():
                if not isinstance(mask, int) or not 0 <= mask < 16:
                    raise ValueError(f"wedge mask must be 0..15, got {mask!r}")
                if not isinstance(p, Poly):
                    raise TypeError("form coefficients must be Poly")
                if p:
                    store[mask] = p
        object.__setattr__(self, "_parts", store)

    def __setattr__(self, name, value):
        raise AttributeError("DifferentialForm is immutable")

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls) -> "DifferentialForm":
        return cls()

    @classmethod
    def from_function(cls, f: Poly) -> "DifferentialForm":
        return cls({0: f})

    @classmethod
    def basis(cls, mu: int) -> "DifferentialForm":
        """dt for mu=0, dx1..dx3 for mu=1..3."""
        if not 0 <= mu <= 3:
            raise ValueError("basis index must be 0..3")
        return cls({1 << mu: Poly.one()})

    @classmethod
    def _raw(cls, parts: dict[int, Poly]) -> "DifferentialForm":
        res = cls.__new__(cls)
        object.__setattr__(res, "_parts", parts)
        return res

    # -- inspection ---------------------------------------------------------

    def items(self) -> Iterable[tuple[int, Poly]]:
        return self._parts.items()

    def coefficient(self, mask: int) -> Poly:
        return self._parts.get(mask, Poly.zero())

    def is_zero(self) -> bool:
        return not self._parts

    def __bool__(self) -> bool:
        return bool(self._parts)

    def degrees(self) -> set[int]:
        return {_degree(m) for m in self._parts}

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    def degree(self) -> int:
        """Degree of a homogeneous form (0 for the zero form)."""
        degs = self.degrees()
        if not degs:
            return 0
        if len(degs) > 1:
            raise ValueError("form is not homogeneous")
        return degs.pop()

    def homogeneous_part(self, p: int) -> "DifferentialForm":
        return DifferentialForm._raw(
            {m: c for m, c in self._parts.items() if _degree(m) == p})

    def __eq__(self, other) -> bool:
        if not isinstance(other, DifferentialForm):
            return NotImplemented
        return self._parts == other._parts

    def __hash__(self) -> int:
        return hash(frozenset(self._parts.items()))

    def __repr__(self) -> str:
        if not self._parts:
            return "DifferentialForm(0)"
        names = ("dt", "dx1", "dx2", "dx3")
        bits = []
        for mask in sorted(self._parts):
            mono = "^".join(names[mu] for mu in range(4) if mask & (1 << mu))
            c = self._parts[mask]
            bits.append(f"({c!r}){mono}" if mono else f"({c!r})")
        return "DifferentialForm[" + " + ".join(bits) + "]"

    # -- linear structure ---------------------------------------------------

    def __add__(self, other: "DifferentialForm") -> "DifferentialForm":
        if not isinstance(other, DifferentialForm):
            return NotImplemented
        out = dict(self._parts)
        for m, c in other._parts.items():
            acc = out.get(m)
            c = c if acc is None else acc + c
            if c.is_zero():
                out.pop(m, None)
            else:
                out[m] = c
        return DifferentialForm._raw(out)

    def __sub__(self, other: "DifferentialForm") -> "DifferentialForm":
        if not isinstance(other, DifferentialForm):
            return NotImplemented
        return self + (-other)

    def __neg__(self) -> "DifferentialForm":
        return DifferentialForm._raw({m: -c for m, c in self._parts.items()})

    def __mul__(self, scalar) -> "DifferentialForm":
        if not isinstance(scalar, (int, Fraction, CRat)):
            return NotImplemented
        return DifferentialForm._raw(
            {m: c2 for m, c in self._parts.items()
             if (c2 := c * scalar)})

    __rmul__ = __mul__


def move_left(g: Poly, mask: int, ctx: StarContext) -> DifferentialForm:
    """Normal-order (monomial of mask) * g, i.e. move g to the far left.

    Passing g through each basis factor, rightmost first, applies
    dx^j g = g dx^j - (1/2) i thetadot^{ij} (d_i g) dt; passing through dt
    is free.  The result is a sum of normal-ordered terms.
    """
    dot = ctx.theta.theta_dot()
    # state: accumulated normal-ordered tail forms {tail_mask: coefficient}
    state: dict[int, Poly] = {0: g}
    factors = [mu for mu in range(3, -1, -1) if mask & (1 << mu)]
    for mu in factors:
        nxt: dict[int, Poly] = {}

        def _acc(m: int, c: Poly):
            if c.is_zero():
                return
            acc = nxt.get(m)
            c = c if acc is None else acc + c
            if c.is_zero():
                nxt.pop(m, None)
            else:
                nxt[m] = c

        for tail, f in state.items():
            sgn = _prepend_sign(mu, tail)
            if sgn:
                _acc((1 << mu) | tail, f * sgn)
            if mu:
                corr = Poly.zero()
                for i in (1, 2, 3):
                    ent = dot.entry(i, mu)
                    if ent.is_zero():
                        continue
                    corr = corr + ent * f.partial(i)
                if corr:
                    sgn0 = _prepend_sign(0, tail)
                    if sgn0:
                        _acc(1 | tail, corr * (_HALF_I * -sgn0))
        state = nxt
    return DifferentialForm._raw({m: ctx.reduce(c) for m, c in state.items()
                                  if ctx.reduce(c)})


def left_mul(f: Poly, w: DifferentialForm, ctx: StarContext) -> DifferentialForm:
    """f * w with f acting from the left: star-multiplies each coefficient."""
    out: dict[int, Poly] = {}
    for m, c in w.items():
        p = star(f, c, ctx)
        if p:
            out[m] = p
    return DifferentialForm._raw(out)


def form_mul(a: DifferentialForm, b: DifferentialForm,
             ctx: StarContext) -> DifferentialForm:
    """Product of forms; coefficients multiply by the star product."""
    out = DifferentialForm.zero()
    for ma, fa in a.items():
        for mb, fb in b.items():
            # (fa . Wa)(fb . Wb): normal-order Wa fb, then glue wedges.
            moved = move_left(fb, ma, ctx)
            for mm, g in moved.items():
                sgn, mk = _wedge_masks(mm, mb)
                if not sgn:
                    continue
                c = star(fa, g, ctx)
                if sgn < 0:
                    c = -c
                if c:
                    out = out + DifferentialForm._raw({mk: c})
    return out


def d(w: DifferentialForm, ctx: StarContext) -> DifferentialForm:
    """Exterior derivative: d(f . W) = sum_mu (d_mu f) . (e_mu ^ W)."""
    out: dict[int, Poly] = {}
    for mask, f in w.items():
        for mu in range(4):
            sgn = _prepend_sign(mu, mask)
            if not sgn:
                continue
            p = f.partial(mu)
            if p.is_zero():
                continue
            m2 = mask | (1 << mu)
            p = p * sgn
            acc = out.get(m2)
            p = p if acc is None else acc + p
            if p.is_zero():
                out.pop(m2, None)
            else:
                out[m2] = p
    return DifferentialForm._raw({m: ctx.reduce(c) for m, c in out.items()
                                  if ctx.reduce(c)})


def form_conj(w: DifferentialForm, ctx: StarContext) -> DifferentialForm:
    """Conjugate form.

    On a normal-ordered term f . W the conjugation reverses the monomial,
    giving (-1)^{p(p-1)/2} W . conj(f), and the coefficient is then moved
    back to the left.  The result satisfies
    conj(a b) = conj(b) conj(a) with no extra grading sign.
    """
    out = DifferentialForm.zero()
    for mask, f in w.items():
        p = _degree(mask)
        sgn = -1 if (p * (p - 1) // 2) & 1 else 1
        part = move_left(f.conj(), mask, ctx)
        out = out + (part * sgn)
    return out


def d_leibniz_defect(a: DifferentialForm, b: DifferentialForm,
                     ctx: StarContext) -> DifferentialForm:
    """d(a b) - d(a) b - (-1)^p a d(b), summed over homogeneous parts of a.

    Identically zero: the dt correction in the bimodule relations is exactly
    what the graded Leibniz rule requires.
    """
    total = d(form_mul(a, b, ctx), ctx) - form_mul(d(a, ctx), b, ctx)
    for p in a.degrees():
        ap = a.homogeneous_part(p)
        term = form_mul(ap, d(b, ctx), ctx)
        total = total - (term * (-1 if p & 1 else 1))
    return total
