"""Normal-form arithmetic for the first Weyl algebra and its localization.

Elements are stored in graded normal form: a finite map from the integer
degree i to a nonzero coefficient f_i, denoting sum f_i(H) * v_i with

    v_i = X^i   (i > 0),      v_i = Y^(-i)   (i < 0),      v_0 = 1.

WeylElement carries Poly coefficients (the algebra generated by X, Y with
Y*X = H and X*Y = H - 1); BElement carries RatFunc coefficients (the skew
Laurent localization at Q[H] \\ {0}).  Multiplication is driven by the
structure constants (n, m) defined by  v_n v_m = (n, m) v_{n+m}.

HomogeneousElement is the X-power presentation coeff * X**degree used by
the centralizer machinery; for negative degrees it differs from the v-basis
by the unit Y^m = H (H+1) ... (H+m-1) X^(-m).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import DomainError
from .polynomials import (
    NEG_INF,
    Poly,
    RatFunc,
    falling_window,
    monic_split,
    rising_product,
    sigma_pow,
)


@lru_cache(maxsize=4096)
def structure_constant(n: int, m: int) -> Poly:
    """The polynomial (n, m) with v_n v_m = (n, m) v_{n+m}."""
    if n > 0 and m < 0:
        count = min(n, -m)
        # (H - n)(H - n + 1) ... : count ascending factors starting at H - n
        return falling_window(n, count)
    if n < 0 and m > 0:
        count = min(-n, m)
        # (H + |n| - 1)(H + |n| - 2) ... : count descending factors
        result = Poly.one()
        for j in range(count):
            result = result * Poly.linear(-n - 1 - j)
        return result
    return Poly.one()


def structure_constant_right(n: int, m: int) -> Poly:
    """The right-hand constant <n, m> with (n, m) v_{n+m} = v_{n+m} <n, m>."""
    return sigma_pow(structure_constant(n, m), -(n + m))


def _coerce_poly(value) -> Poly:
    if isinstance(value, Poly):
        return value
    if isinstance(value, (int, Fraction)):
        return Poly.constant(value)
    raise TypeError(f"cannot use {type(value).__name__} as a polynomial coefficient")


def _coerce_ratfunc(value) -> RatFunc:
    if isinstance(value, RatFunc):
        return value
    if isinstance(value, (int, Fraction, Poly)):
        return RatFunc(value if isinstance(value, Poly) else Poly.constant(value))
    raise TypeError(f"cannot use {type(value).__name__} as a rational coefficient")


class GradedElement:
    """Shared implementation for WeylElement and BElement."""

    __slots__ = ("_comp",)
    _coerce = staticmethod(_coerce_poly)

    def __init__(self, components=()):
        if isinstance(components, dict):
            components = components.items()
        comp = {}
        for degree, coeff in components:
            if not isinstance(degree, int):
                raise TypeError("graded degrees must be integers")
            c = self._coerce(coeff)
            if degree in comp:
                c = comp[degree] + c
            if c:
                comp[degree] = c
            elif degree in comp:
                del comp[degree]
        object.__setattr__(self, "_comp", comp)

    # -- inspection --------------------------------------------------------

    def components(self):
        """Graded components as ((degree, coefficient), ...) ascending."""
        return tuple(sorted(self._comp.items()))

    def coefficient(self, degree: int):
        return self._comp.get(degree)

    def support(self):
        return frozenset(self._comp)

    def mass(self) -> int:
        return len(self._comp)

    def is_zero(self) -> bool:
        return not self._comp

    def is_homogeneous(self) -> bool:
        return len(self._comp) == 1

    # -- ring operations ----------------------------------------------------

    @classmethod
    def _promote(cls, value):
        if isinstance(value, GradedElement):
            return value
        if isinstance(value, (int, Fraction, Poly)):
            return cls({0: value}) if value else cls()
        if isinstance(value, RatFunc):
            return BElement({0: value}) if value else BElement()
        return None

    @staticmethod
    def _join(a, b):
        if isinstance(a, BElement) or isinstance(b, BElement):
            return BElement, a.to_b() if isinstance(a, WeylElement) else a, (
                b.to_b() if isinstance(b, WeylElement) else b
            )
        return WeylElement, a, b

    def __add__(self, other):
        o = self._promote(other)
        if o is None:
            return NotImplemented
        cls, a, b = self._join(self, o)
        return cls(list(a._comp.items()) + list(b._comp.items()))

    __radd__ = __add__

    def __neg__(self):
        return type(self)({i: -c for i, c in self._comp.items()})

    def __sub__(self, other):
        o = self._promote(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            # central scalars act componentwise; H-coefficients must pass
            # through the shift, so they take the general product below
            if not other:
                return type(self)()
            return type(self)({i: c * other for i, c in self._comp.items()})
        o = self._promote(other)
        if o is None:
            return NotImplemented
        cls, a, b = self._join(self, o)
        acc = {}
        for i, f in a._comp.items():
            for j, g in b._comp.items():
                term = f * sigma_pow(g, i) * structure_constant(i, j)
                k = i + j
                if k in acc:
                    acc[k] = acc[k] + term
                else:
                    acc[k] = term
        return cls(acc)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction, Poly, RatFunc)):
            # scalars and H-coefficients at degree 0 commute past nothing:
            # multiply on the left through the degree-0 embedding
            return self._promote(other) * self
        return NotImplemented

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("element exponent must be a nonnegative integer")
        result = type(self)({0: 1})
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        o = self._promote(other)
        if o is None:
            return NotImplemented
        cls, a, b = self._join(self, o)
        if cls is BElement:
            return {i: _coerce_ratfunc(c) for i, c in a._comp.items()} == {
                i: _coerce_ratfunc(c) for i, c in b._comp.items()
            }
        return a._comp == b._comp

    def __hash__(self):
        return hash((type(self).__name__, tuple(sorted(self._comp.items()))))

    def __bool__(self):
        return bool(self._comp)

    # -- serialization -------------------------------------------------------

    def to_json(self):
        return {"components": [[i, c.to_json()] for i, c in sorted(self._comp.items())]}

    def __repr__(self):
        body = ", ".join(f"{i}: {c}" for i, c in sorted(self._comp.items()))
        return f"{type(self).__name__}({{{body}}})"


class WeylElement(GradedElement):
    """An element of the Weyl algebra in graded normal form (Poly coefficients)."""

    __slots__ = ()
    _coerce = staticmethod(_coerce_poly)

    def to_b(self) -> "BElement":
        return BElement({i: RatFunc(c) for i, c in self._comp.items()})

    @staticmethod
    def from_json(obj) -> "WeylElement":
        return WeylElement(
            {int(i): Poly.from_json(c) for i, c in obj["components"]}
        )


class BElement(GradedElement):
    """An element of the localized algebra (RatFunc coefficients)."""

    __slots__ = ()
    _coerce = staticmethod(_coerce_ratfunc)

    def to_b(self) -> "BElement":
        return self

    def is_weyl(self) -> bool:
        return all(c.is_polynomial() for c in self._comp.values())

    def to_weyl(self) -> WeylElement:
        if not self.is_weyl():
            raise DomainError("element has non-polynomial coefficients")
        return WeylElement({i: c.as_poly() for i, c in self._comp.items()})

    @staticmethod
    def from_json(obj) -> "BElement":
        return BElement(
            {int(i): RatFunc.from_json(c) for i, c in obj["components"]}
        )


X = WeylElement({1: 1})
Y = WeylElement({-1: 1})
H = WeylElement({0: Poly.gen()})
ONE = WeylElement({0: 1})
ZERO = WeylElement()


def mul(a, b):
    return a * b


def commutator(a, b):
    return a * b - b * a


def mass(a) -> int:
    """Number of nonzero graded components; 0 for the zero element."""
    return a.mass()


def components(a):
    return a.components()


def total_degree(a: WeylElement):
    """Degree in the standard filtration by X and Y: max(2 deg f_i + |i|)."""
    if a.is_zero():
        return NEG_INF
    return max(2 * f.degree + abs(i) for i, f in a.components())


def xi_apply(a: WeylElement) -> WeylElement:
    """The grading-reversing automorphism X -> Y, Y -> -X (so H -> 1 - H)."""
    comp = {}
    for i, f in a.components():
        g = f.compose_affine(-1, 1)
        if i < 0 and i % 2:
            g = -g
        comp[-i] = g
    return WeylElement(comp)


def xi_inverse_apply(a: WeylElement) -> WeylElement:
    """Inverse of xi_apply: X -> -Y, Y -> X."""
    comp = {}
    for i, f in a.components():
        g = f.compose_affine(-1, 1)
        if i > 0 and i % 2:
            g = -g
        comp[-i] = g
    return WeylElement(comp)


def in_skew_subalgebra(a: WeylElement, side: str) -> bool:
    """Membership in the skew polynomial subalgebra spanned by degrees >= 0
    ("plus") or <= 0 ("minus")."""
    if side == "plus":
        return all(i >= 0 for i in a.support())
    if side == "minus":
        return all(i <= 0 for i in a.support())
    raise ValueError(f"side must be 'plus' or 'minus', got {side!r}")


# ----------------------------------------------------------------------
# homogeneous elements in the X-power presentation
# ----------------------------------------------------------------------

@dataclass(frozen=True)
class HomogeneousElement:
    """coeff * X**degree with coeff in Q(H); the Laurent presentation used
    for centralizer computations."""

    degree: int
    coeff: RatFunc

    def __post_init__(self):
        if self.coeff.is_zero():
            raise DomainError("homogeneous elements are nonzero by definition")

    def is_monic(self) -> bool:
        return self.coeff.is_monic()

    def monic_split(self):
        lead, monic = monic_split(self.coeff)
        return lead, HomogeneousElement(self.degree, monic)

    def __mul__(self, other: "HomogeneousElement") -> "HomogeneousElement":
        if not isinstance(other, HomogeneousElement):
            return NotImplemented
        return HomogeneousElement(
            self.degree + other.degree,
            self.coeff * sigma_pow(other.coeff, self.degree),
        )

    def __pow__(self, n: int) -> "HomogeneousElement":
        if not isinstance(n, int) or n < 1:
            raise ValueError("homogeneous power must be a positive integer")
        result = self
        for _ in range(n - 1):
            result = result * self
        return result

    def to_graded(self) -> BElement:
        """Convert to the v-basis: X^(-m) = (H (H+1) ... (H+m-1))^(-1) v_(-m)."""
        if self.degree >= 0:
            return BElement({self.degree: self.coeff})
        unit = rising_product(-self.degree)
        return BElement({self.degree: self.coeff / unit})

    @staticmethod
    def from_graded_component(degree: int, coeff) -> "HomogeneousElement":
        c = _coerce_ratfunc(coeff)
        if degree >= 0:
            return HomogeneousElement(degree, c)
        return HomogeneousElement(degree, c * rising_product(-degree))

    @staticmethod
    def from_graded(a: GradedElement) -> "HomogeneousElement":
        comps = a.components()
        if len(comps) != 1:
            raise DomainError("element is not homogeneous")
        return HomogeneousElement.from_graded_component(*comps[0])

    def to_json(self):
        return {"degree": self.degree, "coeff": self.coeff.to_json()}

    def __str__(self):
        if self.degree == 0:
            return self.coeff.format()
        return f"({self.coeff.format()}) * X^{self.degree}"
