"""Centralizers of homogeneous elements in the localized algebra.

For a monic homogeneous u = alpha * X^n (n != 0) the centralizer is the
Laurent polynomial ring on a single generator v = beta * X^(sign(n) s),
where s is the least positive divisor of |n| admitting a monic solution
beta of the twisted product equation

    beta sigma^s(beta) ... sigma^((k-1) s)(beta) = alpha      (n > 0)
    beta sigma^-s(beta) ... sigma^(-(k-1) s)(beta) = alpha    (n < 0)

with k = |n| / s.  The solver factors alpha, groups the irreducible bases
into orbits of the shift H -> H - s, and solves an integer deconvolution
for the exponent pattern inside each orbit.  Infeasibility is certified by
either a degree obstruction or the first nonvanishing residue position of
the deconvolution.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError, TwistedRootInfeasible
from .factor import FactoredPoly, factor_ratfunc
from .polynomials import NEG_INF, Poly, RatFunc, sigma_pow
from .weyl import HomogeneousElement


def twisted_product(beta, k: int, s: int, direction: str):
    """Product of k copies of beta shifted by 0, s, 2s, ... (plus) or
    0, -s, -2s, ... (minus)."""
    step = s if direction == "plus" else -s
    result = beta
    for m in range(1, k):
        result = result * sigma_pow(beta, m * step)
    return result


@dataclass(frozen=True)
class Orbit:
    """A shift orbit of irreducible bases: position j holds rep(H - j*s)."""

    rep: Poly
    step: int
    exponents: tuple[tuple[int, int], ...]  # (position, exponent), ascending

    def base_at(self, j: int) -> Poly:
        return sigma_pow(self.rep, j * self.step)


def shift_orbit_partition(factors: FactoredPoly, s: int) -> list[Orbit]:
    """Group irreducible bases into orbits of H -> H - s.

    Two bases p, q of the same degree d share an orbit iff q = p(H - j*s)
    for an integer j; the candidate j is read off the subleading
    coefficients and then verified exactly.
    """
    if s <= 0:
        raise DomainError("orbit step must be a positive integer")
    orbits: list[tuple[Poly, dict[int, int]]] = []
    for base, exp in factors.factors:
        d = base.degree
        placed = False
        for rep, positions in orbits:
            if rep.degree != d:
                continue
            # rep(H - j s) has subleading coefficient c_{d-1}(rep) + d*j*s... solve
            diff = rep.coeff(d - 1) - base.coeff(d - 1)
            j = diff / (d * s)
            if j.denominator != 1:
                continue
            j = int(j)
            if sigma_pow(rep, j * s) == base:
                positions[j] = positions.get(j, 0) + exp
                placed = True
                break
        if not placed:
            orbits.append((base, {0: exp}))
    out = []
    for rep, positions in orbits:
        low = min(positions)
        rep0 = sigma_pow(rep, low * s)
        shifted = tuple(sorted((j - low, e) for j, e in positions.items()))
        out.append(Orbit(rep0, s, shifted))
    out.sort(key=lambda o: (o.rep.degree, tuple((e, c.numerator, c.denominator) for e, c in o.rep.terms)))
    return out


@dataclass(frozen=True)
class InfeasibilityCertificate:
    """Why a divisor admits no twisted root.

    kind "degree": k does not divide deg alpha (forced_degree is the
    fractional deg alpha / k).  kind "residue": the deconvolution on the
    named orbit leaves a nonzero residue at `position`.
    """

    divisor: int
    kind: str
    forced_degree: tuple[int, int] | None = None
    orbit_rep: Poly | None = None
    position: int | None = None
    residue: int | None = None

    def to_json(self):
        body = {"divisor": self.divisor, "kind": self.kind}
        if self.forced_degree is not None:
            body["forced_degree"] = list(self.forced_degree)
        if self.orbit_rep is not None:
            body["orbit_rep"] = self.orbit_rep.to_json()
        if self.position is not None:
            body["position"] = self.position
            body["residue"] = self.residue
        return body

    def __str__(self):
        if self.kind == "degree":
            num, den = self.forced_degree
            return (
                f"divisor {self.divisor}: degree obstruction, "
                f"forced coefficient degree {num}/{den} is not an integer"
            )
        return (
            f"divisor {self.divisor}: orbit of {self.orbit_rep} leaves residue "
            f"{self.residue} at position {self.position}"
        )


def _deconvolve(exponents: dict[int, int], k: int):
    """Solve sum_{m=0}^{k-1} d(j - m) = e(j) for finitely supported d.

    Returns (d, None) on success or (None, (position, residue)) at the first
    failing convolution position.
    """
    lo = min(exponents)
    hi = max(exponents)
    d: dict[int, int] = {}
    for j in range(lo, hi + 1):
        val = exponents.get(j, 0)
        for m in range(1, k):
            val -= d.get(j - m, 0)
        if val:
            d[j] = val
    for j in range(lo, hi + k):
        conv = sum(d.get(j - m, 0) for m in range(k))
        if conv != exponents.get(j, 0):
            return None, (j, conv - exponents.get(j, 0))
    return d, None


def solve_twisted_root(alpha: RatFunc, k: int, s: int, direction: str) -> RatFunc:
    """The unique monic beta with the k-fold twisted product equal to alpha.

    Raises TwistedRootInfeasible when no such beta exists for this divisor.
    """
    if direction not in ("plus", "minus"):
        raise ValueError(f"direction must be 'plus' or 'minus', got {direction!r}")
    if k <= 0 or s <= 0:
        raise DomainError("twisted root needs positive k and s")
    if not alpha.is_monic():
        raise DomainError("twisted root is defined for monic alpha")
    if k == 1:
        return alpha
    deg = alpha.degree
    if deg is NEG_INF:
        raise DomainError("alpha must be nonzero")
    if deg % k:
        raise TwistedRootInfeasible(
            InfeasibilityCertificate(divisor=s, kind="degree", forced_degree=(deg, k))
        )
    mirror = direction == "minus"
    factors = factor_ratfunc(alpha)
    beta = RatFunc(Poly.one())
    for orbit in shift_orbit_partition(factors, s):
        exponents = dict(orbit.exponents)
        if mirror:
            exponents = {-j: e for j, e in exponents.items()}
        d, failure = _deconvolve(exponents, k)
        if failure is not None:
            position, residue = failure
            if mirror:
                position = -position
            raise TwistedRootInfeasible(
                InfeasibilityCertificate(
                    divisor=s,
                    kind="residue",
                    orbit_rep=orbit.rep,
                    position=position,
                    residue=residue,
                )
            )
        for j, e in d.items():
            pos = -j if mirror else j
            beta = beta * RatFunc(orbit.base_at(pos)) ** e
    # the per-orbit pattern is necessary and sufficient; keep one exact check
    if twisted_product(beta, k, s, direction) != alpha:
        raise RuntimeError("deconvolution produced a wrong twisted root; internal defect")
    return beta


@dataclass(frozen=True)
class CentralizerResult:
    """Generator data for the centralizer of a monic homogeneous element."""

    v: HomogeneousElement
    s: int
    beta: RatFunc
    infeasible_divisors: tuple[InfeasibilityCertificate, ...]

    def to_json(self):
        return {
            "s": self.s,
            "beta": self.beta.to_json(),
            "v": self.v.to_json(),
            "infeasible_divisors": [c.to_json() for c in self.infeasible_divisors],
        }


def positive_divisors(n: int) -> list[int]:
    n = abs(n)
    return [d for d in range(1, n + 1) if n % d == 0]


def centralizer_generator(u: HomogeneousElement) -> CentralizerResult:
    """Least-divisor centralizer generator per the twisted product equations.

    Scans the positive divisors of |n| in increasing order; s = |n| always
    succeeds with beta = alpha, so a result is guaranteed.
    """
    n = u.degree
    if n == 0:
        raise DomainError("degree-zero elements have centralizer Q(H); use centralizer_rational")
    if not u.is_monic():
        raise DomainError("centralizer_generator expects a monic element")
    direction = "plus" if n > 0 else "minus"
    sign = 1 if n > 0 else -1
    alpha = u.coeff
    certificates = []
    for s in positive_divisors(n):
        k = abs(n) // s
        try:
            beta = solve_twisted_root(alpha, k, s, direction)
        except TwistedRootInfeasible as exc:
            certificates.append(exc.certificate)
            continue
        return CentralizerResult(
            v=HomogeneousElement(sign * s, beta),
            s=s,
            beta=beta,
            infeasible_divisors=tuple(certificates),
        )
    raise RuntimeError("unreachable: s = |n| always admits beta = alpha")


@dataclass(frozen=True)
class PowerDecomposition:
    """w = scalar * v**exponent inside the centralizer's Laurent ring."""

    scalar: Fraction
    exponent: int


def power_decompose(w: HomogeneousElement, v: HomogeneousElement):
    """Express w as scalar * v**j with j >= 1, or None when impossible."""
    if v.degree == 0:
        raise DomainError("centralizer generators have nonzero degree")
    if w.degree % v.degree or w.degree // v.degree < 1:
        return None
    j = w.degree // v.degree
    ratio = w.coeff / (v**j).coeff
    if not ratio.is_constant():
        return None
    return PowerDecomposition(scalar=ratio.constant_value(), exponent=j)


def centralizer_rational(u: RatFunc) -> str:
    """Centralizer of a nonconstant degree-zero element: all of Q(H)."""
    if not isinstance(u, RatFunc):
        raise TypeError("centralizer_rational expects a RatFunc")
    if u.is_constant():
        raise DomainError("constants are central; their centralizer is the whole algebra")
    return "K(H)"


def in_rational_centralizer(b) -> bool:
    """Membership test for C(u) with u in Q(H) \\ Q: concentrated in degree 0."""
    return all(i == 0 for i in b.support())
