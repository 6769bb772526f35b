"""Shared random generators for the test suite (all seeded, deterministic)."""

from fractions import Fraction

from weylalg import Poly, RatFunc, WeylElement


def random_rat(rng, height, nonzero=False):
    while True:
        value = Fraction(rng.randint(-height, height), rng.randint(1, height))
        if value or not nonzero:
            return value


def random_poly(rng, max_deg, height, nonzero=False, monic=False):
    while True:
        deg = rng.randint(0, max_deg)
        terms = {e: random_rat(rng, height) for e in range(deg + 1)}
        if monic:
            terms[deg] = Fraction(1)
        p = Poly(terms.items())
        if not p.is_zero() or not (nonzero or monic):
            return p


def random_int_monic(rng, deg, height):
    terms = {e: Fraction(rng.randint(-height, height)) for e in range(deg)}
    terms[deg] = Fraction(1)
    return Poly(terms.items())


def random_ratfunc(rng, max_deg, height, nonzero=False):
    num = random_poly(rng, max_deg, height, nonzero=nonzero)
    den = random_poly(rng, max_deg, height, nonzero=True)
    return RatFunc(num, den)


def random_weyl(rng, max_components=3, coeff_deg=4, height=10, span=3):
    comp = {}
    for _ in range(rng.randint(0, max_components)):
        comp[rng.randint(-span, span)] = random_poly(rng, coeff_deg, height)
    return WeylElement(comp)


def random_weyl_nonzero(rng, **kwargs):
    while True:
        a = random_weyl(rng, **kwargs)
        if not a.is_zero():
            return a
