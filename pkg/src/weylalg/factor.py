"""Complete factorization over Q for Poly and RatFunc values.

The pipeline is the classical one for Z[x]: Yun squarefree decomposition
over Q, reduction modulo a good small prime, Berlekamp factorization in
F_p[x], quadratic Hensel lifting up to a Mignotte-style coefficient bound,
and subset recombination.  Everything is exact integer arithmetic; the
returned bases are monic irreducible polynomials over Q.

Internally dense integer coefficient lists (ascending exponent) are used;
only the public surface speaks Poly / RatFunc.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import gcd as _int_gcd, isqrt

from .errors import DomainError
from .polynomials import Poly, RatFunc, clear_denominators, poly_from_int_coeffs, poly_gcd


@dataclass(frozen=True)
class FactoredPoly:
    """unit * product(base**exponent) with monic irreducible bases.

    Negative exponents appear when a RatFunc was factored.
    """

    unit: Fraction
    factors: tuple[tuple[Poly, int], ...]

    def expand(self):
        """Multiply the factorization back out (RatFunc iff some exponent < 0)."""
        num = Poly.one()
        den = Poly.one()
        for base, exp in self.factors:
            if exp > 0:
                num = num * base**exp
            else:
                den = den * base**(-exp)
        if den == Poly.one():
            return num * self.unit
        return RatFunc(num * self.unit, den)

    def exponent_map(self) -> dict[Poly, int]:
        return {base: exp for base, exp in self.factors}

    def to_json(self):
        return {
            "unit": f"{self.unit.numerator}/{self.unit.denominator}",
            "factors": [[base.to_json()["poly"], exp] for base, exp in self.factors],
        }

    def __str__(self):
        if not self.factors:
            return str(self.unit)
        parts = [f"({base})^{exp}" for base, exp in self.factors]
        return f"{self.unit} * " + " * ".join(parts)


def _poly_key(f: Poly):
    return (f.degree, tuple((e, c.numerator, c.denominator) for e, c in f.terms))


# ----------------------------------------------------------------------
# dense integer polynomial helpers (ascending coefficient lists)
# ----------------------------------------------------------------------

def _strip(f):
    while f and f[-1] == 0:
        f.pop()
    return f


def _deg(f):
    return len(f) - 1


def _mul(f, g):
    if not f or not g:
        return []
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                out[i + j] += a * b
    return _strip(out)


def _add(f, g):
    out = [0] * max(len(f), len(g))
    for i, a in enumerate(f):
        out[i] += a
    for i, b in enumerate(g):
        out[i] += b
    return _strip(out)


def _sub(f, g):
    out = [0] * max(len(f), len(g))
    for i, a in enumerate(f):
        out[i] += a
    for i, b in enumerate(g):
        out[i] -= b
    return _strip(out)


def _mul_ground(f, c):
    if c == 0:
        return []
    return [a * c for a in f]


def _trunc(f, m):
    """Reduce coefficients to the symmetric range (-m/2, m/2]."""
    half = m // 2
    out = []
    for a in f:
        a = a % m
        if a > half:
            a -= m
        out.append(a)
    return _strip(out)


def _primitive(f):
    content = 0
    for a in f:
        content = _int_gcd(content, abs(a))
    if content == 0:
        return 0, []
    if f[-1] < 0:
        content = -content
    return content, [a // content for a in f]


def _exact_div(f, g):
    """Exact quotient of integer polynomials, or None if g does not divide f."""
    if not g:
        raise ZeroDivisionError("division by zero polynomial")
    if not f:
        return []
    if _deg(f) < _deg(g):
        return None
    rem = [Fraction(a) for a in f]
    quo = [Fraction(0)] * (_deg(f) - _deg(g) + 1)
    glead = Fraction(g[-1])
    for shift in range(len(quo) - 1, -1, -1):
        c = rem[shift + _deg(g)] / glead
        quo[shift] = c
        if c:
            for j, b in enumerate(g):
                rem[shift + j] -= c * b
    if any(rem):
        return None
    if any(c.denominator != 1 for c in quo):
        return None
    return _strip([int(c) for c in quo])


def _divmod_mod(f, h, m):
    """Division by monic h with coefficients reduced mod m (symmetric)."""
    rem = list(f)
    if _deg(rem) < _deg(h):
        return [], _trunc(rem, m)
    quo = [0] * (_deg(rem) - _deg(h) + 1)
    for shift in range(len(quo) - 1, -1, -1):
        c = rem[shift + _deg(h)] % m
        quo[shift] = c
        if c:
            for j, b in enumerate(h):
                rem[shift + j] -= c * b
    return _trunc(quo, m), _trunc(rem[: _deg(h)], m)


# ----------------------------------------------------------------------
# arithmetic in F_p[x]
# ----------------------------------------------------------------------

def _gf_normal(f, p):
    return _strip([a % p for a in f])


def _gf_monic(f, p):
    if not f:
        return []
    inv = pow(f[-1], -1, p)
    return [a * inv % p for a in f]


def _gf_mul(f, g, p):
    return _gf_normal(_mul(f, g), p)


def _gf_sub(f, g, p):
    return _gf_normal(_sub(f, g), p)


def _gf_divmod(f, g, p):
    if not g:
        raise ZeroDivisionError("division by zero polynomial mod p")
    rem = [a % p for a in f]
    if _deg(rem) < _deg(g):
        return [], _strip(rem)
    inv = pow(g[-1], -1, p)
    quo = [0] * (_deg(rem) - _deg(g) + 1)
    for shift in range(len(quo) - 1, -1, -1):
        c = rem[shift + _deg(g)] * inv % p
        quo[shift] = c
        if c:
            for j, b in enumerate(g):
                rem[shift + j] = (rem[shift + j] - c * b) % p
    return _strip(quo), _strip(rem[: _deg(g)])


def _gf_rem(f, g, p):
    return _gf_divmod(f, g, p)[1]


def _gf_quo(f, g, p):
    return _gf_divmod(f, g, p)[0]


def _gf_gcd(f, g, p):
    f, g = _gf_normal(f, p), _gf_normal(g, p)
    while g:
        f, g = g, _gf_rem(f, g, p)
    return _gf_monic(f, p)


def _gf_gcdex(f, g, p):
    """Extended Euclid: returns (s, t, h) with s*f + t*g = h, h monic gcd."""
    r0, r1 = _gf_normal(f, p), _gf_normal(g, p)
    s0, s1 = [1], []
    t0, t1 = [], [1]
    while r1:
        q, r = _gf_divmod(r0, r1, p)
        r0, r1 = r1, r
        s0, s1 = s1, _gf_sub(s0, _gf_mul(q, s1, p), p)
        t0, t1 = t1, _gf_sub(t0, _gf_mul(q, t1, p), p)
    if not r0:
        return s0, t0, r0
    inv = pow(r0[-1], -1, p)
    scale = lambda u: _gf_normal(_mul_ground(u, inv), p)
    return scale(s0), scale(t0), scale(r0)


def _gf_pow_mod(base, n, f, p):
    result = [1]
    base = _gf_rem(base, f, p)
    while n:
        if n & 1:
            result = _gf_rem(_gf_mul(result, base, p), f, p)
        base = _gf_rem(_gf_mul(base, base, p), f, p)
        n >>= 1
    return result


def _gf_nullspace(matrix, n, p):
    """Basis of the right nullspace of an n x n matrix over F_p."""
    m = [row[:] for row in matrix]
    pivots = {}
    row = 0
    for col in range(n):
        sel = None
        for r in range(row, n):
            if m[r][col] % p:
                sel = r
                break
        if sel is None:
            continue
        m[row], m[sel] = m[sel], m[row]
        inv = pow(m[row][col], -1, p)
        m[row] = [a * inv % p for a in m[row]]
        for r in range(n):
            if r != row and m[r][col] % p:
                factor = m[r][col]
                m[r] = [(a - factor * b) % p for a, b in zip(m[r], m[row])]
        pivots[col] = row
        row += 1
    basis = []
    for col in range(n):
        if col in pivots:
            continue
        vec = [0] * n
        vec[col] = 1
        for pcol, prow in pivots.items():
            vec[pcol] = (-m[prow][col]) % p
        basis.append(vec)
    return basis


def _berlekamp(f, p):
    """Factor a monic squarefree polynomial in F_p[x] into monic irreducibles."""
    n = _deg(f)
    if n <= 1:
        return [f]
    xp = _gf_pow_mod([0, 1], p, f, p)
    rows = []
    cur = [1]
    for _ in range(n):
        rows.append(cur + [0] * (n - len(cur)))
        cur = _gf_rem(_gf_mul(cur, xp, p), f, p)
    # v satisfies v^p = v mod f  <=>  (Q^T - I) v = 0 with Q rows = x^{ip} mod f
    matrix = [[(rows[j][i] - (1 if i == j else 0)) % p for j in range(n)] for i in range(n)]
    basis = _gf_nullspace(matrix, n, p)
    r = len(basis)
    if r == 1:
        return [f]
    factors = [f]
    for vec in basis:
        v = _strip(list(vec))
        if _deg(v) < 1:
            continue
        refined = []
        for u in factors:
            if _deg(u) <= 1:
                refined.append(u)
                continue
            rest = u
            for c in range(p):
                if _deg(rest) <= 0:
                    break
                g = _gf_gcd(_gf_sub(v, [c], p), rest, p)
                if _deg(g) > 0:
                    refined.append(g)
                    rest = _gf_quo(rest, g, p)
            if _deg(rest) > 0:
                refined.append(rest)
        factors = refined
        if len(factors) == r:
            break
    return sorted(factors, key=lambda u: (len(u), u))


# ----------------------------------------------------------------------
# Hensel lifting
# ----------------------------------------------------------------------

def _hensel_step(m, f, g, h, s, t):
    """One quadratic lift: from mod m to mod m**2.

    Requires f = g*h and s*g + t*h = 1 (mod m), h monic.
    """
    mm = m * m
    e = _trunc(_sub(f, _mul(g, h)), mm)
    q, r = _divmod_mod(_mul(s, e), h, mm)
    g1 = _trunc(_add(_add(g, _mul(t, e)), _mul(q, g)), mm)
    h1 = _trunc(_add(h, r), mm)
    b = _trunc(_sub(_add(_mul(s, g1), _mul(t, h1)), [1]), mm)
    c, d = _divmod_mod(_mul(s, b), h1, mm)
    s1 = _trunc(_sub(s, d), mm)
    t1 = _trunc(_sub(_sub(t, _mul(t, b)), _mul(c, g1)), mm)
    return g1, h1, s1, t1


def _hensel_lift(p, f, modular, l):
    """Lift monic mod-p factors of f to factors mod p**l (symmetric)."""
    r = len(modular)
    lc = f[-1]
    pl = p**l
    if r == 1:
        inv = pow(lc % pl, -1, pl)
        return [_trunc(_mul_ground(f, inv), pl)]
    k = r // 2
    steps = 0
    m = 1
    while m < l:
        m *= 2
        steps += 1
    g = [lc % p]
    for fac in modular[:k]:
        g = _gf_mul(g, fac, p)
    h = [1]
    for fac in modular[k:]:
        h = _gf_mul(h, fac, p)
    s, t, one = _gf_gcdex(g, h, p)
    if one != [1]:
        raise RuntimeError("modular factors are not coprime; bad prime slipped through")
    g, h, s, t = _trunc(g, p), _trunc(h, p), _trunc(s, p), _trunc(t, p)
    m = p
    for _ in range(steps):
        g, h, s, t = _hensel_step(m, f, g, h, s, t)
        m = m * m
    return _hensel_lift(p, g, modular[:k], l) + _hensel_lift(p, h, modular[k:], l)


# ----------------------------------------------------------------------
# Zassenhaus over Z
# ----------------------------------------------------------------------

def _sieve(limit):
    flags = bytearray([1]) * limit
    flags[0:2] = b"\x00\x00"
    for i in range(2, isqrt(limit) + 1):
        if flags[i]:
            flags[i * i :: i] = b"\x00" * len(flags[i * i :: i])
    return [i for i in range(limit) if flags[i]]


_PRIMES = _sieve(2000)


def _derivative_z(f):
    return _strip([i * a for i, a in enumerate(f)][1:])


def _zassenhaus(f):
    """Irreducible factors (primitive, lc > 0) of a primitive squarefree
    integer polynomial with lc > 0 and degree >= 1."""
    n = _deg(f)
    if n == 1:
        return [list(f)]
    lead = f[-1]
    height = max(abs(a) for a in f)
    bound = (isqrt(n + 1) + 1) * 2**n * height * lead

    best = None
    admissible = 0
    for p in _PRIMES[1:]:
        if lead % p == 0:
            continue
        fp = _gf_normal(f, p)
        if _deg(_gf_gcd(fp, _derivative_z(fp), p)) != 0:
            continue
        modular = _berlekamp(_gf_monic(fp, p), p)
        if best is None or len(modular) < len(best[1]):
            best = (p, modular)
        admissible += 1
        if admissible >= 3 or len(modular) == 1:
            break
    p, modular = best
    if len(modular) == 1:
        return [list(f)]

    l = 1
    pl = p
    while pl <= 2 * bound:
        pl *= p
        l += 1
    lifted = _hensel_lift(p, f, modular, l)

    remaining = list(range(len(lifted)))
    current = list(f)
    found = []
    size = 1
    while 2 * size <= len(remaining):
        hit = False
        for subset in itertools.combinations(remaining, size):
            cand = [current[-1]]
            for i in subset:
                cand = _trunc(_mul(cand, lifted[i]), pl)
            cand = _primitive(cand)[1]
            quotient = _exact_div(current, cand)
            if quotient is not None:
                found.append(cand)
                current = quotient
                remaining = [i for i in remaining if i not in subset]
                hit = True
                break
        if not hit:
            size += 1
    if _deg(current) > 0:
        found.append(current)
    return found


# ----------------------------------------------------------------------
# public surface
# ----------------------------------------------------------------------

def _squarefree_parts(f: Poly):
    """Yun decomposition of a monic polynomial: [(monic squarefree, multiplicity)]."""
    parts = []
    g = poly_gcd(f, f.derivative())
    b = f // g
    c = f.derivative() // g
    d = c - b.derivative()
    i = 1
    while not (b.is_constant() and b.constant_value() == 1):
        a = poly_gcd(b, d)
        if a.degree > 0:
            parts.append((a, i))
        b = b // a
        c = d // a
        d = c - b.derivative()
        i += 1
    return parts


def factor_poly(f: Poly) -> FactoredPoly:
    """Factor a nonzero polynomial over Q into monic irreducibles."""
    if not isinstance(f, Poly):
        raise TypeError(f"factor_poly expects Poly, got {type(f).__name__}")
    if f.is_zero():
        raise DomainError("cannot factor the zero polynomial")
    unit = f.lc
    if f.degree == 0:
        return FactoredPoly(unit, ())
    collected = []
    for sqf, mult in _squarefree_parts(f.monic()):
        _, dense = clear_denominators(sqf)
        for part in _zassenhaus(dense):
            collected.append((poly_from_int_coeffs(part).monic(), mult))
    collected.sort(key=lambda item: _poly_key(item[0]))
    return FactoredPoly(unit, tuple(collected))


def factor_ratfunc(h: RatFunc) -> FactoredPoly:
    """Factor a nonzero rational function; denominator bases get negative exponents."""
    if not isinstance(h, RatFunc):
        raise TypeError(f"factor_ratfunc expects RatFunc, got {type(h).__name__}")
    if h.is_zero():
        raise DomainError("cannot factor the zero rational function")
    top = factor_poly(h.num)
    bottom = factor_poly(h.den)
    merged = dict(top.exponent_map())
    for base, exp in bottom.factors:
        merged[base] = merged.get(base, 0) - exp
    factors = tuple(
        sorted(((b, e) for b, e in merged.items() if e), key=lambda item: _poly_key(item[0]))
    )
    return FactoredPoly(top.unit / bottom.unit, factors)


def is_irreducible(f: Poly) -> bool:
    """Irreducibility over Q (degree >= 1 required)."""
    if f.is_zero() or f.degree < 1:
        return False
    if f.degree == 1:
        return True
    if poly_gcd(f, f.derivative()).degree > 0:
        return False
    _, dense = clear_denominators(f.monic())
    return len(_zassenhaus(dense)) == 1
