"""Constructive certificates for commuting pairs, and impossibility sweeps.

certify_pair(P, Q) takes a pair with [P, Q] = 1 whose masses satisfy the
certified hypotheses (both at most 2, or one equal to 1) and produces a tame
automorphism word tau with tau(Y) = P and tau(X) = Q.  The reduction peels
one generator at a time:

  * affine pairs go through an explicit SL2 decomposition;
  * a mass-1 partner is normalized by grading flips and pair swaps until it
    is a scalar multiple of X, after which the complement is peeled into
    triangular generators;
  * a mass-2 / mass-2 pair has proportional top parts, and subtracting the
    ratio drops one mass, tracked as a PhiY(1, ratio) factor.

Every certificate is re-verified by application before it is returned.

impossibility_sweep encodes the excluded configurations as exact linear
systems over Q (fraction-free elimination, no floating point) and reports
each cell as empty or solvable with an independently checked witness.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError, OutOfScopeError
from .parser import format_pretty
from .polynomials import Poly, delta_op, rat_to_str
from .tame import AutoWord, PhiX, PhiY, Torus, Translate, Xi, affine_decompose, apply_auto
from .weyl import (
    ONE,
    WeylElement,
    X,
    Y,
    commutator,
    mass,
    structure_constant,
    total_degree,
    xi_inverse_apply,
)

_MAX_DEPTH = 32


def delta_balance_check(a, b, p: int, q: int) -> Poly:
    """Evaluate (1 - sigma^-p)(a) + (1 - sigma^-q)(b) exactly."""
    if p < 1 or q < 1:
        raise DomainError("delta_balance_check requires positive p and q")
    if isinstance(a, (int, Fraction)):
        a = Poly.constant(a)
    if isinstance(b, (int, Fraction)):
        b = Poly.constant(b)
    left = a - a.sigma(-p)
    right = b - b.sigma(-q)
    return left + right


# ----------------------------------------------------------------------
# pair certification
# ----------------------------------------------------------------------

def _affine_parts(e: WeylElement):
    """Coefficients (y, x, const) of an element of total degree <= 1."""
    a = b = lam = Fraction(0)
    for i, f in e.components():
        value = f.constant_value()
        if i == -1:
            a = value
        elif i == 1:
            b = value
        else:
            lam = value
    return a, b, lam


def _internal(msg):
    return RuntimeError(f"certifier internal defect: {msg}")


def _constant_term(e: WeylElement) -> Fraction:
    f = e.coefficient(0)
    return f.coeff(0) if f is not None else Fraction(0)


def _reduce(P: WeylElement, Q: WeylElement, depth: int) -> AutoWord:
    if depth > _MAX_DEPTH:
        raise _internal("reduction did not terminate")
    if total_degree(P) <= 1 and total_degree(Q) <= 1:
        a, b, lam = _affine_parts(P)
        c, d, mu = _affine_parts(Q)
        return affine_decompose(a, b, c, d, lam, mu)
    # constant terms commute with everything; peel them into translations
    # so the mass dispatch below sees pure graded shapes
    const_p = _constant_term(P)
    if const_p:
        sub = _reduce(P - const_p, Q, depth + 1)
        return AutoWord((Translate(Fraction(0), const_p),)) + sub
    const_q = _constant_term(Q)
    if const_q:
        sub = _reduce(P, Q - const_q, depth + 1)
        return AutoWord((Translate(const_q, Fraction(0)),)) + sub
    if mass(Q) == 1:
        return _peel_mass_one(P, Q, depth)
    if mass(P) == 1:
        # swap through [P, Q] = [-Q, P]: certify (-Q, P), precompose xi^-1
        sub = _reduce(-Q, P, depth + 1)
        return AutoWord((Torus(Fraction(-1)), Xi())) + sub
    comps_p = P.components()
    comps_q = Q.components()
    if len(comps_p) != 2 or len(comps_q) != 2:
        raise _internal(f"unexpected masses {mass(P)}, {mass(Q)}")
    (low_p, _), (top_p, f_top) = comps_p
    (low_q, _), (top_q, g_top) = comps_q
    if low_p != -top_p or low_q != low_p or top_q != top_p:
        raise _internal("mass-2 pair without symmetric matching support")
    ratio = g_top.lc / f_top.lc
    if g_top != f_top * ratio:
        raise _internal("top components are not proportional")
    reduced = Q - P * ratio
    if reduced.is_zero():
        raise _internal("pair is proportional, commutator cannot be 1")
    sub = _reduce(P, reduced, depth + 1)
    return AutoWord((PhiY(1, ratio),)) + sub


def _peel_mass_one(P: WeylElement, Q: WeylElement, depth: int) -> AutoWord:
    ((q, g),) = Q.components()
    if q == 0:
        raise _internal("mass-1 partner of degree 0 cannot commute to 1")
    if q < 0:
        sub = _reduce(xi_inverse_apply(P), xi_inverse_apply(Q), depth + 1)
        return sub + AutoWord((Xi(),))
    if q != 1 or not g.is_constant():
        raise _internal("positive mass-1 partner must be a scalar multiple of X")
    lam = g.constant_value()
    lam_inv = 1 / lam
    p_low = P.coefficient(-1)
    if p_low is None or p_low != Poly.constant(lam_inv):
        raise _internal("Y-part of the partner does not match the scalar")
    remainder = P - WeylElement({-1: lam_inv})
    gens = []
    const_term = Fraction(0)
    for i, f in remainder.components():
        if i < 0 or not f.is_constant():
            raise _internal("complement is not a polynomial in X")
        if i == 0:
            const_term = f.constant_value()
        else:
            gens.append(PhiX(i, f.constant_value() * lam_inv**i))
    if const_term:
        gens.append(Translate(Fraction(0), const_term))
    if lam != 1:
        gens.append(Torus(lam))
    return AutoWord(tuple(gens))


def certify_pair(P: WeylElement, Q: WeylElement) -> AutoWord:
    """A tame word tau with tau(Y) = P, tau(X) = Q, verified by application.

    Raises DomainError when [P, Q] != 1 and OutOfScopeError when the masses
    fall outside the certified hypotheses.
    """
    comm = commutator(P, Q)
    if comm != ONE:
        raise DomainError(f"commutator is {format_pretty(comm)}, not 1")
    mp, mq = mass(P), mass(Q)
    if not ((mp <= 2 and mq <= 2) or mp == 1 or mq == 1):
        raise OutOfScopeError(
            f"masses ({mp}, {mq}) are outside the certified range: "
            "need both <= 2 or one equal to 1"
        )
    word = _reduce(P, Q, 0)
    if apply_auto(word, Y) != P or apply_auto(word, X) != Q:
        raise _internal("certificate failed the final application check")
    return word


# ----------------------------------------------------------------------
# exact linear algebra (fraction-free)
# ----------------------------------------------------------------------

def _solve_exact(rows, rhs):
    """Solve rows * x = rhs over Q.

    Returns (particular, kernel_basis) or None when inconsistent.  The
    forward elimination is Bareiss fraction-free on integer rows.
    """
    m = len(rows)
    n = len(rows[0]) if rows else 0
    aug = []
    for row, r in zip(rows, rhs):
        entries = [Fraction(v) for v in row] + [Fraction(r)]
        scale = 1
        for v in entries:
            scale = scale * v.denominator // _gcd(scale, v.denominator)
        aug.append([int(v * scale) for v in entries])
    pivots = []
    rank = 0
    prev = 1
    for col in range(n):
        sel = None
        for i in range(rank, m):
            if aug[i][col]:
                sel = i
                break
        if sel is None:
            continue
        aug[rank], aug[sel] = aug[sel], aug[rank]
        for i in range(rank + 1, m):
            lead = aug[i][col]
            row_i = aug[i]
            row_r = aug[rank]
            for j in range(col, n + 1):
                row_i[j] = (row_r[col] * row_i[j] - lead * row_r[j]) // prev
        prev = aug[rank][col]
        pivots.append(col)
        rank += 1
    for i in range(rank, m):
        if aug[i][n]:
            return None
    free_cols = [c for c in range(n) if c not in pivots]

    def back_substitute(use_rhs, free_values):
        x = [Fraction(0)] * n
        for c, v in free_values.items():
            x[c] = v
        for i in range(rank - 1, -1, -1):
            col = pivots[i]
            acc = Fraction(aug[i][n]) if use_rhs else Fraction(0)
            for j in range(col + 1, n):
                if aug[i][j]:
                    acc -= aug[i][j] * x[j]
            x[col] = acc / aug[i][col]
        return x

    particular = back_substitute(True, {c: Fraction(0) for c in free_cols})
    kernel = []
    for fc in free_cols:
        values = {c: Fraction(1 if c == fc else 0) for c in free_cols}
        kernel.append(back_substitute(False, values))
    return particular, kernel


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return abs(a)


def _functional_vanishes(index, particular, kernel):
    if particular[index]:
        return False
    return all(not k[index] for k in kernel)


def _point_avoiding_zeros(particular, kernel, indices):
    """A solution with all the indexed coordinates nonzero, or None."""
    x = list(particular)
    for idx in indices:
        if x[idx]:
            continue
        vec = next((k for k in kernel if k[idx]), None)
        if vec is None:
            return None
        # each already-nonzero coordinate rules out at most one multiplier
        for t in range(1, len(indices) + 2):
            candidate = [xi + t * vi for xi, vi in zip(x, vec)]
            if all(candidate[i] for i in indices if x[i] or i == idx):
                x = candidate
                break
        else:
            return None
    if all(x[i] for i in indices):
        return x
    return None


# ----------------------------------------------------------------------
# impossibility sweeps
# ----------------------------------------------------------------------

@dataclass(frozen=True)
class SweepCell:
    pattern: str
    p: int
    q: int
    deg_a: int | None
    deg_b: int | None
    status: str  # "empty" or "solutions"
    detail: str
    witness: dict | None = None

    def to_json(self):
        body = {
            "pattern": self.pattern,
            "p": self.p,
            "q": self.q,
            "deg_a": self.deg_a,
            "deg_b": self.deg_b,
            "status": self.status,
            "detail": self.detail,
        }
        if self.witness is not None:
            body["witness"] = self.witness
        return body


@dataclass(frozen=True)
class SweepReport:
    pattern: str
    bounds: dict
    cells: tuple

    def to_json(self):
        return {
            "pattern": self.pattern,
            "bounds": dict(self.bounds),
            "cells": [c.to_json() for c in self.cells],
        }

    def empty_cells(self):
        return [c for c in self.cells if c.status == "empty"]

    def solution_cells(self):
        return [c for c in self.cells if c.status == "solutions"]


def _delta_columns(deg_bound, shift):
    return [delta_op(Poly(((e, Fraction(1)),)), shift) if e else Poly.zero() for e in range(deg_bound + 1)]


def _system_rows(blocks, rhs_poly):
    """Rows of the linear system sum_blocks (1 - sigma^shift)(block poly) = rhs."""
    columns = []
    for deg_bound, shift in blocks:
        columns.extend(_delta_columns(deg_bound, shift))
    max_deg = max([rhs_poly.degree if not rhs_poly.is_zero() else 0]
                  + [c.degree for c in columns if not c.is_zero()] + [0])
    rows = []
    rhs = []
    for exp in range(int(max_deg) + 1):
        rows.append([c.coeff(exp) for c in columns])
        rhs.append(rhs_poly.coeff(exp))
    return rows, rhs


def _cell_pair_system(p, q, deg_a, deg_b, pattern):
    """Cell for: exists a (exact degree deg_a), b (exact degree deg_b) with
    (1 - sigma^-p)(a) + (1 - sigma^-q)(b) = 1."""
    rows, rhs = _system_rows([(deg_a, -p), (deg_b, -q)], Poly.one())
    solved = _solve_exact(rows, rhs)
    detail = f"(1-s^-{p})(a) + (1-s^-{q})(b) = 1, deg a = {deg_a}, deg b = {deg_b}"
    if solved is None:
        return SweepCell(pattern, p, q, deg_a, deg_b, "empty", detail + "; system inconsistent")
    particular, kernel = solved
    top_a = deg_a
    top_b = deg_a + 1 + deg_b
    for idx, name in ((top_a, "a"), (top_b, "b")):
        if _functional_vanishes(idx, particular, kernel):
            return SweepCell(
                pattern, p, q, deg_a, deg_b, "empty",
                detail + f"; every solution drops the leading coefficient of {name}",
            )
    point = _point_avoiding_zeros(particular, kernel, [top_a, top_b])
    if point is None:
        return SweepCell(pattern, p, q, deg_a, deg_b, "empty", detail + "; leading coefficients cannot both survive")
    a_poly = Poly((e, point[e]) for e in range(deg_a + 1))
    b_poly = Poly((e, point[deg_a + 1 + e]) for e in range(deg_b + 1))
    if delta_balance_check(a_poly, b_poly, p, q) != Poly.one():
        raise RuntimeError("sweep witness failed independent verification")
    witness = {"a": a_poly.to_json(), "b": b_poly.to_json()}
    return SweepCell(pattern, p, q, deg_a, deg_b, "solutions", detail + "; witness verified", witness)


def _cell_single_system(p, q, deg_a, deg_b, pattern, extra=""):
    """Cell for: exists alpha (deg deg_a), beta (deg deg_b) with
    [alpha X^p, beta Y^p] = 1, relaxed to gamma = alpha sigma^p(beta) (p,-p)
    of exact degree deg_a + deg_b + p with (1 - sigma^-p)(gamma) = 1."""
    big = deg_a + deg_b + p
    rows, rhs = _system_rows([(big, -p)], Poly.one())
    solved = _solve_exact(rows, rhs)
    detail = (
        f"[a X^{p}, b Y^{p}] = 1 via (1-s^-{p})(gamma) = 1, "
        f"deg gamma = {deg_a} + {deg_b} + {p}{extra}"
    )
    if solved is None:
        return SweepCell(pattern, p, q, deg_a, deg_b, "empty", detail + "; system inconsistent")
    particular, kernel = solved
    if _functional_vanishes(big, particular, kernel):
        return SweepCell(
            pattern, p, q, deg_a, deg_b, "empty",
            detail + "; every solution has deg gamma <= 1, below the forced degree",
        )
    # a witness exists; for constant coefficients recover the scalar family
    witness = None
    if deg_a == 0 and deg_b == 0:
        base = delta_op(structure_constant(p, -p), -p)
        if base.is_constant():
            t = 1 / base.constant_value()
            alpha = WeylElement({p: t})
            beta = WeylElement({-p: 1})
            if commutator(alpha, beta) != ONE:
                raise RuntimeError("sweep witness failed independent verification")
            witness = {
                "alpha": rat_to_str(t),
                "beta": rat_to_str(Fraction(1)),
                "relation": f"alpha*beta = {rat_to_str(t)}",
            }
    return SweepCell(pattern, p, q, deg_a, deg_b, "solutions", detail + "; solutions exist", witness)


def _mismatch_cell(pattern, p, q, reason):
    return SweepCell(pattern, p, q, None, None, "empty", reason)


def _case_ii_cells(bounds, pattern):
    specs = []
    max_deg = bounds["max_coeff_deg"]
    for p in range(1, bounds["p"] + 1):
        for q in range(1, bounds["q"] + 1):
            if p != q:
                specs.append(("mismatch", pattern, p, q,
                              f"[a X^{p}, b Y^{q}] is concentrated in degree {p - q}, never 1"))
                continue
            for deg_a in range(max_deg + 1):
                for deg_b in range(max_deg + 1):
                    specs.append(("single", pattern, p, q, deg_a, deg_b, ""))
    return specs


def _case_iii_cells(bounds, pattern):
    specs = []
    max_deg = bounds["max_coeff_deg"]
    note = "; from [P, Q_s] = 1 after the graded splitting of [P, Q] = 1"
    for p in range(2, bounds["p"] + 1):
        for deg_a in range(max_deg + 1):
            for deg_b in range(max_deg + 1):
                specs.append(("single", pattern, p, p, deg_a, deg_b, note))
    return specs


def _case_v_cells(bounds, pattern):
    specs = []
    max_deg = bounds["max_coeff_deg"]
    for p in range(2, bounds["p"] + 1):
        for q in range(p, bounds["q"] + 1):
            if q == p:
                for d in range(p - 1, p - 1 + max_deg + 1):
                    specs.append(("pair", pattern, p, q, d, d))
                continue
            for deg_a in range(p - 1, p - 1 + max_deg + 1):
                for deg_b in range(q - 1, q - 1 + max_deg + 1):
                    if deg_a < deg_b:
                        specs.append(("pair", pattern, p, q, deg_a, deg_b))
    return specs


def _run_cell(spec):
    kind = spec[0]
    if kind == "mismatch":
        _, pattern, p, q, reason = spec
        return _mismatch_cell(pattern, p, q, reason)
    if kind == "single":
        _, pattern, p, q, deg_a, deg_b, extra = spec
        return _cell_single_system(p, q, deg_a, deg_b, pattern, extra)
    _, pattern, p, q, deg_a, deg_b = spec
    return _cell_pair_system(p, q, deg_a, deg_b, pattern)


def impossibility_sweep(pattern: str, bounds: dict, cap: int = 16) -> SweepReport:
    """Exhaustive exact-linear-algebra sweep over one excluded configuration.

    bounds needs keys p, q, max_coeff_deg.  Cells are independent and run on
    a small thread pool (capped by WEYL_SWEEP_WORKERS); the report order is
    the deterministic cell enumeration order regardless of worker count.
    """
    if pattern not in ("case-ii", "case-iii", "case-v"):
        raise DomainError(f"unknown sweep pattern {pattern!r}")
    for key in ("p", "q", "max_coeff_deg"):
        if key not in bounds:
            raise DomainError(f"bounds must include {key!r}")
        if not isinstance(bounds[key], int) or bounds[key] < 0:
            raise DomainError(f"bound {key!r} must be a nonnegative integer")
        if bounds[key] > cap:
            raise DomainError(f"bound {key!r} = {bounds[key]} exceeds the cap {cap}")
    if bounds["p"] < 1 or bounds["q"] < 1:
        raise DomainError("bounds p and q must be at least 1")
    if pattern == "case-ii":
        specs = _case_ii_cells(bounds, pattern)
    elif pattern == "case-iii":
        specs = _case_iii_cells(bounds, pattern)
    else:
        specs = _case_v_cells(bounds, pattern)
    workers = os.environ.get("WEYL_SWEEP_WORKERS")
    try:
        workers = max(1, min(int(workers), 32)) if workers else None
    except ValueError:
        workers = None
    if workers == 1 or not specs:
        cells = tuple(_run_cell(s) for s in specs)
    else:
        with ThreadPoolExecutor(max_workers=workers or min(8, (os.cpu_count() or 1))) as pool:
            cells = tuple(pool.map(_run_cell, specs))
    return SweepReport(pattern=pattern, bounds=dict(bounds), cells=cells)
