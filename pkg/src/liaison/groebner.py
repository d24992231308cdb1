"""Buchberger engine: normal forms, reduced Groebner bases, staircases.

Quotient rings are handled by seeding every computation with the
reduced basis of the defining ideal Q, so a single engine serves both
k[x] and A = k[x]/Q.  The S-pair strategy is sugar-degree selection
with the product and chain criteria; ties break by input index, which
makes every run reproducible.
"""

from __future__ import annotations

import heapq
import math
from itertools import product as iter_product

from .errors import ResourceLimitError
from .orders import (
    mono_degree,
    mono_div,
    mono_divides,
    mono_gcd,
    mono_lcm,
    mono_one,
)
from .poly import Polynomial

INFINITE = math.inf


def reduce_full(f: Polynomial, basis) -> Polynomial:
    """Normal form of f against ``basis``: no remainder term is divisible
    by any lead monomial of the basis."""
    ring = f.ring
    field = ring.field
    divisors = [g for g in basis if not g.is_zero]
    out = []
    h = f
    while not h.is_zero:
        lm, lc = h.lead_term()
        hit = None
        for g in divisors:
            q = mono_div(lm, g.lead_monomial())
            if q is not None:
                hit = (g, q)
                break
        if hit is None:
            out.append((lm, lc))
            h = Polynomial(ring, h.terms[1:])
        else:
            g, q = hit
            h = h - g.mono_scale(q, field.div(lc, g.lead_coeff()))
    return Polynomial(ring, tuple(out))


def is_member(f: Polynomial, gb) -> bool:
    return reduce_full(f, gb).is_zero


def s_polynomial(f: Polynomial, g: Polynomial) -> Polynomial:
    field = f.ring.field
    lcm = mono_lcm(f.lead_monomial(), g.lead_monomial())
    uf = mono_div(lcm, f.lead_monomial())
    ug = mono_div(lcm, g.lead_monomial())
    return f.mono_scale(uf, field.inv(f.lead_coeff())) - g.mono_scale(
        ug, field.inv(g.lead_coeff())
    )


def buchberger(gens, ring, include_quotient: bool = True, limits=None):
    """Reduced Groebner basis of (gens) + Q, as a sorted tuple.

    Raises ResourceLimitError when the configured pair or degree cap is
    exceeded; the result is never silently truncated.
    """
    limits = limits or ring.limits
    seed = []
    if include_quotient and ring.quotient:
        seed.extend(ring.quotient_basis())
    seed.extend(g for g in gens if not g.is_zero)
    basis = [g.monic() for g in seed]
    sugars = [g.total_degree() for g in basis]

    pending: list = []
    done: set = set()

    def push_pair(i: int, j: int):
        fi, fj = basis[i], basis[j]
        lcm = mono_lcm(fi.lead_monomial(), fj.lead_monomial())
        deg = mono_degree(lcm)
        sugar = max(
            sugars[i] + deg - fi.total_degree(),
            sugars[j] + deg - fj.total_degree(),
        )
        heapq.heappush(pending, (sugar, ring.order.key(lcm), i, j))

    for j in range(len(basis)):
        for i in range(j):
            push_pair(i, j)

    one = mono_one(ring.nvars)
    reductions = 0
    while pending:
        sugar, _, i, j = heapq.heappop(pending)
        if (i, j) in done:
            continue
        done.add((i, j))
        fi, fj = basis[i], basis[j]
        lmi, lmj = fi.lead_monomial(), fj.lead_monomial()
        if mono_gcd(lmi, lmj) == one:
            continue
        lcm = mono_lcm(lmi, lmj)
        chained = False
        for k in range(len(basis)):
            if k in (i, j):
                continue
            if mono_divides(basis[k].lead_monomial(), lcm):
                pik = (min(i, k), max(i, k))
                pjk = (min(j, k), max(j, k))
                if pik in done and pjk in done:
                    chained = True
                    break
        if chained:
            continue
        reductions += 1
        if reductions > limits.max_pairs:
            raise ResourceLimitError(
                f"pair-reduction cap {limits.max_pairs} exceeded"
            )
        s = s_polynomial(fi, fj)
        r = reduce_full(s, basis)
        if r.is_zero:
            continue
        if r.total_degree() > limits.max_degree:
            raise ResourceLimitError(
                f"degree cap {limits.max_degree} exceeded at degree {r.total_degree()}"
            )
        basis.append(r.monic())
        sugars.append(max(sugar, r.total_degree()))
        new = len(basis) - 1
        for idx in range(new):
            push_pair(idx, new)

    return _reduce_basis(basis, ring)


def _reduce_basis(basis, ring):
    """Minimalise and tail-reduce to the unique reduced basis."""
    key = ring.order.key
    basis = [g for g in basis if not g.is_zero]
    basis.sort(key=lambda g: key(g.lead_monomial()))
    minimal = []
    for g in basis:
        lm = g.lead_monomial()
        if any(mono_divides(h.lead_monomial(), lm) for h in minimal):
            continue
        minimal.append(g)
    reduced = []
    for idx, g in enumerate(minimal):
        others = minimal[:idx] + minimal[idx + 1 :]
        r = reduce_full(g, others)
        if not r.is_zero:
            reduced.append(r.monic())
    reduced.sort(key=lambda g: key(g.lead_monomial()))
    return tuple(reduced)


def standard_monomials(gb, ring):
    """Monomials outside the lead-term ideal of ``gb``.

    Returns the sorted finite list, or None when the staircase is
    infinite (some variable has no pure power among the lead monomials).
    """
    leads = [g.lead_monomial() for g in gb]
    if any(mono_degree(m) == 0 for m in leads):
        return []
    bounds = []
    for i in range(ring.nvars):
        pure = [
            m[i]
            for m in leads
            if m[i] > 0 and all(e == 0 for k, e in enumerate(m) if k != i)
        ]
        if not pure:
            return None
        bounds.append(min(pure))
    out = []
    for mono in iter_product(*(range(b) for b in bounds)):
        if not any(mono_divides(m, mono) for m in leads):
            out.append(mono)
    out.sort(key=ring.order.key)
    return out


def length_from_gb(gb, ring):
    """Vector-space dimension of R/(gb), or INFINITE."""
    sm = standard_monomials(gb, ring)
    return INFINITE if sm is None else len(sm)


def exact_divide(f: Polynomial, g: Polynomial) -> Polynomial:
    """f / g for an exact polynomial multiple; internal error otherwise."""
    ring = f.ring
    field = ring.field
    quot: dict = {}
    h = f
    while not h.is_zero:
        lm, lc = h.lead_term()
        q = mono_div(lm, g.lead_monomial())
        if q is None:
            raise ArithmeticError(f"{f} is not divisible by {g}")
        c = field.div(lc, g.lead_coeff())
        quot[q] = c
        h = h - g.mono_scale(q, c)
    return ring.poly(quot)
