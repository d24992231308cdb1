"""Canonical sparse multivariate polynomials and their ambient ring.

A ``RingContext`` fixes the coefficient field, the variable names, the
monomial order and an optional defining ideal Q, so it models both
k[x_1..x_n] and quotients A = k[x]/Q.  Polynomials store their terms as
a tuple sorted strictly descending in the ring's order, with no zero
coefficients; every operation re-canonicalises.
"""

from __future__ import annotations

from itertools import combinations_with_replacement

from .errors import LiaisonError, RingMismatchError
from .fields import QQ
from .orders import DegRevLex, mono_degree, mono_mul, mono_one


class Limits:
    """Resource caps for basis computations."""

    __slots__ = ("max_pairs", "max_degree")

    def __init__(self, max_pairs: int = 10**6, max_degree: int = 64):
        self.max_pairs = max_pairs
        self.max_degree = max_degree


class Polynomial:
    """Immutable canonical polynomial bound to a RingContext."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring, terms):
        # terms must already be canonical; use ring.poly() to build safely
        self.ring = ring
        self.terms = terms

    # -- inspection ----------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def lead_monomial(self) -> tuple:
        return self.terms[0][0]

    def lead_coeff(self):
        return self.terms[0][1]

    def lead_term(self):
        return self.terms[0]

    def total_degree(self) -> int:
        if not self.terms:
            raise LiaisonError("degree of the zero polynomial")
        return max(mono_degree(m) for m, _ in self.terms)

    def min_total_degree(self) -> int:
        """Least total degree among the terms; the order symbol in a
        regular ring."""
        if not self.terms:
            raise LiaisonError("min degree of the zero polynomial")
        return min(mono_degree(m) for m, _ in self.terms)

    def constant_coeff(self):
        one = mono_one(self.ring.nvars)
        for m, c in self.terms:
            if m == one:
                return c
        return self.ring.field.zero

    # -- arithmetic ----------------------------------------------------

    def _check(self, other: "Polynomial"):
        if self.ring is not other.ring and self.ring.signature != other.ring.signature:
            raise RingMismatchError(
                f"operands from different rings: {self.ring!r} vs {other.ring!r}"
            )

    def __add__(self, other):
        if not isinstance(other, Polynomial):
            other = self.ring.constant(other)
        self._check(other)
        acc = dict(self.terms)
        field = self.ring.field
        for m, c in other.terms:
            s = field.add(acc.get(m, field.zero), c)
            if field.is_zero(s):
                acc.pop(m, None)
            else:
                acc[m] = s
        return self.ring.poly(acc)

    def __sub__(self, other):
        if not isinstance(other, Polynomial):
            other = self.ring.constant(other)
        return self + (-other)

    def __neg__(self):
        field = self.ring.field
        return Polynomial(self.ring, tuple((m, field.neg(c)) for m, c in self.terms))

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            return self.scale(other)
        self._check(other)
        field = self.ring.field
        acc: dict = {}
        for m1, c1 in self.terms:
            for m2, c2 in other.terms:
                m = mono_mul(m1, m2)
                s = field.add(acc.get(m, field.zero), field.mul(c1, c2))
                if field.is_zero(s):
                    acc.pop(m, None)
                else:
                    acc[m] = s
        return self.ring.poly(acc)

    def __rmul__(self, other):
        return self.scale(other)

    def scale(self, c):
        field = self.ring.field
        c = field.coerce(c)
        if field.is_zero(c):
            return self.ring.zero
        return Polynomial(self.ring, tuple((m, field.mul(k, c)) for m, k in self.terms))

    def mono_scale(self, mono: tuple, c):
        """self * c*x^mono without re-sorting (order is multiplicative)."""
        field = self.ring.field
        return Polynomial(
            self.ring,
            tuple((mono_mul(m, mono), field.mul(k, c)) for m, k in self.terms),
        )

    def __pow__(self, e: int):
        if e < 0:
            raise LiaisonError("negative polynomial power")
        out = self.ring.one
        for _ in range(e):
            out = out * self
        return out

    def monic(self) -> "Polynomial":
        if self.is_zero:
            return self
        field = self.ring.field
        inv = field.inv(self.lead_coeff())
        return Polynomial(self.ring, tuple((m, field.mul(c, inv)) for m, c in self.terms))

    # -- equality / hashing / rendering ---------------------------------

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.terms == other.terms and self.ring.signature == other.ring.signature

    def __hash__(self):
        return hash(self.terms)

    def cast_to(self, ring: "RingContext") -> "Polynomial":
        """Re-tag the same term data into a ring with identical variables,
        field and order (used to pass to/from quotient contexts)."""
        if ring.names != self.ring.names or ring.field != self.ring.field:
            raise RingMismatchError("cast between incompatible rings")
        return Polynomial(ring, self.terms)

    def __str__(self):
        return render_poly(self)

    def __repr__(self):
        return f"<{render_poly(self)}>"


def render_mono(mono: tuple, names) -> str:
    parts = []
    for name, e in zip(names, mono):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts)


def render_poly(f: Polynomial) -> str:
    if f.is_zero:
        return "0"
    names = f.ring.names
    field = f.ring.field
    chunks = []
    for i, (mono, coeff) in enumerate(f.terms):
        text = field.render(coeff)
        neg = text.startswith("-")
        if neg:
            text = text[1:]
        monotext = render_mono(mono, names)
        if monotext:
            body = monotext if text == "1" else f"{text}*{monotext}"
        else:
            body = text
        if i == 0:
            chunks.append(f"-{body}" if neg else body)
        else:
            chunks.append(f"- {body}" if neg else f"+ {body}")
    return " ".join(chunks)


class RingContext:
    """Ambient ring: field, ordered variables, monomial order, optional
    defining ideal Q (as a tuple of polynomials of this ring)."""

    def __init__(self, field, names, order=None, limits: Limits | None = None):
        names = tuple(names)
        if len(set(names)) != len(names):
            raise LiaisonError(f"duplicate variable in {names}")
        self.field = field
        self.names = names
        self.order = order or DegRevLex()
        self.quotient: tuple = ()
        self.limits = limits or Limits()
        self._sig = None
        self._qgb = None
        self._power_gbs: dict = {}
        self._dim = None

    # -- construction helpers -------------------------------------------

    @property
    def nvars(self) -> int:
        return len(self.names)

    def poly(self, data) -> Polynomial:
        """Canonicalise a mono->coeff mapping (or iterable of pairs)."""
        if isinstance(data, dict):
            items = data.items()
        else:
            items = data
        field = self.field
        acc: dict = {}
        for mono, coeff in items:
            coeff = field.coerce(coeff)
            s = field.add(acc.get(mono, field.zero), coeff)
            if field.is_zero(s):
                acc.pop(mono, None)
            else:
                acc[mono] = s
        key = self.order.key
        terms = tuple(sorted(acc.items(), key=lambda mc: key(mc[0]), reverse=True))
        return Polynomial(self, terms)

    @property
    def zero(self) -> Polynomial:
        return Polynomial(self, ())

    @property
    def one(self) -> Polynomial:
        return Polynomial(self, ((mono_one(self.nvars), self.field.one),))

    def constant(self, c) -> Polynomial:
        c = self.field.coerce(c)
        if self.field.is_zero(c):
            return self.zero
        return Polynomial(self, ((mono_one(self.nvars), c),))

    def variable(self, name: str) -> Polynomial:
        i = self.names.index(name)
        mono = tuple(1 if j == i else 0 for j in range(self.nvars))
        return Polynomial(self, ((mono, self.field.one),))

    def variables(self) -> list[Polynomial]:
        return [self.variable(n) for n in self.names]

    def monomial(self, mono: tuple, coeff=1) -> Polynomial:
        c = self.field.coerce(coeff)
        if self.field.is_zero(c):
            return self.zero
        return Polynomial(self, ((tuple(mono), c),))

    # -- identity ---------------------------------------------------------

    @property
    def signature(self):
        if self._sig is None:
            qdata = tuple(tuple(f.terms) for f in self.quotient)
            self._sig = (self.field.tag, self.names, self.order.kind, qdata)
        return self._sig

    def __repr__(self):
        base = f"{self.field.tag}[{','.join(self.names)}]"
        if self.quotient:
            return base + " / (" + ", ".join(str(f) for f in self.quotient) + ")"
        return base

    # -- derived rings ----------------------------------------------------

    def with_quotient(self, polys) -> "RingContext":
        """A copy of this ring with defining ideal generated by ``polys``."""
        ring = RingContext(self.field, self.names, self.order, self.limits)
        ring.quotient = tuple(
            f.cast_to(ring) for f in polys if isinstance(f, Polynomial) and not f.is_zero
        )
        return ring

    def with_extra_quotient(self, polys) -> "RingContext":
        """Quotient further by ``polys``: models A/(J) for computations
        that happen over an Artinian reduction."""
        return self.with_quotient(list(self.quotient) + [f for f in polys if not f.is_zero])

    # -- quotient data ------------------------------------------------------

    def quotient_basis(self):
        """Reduced Groebner basis of the defining ideal Q (possibly empty)."""
        if self._qgb is None:
            from .groebner import buchberger

            self._qgb = buchberger(list(self.quotient), self, include_quotient=False)
        return self._qgb

    def power_of_max_ideal_gens(self, k: int) -> list[Polynomial]:
        """All monomials of total degree k, the generators of m^k."""
        if k <= 0:
            return [self.one]
        out = []
        for combo in combinations_with_replacement(range(self.nvars), k):
            mono = [0] * self.nvars
            for i in combo:
                mono[i] += 1
            out.append(self.monomial(tuple(mono)))
        key = self.order.key
        out.sort(key=lambda f: key(f.lead_monomial()), reverse=True)
        return out

    def power_of_max_ideal_basis(self, k: int):
        """Cached reduced GB of m^k + Q."""
        if k not in self._power_gbs:
            from .groebner import buchberger

            self._power_gbs[k] = buchberger(self.power_of_max_ideal_gens(k), self)
        return self._power_gbs[k]

    def dimension(self) -> int:
        """Krull dimension of R/Q, via maximal independent variable sets
        modulo the lead-term ideal of Q."""
        if self._dim is None:
            leads = [g.lead_monomial() for g in self.quotient_basis()]
            if any(mono_degree(m) == 0 for m in leads):
                raise LiaisonError("defining ideal is the unit ideal")
            n = self.nvars
            best = 0
            for mask in range(2**n):
                support = [i for i in range(n) if mask >> i & 1]
                if len(support) <= best:
                    continue
                outside = set(range(n)) - set(support)
                if all(any(m[i] > 0 for i in outside) for m in leads):
                    best = len(support)
            self._dim = best
        return self._dim
