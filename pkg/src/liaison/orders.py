"""Monomials as exponent tuples, plus the supported monomial orders.

Every order here is global (1 is the smallest monomial), total and
multiplicative; each is realised through a sort key so that comparing
keys compares monomials.
"""

from __future__ import annotations

LT, EQ, GT = -1, 0, 1


def mono_one(nvars: int) -> tuple:
    return (0,) * nvars


def mono_mul(a: tuple, b: tuple) -> tuple:
    return tuple(x + y for x, y in zip(a, b))


def mono_divides(a: tuple, b: tuple) -> bool:
    """True when a | b componentwise."""
    return all(x <= y for x, y in zip(a, b))


def mono_div(a: tuple, b: tuple):
    """a / b, or None when b does not divide a."""
    out = []
    for x, y in zip(a, b):
        if x < y:
            return None
        out.append(x - y)
    return tuple(out)


def mono_lcm(a: tuple, b: tuple) -> tuple:
    return tuple(max(x, y) for x, y in zip(a, b))


def mono_gcd(a: tuple, b: tuple) -> tuple:
    return tuple(min(x, y) for x, y in zip(a, b))


def mono_degree(a: tuple) -> int:
    return sum(a)


def _drl_key(m: tuple):
    return (sum(m), tuple(-e for e in reversed(m)))


class DegRevLex:
    """Total degree first, ties broken reverse-lexicographically."""

    kind = "degrevlex"

    @staticmethod
    def key(m: tuple):
        return _drl_key(m)

    def __repr__(self):
        return "degrevlex"

    def __eq__(self, other):
        return getattr(other, "kind", None) == self.kind

    def __hash__(self):
        return hash(self.kind)


class Lex:
    kind = "lex"

    @staticmethod
    def key(m: tuple):
        return m

    def __repr__(self):
        return "lex"

    def __eq__(self, other):
        return getattr(other, "kind", None) == self.kind

    def __hash__(self):
        return hash(self.kind)


class BlockElimination:
    """Eliminates the first ``block`` variables: that block is compared
    by degrevlex before the remaining variables are considered."""

    def __init__(self, block: int):
        self.block = block
        self.kind = ("elim", block)

    def key(self, m: tuple):
        return (_drl_key(m[: self.block]), _drl_key(m[self.block :]))

    def __repr__(self):
        return f"elim({self.block})"

    def __eq__(self, other):
        return getattr(other, "kind", None) == self.kind

    def __hash__(self):
        return hash(self.kind)


def order_from_name(name: str, block: int | None = None):
    if name == "degrevlex":
        return DegRevLex()
    if name == "lex":
        return Lex()
    if name == "elim":
        if block is None:
            raise ValueError("elimination order needs a block size")
        return BlockElimination(block)
    raise ValueError(f"unknown monomial order {name!r}")


def monomial_cmp(a: tuple, b: tuple, order) -> int:
    """Compare two monomials; returns LT, EQ or GT."""
    if len(a) != len(b):
        raise ValueError(f"arity mismatch: {len(a)} vs {len(b)} variables")
    ka, kb = order.key(a), order.key(b)
    if ka < kb:
        return LT
    if ka > kb:
        return GT
    return EQ
