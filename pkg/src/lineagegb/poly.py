"""Exact multivariate polynomial arithmetic over Q with lex and grevlex orders.

Monomials are dense exponent tuples aligned with the ring's variable list;
position 0 is the most significant variable. Polynomials keep their terms
strictly descending under the ring's order with no zero coefficients, so
every value has exactly one representation and equality is structural.
Coefficients are `fractions.Fraction`, which guarantees the canonical form
(reduced, positive denominator, zero as 0/1).

All values here are immutable and safe to share between threads.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, NamedTuple, Union

from .errors import DivisibilityError, RingMismatchError, ZeroPolynomialError

Monomial = "tuple[int, ...]"

LEX = "lex"
GREVLEX = "grevlex"
MONOMIAL_ORDERS = (LEX, GREVLEX)

_ZERO = Fraction(0)
_ONE = Fraction(1)


@dataclass(frozen=True)
class Ring:
    """Variable names in significance order plus a monomial-order selector."""

    variables: tuple[str, ...]
    order: str = GREVLEX

    def __post_init__(self):
        object.__setattr__(self, "variables", tuple(self.variables))
        if not self.variables:
            raise ValueError("a ring needs at least one variable")
        if len(set(self.variables)) != len(self.variables):
            raise ValueError("ring variables must be pairwise distinct")
        if self.order not in MONOMIAL_ORDERS:
            raise ValueError(f"unknown monomial order {self.order!r}")

    @property
    def nvars(self) -> int:
        return len(self.variables)

    def check_monomial(self, mono) -> None:
        if len(mono) != self.nvars:
            raise RingMismatchError(
                f"exponent vector of length {len(mono)} in a {self.nvars}-variable ring"
            )

    def sort_key(self, mono):
        """Order-embedding key: monomial a > b iff sort_key(a) > sort_key(b)."""
        self.check_monomial(mono)
        if self.order == LEX:
            return mono
        # grevlex: total degree first; ties go to the monomial with the
        # smaller exponent in the last position where they differ.
        return (sum(mono), tuple(-e for e in reversed(mono)))


def cmp_monomials(a, b, ring: Ring) -> int:
    """Three-way comparison under the ring's order: -1, 0, or +1."""
    ka, kb = ring.sort_key(a), ring.sort_key(b)
    return (ka > kb) - (ka < kb)


def _check_lengths(a, b) -> None:
    if len(a) != len(b):
        raise RingMismatchError("exponent vectors of different lengths")


def monomial_mul(a, b):
    _check_lengths(a, b)
    return tuple(x + y for x, y in zip(a, b))


def monomial_lcm(a, b):
    """Componentwise maximum of the exponent vectors."""
    _check_lengths(a, b)
    return tuple(max(x, y) for x, y in zip(a, b))


def monomial_divides(a, b) -> bool:
    """True iff a divides b, i.e. every exponent of a is <= that of b."""
    _check_lengths(a, b)
    return all(x <= y for x, y in zip(a, b))


def monomial_div(a, b):
    """The quotient a / b; requires b to divide a."""
    _check_lengths(a, b)
    if not all(y <= x for x, y in zip(a, b)):
        raise DivisibilityError("monomial does not divide the dividend")
    return tuple(x - y for x, y in zip(a, b))


class Term(NamedTuple):
    coeff: Fraction
    mono: tuple


class Poly:
    """Immutable polynomial; ``terms`` is strictly descending and zero-free.

    The plain constructor trusts its input; use :meth:`from_terms` (or the
    expression parser) to build values from unsorted data.
    """

    __slots__ = ("ring", "terms")

    def __init__(self, ring: Ring, terms: tuple = ()):
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "terms", tuple(terms))

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    # -- constructors ------------------------------------------------

    @classmethod
    def zero(cls, ring: Ring) -> "Poly":
        return cls(ring, ())

    @classmethod
    def constant(cls, ring: Ring, value) -> "Poly":
        c = Fraction(value)
        if c == 0:
            return cls(ring, ())
        return cls(ring, (Term(c, (0,) * ring.nvars),))

    @classmethod
    def variable(cls, ring: Ring, name: str, power: int = 1) -> "Poly":
        if name not in ring.variables:
            raise ValueError(f"variable {name!r} not declared in the ring")
        if power < 0:
            raise ValueError("exponents must be natural numbers")
        mono = tuple(power if v == name else 0 for v in ring.variables)
        return cls(ring, (Term(_ONE, mono),))

    @classmethod
    def from_terms(cls, ring: Ring, pairs: Iterable) -> "Poly":
        """Build from (coeff, exponent-tuple) pairs; merges, drops zeros, sorts."""
        acc: dict = {}
        for coeff, mono in pairs:
            mono = tuple(mono)
            ring.check_monomial(mono)
            if any(e < 0 or not isinstance(e, int) for e in mono):
                raise ValueError("exponents must be natural numbers")
            acc[mono] = acc.get(mono, _ZERO) + Fraction(coeff)
        return cls(ring, _sorted_terms(ring, acc))

    # -- predicates and accessors ------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_constant(self) -> bool:
        """True for the zero polynomial and for nonzero rational constants."""
        return not self.terms or not any(self.terms[0].mono)

    @property
    def leading_term(self) -> Term:
        if not self.terms:
            raise ZeroPolynomialError("the zero polynomial has no leading term")
        return self.terms[0]

    @property
    def leading_monomial(self):
        return self.leading_term.mono

    @property
    def leading_coeff(self) -> Fraction:
        return self.leading_term.coeff

    # -- arithmetic ---------------------------------------------------

    def _check_ring(self, other: "Poly") -> None:
        if self.ring != other.ring:
            raise RingMismatchError("operands live in different rings")

    def __neg__(self) -> "Poly":
        return Poly(self.ring, tuple(Term(-c, m) for c, m in self.terms))

    def __add__(self, other) -> "Poly":
        if not isinstance(other, Poly):
            return NotImplemented
        self._check_ring(other)
        acc = {m: c for c, m in self.terms}
        for c, m in other.terms:
            acc[m] = acc.get(m, _ZERO) + c
        return Poly(self.ring, _sorted_terms(self.ring, acc))

    def __sub__(self, other) -> "Poly":
        if not isinstance(other, Poly):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other) -> "Poly":
        if isinstance(other, (int, Fraction)):
            return self.mul_term(Term(Fraction(other), (0,) * self.ring.nvars))
        if not isinstance(other, Poly):
            return NotImplemented
        self._check_ring(other)
        acc: dict = {}
        for c1, m1 in self.terms:
            for c2, m2 in other.terms:
                m = monomial_mul(m1, m2)
                acc[m] = acc.get(m, _ZERO) + c1 * c2
        return Poly(self.ring, _sorted_terms(self.ring, acc))

    def __rmul__(self, other) -> "Poly":
        if isinstance(other, (int, Fraction)):
            return self * other
        return NotImplemented

    def mul_term(self, term: Term) -> "Poly":
        """Multiply by a single term; term order is preserved under this map."""
        coeff = Fraction(term.coeff)
        if coeff == 0:
            return Poly(self.ring, ())
        mono = tuple(term.mono)
        self.ring.check_monomial(mono)
        return Poly(
            self.ring,
            tuple(Term(c * coeff, monomial_mul(m, mono)) for c, m in self.terms),
        )

    def monic(self) -> "Poly":
        """Divide by the leading coefficient so the leading coefficient is 1."""
        lc = self.leading_coeff
        if lc == 1:
            return self
        return Poly(self.ring, tuple(Term(c / lc, m) for c, m in self.terms))

    # -- comparisons / hashing ---------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, Poly):
            return NotImplemented
        return self.ring == other.ring and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.ring, self.terms))

    def __str__(self) -> str:
        from .formatting import render_poly

        return render_poly(self)

    def __repr__(self) -> str:
        return f"Poly({self})"


def _sorted_terms(ring: Ring, acc: dict) -> tuple:
    live = [m for m, c in acc.items() if c]
    live.sort(key=ring.sort_key, reverse=True)
    return tuple(Term(acc[m], m) for m in live)
