"""S-polynomials and multivariate division with a quotient certificate."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import RingMismatchError, ZeroPolynomialError
from .poly import Poly, Term, monomial_div, monomial_divides, monomial_lcm, monomial_mul

_ZERO = Fraction(0)


@dataclass(frozen=True)
class DivisionResult:
    """Remainder plus quotients aligned with the divisor list, so that
    dividend = sum(quotients[i] * divisors[i]) + remainder exactly."""

    remainder: Poly
    quotients: tuple


def s_polynomial(f: Poly, g: Poly) -> Poly:
    """(L/LT(f))*f - (L/LT(g))*g with L = lcm(LM(f), LM(g)); may be zero."""
    if f.is_zero() or g.is_zero():
        raise ZeroPolynomialError("S-polynomials need nonzero inputs")
    if f.ring != g.ring:
        raise RingMismatchError("operands live in different rings")
    lcm = monomial_lcm(f.leading_monomial, g.leading_monomial)
    left = f.mul_term(Term(1 / f.leading_coeff, monomial_div(lcm, f.leading_monomial)))
    right = g.mul_term(Term(1 / g.leading_coeff, monomial_div(lcm, g.leading_monomial)))
    return left - right


def reduce_full(f: Poly, divisors) -> DivisionResult:
    """Fully reduce f by an ordered divisor list (normal form with certificate).

    Repeatedly takes the greatest term of the working polynomial: if some
    divisor's leading monomial divides it, the FIRST such divisor in list
    order cancels it; otherwise the term moves to the remainder. Tails are
    reduced too, and the remainder keeps whatever sign and scale the algebra
    produces.
    """
    divisors = list(divisors)
    ring = f.ring
    for d in divisors:
        if d.is_zero():
            raise ZeroPolynomialError("zero divisor in reduction")
        if d.ring != ring:
            raise RingMismatchError("divisor lives in a different ring")
    leads = [(d.leading_monomial, d.leading_coeff, d) for d in divisors]

    work = {m: c for c, m in f.terms}
    quotients: list[dict] = [{} for _ in divisors]
    rem_terms = []
    key = ring.sort_key
    while work:
        mono = max(work, key=key)
        coeff = work[mono]
        for i, (lm, lc, d) in enumerate(leads):
            if monomial_divides(lm, mono):
                qm = tuple(x - y for x, y in zip(mono, lm))
                qc = coeff / lc
                quotients[i][qm] = quotients[i].get(qm, _ZERO) + qc
                for dc, dm in d.terms:
                    t = monomial_mul(dm, qm)
                    nc = work.get(t, _ZERO) - qc * dc
                    if nc:
                        work[t] = nc
                    elif t in work:
                        del work[t]
                break
        else:
            rem_terms.append(Term(coeff, mono))
            del work[mono]

    remainder = Poly(ring, tuple(rem_terms))  # built in descending order
    quots = tuple(
        Poly.from_terms(ring, ((c, m) for m, c in q.items())) for q in quotients
    )
    return DivisionResult(remainder, quots)


def verify_division(f: Poly, divisors, result: DivisionResult) -> bool:
    """Check the exact division identity and remainder irreducibility."""
    divisors = list(divisors)
    if len(divisors) != len(result.quotients):
        raise ValueError("quotient list does not match the divisor list")
    total = result.remainder
    for q, d in zip(result.quotients, divisors):
        total = total + q * d
    if total != f:
        return False
    lead_monos = [d.leading_monomial for d in divisors]
    return all(
        not monomial_divides(lm, t.mono)
        for t in result.remainder.terms
        for lm in lead_monos
    )
