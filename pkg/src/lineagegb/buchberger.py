"""Serial classical Buchberger algorithm plus basis post-processing.

This is the single-threaded reference: pairs are processed from a FIFO queue,
initial pairs in lexicographic (i, j) order and pairs involving a newly added
element appended in creation order. No pair-pruning criteria are applied by
default, so run shapes match the threaded driver's deterministic mode.
"""

from __future__ import annotations

from collections import deque

from .poly import Poly, monomial_divides, monomial_lcm, monomial_mul
from .reduction import reduce_full, s_polynomial


def buchberger(gens, prune_coprime: bool = False) -> list:
    """Return a (possibly non-minimal) Groebner basis of the ideal (gens).

    The result is the nonzero input generators followed by every nonzero
    S-pair remainder, in processing order. ``prune_coprime`` skips pairs with
    coprime leading monomials (a standard shortcut that changes run shapes
    but not the reduced basis).
    """
    gens = list(gens)
    if not gens:
        raise ValueError("buchberger requires at least one generator")
    basis = [g for g in gens if not g.is_zero()]
    if not basis:
        return []
    pairs = deque((i, j) for i in range(len(basis)) for j in range(i + 1, len(basis)))
    while pairs:
        i, j = pairs.popleft()
        f, g = basis[i], basis[j]
        if prune_coprime:
            lf, lg = f.leading_monomial, g.leading_monomial
            if monomial_lcm(lf, lg) == monomial_mul(lf, lg):
                continue
        s = s_polynomial(f, g)
        if s.is_zero():
            continue
        r = reduce_full(s, basis).remainder
        if not r.is_zero():
            basis.append(r)
            k = len(basis) - 1
            pairs.extend((i2, k) for i2 in range(k))
    return basis


def is_groebner(basis) -> bool:
    """Buchberger's criterion: every S-pair reduces to zero against the basis."""
    basis = list(basis)
    for i in range(len(basis)):
        for j in range(i + 1, len(basis)):
            s = s_polynomial(basis[i], basis[j])
            if s.is_zero():
                continue
            if not reduce_full(s, basis).remainder.is_zero():
                return False
    return True


def minimalize(basis) -> list:
    """Null out redundant elements of a Groebner basis, position-aligned.

    An entry is dropped when its leading monomial is strictly divisible by
    another entry's leading monomial, or when a LATER entry has the same
    leading monomial (ties keep the later element). Survivors come back
    monic; dropped positions hold None.
    """
    basis = list(basis)
    lms = [p.leading_monomial for p in basis]
    out = []
    for i, lm in enumerate(lms):
        redundant = any(
            (lms[j] != lm and monomial_divides(lms[j], lm)) or (lms[j] == lm and j > i)
            for j in range(len(lms))
            if j != i
        )
        out.append(None if redundant else basis[i].monic())
    return out


def interreduce(basis) -> list:
    """Minimalize, then tail-reduce each survivor against the other survivors.

    The non-None entries form the unique reduced Groebner basis of the ideal.
    """
    minimal = minimalize(basis)
    survivors = [(i, p) for i, p in enumerate(minimal) if p is not None]
    out: list = [None] * len(minimal)
    for i, p in survivors:
        others = [q for j, q in survivors if j != i]
        r = reduce_full(p, others).remainder if others else p
        out[i] = r.monic()
    return out
