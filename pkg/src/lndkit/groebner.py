"""Buchberger's algorithm and multivariate division (normal forms).

The engine works over Q with exact arithmetic.  `groebner_basis` returns
the reduced, monic basis, which is a canonical object: running it on its
own output is a fixed point, and golden-file comparisons are exact.
"""

from __future__ import annotations


from .poly import Polynomial, TermOrder


def normal_form(f: Polynomial, basis: list[Polynomial], order: TermOrder) -> Polynomial:
    """Remainder of f under multivariate division by `basis`.

    When `basis` is a Groebner basis the result is the canonical
    representative of f modulo the ideal: no term of the output is
    divisible by any basis leading monomial.
    """
    basis = [g for g in basis if not g.is_zero()]
    if not basis or f.is_zero():
        return f
    lead = [(g.leading_monomial(order), g.leading_coefficient(order), g) for g in basis]
    remainder = Polynomial.zero(f.vars)
    work = f
    while not work.is_zero():
        m, c = work.sorted_terms(order)[0]
        for lm, lc, g in lead:
            if lm.divides(m):
                work = work - Polynomial(f.vars, {m.divide(lm): c / lc}) * g
                break
        else:
            remainder = remainder + Polynomial(f.vars, {m: c})
            work = work - Polynomial(f.vars, {m: c})
    return remainder


def s_polynomial(f: Polynomial, g: Polynomial, order: TermOrder) -> Polynomial:
    lmf, lmg = f.leading_monomial(order), g.leading_monomial(order)
    lcm = lmf.lcm(lmg)
    mf = Polynomial(f.vars, {lcm.divide(lmf): 1 / f.leading_coefficient(order)})
    mg = Polynomial(g.vars, {lcm.divide(lmg): 1 / g.leading_coefficient(order)})
    return mf * f - mg * g


def _interreduce(basis: list[Polynomial], order: TermOrder) -> list[Polynomial]:
    """Reduce each element against the others; drop zeros; make monic."""
    basis = [g for g in basis if not g.is_zero()]
    changed = True
    while changed:
        changed = False
        for i, g in enumerate(basis):
            rest = basis[:i] + basis[i + 1 :]
            r = normal_form(g, rest, order)
            if r != g:
                changed = True
                if r.is_zero():
                    basis = rest
                else:
                    basis = rest + [r]
                break
    n = len(basis[0].vars) if basis else 0
    basis = [g.monic(order) for g in basis]
    basis.sort(key=lambda g: order.sort_key(g.leading_monomial(order), n))
    return basis


def groebner_basis(relations: list[Polynomial], order: TermOrder) -> list[Polynomial]:
    """Reduced monic Groebner basis of the ideal generated by `relations`.

    Plain Buchberger with the coprime-leading-term criterion; adequate
    for the small presentations this package targets.
    """
    basis = [f for f in relations if not f.is_zero()]
    if not basis:
        return []
    basis = [f.monic(order) for f in basis]
    pairs = [(i, j) for i in range(len(basis)) for j in range(i + 1, len(basis))]
    while pairs:
        i, j = pairs.pop()
        f, g = basis[i], basis[j]
        lmf, lmg = f.leading_monomial(order), g.leading_monomial(order)
        if lmf.lcm(lmg) == lmf * lmg:
            continue  # coprime leading terms: S-polynomial reduces to 0
        r = normal_form(s_polynomial(f, g, order), basis, order)
        if not r.is_zero():
            basis.append(r.monic(order))
            k = len(basis) - 1
            pairs.extend((i2, k) for i2 in range(k))
    return _interreduce(basis, order)


def is_groebner_basis(basis: list[Polynomial], order: TermOrder) -> bool:
    """Buchberger's criterion: every S-polynomial reduces to zero."""
    for i in range(len(basis)):
        for j in range(i + 1, len(basis)):
            s = s_polynomial(basis[i], basis[j], order)
            if not normal_form(s, basis, order).is_zero():
                return False
    return True
