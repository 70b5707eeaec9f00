"""Normal-form product kernels for the four generator algebras.

Monomials are plain tuples: symmetric and enveloping-algebra monomials
are exponent vectors, exterior and Clifford monomials are strictly
increasing index tuples.  Polynomials are dicts monomial -> coefficient
with no zero coefficients stored; coefficients may be Fractions or
matrices, anything with exact +, *, unary - and falsy zero.

Rewriting is worklist-based and terminates because every step lowers
(word length, inversion count) lexicographically.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache


def add_term(acc: dict, mono, coeff):
    """acc[mono] += coeff, dropping the key when the sum vanishes."""
    cur = acc.get(mono)
    new = coeff if cur is None else cur + coeff
    if new:
        acc[mono] = new
    elif cur is not None:
        del acc[mono]


def poly_add(a: dict, b: dict) -> dict:
    out = dict(a)
    for m, c in b.items():
        add_term(out, m, c)
    return out


def poly_scale(a: dict, q) -> dict:
    if not q:
        return {}
    return {m: c * q for m, c in a.items()}


# -- symmetric algebra -----------------------------------------------------

def sym_mono_mul(m1, m2):
    return tuple(x + y for x, y in zip(m1, m2))


def sym_degree(m) -> int:
    return sum(m)


def mul_sym(a: dict, b: dict) -> dict:
    out = {}
    for m1, c1 in a.items():
        for m2, c2 in b.items():
            add_term(out, sym_mono_mul(m1, m2), c1 * c2)
    return out


# -- exterior algebra ------------------------------------------------------

def ext_normalize(word):
    """Sort an index word, tracking the Koszul sign.

    Returns (sign, strictly increasing tuple), or None when an index
    repeats (odd generators square to zero).
    """
    w = list(word)
    sign = 1
    for i in range(1, len(w)):
        j = i
        while j > 0 and w[j - 1] > w[j]:
            w[j - 1], w[j] = w[j], w[j - 1]
            sign = -sign
            j -= 1
        if j > 0 and w[j - 1] == w[j]:
            return None
    return sign, tuple(w)


def ext_mono_mul(m1, m2):
    return ext_normalize(m1 + m2)


def mul_ext(a: dict, b: dict) -> dict:
    out = {}
    for m1, c1 in a.items():
        for m2, c2 in b.items():
            r = ext_mono_mul(m1, m2)
            if r is None:
                continue
            sign, m = r
            c = c1 * c2
            add_term(out, m, c if sign > 0 else -c)
    return out


# -- Clifford algebra ------------------------------------------------------

@lru_cache(maxsize=None)
def cliff_mono_mul(m1, m2, B):
    """Product of two Clifford monomials under x_a x_b + x_b x_a = B_ab.

    B is the (symmetric) form matrix; generator squares are B_aa / 2.
    Returns a tuple of (monomial, Fraction) pairs in normal form.
    """
    out = {}
    stack = [(Fraction(1), list(m1 + m2))]
    while stack:
        coeff, w = stack.pop()
        bad = None
        for i in range(len(w) - 1):
            if w[i] >= w[i + 1]:
                bad = i
                break
        if bad is None:
            add_term(out, tuple(w), coeff)
            continue
        a, b = w[bad], w[bad + 1]
        if a == b:
            q = B[a, a] / 2
            if q:
                stack.append((coeff * q, w[:bad] + w[bad + 2:]))
        else:
            stack.append((-coeff, w[:bad] + [b, a] + w[bad + 2:]))
            q = B[a, b]
            if q:
                stack.append((coeff * q, w[:bad] + w[bad + 2:]))
    return tuple(sorted(out.items()))


def mul_clifford(a: dict, b: dict, B) -> dict:
    out = {}
    for m1, c1 in a.items():
        for m2, c2 in b.items():
            c = c1 * c2
            for m, q in cliff_mono_mul(m1, m2, B):
                add_term(out, m, c * q)
    return out


# -- universal enveloping algebra ------------------------------------------

def pbw_word(mono):
    """Expand an exponent vector into its sorted letter word."""
    out = []
    for i, k in enumerate(mono):
        out.extend([i] * k)
    return tuple(out)


def _word_mono(w, n):
    exp = [0] * n
    for i in w:
        exp[i] += 1
    return tuple(exp)


def pbw_word_mul(word, lie, strategy="leftmost"):
    """Straighten a letter word into PBW normal form.

    Out-of-order adjacent pairs rewrite via u_b u_a = u_a u_b - f^c_ab u_c.
    `strategy` picks which disordered pair to rewrite first; any choice
    yields the same normal form (confluence), which the tests exercise.
    """
    n = lie.dim
    out = {}
    stack = [(Fraction(1), list(word))]
    while stack:
        coeff, w = stack.pop()
        bad = None
        idx = range(len(w) - 1)
        if strategy == "rightmost":
            idx = range(len(w) - 2, -1, -1)
        for i in idx:
            if w[i] > w[i + 1]:
                bad = i
                break
        if bad is None:
            add_term(out, _word_mono(w, n), coeff)
            continue
        b, a = w[bad], w[bad + 1]
        stack.append((coeff, w[:bad] + [a, b] + w[bad + 2:]))
        for c, q in lie.bracket(a, b):
            stack.append((-coeff * q, w[:bad] + [c] + w[bad + 2:]))
    return out


@lru_cache(maxsize=None)
def pbw_mono_mul(m1, m2, lie, strategy="leftmost"):
    d = pbw_word_mul(pbw_word(m1) + pbw_word(m2), lie, strategy)
    return tuple(sorted(d.items()))


def mul_pbw(a: dict, b: dict, lie, strategy="leftmost") -> dict:
    out = {}
    for m1, c1 in a.items():
        for m2, c2 in b.items():
            c = c1 * c2
            for m, q in pbw_mono_mul(m1, m2, lie, strategy):
                add_term(out, m, c * q)
    return out
