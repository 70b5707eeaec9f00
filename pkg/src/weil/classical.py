"""The classical covariant Weil algebra: S g* (x) /\\ g* (x) End V.

Elements are sparse maps (symmetric monomial, exterior monomial) ->
matrix.  The grading gives symmetric generators degree 2, exterior
generators degree 1, and endomorphisms degree 0; parity (for Koszul
signs) is the exterior length mod 2, since the other two factors are
even.  The three operators are structural derivations extended from
their generator formulas by the Leibniz rule.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .kernels import add_term, ext_mono_mul, ext_normalize, sym_mono_mul
from .linalg import Matrix


@dataclass(eq=False)
class ClassicalElement:
    lie: object
    rep: object
    terms: dict  # (sym exponents, ext indices) -> Matrix

    def _check_same(self, other):
        if self.lie is not other.lie or self.rep is not other.rep:
            raise ValueError("elements live in different algebras")

    def __add__(self, other):
        self._check_same(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            add_term(out, m, c)
        return ClassicalElement(self.lie, self.rep, out)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return ClassicalElement(self.lie, self.rep, {m: -c for m, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            q = Fraction(other)
            if not q:
                return zero(self.lie, self.rep)
            return ClassicalElement(self.lie, self.rep,
                                    {m: c * q for m, c in self.terms.items()})
        self._check_same(other)
        out = {}
        for (s1, e1), m1 in self.terms.items():
            for (s2, e2), m2 in other.terms.items():
                r = ext_mono_mul(e1, e2)
                if r is None:
                    continue
                sign, e = r
                prod = m1 * m2
                if not prod:
                    continue
                add_term(out, (sym_mono_mul(s1, s2), e), prod if sign > 0 else -prod)
        return ClassicalElement(self.lie, self.rep, out)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * other
        return NotImplemented

    def __eq__(self, other):
        if not isinstance(other, ClassicalElement):
            return NotImplemented
        return self.lie is other.lie and self.rep is other.rep and self.terms == other.terms

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def parity_parts(self):
        """Split into (parity, homogeneous part) by exterior length mod 2."""
        parts = ({}, {})
        for (s, e), m in self.terms.items():
            parts[len(e) % 2][(s, e)] = m
        return [(p, ClassicalElement(self.lie, self.rep, t))
                for p, t in enumerate(parts) if t]

    def degrees(self):
        return sorted({2 * sum(s) + len(e) for (s, e) in self.terms})

    def __repr__(self):
        from .render import render_classical
        return f"<{render_classical(self)}>"


def zero(lie, rep) -> ClassicalElement:
    return ClassicalElement(lie, rep, {})


def unit(lie, rep) -> ClassicalElement:
    n = lie.dim
    return ClassicalElement(lie, rep, {((0,) * n, ()): Matrix.identity(rep.dim)})


def scalar(lie, rep, q) -> ClassicalElement:
    return unit(lie, rep) * Fraction(q)


def sym_gen(lie, rep, a) -> ClassicalElement:
    mono = tuple(int(i == a) for i in range(lie.dim))
    return ClassicalElement(lie, rep, {(mono, ()): Matrix.identity(rep.dim)})


def ext_gen(lie, rep, a) -> ClassicalElement:
    return ClassicalElement(lie, rep, {((0,) * lie.dim, (a,)): Matrix.identity(rep.dim)})


def endo(lie, rep, mat: Matrix) -> ClassicalElement:
    if mat.rows != rep.dim or mat.cols != rep.dim:
        raise ValueError(f"matrix must be {rep.dim}x{rep.dim}")
    if not mat:
        return zero(lie, rep)
    return ClassicalElement(lie, rep, {((0,) * lie.dim, ()): mat})


def tau(lie, rep, a) -> ClassicalElement:
    return endo(lie, rep, rep.matrices[a])


def _bump(mono, i, by):
    out = list(mono)
    out[i] += by
    return tuple(out)


def lie_derivative(a, x: ClassicalElement) -> ClassicalElement:
    """L_a: even derivation; acts on all three tensor slots."""
    lie, rep = x.lie, x.rep
    tau_a = rep.matrices[a]
    out = {}
    for (s, e), mat in x.terms.items():
        for c, k in enumerate(s):
            if not k:
                continue
            for b, q in lie.lie_action(a, c):
                add_term(out, (_bump(_bump(s, c, -1), b, 1), e), mat * (q * k))
        for j, idx in enumerate(e):
            for b, q in lie.lie_action(a, idx):
                r = ext_normalize(e[:j] + (b,) + e[j + 1:])
                if r is None:
                    continue
                sign, e2 = r
                add_term(out, (s, e2), mat * (q * sign))
        cm = tau_a * mat - mat * tau_a
        if cm:
            add_term(out, (s, e), cm)
    return ClassicalElement(lie, rep, out)


def contraction(a, x: ClassicalElement) -> ClassicalElement:
    """iota_a: odd derivation of degree -1; kills all but the exterior slot."""
    out = {}
    for (s, e), mat in x.terms.items():
        for j, idx in enumerate(e):
            if idx == a:
                add_term(out, (s, e[:j] + e[j + 1:]), mat if j % 2 == 0 else -mat)
                break
    return ClassicalElement(x.lie, x.rep, out)


def differential(x: ClassicalElement) -> ClassicalElement:
    """The covariant differential: odd derivation of degree +1.

    Generator images: d v^c = -f^c_jk y^j v^k, d y^c = v^c - (1/2) f^c_jk
    y^j y^k, d A = y^b [tau_b, A] summed over b.
    """
    lie, rep = x.lie, x.rep
    n = lie.dim
    taus = rep.matrices
    out = {}
    for (s, e), mat in x.terms.items():
        # symmetric slot (even factors, no position sign)
        for c, k in enumerate(s):
            if not k:
                continue
            base = _bump(s, c, -1)
            for j, kk, q in lie.diff_pairs(c):
                r = ext_mono_mul((j,), e)
                if r is None:
                    continue
                sign, e2 = r
                add_term(out, (_bump(base, kk, 1), e2), mat * (q * k * sign))
        # exterior slot: sign (-1)^position for the odd factors passed
        for j, idx in enumerate(e):
            pref = 1 if j % 2 == 0 else -1
            rest = e[:j] + e[j + 1:]
            add_term(out, (_bump(s, idx, 1), rest), mat * pref)
            for p, q_, q in lie.diff_pairs(idx):
                r = ext_normalize(e[:j] + (p, q_) + e[j + 1:])
                if r is None:
                    continue
                sign, e2 = r
                add_term(out, (s, e2), mat * (q * pref * sign * Fraction(1, 2)))
        # endomorphism slot: sign (-1)^(exterior length)
        pref = 1 if len(e) % 2 == 0 else -1
        for b in range(n):
            cm = taus[b] * mat - mat * taus[b]
            if not cm:
                continue
            r = ext_mono_mul(e, (b,))
            if r is None:
                continue
            sign, e2 = r
            add_term(out, (s, e2), cm * (pref * sign))
    return ClassicalElement(lie, rep, out)


@lru_cache(maxsize=None)
def curvature(lie, rep) -> ClassicalElement:
    """C = sum_a v^a (x) 1 (x) tau_a; degree 2, d-closed."""
    out = {}
    for a in range(lie.dim):
        mat = rep.matrices[a]
        if mat:
            add_term(out, (tuple(int(i == a) for i in range(lie.dim)), ()), mat)
    return ClassicalElement(lie, rep, out)


def supercommutator(x: ClassicalElement, y: ClassicalElement) -> ClassicalElement:
    """[x, y] = xy - (-1)^{|x||y|} yx, extended bilinearly over parities."""
    x._check_same(y)
    out = zero(x.lie, x.rep)
    for p, xp in x.parity_parts():
        for q, yq in y.parity_parts():
            if p * q:
                out = out + xp * yq + yq * xp
            else:
                out = out + xp * yq - yq * xp
    return out
