"""Lie-algebra data: structure constants, invariant forms, representations.

Structure constants are stored sparsely as supplied; the accessor `f`
synthesizes the antisymmetric partner, so well-formed data only ever
lists one orientation per pair.  Validation never raises on bad algebra
data: it returns reports listing every violated instance, with 1-based
indices (all indices are 0-based internally).
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .linalg import Matrix, parse_scalar, rank


@dataclass(frozen=True)
class BilinearForm:
    matrix: Matrix

    @property
    def dim(self) -> int:
        return self.matrix.rows

    @property
    def is_orthonormal(self) -> bool:
        return self.matrix.is_identity


@dataclass(eq=False)
class LieData:
    """Dimension, structure constants f^c_ab keyed (a, b, c), named basis.

    Entries are kept exactly as constructed so that validation can flag
    inconsistent orientations; builtins and the file loader only ever
    populate a < b keys.
    """

    dim: int
    entries: dict
    basis_names: tuple = ()
    form: BilinearForm | None = None
    name: str = ""

    def __post_init__(self):
        self.entries = {k: Fraction(v) for k, v in self.entries.items()}
        if not self.basis_names:
            self.basis_names = tuple(f"e{i + 1}" for i in range(self.dim))
        self._tables = None

    def f(self, a, b, c) -> Fraction:
        """f^c_ab with the sign of the stored orientation synthesized."""
        v = self.entries.get((a, b, c))
        if v is not None:
            return v
        v = self.entries.get((b, a, c))
        if v is not None:
            return -v
        return Fraction(0)

    # -- derived tables, built once on first use ---------------------------

    def _build(self):
        n = self.dim
        bracket = {}
        for a in range(n):
            for b in range(a + 1, n):
                row = [(c, q) for c in range(n) if (q := self.f(a, b, c))]
                if row:
                    bracket[(a, b)] = tuple(row)
        # L_a g^c = -f^c_ab g^b: coefficient list per (a, c)
        action = {}
        for a in range(n):
            for c in range(n):
                row = [(b, -q) for b in range(n) if (q := self.f(a, b, c))]
                if row:
                    action[(a, c)] = tuple(row)
        # d v^c = -f^c_jk y^j v^k and the -1/2 f^c_pq y^p y^q part of d y^c
        dpairs = {}
        for c in range(n):
            row = []
            for j in range(n):
                for k in range(n):
                    q = self.f(j, k, c)
                    if q:
                        row.append((j, k, -q))
            if row:
                dpairs[c] = tuple(row)
        self._tables = (bracket, action, dpairs)

    def bracket(self, a, b):
        """Nonzero (c, f^c_ab) pairs for a < b."""
        if self._tables is None:
            self._build()
        return self._tables[0].get((a, b), ())

    def lie_action(self, a, c):
        """Nonzero (b, -f^c_ab) pairs: image of generator c under L_a."""
        if self._tables is None:
            self._build()
        return self._tables[1].get((a, c), ())

    def diff_pairs(self, c):
        """Nonzero (j, k, -f^c_jk) triples over ordered pairs (j, k)."""
        if self._tables is None:
            self._build()
        return self._tables[2].get(c, ())

    @property
    def has_orthonormal_form(self) -> bool:
        return self.form is not None and self.form.is_orthonormal


@dataclass(eq=False)
class RepData:
    """A tuple of n matrices, one per basis element, acting on V."""

    name: str
    matrices: tuple

    @property
    def dim(self) -> int:
        return self.matrices[0].rows if self.matrices else 0


@dataclass
class ValidationReport:
    subject: str
    violations: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def add(self, msg):
        self.violations.append(msg)

    def lines(self):
        if self.ok:
            return [f"ok    {self.subject}"]
        out = [f"FAIL  {self.subject}"]
        out.extend(f"      {v}" for v in self.violations)
        return out

    def __str__(self):
        return "\n".join(self.lines())


@dataclass
class FormReport(ValidationReport):
    orthonormal: bool = False


def validate_lie(lie: LieData) -> ValidationReport:
    """Check antisymmetry of stored entries and the Jacobi identity."""
    rep = ValidationReport("lie algebra" + (f" {lie.name}" if lie.name else ""))
    n = lie.dim
    for (a, b, c), v in sorted(lie.entries.items()):
        if not (0 <= a < n and 0 <= b < n and 0 <= c < n):
            rep.add(f"index out of range at ({a + 1},{b + 1},{c + 1})")
        elif a == b and v != 0:
            rep.add(f"antisymmetry violation at ({a + 1},{b + 1},{c + 1}): f^c_aa must vanish")
    seen = set()
    for (a, b, c) in sorted(lie.entries):
        if a == b or (a, b, c) in seen:
            continue
        other = lie.entries.get((b, a, c))
        if other is not None and lie.entries[(a, b, c)] + other != 0:
            key = (a, b, c) if a < b else (b, a, c)
            rep.add(
                f"antisymmetry violation at ({key[0] + 1},{key[1] + 1},{key[2] + 1}): "
                f"f^c_ab + f^c_ba != 0"
            )
            seen.add((a, b, c))
            seen.add((b, a, c))
    if not rep.ok:
        return rep
    for a in range(n):
        for b in range(a + 1, n):
            for c in range(b + 1, n):
                for d in range(n):
                    s = Fraction(0)
                    for m in range(n):
                        s += (
                            lie.f(a, b, m) * lie.f(m, c, d)
                            + lie.f(b, c, m) * lie.f(m, a, d)
                            + lie.f(c, a, m) * lie.f(m, b, d)
                        )
                    if s != 0:
                        rep.add(
                            f"jacobi violation at ({a + 1},{b + 1},{c + 1}) "
                            f"target {d + 1}: sum = {s}"
                        )
    return rep


def validate_form(lie: LieData, form: BilinearForm) -> FormReport:
    """Check symmetry, invertibility, and invariance; flag B = identity."""
    rep = FormReport("bilinear form")
    B = form.matrix
    n = lie.dim
    if B.rows != n or B.cols != n:
        rep.add(f"form is {B.rows}x{B.cols}, expected {n}x{n}")
        return rep
    if B != B.transpose():
        rep.add("form is not symmetric")
    if rank(B) != n:
        rep.add("form is degenerate")
    for a in range(n):
        for b in range(n):
            for d in range(n):
                s = Fraction(0)
                for c in range(n):
                    s += lie.f(a, b, c) * B[c, d] + lie.f(a, d, c) * B[b, c]
                if s != 0:
                    rep.add(f"invariance violation at ({a + 1},{b + 1},{d + 1}): sum = {s}")
    rep.orthonormal = form.is_orthonormal
    return rep


def validate_rep(lie: LieData, rep: RepData) -> ValidationReport:
    """Check that the matrices form a Lie homomorphism."""
    report = ValidationReport(f"representation {rep.name}")
    n = lie.dim
    if len(rep.matrices) != n:
        report.add(f"{len(rep.matrices)} matrices for dim {n}")
        return report
    d = rep.dim
    for i, m in enumerate(rep.matrices):
        if m.rows != d or m.cols != d:
            report.add(f"matrix {i + 1} is {m.rows}x{m.cols}, expected {d}x{d}")
    if not report.ok:
        return report
    for a in range(n):
        for b in range(a + 1, n):
            lhs = rep.matrices[a].commutator(rep.matrices[b])
            rhs = Matrix.zeros(d, d)
            for c, q in lie.bracket(a, b):
                rhs = rhs + rep.matrices[c] * q
            if lhs != rhs:
                report.add(f"representation violation at pair ({a + 1},{b + 1})")
    return report


def adjoint_rep(lie: LieData) -> RepData:
    """Matrices of ad on the basis: (tau_a)_cb = f^c_ab."""
    n = lie.dim
    mats = []
    for a in range(n):
        mats.append(Matrix(n, n, [lie.f(a, b, c) for c in range(n) for b in range(n)]))
    return RepData("adjoint", tuple(mats))


@lru_cache(maxsize=None)
def trivial_rep(lie: LieData, dim: int = 1) -> RepData:
    return RepData("trivial", tuple(Matrix.zeros(dim, dim) for _ in range(lie.dim)))


@dataclass(eq=False)
class AlgebraDef:
    """A named algebra bundle: Lie data, optional form, representations."""

    name: str
    lie: LieData
    reps: dict

    @property
    def form(self) -> BilinearForm | None:
        return self.lie.form

    def rep(self, name: str) -> RepData:
        if name not in self.reps:
            known = ", ".join(sorted(self.reps))
            raise KeyError(f"unknown representation {name!r} (have: {known})")
        return self.reps[name]


_ABELIAN = re.compile(r"abelian\((\d+)\)$")


def builtin_names():
    return ("abelian(n)", "heisenberg3", "so3", "sl2")


def builtin(name: str) -> AlgebraDef:
    """Catalog of validated algebras: abelian(n), heisenberg3, so3, sl2."""
    m = _ABELIAN.match(name.strip())
    if m:
        n = int(m.group(1))
        if n < 1:
            raise ValueError("abelian(n) needs n >= 1")
        lie = LieData(n, {}, form=BilinearForm(Matrix.identity(n)), name=name)
        reps = {"trivial": trivial_rep(lie), "adjoint": adjoint_rep(lie)}
        return AlgebraDef(name, lie, reps)
    if name == "heisenberg3":
        lie = LieData(3, {(0, 1, 2): Fraction(1)},
                      basis_names=("x", "y", "z"), name=name)
        reps = {"trivial": trivial_rep(lie), "adjoint": adjoint_rep(lie)}
        return AlgebraDef(name, lie, reps)
    if name == "so3":
        f = {(0, 1, 2): Fraction(1), (1, 2, 0): Fraction(1), (0, 2, 1): Fraction(-1)}
        lie = LieData(3, f, form=BilinearForm(Matrix.identity(3)), name=name)
        ad = adjoint_rep(lie)
        reps = {
            "trivial": trivial_rep(lie),
            "standard": RepData("standard", ad.matrices),
            "adjoint": ad,
        }
        return AlgebraDef(name, lie, reps)
    if name == "sl2":
        # basis (e, f, h): [e,f] = h, [e,h] = -2e, [f,h] = 2f
        f = {(0, 1, 2): Fraction(1), (0, 2, 0): Fraction(-2), (1, 2, 1): Fraction(2)}
        lie = LieData(3, f, basis_names=("e", "f", "h"), name=name)
        std = RepData("standard", (
            Matrix.from_rows([[0, 1], [0, 0]]),
            Matrix.from_rows([[0, 0], [1, 0]]),
            Matrix.from_rows([[1, 0], [0, -1]]),
        ))
        reps = {"trivial": trivial_rep(lie), "standard": std, "adjoint": adjoint_rep(lie)}
        return AlgebraDef(name, lie, reps)
    raise ValueError(f"unknown builtin algebra {name!r}")


def _entry_scalar(v):
    if isinstance(v, str):
        return parse_scalar(v)
    if isinstance(v, int):
        return Fraction(v)
    raise ValueError(f"matrix entries must be integers or 'p/q' strings, got {v!r}")


def _load_matrix(rows, what):
    if not isinstance(rows, list) or not rows or not all(isinstance(r, list) for r in rows):
        raise ValueError(f"{what}: expected a list of rows")
    return Matrix.from_rows([[_entry_scalar(e) for e in r] for r in rows])


def load_algebra_file(path) -> AlgebraDef:
    """Load a JSON algebra definition.

    Schema: {"dim": n, "f": [[a, b, c, "p/q"], ...], "B": [[...]]?,
    "reps": {"name": {"dim_v": d, "matrices": [[[...]]]}}?}.  Structure
    constants are 1-based, only a < b entries are allowed, and the
    antisymmetric partners are synthesized.  The trivial and adjoint
    representations are always available.
    """
    with open(path) as fh:
        data = json.load(fh)
    if not isinstance(data, dict):
        raise ValueError("algebra file must hold a JSON object")
    n = data.get("dim")
    if not isinstance(n, int) or n < 1:
        raise ValueError("'dim' must be a positive integer")
    entries = {}
    for item in data.get("f", []):
        if not (isinstance(item, list) and len(item) == 4):
            raise ValueError(f"'f' entries must be [a, b, c, value], got {item!r}")
        a, b, c, v = item
        if not all(isinstance(i, int) and 1 <= i <= n for i in (a, b, c)):
            raise ValueError(f"structure constant indices out of range in {item!r}")
        if not a < b:
            raise ValueError(f"structure constants must be listed with a < b, got ({a},{b},{c})")
        key = (a - 1, b - 1, c - 1)
        if key in entries:
            raise ValueError(f"duplicate structure constant at ({a},{b},{c})")
        entries[key] = _entry_scalar(v)
    form = None
    if "B" in data:
        B = _load_matrix(data["B"], "B")
        form = BilinearForm(B)
    name = data.get("name", str(path))
    lie = LieData(n, entries, form=form, name=name)
    reps = {"trivial": trivial_rep(lie), "adjoint": adjoint_rep(lie)}
    for rep_name, spec in (data.get("reps") or {}).items():
        d = spec.get("dim_v")
        mats = spec.get("matrices")
        if not isinstance(d, int) or d < 1:
            raise ValueError(f"rep {rep_name!r}: 'dim_v' must be a positive integer")
        if not isinstance(mats, list) or len(mats) != n:
            raise ValueError(f"rep {rep_name!r}: need {n} matrices")
        loaded = tuple(_load_matrix(m, f"rep {rep_name!r}") for m in mats)
        for m in loaded:
            if m.rows != d or m.cols != d:
                raise ValueError(f"rep {rep_name!r}: matrices must be {d}x{d}")
        reps[rep_name] = RepData(rep_name, loaded)
    return AlgebraDef(name, lie, reps)
