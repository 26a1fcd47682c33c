"""Graded bases and exact linear algebra over the rationals.

The graded pieces of the multiderivation spaces X^k and of the Kahler form
spaces Omega^k over A = F[x,y,z] are finite dimensional; their bases are
monomials placed in a single component, enumerated in the fixed monomial
order (component 1 < 2 < 3).  Operators between graded pieces become exact
rational matrices, and all dimension counts reduce to ranks, kernels and
cokernels computed by integer row reduction (rows kept primitive via gcd
normalization, so no rounding and no coefficient blowup in practice).

Degree bookkeeping: a vector (f1,f2,f3) of derivation degree i has component
degrees i+w_j in X^1 and i+|w|-w_j in X^2; form degrees run the other way
(Omega^k at form degree i matches X^{3-k} at derivation degree i-|w|).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Iterable, Sequence, Union

from .poly import Monomial, Poly, WeightSystem, monomials_of_degree
from .vectorcalc import VecPoly

Vector = dict[int, Fraction]
Cochain = Union[Poly, VecPoly]

SCALAR_KINDS = frozenset({"A", "X0", "X3", "Omega0", "Omega3"})
VECTOR_KINDS = frozenset({"X1", "X2", "Omega1", "Omega2"})
SPACE_KINDS = SCALAR_KINDS | VECTOR_KINDS


class DegreeMismatch(ValueError):
    """An operator output fell outside the target graded piece."""


def component_degrees(kind: str, i: int, w: WeightSystem) -> tuple[int, ...]:
    """Polynomial degrees of the components of the graded piece kind_i."""
    w1, w2, w3 = w.weights
    s = w.weight_sum
    if kind in ("A", "X0", "Omega0"):
        return (i,)
    if kind == "X3":
        return (i + s,)
    if kind == "Omega3":
        return (i - s,)
    if kind == "X1":
        return (i + w1, i + w2, i + w3)
    if kind == "Omega1":
        return (i - w1, i - w2, i - w3)
    if kind == "X2":
        return (i + w2 + w3, i + w1 + w3, i + w1 + w2)
    if kind == "Omega2":
        return (i - w2 - w3, i - w1 - w3, i - w1 - w2)
    raise ValueError("unknown space kind %r" % kind)


@dataclass(frozen=True)
class GradedBasis:
    """Monomial basis of one graded piece of A, X^k or Omega^k."""

    kind: str
    degree: int
    weights: WeightSystem
    component_degrees: tuple[int, ...]
    monomials: tuple[tuple[Monomial, ...], ...]
    _index: dict = field(compare=False, repr=False, default_factory=dict)

    def __post_init__(self):
        index: dict[tuple[int, Monomial], int] = {}
        j = 0
        for comp, monos in enumerate(self.monomials):
            for m in monos:
                index[(comp, m)] = j
                j += 1
        self._index.update(index)

    @property
    def is_vector(self) -> bool:
        return len(self.monomials) == 3

    @property
    def dim(self) -> int:
        return sum(len(ms) for ms in self.monomials)

    def element(self, j: int) -> Cochain:
        """The j-th basis cochain (a single monomial in a single component)."""
        for comp, monos in enumerate(self.monomials):
            if j < len(monos):
                p = Poly.monomial(monos[j])
                if not self.is_vector:
                    return p
                parts = [Poly.zero(), Poly.zero(), Poly.zero()]
                parts[comp] = p
                return VecPoly(tuple(parts))  # type: ignore[arg-type]
            j -= len(monos)
        raise IndexError("basis index out of range")

    @property
    def elements(self) -> list[Cochain]:
        return [self.element(j) for j in range(self.dim)]

    def element_from_coords(self, vec: Vector) -> Cochain:
        """Rebuild the cochain with the given coordinates in this basis."""
        if self.is_vector:
            parts = [Poly.zero(), Poly.zero(), Poly.zero()]
            j = 0
            for comp, monos in enumerate(self.monomials):
                for m in monos:
                    c = vec.get(j)
                    if c:
                        parts[comp] = parts[comp] + Poly.monomial(m, c)
                    j += 1
            return VecPoly(tuple(parts))  # type: ignore[arg-type]
        out = Poly.zero()
        for j, m in enumerate(self.monomials[0]):
            c = vec.get(j)
            if c:
                out = out + Poly.monomial(m, c)
        return out

    def coords_of(self, obj: Cochain) -> Vector:
        """Coordinates of a Poly/VecPoly in this basis; DegreeMismatch if it
        contains a monomial outside this graded piece."""
        vec: Vector = {}
        if self.is_vector:
            if not isinstance(obj, VecPoly):
                raise DegreeMismatch("expected a vector cochain for %s" % self.kind)
            comps = obj.components
        else:
            if not isinstance(obj, Poly):
                raise DegreeMismatch("expected a scalar cochain for %s" % self.kind)
            comps = (obj,)
        for comp, p in enumerate(comps):
            for m, c in p.terms.items():
                j = self._index.get((comp, m))
                if j is None:
                    raise DegreeMismatch(
                        "monomial %s in component %d does not lie in %s at degree %d"
                        % (m, comp + 1, self.kind, self.degree)
                    )
                vec[j] = c
        return vec


@lru_cache(maxsize=None)
def basis_of(kind: str, i: int, w: WeightSystem) -> GradedBasis:
    """The ordered monomial basis of the graded piece kind_i."""
    if kind not in SPACE_KINDS:
        raise ValueError("unknown space kind %r" % kind)
    degs = component_degrees(kind, i, w)
    monos = tuple(tuple(monomials_of_degree(d, w)) for d in degs)
    return GradedBasis(kind, i, w, degs, monos)


# ---------------------------------------------------------------------------
# Integer row echelon over Q
# ---------------------------------------------------------------------------


def _primitive(row: dict[int, int]) -> dict[int, int]:
    g = 0
    for v in row.values():
        g = math.gcd(g, v)
        if g == 1:
            return row
    if g > 1:
        return {k: v // g for k, v in row.items()}
    return row


def to_int_vector(vec: Vector) -> dict[int, int]:
    """Clear denominators (column scaling preserves span and rank)."""
    if not vec:
        return {}
    lcm = 1
    for c in vec.values():
        d = c.denominator if isinstance(c, Fraction) else 1
        lcm = lcm * d // math.gcd(lcm, d)
    out = {}
    for k, c in vec.items():
        v = int(c * lcm) if isinstance(c, Fraction) else c * lcm
        if v:
            out[k] = v
    return _primitive(out)


class Echelon:
    """Incremental integer row echelon; spans a subspace of Q^n exactly."""

    __slots__ = ("_rows",)

    def __init__(self):
        self._rows: dict[int, dict[int, int]] = {}

    @property
    def rank(self) -> int:
        return len(self._rows)

    def _reduced(self, row: dict[int, int]) -> dict[int, int]:
        while row:
            p = min(row)
            piv = self._rows.get(p)
            if piv is None:
                return row
            a = row[p]
            b = piv[p]
            g = math.gcd(a, b)
            mr = b // g
            mp = a // g
            new = {k: mr * v for k, v in row.items()}
            for k, v in piv.items():
                s = new.get(k, 0) - mp * v
                if s:
                    new[k] = s
                else:
                    new.pop(k, None)
            row = _primitive(new)
        return row

    def insert(self, vec: Vector) -> bool:
        """Add a rational vector to the span; True if the rank grew."""
        row = self._reduced(to_int_vector(vec))
        if not row:
            return False
        p = min(row)
        if row[p] < 0:
            row = {k: -v for k, v in row.items()}
        self._rows[p] = row
        return True

    def insert_int(self, row: dict[int, int]) -> dict[int, int] | None:
        """Insert an already-integer row; returns the stored residual (or None)."""
        row = self._reduced(dict(row))
        if not row:
            return None
        p = min(row)
        if row[p] < 0:
            row = {k: -v for k, v in row.items()}
        self._rows[p] = row
        return row

    def contains(self, vec: Vector) -> bool:
        return not self._reduced(to_int_vector(vec))

    def rows(self) -> list[dict[int, int]]:
        return [dict(self._rows[p]) for p in sorted(self._rows)]


def rank_of_columns(columns: Iterable[Vector]) -> int:
    ech = Echelon()
    for col in columns:
        ech.insert(col)
    return ech.rank


def kernel_of_columns(columns: Sequence[Vector], rows: int) -> list[Vector]:
    """Basis of {x : sum_j x_j * col_j = 0}, via integer tracking columns.

    Each column is scaled to integers and augmented with its scale factor in a
    tracking coordinate; rows of the echelon supported entirely in the
    tracking zone read off integer kernel vectors directly.
    """
    ech = Echelon()
    kernel: list[Vector] = []
    for j, col in enumerate(columns):
        aug = dict(col)
        aug[rows + j] = Fraction(1)
        res = ech.insert_int(to_int_vector(aug))
        if res is not None and min(res) >= rows:
            kernel.append({k - rows: Fraction(v) for k, v in res.items()})
    return kernel


# ---------------------------------------------------------------------------
# Operator matrices between graded pieces
# ---------------------------------------------------------------------------


class GradedOperatorMatrix:
    """Exact matrix of a linear operator between two graded bases.

    Column j holds the target coordinates of the operator applied to source
    basis element j.  Stored sparsely; entries are Fractions.
    """

    def __init__(self, source: GradedBasis, target: GradedBasis, columns: Sequence[Vector]):
        self.source = source
        self.target = target
        self.columns = [dict(c) for c in columns]
        self._rank: int | None = None

    @classmethod
    def of_operator(
        cls,
        op: Callable[[Cochain], Cochain],
        source: GradedBasis,
        target: GradedBasis,
    ) -> "GradedOperatorMatrix":
        cols = [target.coords_of(op(e)) for e in source.elements]
        return cls(source, target, cols)

    @property
    def shape(self) -> tuple[int, int]:
        return (self.target.dim, self.source.dim)

    def entry(self, i: int, j: int) -> Fraction:
        return self.columns[j].get(i, Fraction(0))

    def to_dense(self) -> list[list[Fraction]]:
        m, n = self.shape
        return [[self.entry(i, j) for j in range(n)] for i in range(m)]

    def is_zero(self) -> bool:
        return all(not c for c in self.columns)

    def rank(self) -> int:
        if self._rank is None:
            self._rank = rank_of_columns(self.columns)
        return self._rank

    def kernel_basis(self) -> list[Vector]:
        return kernel_of_columns(self.columns, self.target.dim)

    def image_basis(self) -> list[Vector]:
        ech = Echelon()
        for col in self.columns:
            ech.insert(col)
        return [{k: Fraction(v) for k, v in row.items()} for row in ech.rows()]

    def cokernel_representatives(self) -> list[tuple[int, Cochain]]:
        """Target basis cochains spanning target/image, greedy in basis order."""
        ech = Echelon()
        for col in self.columns:
            ech.insert(col)
        chosen: list[tuple[int, Cochain]] = []
        for t in range(self.target.dim):
            e_t = {t: Fraction(1)}
            if not ech.contains(e_t):
                chosen.append((t, self.target.element(t)))
                ech.insert(e_t)
        return chosen

    def compose(self, inner: "GradedOperatorMatrix") -> "GradedOperatorMatrix":
        """Matrix of self(op) after inner(op); inner.target must be self.source."""
        if inner.target.dim != self.source.dim:
            raise ValueError("composition shape mismatch")
        cols: list[Vector] = []
        for col in inner.columns:
            acc: Vector = {}
            for k, c in col.items():
                for i, v in self.columns[k].items():
                    s = acc.get(i, 0) + c * v
                    if s:
                        acc[i] = s
                    else:
                        acc.pop(i, None)
            cols.append(acc)
        return GradedOperatorMatrix(inner.source, self.target, cols)

    def __matmul__(self, inner: "GradedOperatorMatrix") -> "GradedOperatorMatrix":
        return self.compose(inner)

    def scaled(self, c: Fraction | int) -> "GradedOperatorMatrix":
        return GradedOperatorMatrix(
            self.source, self.target, [{k: v * c for k, v in col.items()} for col in self.columns]
        )

    def same_entries(self, other: "GradedOperatorMatrix") -> bool:
        if self.shape != other.shape:
            return False
        return all(a == b for a, b in zip(self.columns, other.columns))


def matrix_of(
    op: Callable[[Cochain], Cochain], source: GradedBasis, target: GradedBasis
) -> GradedOperatorMatrix:
    return GradedOperatorMatrix.of_operator(op, source, target)


def identity_matrix(basis: GradedBasis) -> GradedOperatorMatrix:
    cols = [{j: Fraction(1)} for j in range(basis.dim)]
    return GradedOperatorMatrix(basis, basis, cols)


# ---------------------------------------------------------------------------
# Block helpers for subquotient dimension counts
# ---------------------------------------------------------------------------


def offset_vector(vec: Vector, offset: int) -> Vector:
    if not offset:
        return dict(vec)
    return {k + offset: v for k, v in vec.items()}


def stacked_rank(column_groups: Sequence[Sequence[Vector]]) -> int:
    """Rank of the matrix whose columns are the concatenation of the groups."""
    ech = Echelon()
    for group in column_groups:
        for col in group:
            ech.insert(col)
    return ech.rank
