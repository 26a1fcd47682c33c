"""Jacobian ideal, Milnor number, and the isolated-singularity gate.

For weight-homogeneous phi, the quotient of A = F[x,y,z] by the ideal of the
three partial derivatives is graded; phi has an isolated singularity at the
origin exactly when that quotient is finite dimensional, and then its
dimension is the Milnor number mu.

Finiteness certificate: when the partials form a regular sequence the
quotient is a graded complete intersection whose top (socle) degree is
3*deg(phi) - 2*|w|.  The gate therefore computes the graded dimensions up to
socle + max(w) and accepts iff they vanish on the window
(socle, socle + max(w)]; vanishing there propagates to all higher degrees,
because any monomial of higher degree factors as x_j * m with m above the
socle.  Degree bound deg(phi) > max(w) is necessary for a singularity at the
origin and is checked first.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .linalg import Echelon, basis_of
from .poly import Monomial, Poly, WeightSystem, weighted_degree

__all__ = [
    "MilnorData",
    "NotIsolated",
    "check_isolated",
    "jacobian_graded_dim",
    "socle_bound",
]


class NotIsolated(Exception):
    """The gate rejected phi; carries the offending degree and a witness."""

    def __init__(self, reason: str, witness_degree: int | None = None,
                 witness_monomial: Monomial | None = None):
        self.reason = reason
        self.witness_degree = witness_degree
        self.witness_monomial = witness_monomial
        msg = reason
        if witness_degree is not None:
            msg += " (witness degree %d" % witness_degree
            if witness_monomial is not None:
                msg += ", monomial %s" % Poly.monomial(witness_monomial)
            msg += ")"
        super().__init__(msg)


@dataclass(frozen=True)
class MilnorData:
    """Graded data of A/<dphi/dx, dphi/dy, dphi/dz> for an accepted phi.

    basis holds the canonical homogeneous monomial basis u_0=1, u_1, ... of
    the quotient as (monomial, degree) pairs: ascending degree, ascending
    monomial order within a degree.
    """

    phi: Poly
    weights: WeightSystem
    socle_bound: int
    graded_dims: tuple[tuple[int, int], ...]
    mu: int
    basis: tuple[tuple[Monomial, int], ...]

    def dims_map(self) -> dict[int, int]:
        return dict(self.graded_dims)

    def basis_polys(self) -> list[tuple[Poly, int]]:
        return [(Poly.monomial(m), d) for m, d in self.basis]


def socle_bound(degree: int, w: WeightSystem) -> int:
    """Top degree of the Jacobian quotient when the gate accepts."""
    return 3 * degree - 2 * w.weight_sum


def _jacobian_columns(phi: Poly, w: WeightSystem, i: int, d: int):
    """Columns of (a,b,c) -> a*phi_x + b*phi_y + c*phi_z landing in A_i."""
    target = basis_of("A", i, w)
    cols = []
    for axis in range(3):
        part = phi.partial(axis)
        src = basis_of("A", i - (d - w.weights[axis]), w)
        for comp_monos in src.monomials:
            for m in comp_monos:
                cols.append(target.coords_of(Poly.monomial(m) * part))
    return target, cols


def jacobian_graded_dim(phi: Poly, w: WeightSystem, i: int) -> int:
    """dim of the degree-i piece of A modulo the Jacobian ideal."""
    d = weighted_degree(phi, w)
    if not isinstance(d, int):
        raise ValueError("phi must be non-zero and weight homogeneous")
    target, cols = _jacobian_columns(phi, w, i, d)
    ech = Echelon()
    for col in cols:
        ech.insert(col)
    return target.dim - ech.rank


def _quotient_monomials(phi: Poly, w: WeightSystem, i: int, d: int) -> list[Monomial]:
    """Monomials of degree i spanning A_i modulo the Jacobian ideal.

    Greedy scan in the fixed (descending) monomial order: a monomial is kept
    iff it extends the echelon of the ideal's degree-i piece plus the
    monomials already kept.
    """
    target, cols = _jacobian_columns(phi, w, i, d)
    ech = Echelon()
    for col in cols:
        ech.insert(col)
    kept: list[Monomial] = []
    for j, m in enumerate(target.monomials[0]):
        e_j = {j: Fraction(1)}
        if not ech.contains(e_j):
            kept.append(m)
            ech.insert(e_j)
    return kept


@lru_cache(maxsize=None)
def check_isolated(phi: Poly, w: WeightSystem) -> MilnorData:
    """Gate: accept phi iff the Jacobian quotient is finite dimensional.

    Raises NotIsolated with the first non-vanishing window degree and a
    witness monomial on rejection.
    """
    d = weighted_degree(phi, w)
    if not isinstance(d, int):
        raise ValueError("phi must be non-zero and weight homogeneous")
    if d <= w.max_weight:
        raise NotIsolated(
            "weighted degree %d does not exceed every variable weight %s; "
            "the origin is not an isolated singular point" % (d, w)
        )
    bound = socle_bound(d, w)
    if bound < 0:
        # the quotient contains the constants, so a negative claimed top
        # degree is already contradictory
        raise NotIsolated(
            "socle bound %d is negative, yet the constants survive" % bound,
            witness_degree=0,
            witness_monomial=(0, 0, 0),
        )
    window_top = bound + w.max_weight
    per_degree: dict[int, list[Monomial]] = {}
    for i in range(0, window_top + 1):
        kept = _quotient_monomials(phi, w, i, d)
        if kept:
            per_degree[i] = kept
            if i > bound:
                raise NotIsolated(
                    "Jacobian quotient does not vanish above the socle bound %d" % bound,
                    witness_degree=i,
                    witness_monomial=kept[0],
                )
    dims = tuple((i, len(kept)) for i, kept in sorted(per_degree.items()))
    mu = sum(n for _, n in dims)
    basis: list[tuple[Monomial, int]] = []
    for i, kept in sorted(per_degree.items()):
        # presentation within a degree is ascending in the monomial order
        for m in reversed(kept):
            basis.append((m, i))
    return MilnorData(
        phi=phi,
        weights=w,
        socle_bound=bound,
        graded_dims=dims,
        mu=mu,
        basis=tuple(basis),
    )
