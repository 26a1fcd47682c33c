"""Closed-form Poisson cohomology modules and their degree-by-degree checks.

For an accepted phi (isolated singularity, weight homogeneous of degree d
with weights w, mu-dimensional Jacobian quotient with monomial basis u_0=1,
u_1, ..., u_{mu-1}):

  H^0 is the polynomial algebra on phi itself (Casimirs);
  H^1 vanishes unless d = |w|, when it is free of rank one on the Euler field;
  H^2 mixes a free part and a finite part: free generators grad(u_j) for
      every j >= 1 with deg(u_j) != d - |w| together with u_j*grad(phi) for
      every j with deg(u_j) = d - |w|, plus one extra one-dimensional class
      grad(u_j) for each j >= 1 with deg(u_j) = d - |w|;
  H^3 is free on the classes of u_0, ..., u_{mu-1}.

On the quotient algebra A/<phi> the Casimirs are just the constants, H^1 and
H^2 are spanned by the classes of u_j*e_w resp. u_j*grad(phi) over the u_j of
degree d - |w|, and H^3 vanishes.

Everything is predicted per graded degree, and independently recomputed as
dim ker(delta^k) - rank(delta^{k-1}) on the same graded pieces; the surface
spaces are modeled as subquotients of the ambient pieces, with membership in
<phi> expressed through multiplication-by-phi blocks, and their dimensions
are obtained from ranks of the stacked block matrices.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Literal, Union

from .linalg import Echelon, basis_of, offset_vector
from .milnor import MilnorData
from .operators import (
    cross_grad_phi_matrix,
    delta_matrix,
    delta_rank,
    dot_grad_phi_matrix,
    mult_grad_phi_matrix,
    mult_phi_matrix,
)
from .poisson import PoissonStructure
from .poly import Poly
from .vectorcalc import VecPoly, grad
from .vectorcalc import euler_field as _euler_field

Window = tuple[int, int]

FREE = "free_over_Cas"
FINITE = "vector_space_only"


@dataclass(frozen=True)
class Generator:
    """One generator of a (co)homology module, with its graded degree."""

    label: str
    representative: Union[Poly, VecPoly]
    degree: int
    kind: Literal["free_over_Cas", "vector_space_only"]


@dataclass(frozen=True)
class ModuleDescription:
    """Symbolic description of a (co)homology space as a module.

    coefficient_ring is "F[phi]" for the ambient algebra (free generators
    then repeat every cas_period degrees) and "F" for the quotient algebra.
    """

    space: str
    coefficient_ring: Literal["F[phi]", "F"]
    cas_period: int | None
    generators: tuple[Generator, ...]

    @property
    def zero(self) -> bool:
        return not self.generators

    def free_rank(self) -> int:
        return sum(1 for g in self.generators if g.kind == FREE)

    def finite_count(self) -> int:
        return sum(1 for g in self.generators if g.kind == FINITE)


@dataclass(frozen=True)
class GradedDims:
    """Hilbert function of one space over a degree window (zeros omitted)."""

    space: str
    window: Window
    dims: tuple[tuple[int, int], ...]

    def dim_at(self, i: int) -> int:
        return dict(self.dims).get(i, 0)

    def as_dict(self) -> dict[int, int]:
        return dict(self.dims)

    def total(self) -> int:
        return sum(n for _, n in self.dims)

    def matches(self, other: "GradedDims") -> bool:
        return self.window == other.window and dict(self.dims) == dict(other.dims)

    def pairs(self) -> list[list[int]]:
        return [[i, n] for i, n in self.dims]


def _dims_from_map(space: str, window: Window, dims: dict[int, int]) -> GradedDims:
    pairs = tuple(sorted((i, n) for i, n in dims.items() if n))
    return GradedDims(space, window, pairs)


def default_window(P: PoissonStructure) -> Window:
    """Derivation degrees [-|w|, socle + 2*deg(phi)]: every generator of the
    closed forms plus two full Casimir periods past the socle."""
    d, s = P.degree, P.weight_sum
    return (-s, 3 * d - 2 * s + 2 * d)


def predicted_dims(desc: ModuleDescription, window: Window) -> GradedDims:
    """Expand a module description into per-degree dimensions on a window."""
    lo, hi = window
    dims: dict[int, int] = {}
    for g in desc.generators:
        if g.kind == FREE:
            if desc.cas_period is None:
                raise ValueError("free generators need a Casimir period")
            e = g.degree
            while e <= hi:
                if e >= lo:
                    dims[e] = dims.get(e, 0) + 1
                e += desc.cas_period
        else:
            if lo <= g.degree <= hi:
                dims[g.degree] = dims.get(g.degree, 0) + 1
    return _dims_from_map(desc.space, window, dims)


# ---------------------------------------------------------------------------
# Closed forms
# ---------------------------------------------------------------------------


def closed_form(P: PoissonStructure, M: MilnorData, k: int) -> ModuleDescription:
    """The module H^k of the ambient algebra, described by generators."""
    d, s = P.degree, P.weight_sum
    space = "H%d_ambient" % k
    gens: list[Generator] = []
    if k == 0:
        gens.append(Generator("1", Poly.one(), 0, FREE))
    elif k == 1:
        if d == s:
            gens.append(Generator("euler_field", _euler_field(P.weights), 0, FREE))
    elif k == 2:
        for j, (u, deg_u) in enumerate(M.basis_polys()):
            qualifying = deg_u == d - s
            if j >= 1 and not qualifying:
                gens.append(Generator("grad_u%d" % j, grad(u), deg_u - s, FREE))
            if qualifying:
                gens.append(
                    Generator("u%d_grad_phi" % j, P.nabla_phi * u, deg_u + d - s, FREE)
                )
            if j >= 1 and qualifying:
                gens.append(Generator("grad_u%d" % j, grad(u), deg_u - s, FINITE))
    elif k == 3:
        for j, (u, deg_u) in enumerate(M.basis_polys()):
            gens.append(Generator("u%d" % j, u, deg_u - s, FREE))
    else:
        raise ValueError("k must be in 0..3")
    return ModuleDescription(space, "F[phi]", d, tuple(gens))


def surface_closed_form(P: PoissonStructure, M: MilnorData, k: int) -> ModuleDescription:
    """The module H^k of the quotient algebra A/<phi>."""
    d, s = P.degree, P.weight_sum
    space = "H%d_surface" % k
    gens: list[Generator] = []
    if k == 0:
        gens.append(Generator("1", Poly.one(), 0, FINITE))
    elif k == 1:
        e_w = _euler_field(P.weights)
        for j, (u, deg_u) in enumerate(M.basis_polys()):
            if deg_u == d - s:
                gens.append(Generator("u%d_euler" % j, e_w * u, deg_u, FINITE))
    elif k == 2:
        for j, (u, deg_u) in enumerate(M.basis_polys()):
            if deg_u == d - s:
                gens.append(
                    Generator("u%d_grad_phi" % j, P.nabla_phi * u, deg_u + d - s, FINITE)
                )
    elif k == 3:
        pass
    else:
        raise ValueError("k must be in 0..3")
    return ModuleDescription(space, "F", None, tuple(gens))


# ---------------------------------------------------------------------------
# Degree-by-degree verification, ambient algebra
# ---------------------------------------------------------------------------


def cohomology_dim(P: PoissonStructure, k: int, i: int) -> int:
    """dim H^k at derivation degree i: dim ker(delta^k) - rank(delta^{k-1})."""
    n = basis_of("X%d" % k, i, P.weights).dim
    cocycles = n - delta_rank(P, k, i)
    boundaries = delta_rank(P, k - 1, i - P.coboundary_degree)
    dim = cocycles - boundaries
    if dim < 0:
        raise RuntimeError(
            "negative cohomology dimension at k=%d, degree %d" % (k, i)
        )
    return dim


def brute_force_dims(P: PoissonStructure, k: int, window: Window) -> GradedDims:
    lo, hi = window
    dims = {i: cohomology_dim(P, k, i) for i in range(lo, hi + 1)}
    return _dims_from_map("H%d_ambient" % k, window, dims)


# ---------------------------------------------------------------------------
# Degree-by-degree verification, quotient algebra (subquotient model)
# ---------------------------------------------------------------------------


def _constraint_blocks(P: PoissonStructure, k: int, i: int):
    """The degree-i multiderivation space of A/<phi> as a subquotient of X^k.

    Returns (n, rows_top, D_cols, P_cols) modelling
    V = {v in X^k_i : constraint(v) lies in phi * (ambient)} as the
    projection of ker [D | P]; D is empty for k=0 (no constraint).
    """
    n = basis_of("X%d" % k, i, P.weights).dim
    if k == 0:
        return n, 0, [], []
    if k == 1:
        D = dot_grad_phi_matrix(P, i)
        Pm = mult_phi_matrix(P, "X0", i)
    elif k == 2:
        D = cross_grad_phi_matrix(P, i)
        Pm = mult_phi_matrix(P, "X1", i)
    elif k == 3:
        D = mult_grad_phi_matrix(P, i)
        Pm = mult_phi_matrix(P, "X2", i)
    else:
        raise ValueError("k must be in 0..3")
    return n, D.target.dim, D.columns, Pm.columns


@lru_cache(maxsize=None)
def _constraint_rank(P: PoissonStructure, k: int, i: int) -> int:
    """rank [D | P] for the constraint stack (0 when there is no constraint)."""
    _, _, d_cols, p_cols = _constraint_blocks(P, k, i)
    if not d_cols and not p_cols:
        return 0
    ech = Echelon()
    for col in d_cols:
        ech.insert(col)
    for col in p_cols:
        ech.insert(col)
    return ech.rank


def surface_cochain_dim(P: PoissonStructure, k: int, i: int) -> int:
    """dim of the degree-i piece of the multiderivation space of A/<phi>."""
    n, _, d_cols, p_cols = _constraint_blocks(P, k, i)
    n_p = len(p_cols)
    ambient = n + n_p - _constraint_rank(P, k, i)
    quotient = basis_of("X%d" % k, i - P.degree, P.weights).dim
    return ambient - quotient


def surface_cohomology_dim(P: PoissonStructure, k: int, i: int) -> int:
    """dim H^k of A/<phi> at derivation degree i.

    Cocycles: v in V with delta^k(v) in phi*X^{k+1}; coboundaries: images of
    V at degree i-N plus the quotient relations phi*X^k at degree i-d.  Both
    are measured inside the ambient graded piece, so the quotient relations
    cancel and only ranks of stacked blocks are needed.
    """
    N, d = P.coboundary_degree, P.degree
    n, rows_top, d_cols, p_cols = _constraint_blocks(P, k, i)

    ech = Echelon()
    n_p2 = 0
    if k == 3:
        for col in d_cols:
            ech.insert(col)
        for col in p_cols:
            ech.insert(col)
    else:
        delta_cols = delta_matrix(P, k, i).columns if n else []
        p2 = mult_phi_matrix(P, "X%d" % (k + 1), i + N - d)
        n_p2 = len(p2.columns)
        for j in range(n):
            merged = dict(d_cols[j]) if d_cols else {}
            merged.update(offset_vector(delta_cols[j], rows_top))
            ech.insert(merged)
        for col in p_cols:
            ech.insert(col)
        for col in p2.columns:
            ech.insert(offset_vector(col, rows_top))
    z_ambient = n + len(p_cols) + n_p2 - ech.rank

    if k == 0:
        b_ambient = basis_of("X0", i - d, P.weights).dim
    else:
        n1, rows1, d1_cols, p1_cols = _constraint_blocks(P, k - 1, i - N)
        delta1_cols = delta_matrix(P, k - 1, i - N).columns if n1 else []
        pmat = mult_phi_matrix(P, "X%d" % k, i - d)
        echb = Echelon()
        for j in range(n1):
            merged = dict(d1_cols[j]) if d1_cols else {}
            merged.update(offset_vector(delta1_cols[j], rows1))
            echb.insert(merged)
        for col in p1_cols:
            echb.insert(col)
        for col in pmat.columns:
            echb.insert(offset_vector(col, rows1))
        b_ambient = echb.rank - _constraint_rank(P, k - 1, i - N)

    dim = z_ambient - b_ambient
    if dim < 0:
        raise RuntimeError(
            "negative surface cohomology dimension at k=%d, degree %d" % (k, i)
        )
    return dim


def surface_brute_force_dims(P: PoissonStructure, k: int, window: Window) -> GradedDims:
    lo, hi = window
    dims = {i: surface_cohomology_dim(P, k, i) for i in range(lo, hi + 1)}
    return _dims_from_map("H%d_surface" % k, window, dims)
