"""Poisson homology of the ambient algebra and of the quotient surface.

On A the chain spaces Omega^k identify with X^{3-k} (form degree = derivation
degree + |w|) and the boundary is (-1)^k * delta^{3-k}, so the homology
H_k at form degree i equals the cohomology H^{3-k} at derivation degree
i - |w|; homology_dims re-indexes the cohomology engine accordingly and, on
request, verifies the boundary/coboundary matrix identity entrywise on the
window.

On A/<phi> the form spaces are presented as quotients of A and A^3 by the
relations generated by phi and by wedging with d(phi) (see operators): the
boundaries descend, and the homology dimensions per degree again reduce to
ranks of stacked relation/boundary blocks.  The closed forms are: H_0 and
H_3 are copies of the Jacobian quotient, H_2 is its image under
multiplication by the Euler field, and H_1 is spanned by the gradients of
u_1, ..., u_{mu-1}.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cohomology import (
    FINITE,
    FREE,
    GradedDims,
    Generator,
    ModuleDescription,
    Window,
    brute_force_dims,
    closed_form,
    _dims_from_map,
)
from .linalg import Echelon, GradedBasis, basis_of, rank_of_columns
from .milnor import MilnorData
from .operators import (
    boundary_matrix,
    delta_matrix,
    omega_relation_columns,
    omega_relation_elements,
    omega_relation_rank,
)
from .poisson import PoissonStructure
from .vectorcalc import euler_field, grad


def default_form_window(P: PoissonStructure) -> Window:
    from .cohomology import default_window

    lo, hi = default_window(P)
    s = P.weight_sum
    return (lo + s, hi + s)


def duality_identity_holds(P: PoissonStructure, k: int, i: int) -> bool:
    """Entrywise: boundary_k at form degree i equals (-1)^k * delta^{3-k} at
    derivation degree i - |w| (the component layouts coincide)."""
    b = boundary_matrix(P, k, i)
    d = delta_matrix(P, 3 - k, i - P.weight_sum).scaled((-1) ** k)
    return b.same_entries(d)


def homology_dims(
    P: PoissonStructure, k: int, window: Window, verify: bool = True
) -> GradedDims:
    """dim H_k at each form degree in the window, via the degree shift.

    With verify=True the boundary matrices are compared entrywise against
    the shifted coboundary matrices on the whole window first.
    """
    lo, hi = window
    s = P.weight_sum
    if verify and k in (1, 2, 3):
        for i in range(lo, hi + 1):
            if not duality_identity_holds(P, k, i):
                raise RuntimeError(
                    "boundary/coboundary identity failed at k=%d, form degree %d"
                    % (k, i)
                )
    co = brute_force_dims(P, 3 - k, (lo - s, hi - s))
    dims = {i + s: n for i, n in co.dims}
    return _dims_from_map("H_%d_ambient" % k, window, dims)


def ambient_homology_description(
    P: PoissonStructure, M: MilnorData, k: int
) -> ModuleDescription:
    """Closed form of H_k of A: the H^{3-k} module re-graded by +|w|."""
    co = closed_form(P, M, 3 - k)
    s = P.weight_sum
    gens = tuple(
        Generator(g.label, g.representative, g.degree + s, g.kind)
        for g in co.generators
    )
    return ModuleDescription("H_%d_ambient" % k, co.coefficient_ring, co.cas_period, gens)


def predicted_homology_dims(
    P: PoissonStructure, M: MilnorData, k: int, window: Window
) -> GradedDims:
    from .cohomology import predicted_dims

    return predicted_dims(ambient_homology_description(P, M, k), window)


# ---------------------------------------------------------------------------
# Quotient surface
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ChainSpaceModel:
    """One graded piece of the k-form space of A/<phi>, presented as the
    ambient piece of Omega^k modulo the columns of its relation matrix."""

    k: int
    ambient: GradedBasis
    relations: tuple

    @property
    def relation_rank(self) -> int:
        return rank_of_columns(self.relations)

    @property
    def quotient_dim(self) -> int:
        return self.ambient.dim - self.relation_rank


def chain_space_model(P: PoissonStructure, k: int, i: int) -> ChainSpaceModel:
    return ChainSpaceModel(
        k,
        basis_of("Omega%d" % k, i, P.weights),
        omega_relation_columns(P, k, i),
    )


def surface_homology_description(
    P: PoissonStructure, M: MilnorData, k: int
) -> ModuleDescription:
    """Closed form of H_k of A/<phi>, graded by form degree."""
    s = P.weight_sum
    e_w = euler_field(P.weights)
    gens: list[Generator] = []
    if k == 0:
        for j, (u, deg_u) in enumerate(M.basis_polys()):
            gens.append(Generator("u%d" % j, u, deg_u, FINITE))
    elif k == 1:
        for j, (u, deg_u) in enumerate(M.basis_polys()):
            if j >= 1:
                gens.append(Generator("grad_u%d" % j, grad(u), deg_u, FINITE))
    elif k == 2:
        for j, (u, deg_u) in enumerate(M.basis_polys()):
            gens.append(Generator("u%d_euler" % j, e_w * u, deg_u + s, FINITE))
    elif k == 3:
        for j, (u, deg_u) in enumerate(M.basis_polys()):
            gens.append(Generator("u%d" % j, u, deg_u + s, FINITE))
    else:
        raise ValueError("k must be in 0..3")
    return ModuleDescription("H_%d_surface" % k, "F", None, tuple(gens))


def surface_homology_dim(P: PoissonStructure, k: int, i: int) -> int:
    """dim H_k of A/<phi> at form degree i, from the chain-space presentation.

    Cycles: v with boundary(v) inside the degree-(i+N) relations of
    Omega^{k-1}; boundaries: the image of Omega^{k+1} at degree i-N plus the
    degree-i relations of Omega^k.  Both measured in the ambient piece, so
    their difference is the homology dimension of the quotient complex.
    """
    N = P.coboundary_degree
    model = chain_space_model(P, k, i)
    n = model.ambient.dim

    if k == 0:
        cycles = n
    else:
        ech = Echelon()
        if n:
            for col in boundary_matrix(P, k, i).columns:
                ech.insert(col)
        m_prev = omega_relation_columns(P, k - 1, i + N)
        for col in m_prev:
            ech.insert(col)
        rank_joint = ech.rank
        cycles = n - rank_joint + omega_relation_rank(P, k - 1, i + N)

    echb = Echelon()
    if k < 3:
        src = basis_of("Omega%d" % (k + 1), i - N, P.weights)
        if src.dim:
            for col in boundary_matrix(P, k + 1, i - N).columns:
                echb.insert(col)
    for col in model.relations:
        echb.insert(col)
    boundaries = echb.rank

    dim = cycles - boundaries
    if dim < 0:
        raise RuntimeError(
            "negative surface homology dimension at k=%d, form degree %d" % (k, i)
        )
    return dim


def surface_homology_dims(P: PoissonStructure, k: int, window: Window) -> GradedDims:
    lo, hi = window
    dims = {i: surface_homology_dim(P, k, i) for i in range(lo, hi + 1)}
    return _dims_from_map("H_%d_surface" % k, window, dims)


def projection_commutes(P: PoissonStructure, k: int, i: int) -> bool:
    """The boundary maps degree-i relations of Omega^k into the relations of
    Omega^{k-1}, so the boundary descends to the quotient complex."""
    if k == 0:
        return True
    prev = Echelon()
    for col in omega_relation_columns(P, k - 1, i + P.coboundary_degree):
        prev.insert(col)
    tgt = basis_of("Omega%d" % (k - 1), i + P.coboundary_degree, P.weights)
    for gen in omega_relation_elements(P, k, i):
        image = P.boundary(k, gen)
        if not prev.contains(tgt.coords_of(image)):
            return False
    return True
