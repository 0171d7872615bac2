"""Combinatorial spectral-cover descriptors and their headline computations:
the finite group K cut out by the component kernels, the component group of
the Prym variety as the character group of K, the surjection from n-torsion,
the C_n criterion, and the endoscopic dimension and bound formulas.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import lcm

from .abelian import (
    AmbientMismatch,
    FinAbGroup,
    GroupHom,
    TorsionAmbient,
    TorsionSubgroup,
    dual_group,
    dual_of_inclusion,
    intersect,
    preimage_mul,
    structure,
)


class DescriptorError(ValueError):
    """A spectral-cover descriptor violates its invariants."""


class InvariantViolation(RuntimeError):
    """A computed quantity contradicts a structural invariant that is
    supposed to hold for every valid descriptor."""


@dataclass(frozen=True)
class ComponentData:
    """One irreducible component: reduced degree d, multiplicity m, and the
    kernel subgroup K of pullback to the normalized reduced component.
    K must lie in the d-torsion of its ambient."""

    degree: int
    multiplicity: int
    kernel: TorsionSubgroup

    def __post_init__(self):
        if self.degree < 1:
            raise DescriptorError("component degree must be >= 1")
        if self.multiplicity < 1:
            raise DescriptorError("component multiplicity must be >= 1")
        M = self.kernel.ambient.M
        gens = self.kernel.generators
        for i in range(gens.rows):
            if any((self.degree * e) % M != 0 for e in gens.row(i)):
                raise DescriptorError(
                    f"kernel generator {list(gens.row(i))} is not killed by the "
                    f"component degree {self.degree}")


@dataclass(frozen=True)
class SpectralCoverDescriptor:
    """Combinatorial cover data: total degree n, base genus g, and one
    ComponentData per irreducible component.  Degrees must satisfy
    sum(m_i * d_i) = n and all kernels must share one genus."""

    n: int
    g: int
    components: tuple[ComponentData, ...]

    def __post_init__(self):
        if self.g < 1:
            raise DescriptorError("genus must be >= 1")
        if not self.components:
            raise DescriptorError("descriptor needs at least one component")
        total = sum(c.degree * c.multiplicity for c in self.components)
        if total != self.n:
            raise DescriptorError(
                f"degree additivity violated: sum(m_i*d_i) = {total} != n = {self.n}")
        genera = {c.kernel.ambient.g for c in self.components}
        if len(genera) != 1 or genera != {self.g}:
            raise DescriptorError("all component kernels must live at the base genus")


def ambient_modulus(desc: SpectralCoverDescriptor) -> int:
    """Smallest modulus M such that (Z/M)^(2g) contains the n-torsion and
    every preimage [m_i]^(-1)(K_i): since exp(K_i) | d_i, every preimage has
    exponent dividing m_i * d_i, so M = lcm(n, lcm_i(m_i * d_i)) suffices."""
    return lcm(desc.n, *(c.degree * c.multiplicity for c in desc.components))


def prym_component_group(desc: SpectralCoverDescriptor) -> TorsionSubgroup:
    """K = intersection of the preimages [m_i]^(-1)(K_i), computed in the
    common ambient (Z/M)^(2g) with M = ambient_modulus(desc)."""
    M = ambient_modulus(desc)
    ambient = TorsionAmbient(desc.g, M)
    k = ambient.full_subgroup()
    for comp in desc.components:
        emb = _embed_kernel(comp.kernel, ambient)
        pre = preimage_mul(comp.multiplicity, emb)
        k = intersect(k, pre)
    n_torsion = ambient.torsion_subgroup(desc.n)
    if not k.is_subgroup_of(n_torsion):
        raise InvariantViolation("K escaped the n-torsion")  # unreachable
    return k


def _embed_kernel(kernel: TorsionSubgroup, ambient: TorsionAmbient) -> TorsionSubgroup:
    M0 = kernel.ambient.M
    if ambient.M % M0 != 0:
        raise AmbientMismatch(
            f"kernel modulus {M0} does not divide ambient modulus {ambient.M}")
    return kernel.embed(ambient)


def pi0_prym(desc: SpectralCoverDescriptor) -> FinAbGroup:
    """Group of connected components of the Prym variety: the character
    group of K.  Its order is bounded by n^(2g)."""
    k = prym_component_group(desc)
    result = dual_group(structure(k))
    if result.order > desc.n ** (2 * desc.g):
        raise InvariantViolation("component group exceeds the n^(2g) bound")
    return result


def phi_surjection(desc: SpectralCoverDescriptor) -> GroupHom:
    """The surjection from the n-torsion of Pic^0(C) onto the component
    group, realized as restriction of characters to K.  The kernel has
    order n^(2g) / |K|."""
    k = prym_component_group(desc)
    ambient = k.ambient
    n_torsion = ambient.torsion_subgroup(desc.n)
    kn = intersect(k, n_torsion)
    if kn != k:
        raise InvariantViolation("K is not inside the n-torsion")  # unreachable
    hom = dual_of_inclusion(k, desc.n)
    expected_kernel = desc.n ** (2 * desc.g) // k.order
    if hom.kernel().order != expected_kernel:
        raise InvariantViolation("character restriction has the wrong kernel")
    return hom


def is_cn_cover(desc: SpectralCoverDescriptor) -> bool:
    """True iff the descriptor is the non-reduced cover with trivial
    nilpotent structure of order n: a single component with d = 1, m = n and
    trivial kernel.  Cross-checked against |K| = n^(2g), which for
    geometrically meaningful kernels (K_i proper in the d_i-torsion when
    d_i > 1) is an equivalent characterization."""
    shape = (len(desc.components) == 1
             and desc.components[0].degree == 1
             and desc.components[0].multiplicity == desc.n
             and desc.components[0].kernel.is_trivial())
    maximal = prym_component_group(desc).order == desc.n ** (2 * desc.g)
    if shape and not maximal:
        raise InvariantViolation("C_n descriptor without maximal K")  # unreachable
    if maximal and not shape:
        raise InvariantViolation(
            "descriptor attains |K| = n^(2g) without C_n shape; its kernels "
            "are not realizable by a spectral cover")
    return shape


def endoscopic_dim(n: int, d: int, g: int) -> int:
    """Dimension (n^2/d - 1)(g - 1) of the trace-free endoscopic locus for a
    cyclic subgroup of order d dividing n; d = 1 gives the whole base."""
    if n < 1 or d < 1 or g < 1:
        raise ValueError("n, d, g must be positive")
    if n % d != 0:
        raise ValueError(f"{d} does not divide {n}")
    return (n * n // d - 1) * (g - 1)


def smallest_prime_divisor(n: int) -> int:
    if n < 2:
        raise ValueError("need n >= 2")
    p = 2
    while p * p <= n:
        if n % p == 0:
            return p
        p += 1
    return n


def variant_bound(n: int, g: int) -> tuple[int, int]:
    """Codimension c_n = n^2 (1 - 1/p)(g - 1) for p the smallest prime
    divisor of n, and the derived cohomological degree bound 2*c_n."""
    if n < 2:
        raise ValueError("need n >= 2")
    if g < 1:
        raise ValueError("need g >= 1")
    p = smallest_prime_divisor(n)
    c_n = n * n * (p - 1) * (g - 1) // p
    assert c_n == endoscopic_dim(n, 1, g) - endoscopic_dim(n, p, g)
    return c_n, 2 * c_n


def divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


@dataclass(frozen=True)
class EndoscopyReport:
    """Dimension table of the endoscopic loci for one (n, g), the
    codimension c_n and the degree bound 2*c_n."""

    n: int
    g: int
    dims: dict[int, int]
    c_n: int
    bound: int

    def __post_init__(self):
        p = smallest_prime_divisor(self.n)
        prime_max = max(self.dims[d] for d in self.dims if d != 1 and _is_prime(d))
        if self.c_n != self.dims[1] - prime_max:
            raise InvariantViolation("codimension inconsistent with dimension table")
        if self.dims[p] != prime_max:
            raise InvariantViolation("largest endoscopic locus not at the smallest prime")


def _is_prime(d: int) -> bool:
    return d >= 2 and smallest_prime_divisor(d) == d


def endoscopy_report(n: int, g: int) -> EndoscopyReport:
    dims = {d: endoscopic_dim(n, d, g) for d in divisors(n)}
    c_n, bound = variant_bound(n, g)
    return EndoscopyReport(n=n, g=g, dims=dims, c_n=c_n, bound=bound)


def gamma_in_k(desc: SpectralCoverDescriptor, gamma: TorsionSubgroup) -> bool:
    """Group-theoretic side of the endoscopic membership test: is the cyclic
    subgroup gamma of the n-torsion contained in K?"""
    if not structure(gamma).is_cyclic():
        raise ValueError("gamma must be cyclic")
    Mg = gamma.ambient.M
    gens = gamma.generators
    for i in range(gens.rows):
        if any((desc.n * e) % Mg != 0 for e in gens.row(i)):
            raise ValueError("gamma is not contained in the n-torsion")
    if gamma.ambient.g != desc.g:
        raise AmbientMismatch("gamma lives at a different genus")
    k = prym_component_group(desc)
    big = TorsionAmbient(desc.g, lcm(k.ambient.M, Mg))
    k_emb = k.embed(big)
    gamma_emb = gamma.embed(big)
    return gamma_emb.is_subgroup_of(k_emb)
