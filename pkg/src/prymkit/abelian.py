"""Exact integer-matrix and finite-abelian-group engine.

Subgroups of (Z/M)^(2g) are represented by the Hermite normal form of their
preimage lattice in Z^(2g); since that lattice is unique for the subgroup,
two subgroups are equal iff their canonical generator matrices are equal.
All values are immutable and all operations are pure functions.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import prod


class AmbientMismatch(ValueError):
    """Operands live in different ambient groups."""


@dataclass(frozen=True)
class IntMatrix:
    """Dense integer matrix, row-major, arbitrary precision."""

    rows: int
    cols: int
    entries: tuple[int, ...]

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise ValueError("negative matrix dimensions")
        if len(self.entries) != self.rows * self.cols:
            raise ValueError("entry count does not match dimensions")
        if not all(isinstance(e, int) for e in self.entries):
            raise TypeError("matrix entries must be integers")

    @classmethod
    def from_rows(cls, rows: list[list[int]]) -> "IntMatrix":
        r = len(rows)
        c = len(rows[0]) if rows else 0
        if any(len(row) != c for row in rows):
            raise ValueError("ragged rows")
        return cls(r, c, tuple(e for row in rows for e in row))

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls(n, n, tuple(1 if i == j else 0 for i in range(n) for j in range(n)))

    @classmethod
    def zero(cls, r: int, c: int) -> "IntMatrix":
        return cls(r, c, (0,) * (r * c))

    def get(self, i: int, j: int) -> int:
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple[int, ...]:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def to_rows(self) -> list[list[int]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def transpose(self) -> "IntMatrix":
        return IntMatrix(self.cols, self.rows,
                         tuple(self.get(i, j)
                               for j in range(self.cols) for i in range(self.rows)))

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            raise ValueError("dimension mismatch in matrix product")
        out = []
        for i in range(self.rows):
            ri = self.row(i)
            for j in range(other.cols):
                out.append(sum(ri[k] * other.get(k, j) for k in range(self.cols)))
        return IntMatrix(self.rows, other.cols, tuple(out))

    def det(self) -> int:
        """Exact determinant (fraction-free Bareiss)."""
        if self.rows != self.cols:
            raise ValueError("determinant of a non-square matrix")
        n = self.rows
        if n == 0:
            return 1
        m = self.to_rows()
        sign = 1
        prev = 1
        for k in range(n - 1):
            if m[k][k] == 0:
                for i in range(k + 1, n):
                    if m[i][k] != 0:
                        m[k], m[i] = m[i], m[k]
                        sign = -sign
                        break
                else:
                    return 0
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
                m[i][k] = 0
            prev = m[k][k]
        return sign * m[n - 1][n - 1]

    def is_unimodular(self) -> bool:
        return self.rows == self.cols and abs(self.det()) == 1


def smith_normal_form(a: IntMatrix) -> tuple[IntMatrix, IntMatrix, IntMatrix]:
    """Smith normal form: U, D, V with U*A*V = D, U and V unimodular, D
    diagonal with nonnegative entries and d_1 | d_2 | ...

    Pivoting picks the minimal-absolute-value nonzero entry, which keeps
    coefficient growth modest without randomization.
    """
    rows, cols = a.rows, a.cols
    m = a.to_rows()
    u = IntMatrix.identity(rows).to_rows()
    v = IntMatrix.identity(cols).to_rows()

    def swap_rows(i, j):
        m[i], m[j] = m[j], m[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for r in m:
            r[i], r[j] = r[j], r[i]
        for r in v:
            r[i], r[j] = r[j], r[i]

    def addmul_row(dst, src, q):
        # row_dst += q * row_src (dst != src always holds at call sites)
        for k in range(cols):
            m[dst][k] += q * m[src][k]
        for k in range(rows):
            u[dst][k] += q * u[src][k]

    def addmul_col(dst, src, q):
        for r in m:
            r[dst] += q * r[src]
        for r in v:
            r[dst] += q * r[src]

    t = 0
    while t < min(rows, cols):
        # locate minimal-|.| nonzero pivot in the trailing block
        best = None
        for i in range(t, rows):
            for j in range(t, cols):
                e = m[i][j]
                if e != 0 and (best is None or abs(e) < abs(best[2])):
                    best = (i, j, e)
        if best is None:
            break
        swap_rows(t, best[0])
        swap_cols(t, best[1])
        while True:
            # clear column t
            dirty = False
            for i in range(t + 1, rows):
                if m[i][t] != 0:
                    q = m[i][t] // m[t][t]
                    addmul_row(i, t, -q)
                    if m[i][t] != 0:
                        swap_rows(t, i)
                        dirty = True
            if dirty:
                continue
            for j in range(t + 1, cols):
                if m[t][j] != 0:
                    q = m[t][j] // m[t][t]
                    addmul_col(j, t, -q)
                    if m[t][j] != 0:
                        swap_cols(t, j)
                        dirty = True
            if dirty:
                continue
            # enforce pivot | trailing block
            piv = m[t][t]
            offender = None
            for i in range(t + 1, rows):
                for j in range(t + 1, cols):
                    if m[i][j] % piv != 0:
                        offender = i
                        break
                if offender is not None:
                    break
            if offender is None:
                break
            addmul_row(t, offender, 1)
        t += 1

    # normalize signs
    for i in range(min(rows, cols)):
        if m[i][i] < 0:
            for k in range(cols):
                m[i][k] = -m[i][k]
            for k in range(rows):
                u[i][k] = -u[i][k]

    return (IntMatrix.from_rows(u) if rows else IntMatrix(0, 0, ()),
            IntMatrix.from_rows(m) if rows else IntMatrix(0, cols, ()),
            IntMatrix.from_rows(v) if cols else IntMatrix(0, 0, ()))


def hermite_normal_form(rows: list[list[int]]) -> list[list[int]]:
    """Row Hermite normal form of the lattice spanned by integer rows:
    row echelon, positive pivots, entries above each pivot reduced into
    [0, pivot).  Zero rows are dropped.  Unique for the row lattice."""
    if not rows:
        return []
    work = [list(r) for r in rows]
    ncols = len(work[0])
    r = 0
    for c in range(ncols):
        while True:
            nz = [i for i in range(r, len(work)) if work[i][c] != 0]
            if not nz:
                break
            piv = min(nz, key=lambda i: abs(work[i][c]))
            work[r], work[piv] = work[piv], work[r]
            done = True
            for i in range(r + 1, len(work)):
                if work[i][c] != 0:
                    q = work[i][c] // work[r][c]
                    for k in range(ncols):
                        work[i][k] -= q * work[r][k]
                    if work[i][c] != 0:
                        done = False
            if done:
                break
        if r < len(work) and work[r][c] != 0:
            if work[r][c] < 0:
                work[r] = [-e for e in work[r]]
            for i in range(r):
                q = work[i][c] // work[r][c]
                if q:
                    for k in range(ncols):
                        work[i][k] -= q * work[r][k]
            r += 1
    return [row for row in work[:r] if any(row)]


def left_kernel(a: IntMatrix) -> list[list[int]]:
    """Basis of the lattice {w : w * A = 0} of integer row vectors."""
    u, d, _v = smith_normal_form(a)
    rank = 0
    for i in range(min(a.rows, a.cols)):
        if d.get(i, i) != 0:
            rank = i + 1
    return [list(u.row(i)) for i in range(rank, a.rows)]


@dataclass(frozen=True)
class FinAbGroup:
    """Finite abelian group in invariant-factor form d_1 | d_2 | ... , all
    factors >= 2; the trivial group is the empty list."""

    invariant_factors: tuple[int, ...]

    def __post_init__(self):
        fs = self.invariant_factors
        if any(f < 2 for f in fs):
            raise ValueError("invariant factors must be >= 2")
        for a, b in zip(fs, fs[1:]):
            if b % a != 0:
                raise ValueError("divisibility chain violated")

    @property
    def order(self) -> int:
        return prod(self.invariant_factors)

    @property
    def exponent(self) -> int:
        return self.invariant_factors[-1] if self.invariant_factors else 1

    def is_trivial(self) -> bool:
        return not self.invariant_factors

    def is_cyclic(self) -> bool:
        return len(self.invariant_factors) <= 1


@dataclass(frozen=True)
class TorsionAmbient:
    """The group (Z/M)^(2g), a finite model of the M-torsion of Pic^0(C)."""

    g: int
    M: int

    def __post_init__(self):
        if self.g < 1:
            raise ValueError("genus must be positive")
        if self.M < 1:
            raise ValueError("modulus must be positive")

    @property
    def rank(self) -> int:
        return 2 * self.g

    @property
    def order(self) -> int:
        return self.M ** self.rank

    def full_subgroup(self) -> "TorsionSubgroup":
        return subgroup_from_generators(self, IntMatrix.identity(self.rank))

    def trivial_subgroup(self) -> "TorsionSubgroup":
        return subgroup_from_generators(self, IntMatrix(0, self.rank, ()))

    def torsion_subgroup(self, n: int) -> "TorsionSubgroup":
        """The n-torsion subgroup; requires n | M."""
        if self.M % n != 0:
            raise ValueError(f"{n}-torsion needs {n} | {self.M}")
        step = self.M // n
        return subgroup_from_generators(
            self, IntMatrix(self.rank, self.rank,
                            tuple(step if i == j else 0
                                  for i in range(self.rank) for j in range(self.rank))))


@dataclass(frozen=True)
class TorsionSubgroup:
    """Subgroup of a TorsionAmbient, held in canonical (Hermite) form.

    ``generators`` rows span the subgroup; equality of subgroups is equality
    of the dataclass (same ambient, identical canonical matrix).
    """

    ambient: TorsionAmbient
    generators: IntMatrix

    def _lattice_basis(self) -> list[list[int]]:
        """Full-rank HNF basis of the preimage lattice in Z^rank."""
        k = self.ambient.rank
        rows = self.generators.to_rows()
        rows += [[self.ambient.M if i == j else 0 for j in range(k)] for i in range(k)]
        return hermite_normal_form(rows)

    @property
    def order(self) -> int:
        basis = self._lattice_basis()
        det = prod(basis[i][i] for i in range(len(basis)))
        return self.ambient.M ** self.ambient.rank // det

    def contains(self, vec: tuple[int, ...]) -> bool:
        """Membership of an ambient coordinate vector."""
        if len(vec) != self.ambient.rank:
            raise ValueError("vector has wrong length")
        basis = self._lattice_basis()
        v = list(vec)
        for row in basis:
            c = next(j for j, e in enumerate(row) if e != 0)
            if v[c] % row[c] == 0:
                q = v[c] // row[c]
                if q:
                    for k in range(len(v)):
                        v[k] -= q * row[k]
        return all(e == 0 for e in v)

    def is_subgroup_of(self, other: "TorsionSubgroup") -> bool:
        if self.ambient != other.ambient:
            raise AmbientMismatch("subgroup comparison across ambients")
        return all(other.contains(self.generators.row(i))
                   for i in range(self.generators.rows))

    def is_trivial(self) -> bool:
        return self.generators.rows == 0

    def elements(self) -> set[tuple[int, ...]]:
        """Exhaustive element set (desk scale only)."""
        M = self.ambient.M
        k = self.ambient.rank
        gens = [self.generators.row(i) for i in range(self.generators.rows)]
        seen = {(0,) * k}
        frontier = [(0,) * k]
        while frontier:
            cur = frontier.pop()
            for gvec in gens:
                nxt = tuple((a + b) % M for a, b in zip(cur, gvec))
                if nxt not in seen:
                    seen.add(nxt)
                    frontier.append(nxt)
        return seen

    def embed(self, target: TorsionAmbient) -> "TorsionSubgroup":
        """Unique torsion-compatible embedding into a larger modulus:
        a generator v mod M0 maps to (M/M0) * v mod M."""
        M0, M = self.ambient.M, target.M
        if target.g != self.ambient.g:
            raise AmbientMismatch("embedding must preserve the genus")
        if M % M0 != 0:
            raise ValueError(f"cannot embed Z/{M0} torsion into Z/{M}")
        s = M // M0
        rows = [[e * s for e in self.generators.row(i)]
                for i in range(self.generators.rows)]
        return subgroup_from_generators(target, IntMatrix.from_rows(rows)
                                        if rows else IntMatrix(0, target.rank, ()))


def subgroup_from_generators(ambient: TorsionAmbient, rows: IntMatrix) -> TorsionSubgroup:
    """Canonical subgroup of (Z/M)^(2g) generated by the given rows."""
    k = ambient.rank
    if rows.cols != k:
        raise ValueError(f"generators have {rows.cols} columns, ambient rank is {k}")
    M = ambient.M
    work = [[e % M for e in rows.row(i)] for i in range(rows.rows)]
    work += [[M if i == j else 0 for j in range(k)] for i in range(k)]
    basis = hermite_normal_form(work)
    reduced = []
    for row in basis:
        r = [e % M for e in row]
        if any(r):
            reduced.append(r)
    canonical = (IntMatrix.from_rows(reduced) if reduced
                 else IntMatrix(0, k, ()))
    return TorsionSubgroup(ambient, canonical)


def intersect(h1: TorsionSubgroup, h2: TorsionSubgroup) -> TorsionSubgroup:
    """Setwise intersection of two subgroups of the same ambient."""
    if h1.ambient != h2.ambient:
        raise AmbientMismatch("intersection across different ambients")
    b1 = h1._lattice_basis()
    b2 = h2._lattice_basis()
    k = h1.ambient.rank
    stacked = IntMatrix.from_rows(b1 + [[-e for e in row] for row in b2])
    gens = []
    for w in left_kernel(stacked):
        x = [0] * k
        for i, c in enumerate(w[:len(b1)]):
            if c:
                for j in range(k):
                    x[j] += c * b1[i][j]
        gens.append(x)
    return subgroup_from_generators(
        h1.ambient, IntMatrix.from_rows(gens) if gens else IntMatrix(0, k, ()))


def preimage_mul(m: int, h: TorsionSubgroup) -> TorsionSubgroup:
    """Full preimage {x : m*x in H} under multiplication by m.

    Precondition: m * exponent(H) divides the ambient modulus, so the finite
    model captures the whole preimage inside the torsion of Pic^0(C)."""
    if m < 1:
        raise ValueError("multiplier must be positive")
    M = h.ambient.M
    exp = structure(h).exponent
    if M % (m * exp) != 0:
        raise ValueError(
            f"preimage under [{m}] needs {m}*exponent({exp}) | modulus {M}; "
            "enlarge the ambient modulus")
    if m == 1:
        return h
    k = h.ambient.rank
    basis = h._lattice_basis()
    # pairs (x, y) with m*x = y*B;  x spans the preimage lattice
    top = [[m if i == j else 0 for j in range(k)] for i in range(k)]
    stacked = IntMatrix.from_rows(top + [[-e for e in row] for row in basis])
    gens = []
    for w in left_kernel(stacked):
        gens.append(list(w[:k]))
    return subgroup_from_generators(
        h.ambient, IntMatrix.from_rows(gens) if gens else IntMatrix(0, k, ()))


def structure(h: TorsionSubgroup) -> FinAbGroup:
    """Invariant factors of H as an abstract finite abelian group."""
    basis = h._lattice_basis()
    k = h.ambient.rank
    M = h.ambient.M
    # relation matrix R with R*B = M*I, computed by back substitution over Q
    rel = []
    for i in range(k):
        target = [Fraction(M) if j == i else Fraction(0) for j in range(k)]
        coeffs = [Fraction(0)] * k
        for r in range(k):
            c = next(j for j, e in enumerate(basis[r]) if e != 0)
            q = target[c] / basis[r][c]
            coeffs[r] = q
            if q:
                for j in range(k):
                    target[j] -= q * basis[r][j]
        if any(target) or any(f.denominator != 1 for f in coeffs):
            raise RuntimeError("lattice does not contain M*Z^k")  # unreachable
        rel.append([int(f) for f in coeffs])
    _u, d, _v = smith_normal_form(IntMatrix.from_rows(rel))
    factors = [d.get(i, i) for i in range(k) if d.get(i, i) > 1]
    group = FinAbGroup(tuple(factors))
    assert group.order == h.order
    return group


def dual_group(g: FinAbGroup) -> FinAbGroup:
    """Character group; isomorphic to g, returned as a fresh value so the
    domain/codomain roles stay explicit."""
    return FinAbGroup(g.invariant_factors)


@dataclass(frozen=True)
class GroupHom:
    """Homomorphism between torsion ambients given by a coordinate matrix:
    x (row vector) maps to x @ matrix mod the codomain modulus."""

    domain: TorsionAmbient
    codomain: TorsionAmbient
    matrix: IntMatrix

    def __post_init__(self):
        if self.matrix.rows != self.domain.rank or self.matrix.cols != self.codomain.rank:
            raise ValueError("matrix shape does not match domain/codomain ranks")
        # well-definedness: M_dom * e_i must map into the codomain relations
        for i in range(self.matrix.rows):
            for j in range(self.matrix.cols):
                if (self.domain.M * self.matrix.get(i, j)) % self.codomain.M != 0:
                    raise ValueError("homomorphism not well defined on relations")

    def apply(self, vec: tuple[int, ...]) -> tuple[int, ...]:
        if len(vec) != self.domain.rank:
            raise ValueError("vector has wrong length")
        Mc = self.codomain.M
        return tuple(
            sum(vec[i] * self.matrix.get(i, j) for i in range(self.domain.rank)) % Mc
            for j in range(self.codomain.rank))

    def kernel(self) -> TorsionSubgroup:
        kd = self.domain.rank
        kc = self.codomain.rank
        Mc = self.codomain.M
        bottom = [[Mc if i == j else 0 for j in range(kc)] for i in range(kc)]
        stacked = IntMatrix.from_rows(self.matrix.to_rows() + bottom)
        gens = [list(w[:kd]) for w in left_kernel(stacked)]
        return subgroup_from_generators(
            self.domain,
            IntMatrix.from_rows(gens) if gens else IntMatrix(0, kd, ()))

    def image(self) -> TorsionSubgroup:
        return subgroup_from_generators(
            self.codomain,
            IntMatrix.from_rows(self.matrix.to_rows()) if self.matrix.rows
            else IntMatrix(0, self.codomain.rank, ()))


def dual_of_inclusion(k_sub: TorsionSubgroup, n: int) -> GroupHom:
    """Restriction-of-characters map A[n] -> dual(K) for K inside the
    n-torsion of its ambient.

    Characters of A[n] = (Z/n)^(2g) are identified with A[n] through the
    standard pairing <x, y> = sum x_j y_j / n mod 1; the map sends x to the
    tuple of pairings with K's canonical generators, realizing dual(K) as a
    subgroup of (Z/n)^(2g).  The map is surjective onto that realization and
    its kernel is the annihilator of K, of order n^(2g) / |K|."""
    amb = k_sub.ambient
    if amb.M % n != 0:
        raise ValueError(f"ambient modulus {amb.M} is not divisible by {n}")
    step = amb.M // n
    rank = amb.rank
    rows = []
    for i in range(k_sub.generators.rows):
        r = k_sub.generators.row(i)
        if any((n * e) % amb.M != 0 for e in r):
            raise ValueError("subgroup is not contained in the n-torsion")
        rows.append([e // step for e in r])
    while len(rows) < rank:
        rows.append([0] * rank)
    small = TorsionAmbient(amb.g, n)
    mat = IntMatrix.from_rows(rows).transpose()
    return GroupHom(small, small, mat)
