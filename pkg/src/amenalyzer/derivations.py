"""Derivations into the dual module and the three derivation-based flags.

A linear map D from the algebra into its dual is stored as the n-by-n
matrix M with M[i][j] the pairing of D(e_i) against e_j.  Matrices are
flattened row-major into coordinate vectors of length n*n, so spaces of
dual maps are ordinary subspaces and the lattice operations apply.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .algebra import FiniteAlgebra, is_unital
from .linalg import (
    DEFAULT_TOL,
    EXACT,
    FLOAT,
    Subspace,
    nullspace,
    rowspace,
    subspace_intersect,
    subspace_leq,
    subspace_equal,
)
from .scalars import ONE, ZERO


def flatten_map(m, n):
    """Row-major flattening of an n-by-n dual-map matrix."""
    if isinstance(m, np.ndarray):
        return m.reshape(n * n)
    return [m[i][j] for i in range(n) for j in range(n)]


def unflatten_map(v, n):
    if isinstance(v, np.ndarray):
        return v.reshape(n, n)
    return tuple(tuple(v[i * n + j] for j in range(n)) for i in range(n))


def _assemble_derivation_rows(a: FiniteAlgebra):
    """One linear constraint per basis triple (i, j, l).

    The derivation identity evaluated at basis vectors reads: the pairing
    of D(e_i e_j) against e_l equals the pairing of D(e_i) against e_j e_l
    plus the pairing of D(e_j) against e_l e_i.
    """
    n = a.dim
    nn = n * n
    rows = []
    for i in range(n):
        for j in range(n):
            cij = a.sc[i][j]
            for l in range(n):
                row = [ZERO] * nn
                for k in range(n):
                    c = cij[k]
                    if not c.is_zero():
                        row[k * n + l] = row[k * n + l] + c
                cjl = a.sc[j][l]
                for m in range(n):
                    c = cjl[m]
                    if not c.is_zero():
                        row[i * n + m] = row[i * n + m] - c
                cli = a.sc[l][i]
                for m in range(n):
                    c = cli[m]
                    if not c.is_zero():
                        row[j * n + m] = row[j * n + m] - c
                rows.append(row)
    return rows


def derivation_space(a: FiniteAlgebra, backend=EXACT, tol=DEFAULT_TOL) -> Subspace:
    """Kernel of the derivation constraint system, inside C^(n*n)."""
    rows = _assemble_derivation_rows(a)
    if backend == FLOAT:
        rows = [[complex(x) for x in r] for r in rows]
    return nullspace(rows, a.dim * a.dim, backend, tol)


def inner_space(a: FiniteAlgebra, backend=EXACT, tol=DEFAULT_TOL) -> Subspace:
    """Image of F -> (i,j) |-> F(e_i e_j - e_j e_i), one row per dual basis F."""
    n = a.dim
    rows = []
    for k in range(n):
        row = []
        for i in range(n):
            for j in range(n):
                row.append(a.sc[i][j][k] - a.sc[j][i][k])
        rows.append(row)
    if backend == FLOAT:
        rows = [[complex(x) for x in r] for r in rows]
    return rowspace(rows, n * n, backend, tol)


def antisymmetric_space(n, backend=EXACT, tol=DEFAULT_TOL) -> Subspace:
    """Matrices with M[i][j] + M[j][i] = 0, as a subspace of C^(n*n)."""
    rows = []
    nn = n * n
    for i in range(n):
        for j in range(i, n):
            row = [ZERO] * nn
            row[i * n + j] = row[i * n + j] + ONE
            row[j * n + i] = row[j * n + i] + ONE
            rows.append(row)
    if backend == FLOAT:
        rows = [[complex(x) for x in r] for r in rows]
    return nullspace(rows, nn, backend, tol)


def cyclic_subspace(a: FiniteAlgebra, z: Subspace) -> Subspace:
    """Cyclic derivations: the derivation space meets the antisymmetric matrices."""
    anti = antisymmetric_space(a.dim, z.backend, z.tol)
    return subspace_intersect(z, anti)


def t_operator_rank(z: Subspace, zc: Subspace) -> int:
    """Rank of the cyclic-defect operator: dim Z minus dim Zc."""
    if not subspace_leq(zc, z):
        raise AssertionError("internal invariant violated: cyclic space not inside Z")
    return z.dim - zc.dim


def rank_one_dual_map(f1, f2, backend=EXACT):
    """Dual map pairing a against b as F1(a) * F2(b)."""
    if len(f1) != len(f2):
        raise ValueError(f"length mismatch: {len(f1)} vs {len(f2)}")
    if backend == FLOAT:
        v1 = np.asarray(f1, dtype=np.complex128)
        v2 = np.asarray(f2, dtype=np.complex128)
        return np.outer(v1, v2)
    return tuple(tuple(x * y for y in f2) for x in f1)


def vanishes_on_diameter(m, tol=DEFAULT_TOL) -> bool:
    """Whether the pairing of D(a) against a vanishes for every a.

    Decided by evaluating the quadratic form on the spanning family of
    basis vectors and pairwise sums, which is an independent route from
    the antisymmetry test.
    """
    if isinstance(m, np.ndarray):
        n = m.shape[0]
        scale = max(1.0, float(np.abs(m).max())) if m.size else 1.0
        for i in range(n):
            if abs(m[i, i]) > tol * scale:
                return False
            for j in range(i + 1, n):
                if abs(m[i, i] + m[j, j] + m[i, j] + m[j, i]) > tol * scale:
                    return False
        return True
    n = len(m)
    for i in range(n):
        if not m[i][i].is_zero():
            return False
        for j in range(i + 1, n):
            if not (m[i][i] + m[j][j] + m[i][j] + m[j][i]).is_zero():
                return False
    return True


def is_cyclic(m, tol=DEFAULT_TOL) -> bool:
    """Antisymmetry of the coordinate matrix."""
    if isinstance(m, np.ndarray):
        scale = max(1.0, float(np.abs(m).max())) if m.size else 1.0
        return bool(np.abs(m + m.T).max() <= tol * scale) if m.size else True
    n = len(m)
    return all(
        (m[i][j] + m[j][i]).is_zero() for i in range(n) for j in range(i, n)
    )


def pairing_with_unit_vanishes(a: FiniteAlgebra, m, tol=DEFAULT_TOL) -> bool:
    """Whether D(a) pairs to zero against the unit, for all a."""
    ok, u = is_unital(a)
    if not ok:
        raise ValueError(f"{a.name} is not unital")
    n = a.dim
    if isinstance(m, np.ndarray):
        uu = np.array([complex(x) for x in u])
        scale = max(1.0, float(np.abs(m).max())) if m.size else 1.0
        return bool(np.abs(m @ uu).max() <= tol * scale)
    for i in range(n):
        acc = ZERO
        for j in range(n):
            if not (m[i][j].is_zero() or u[j].is_zero()):
                acc = acc + m[i][j] * u[j]
        if not acc.is_zero():
            return False
    return True


def is_derivation(a: FiniteAlgebra, m, z: Subspace | None = None) -> bool:
    if z is None:
        backend = FLOAT if isinstance(m, np.ndarray) else EXACT
        z = derivation_space(a, backend)
    return z.contains(flatten_map(m, a.dim))


def is_inner(a: FiniteAlgebra, m, inn: Subspace | None = None) -> bool:
    if inn is None:
        backend = FLOAT if isinstance(m, np.ndarray) else EXACT
        inn = inner_space(a, backend)
    return inn.contains(flatten_map(m, a.dim))


@dataclass(frozen=True)
class DerivationAnalysis:
    """Derivation-side classification of one algebra."""

    algebra: FiniteAlgebra
    z: Subspace
    inner: Subspace
    zc: Subspace
    t_rank: int
    weakly_amenable: bool
    cyclically_amenable: bool
    cyclically_weakly_amenable: bool
    witnesses: dict

    @property
    def dims(self):
        return {"Z": self.z.dim, "Inn": self.inner.dim, "Zc": self.zc.dim}


def _first_outside(larger: Subspace, smaller: Subspace):
    for v in larger.basis_vectors():
        if not smaller.contains(v):
            return v
    return None


def classify_derivations(a: FiniteAlgebra, backend=EXACT, tol=DEFAULT_TOL) -> DerivationAnalysis:
    """Compute Z, Inn, Zc and the three flags, with witnesses for failures.

    A witness is the first RREF basis vector of the larger space that
    fails membership in the smaller, unflattened to a dual-map matrix.
    """
    z = derivation_space(a, backend, tol)
    inn = inner_space(a, backend, tol)
    zc = cyclic_subspace(a, z)
    n = a.dim
    wa = subspace_equal(z, inn)
    ca = subspace_equal(zc, inn)
    cwa = subspace_equal(z, zc)
    witnesses = {}
    if not wa:
        w = _first_outside(z, inn)
        if w is not None:
            witnesses["weakly_amenable"] = unflatten_map(w, n)
    if not ca:
        w = _first_outside(zc, inn)
        if w is not None:
            witnesses["cyclically_amenable"] = unflatten_map(w, n)
    if not cwa:
        w = _first_outside(z, zc)
        if w is not None:
            witnesses["cyclically_weakly_amenable"] = unflatten_map(w, n)
    return DerivationAnalysis(
        algebra=a,
        z=z,
        inner=inn,
        zc=zc,
        t_rank=t_operator_rank(z, zc),
        weakly_amenable=wa,
        cyclically_amenable=ca,
        cyclically_weakly_amenable=cwa,
        witnesses=witnesses,
    )
