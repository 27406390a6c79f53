"""Small labeled symmetric matrices and their closed-form diagonalization.

The degenerate-level analysis only ever produces matrices that decompose
into 1x1 and 2x2 blocks under the coupling pattern, so the solver works
block by block in closed form; anything larger falls back to numpy's
symmetric eigensolver.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .units import UnitSystem

_SYMMETRY_RTOL = 1e-14


@dataclass(frozen=True)
class PerturbationMatrix:
    """Real symmetric matrix with explicit basis-state labels (energy entries)."""

    basis: tuple[str, ...]
    entries: np.ndarray
    system: UnitSystem

    def __init__(self, basis, entries, system: UnitSystem):
        arr = np.array(entries, dtype=float)
        basis = tuple(basis)
        if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
            raise ValueError(f"matrix must be square, got shape {arr.shape}")
        if len(basis) != arr.shape[0]:
            raise ValueError(f"{len(basis)} basis labels for a {arr.shape[0]}-dim matrix")
        scale = np.max(np.abs(arr))
        if scale > 0 and np.max(np.abs(arr - arr.T)) > _SYMMETRY_RTOL * scale:
            raise ValueError("matrix is not symmetric")
        arr = 0.5 * (arr + arr.T)
        arr.setflags(write=False)
        object.__setattr__(self, "basis", basis)
        object.__setattr__(self, "entries", arr)
        object.__setattr__(self, "system", system)

    @property
    def dim(self) -> int:
        return self.entries.shape[0]


@dataclass(frozen=True)
class EigenDecomposition:
    """Eigenvalue/eigenvector pairs in a deterministic order.

    Eigenvalues descend; each eigenvector's first nonzero coefficient is
    positive; ties in eigenvalue are ordered by the index of that leading
    coefficient.
    """

    basis: tuple[str, ...]
    eigenvalues: np.ndarray
    eigenvectors: np.ndarray  # row i is the vector paired with eigenvalues[i]
    system: UnitSystem

    @property
    def pairs(self):
        return list(zip(self.eigenvalues, self.eigenvectors))


def _solve_2x2(a: float, c: float, d: float) -> tuple[tuple[float, np.ndarray], ...]:
    """Eigenpairs of [[a, c], [c, d]] in closed form (unordered)."""
    if c == 0.0:
        return ((a, np.array([1.0, 0.0])), (d, np.array([0.0, 1.0])))
    half_tr = 0.5 * (a + d)
    disc = math.hypot(0.5 * (a - d), c)
    pairs = []
    for lam in (half_tr + disc, half_tr - disc):
        v = np.array([c, lam - a])
        # the (c, lam-a) column can degenerate when lam ~ a; use the other row
        if np.linalg.norm(v) < 1e-300:
            v = np.array([lam - d, c])
        pairs.append((lam, v / np.linalg.norm(v)))
    return tuple(pairs)


def _blocks(entries: np.ndarray) -> list[list[int]]:
    """Connected components of the nonzero off-diagonal coupling graph."""
    n = entries.shape[0]
    seen = [False] * n
    comps = []
    for start in range(n):
        if seen[start]:
            continue
        stack, comp = [start], []
        seen[start] = True
        while stack:
            i = stack.pop()
            comp.append(i)
            for j in range(n):
                if not seen[j] and entries[i, j] != 0.0:
                    seen[j] = True
                    stack.append(j)
        comps.append(sorted(comp))
    return comps


def _fix_phase(v: np.ndarray) -> np.ndarray:
    nz = np.flatnonzero(np.abs(v) > 1e-13)
    if nz.size and v[nz[0]] < 0:
        return -v
    return v


def diagonalize(m: PerturbationMatrix) -> EigenDecomposition:
    """Full spectrum with deterministic ordering and phase.

    Ordering: descending eigenvalue; among numerically equal eigenvalues,
    ascending index of the leading nonzero coefficient.  Phase: leading
    nonzero coefficient positive.
    """
    entries = m.entries
    scale = np.max(np.abs(entries))
    if scale > 0 and np.max(np.abs(entries - entries.T)) > _SYMMETRY_RTOL * scale:
        raise ValueError("matrix is not symmetric")
    n = m.dim
    eigvals = []
    eigvecs = []
    for comp in _blocks(entries):
        sub = entries[np.ix_(comp, comp)]
        if len(comp) == 1:
            local = [(sub[0, 0], np.array([1.0]))]
        elif len(comp) == 2:
            local = list(_solve_2x2(sub[0, 0], sub[0, 1], sub[1, 1]))
        else:
            vals, vecs = np.linalg.eigh(sub)
            local = [(vals[i], vecs[:, i]) for i in range(len(comp))]
        for lam, v in local:
            full = np.zeros(n)
            full[comp] = v
            eigvals.append(lam)
            eigvecs.append(_fix_phase(full))
    lead = [int(np.flatnonzero(np.abs(v) > 1e-13)[0]) for v in eigvecs]
    order = sorted(range(n), key=lambda i: (-eigvals[i], lead[i]))
    values = np.array([eigvals[i] for i in order])
    vectors = np.vstack([eigvecs[i] for i in order])
    values.setflags(write=False)
    vectors.setflags(write=False)
    return EigenDecomposition(m.basis, values, vectors, m.system)
