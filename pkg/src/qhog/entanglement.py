"""Wootters concurrence, one-vs-rest tangles, and CKW monogamy accounting.

For the |1> system / |0> reservoir start the pairwise concurrences have
simple closed forms: once both partners of a reservoir pair (j, k) have
collided, C_jk = 2 s^2 c^(j+k-2) and never changes again, while the
system-reservoir value C_0k = 2 s c^(n+k-1) decays with every further
collision n.  The CKW monogamy bound holds with equality throughout, and
the total pairwise tangle approaches 2 under the best-homogenization
schedule.  Everything here is either a numeric measure on simulator
states or one of those closed forms, so each can check the other.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .collision import CollisionState
from .homogenizer import SwapAngle
from .linalg import SY, hermitian_eig, is_hermitian, psd_sqrt, tensor_product

SIGMA_YY = tensor_product(SY, SY)

_ROUNDOFF = 1e-10


def concurrence(rho, tol: float = 1e-8) -> float:
    """Wootters concurrence of a two-qubit density matrix.

    Uses the Hermitian form: the eigenvalues of
    sqrt(rho) (sy x sy) rho* (sy x sy) sqrt(rho) are the squares of the
    usual spin-flip singular values lambda_i, which keeps the spectrum
    real and non-negative by construction.
    """
    rho = np.asarray(rho, dtype=complex)
    if rho.shape != (4, 4):
        raise ValueError(f"expected a 4x4 density matrix, got shape {rho.shape}")
    if not is_hermitian(rho, tol):
        raise ValueError("density matrix is not Hermitian")
    if abs(np.trace(rho).real - 1.0) > tol:
        raise ValueError("density matrix does not have unit trace")
    root = psd_sqrt(rho, tol)
    m = root @ SIGMA_YY @ rho.conj() @ SIGMA_YY @ root
    vals, _ = hermitian_eig(m)
    if float(vals[-1]) < -_ROUNDOFF:
        raise ValueError("spin-flip spectrum came out negative; input is not a state")
    # eigenvalues at roundoff scale are exact zeros of the rank-deficient
    # product; the square root would blow their noise up to ~1e-8
    vals = np.where(vals < 1e-14, 0.0, np.clip(vals, 0.0, None))
    lam = np.sqrt(vals)
    return float(max(0.0, lam[0] - lam[1] - lam[2] - lam[3]))


def spin_flip_lambdas_reference(rho) -> np.ndarray:
    """Square roots of the eigenvalues of rho (sy x sy) rho* (sy x sy).

    Independent route to the same lambdas through the non-Hermitian
    product matrix; kept for cross-checking the Hermitian form.
    """
    rho = np.asarray(rho, dtype=complex)
    r = rho @ SIGMA_YY @ rho.conj() @ SIGMA_YY
    vals = np.linalg.eigvals(r)
    vals = np.clip(vals.real, 0.0, None)
    return np.sqrt(np.sort(vals)[::-1])


def tangle_one_vs_rest(state: CollisionState, j: int) -> float:
    """Tangle between qubit j and everything else: 4 det of its reduced state."""
    rho = state.reduced(j)
    det = (rho[0, 0] * rho[1, 1] - rho[0, 1] * rho[1, 0]).real
    return float(min(1.0, max(0.0, 4.0 * det)))


def ckw_sum(state: CollisionState, j: int) -> float:
    """Sum of squared pairwise concurrences between qubit j and each other qubit."""
    total = 0.0
    for k in range(state.num_qubits):
        if k == j:
            continue
        total += concurrence(state.reduced([j, k])) ** 2
    return total


@dataclass(frozen=True)
class ConcurrenceTable:
    """Pairwise concurrences C_jk (j < k, qubit 0 = system) after n collisions."""

    n: int
    entries: dict[tuple[int, int], float]

    def value(self, j: int, k: int) -> float:
        return self.entries[(j, k) if j < k else (k, j)]

    def pairs(self):
        return sorted(self.entries)

    def to_csv(self) -> str:
        rows = ["j,k,C"]
        for j, k in self.pairs():
            rows.append(f"{j},{k},{self.entries[(j, k)]:.17g}")
        return "\n".join(rows) + "\n"

    def to_json_records(self) -> list[dict]:
        return [{"j": j, "k": k, "C": self.entries[(j, k)]} for j, k in self.pairs()]


@dataclass(frozen=True)
class TangleRecord:
    """Per-qubit one-vs-rest tangle tau_j and CKW pair sum S_j."""

    entries: dict[int, tuple[float, float]]

    def to_csv(self) -> str:
        rows = ["j,tau,S"]
        for j in sorted(self.entries):
            tau, s = self.entries[j]
            rows.append(f"{j},{tau:.17g},{s:.17g}")
        return "\n".join(rows) + "\n"

    def to_json_records(self) -> list[dict]:
        return [
            {"j": j, "tau": self.entries[j][0], "S": self.entries[j][1]}
            for j in sorted(self.entries)
        ]


def concurrence_table(state: CollisionState) -> ConcurrenceTable:
    """Numeric concurrence of every reduced pair of a simulator state."""
    entries = {}
    for j in range(state.num_qubits):
        for k in range(j + 1, state.num_qubits):
            entries[(j, k)] = concurrence(state.reduced([j, k]))
    return ConcurrenceTable(len(state.log), entries)


def tangle_record(state: CollisionState) -> TangleRecord:
    entries = {}
    for j in range(state.num_qubits):
        entries[j] = (tangle_one_vs_rest(state, j), ckw_sum(state, j))
    return TangleRecord(entries)


def _check_regime(system, reservoir) -> None:
    """The closed forms hold only for system |1>, reservoir |0> starts."""
    if system is None and reservoir is None:
        return
    sys_ok = system is not None and np.allclose(
        np.asarray(system, dtype=complex), [0.0, 1.0], atol=1e-12
    )
    res_ok = reservoir is not None and np.allclose(
        np.asarray(reservoir, dtype=complex), [1.0, 0.0], atol=1e-12
    )
    if not (sys_ok and res_ok):
        raise ValueError(
            "closed-form concurrences are only valid for the system |1>, "
            "reservoir |0> initial condition"
        )


def closed_pair_concurrence(j: int, k: int, n: int, angle: SwapAngle) -> float:
    """Closed-form C_jk after n collisions for the |1>/|0> initial condition."""
    if not 0 <= j < k:
        raise ValueError(f"need 0 <= j < k, got ({j}, {k})")
    s, c = angle.s, angle.c
    if n < k:
        return 0.0
    if j == 0:
        return 2.0 * s * c ** (n + k - 1)
    return 2.0 * s**2 * c ** (j + k - 2)


def closed_form_concurrences(
    n: int, n_reservoir: int, angle: SwapAngle, system=None, reservoir=None
) -> ConcurrenceTable:
    """Full closed-form table for all pairs 0 <= j < k <= N after n collisions.

    If explicit initial kets are supplied they are validated against the
    |1>/|0> regime the formulas were derived for; anything else raises
    rather than extrapolating.
    """
    if not 0 <= n <= n_reservoir:
        raise ValueError(f"collision count {n} out of range 0..{n_reservoir}")
    _check_regime(system, reservoir)
    entries = {}
    for j in range(n_reservoir + 1):
        for k in range(j + 1, n_reservoir + 1):
            entries[(j, k)] = closed_pair_concurrence(j, k, n, angle)
    return ConcurrenceTable(n, entries)


def closed_tangle(j: int, n: int, angle: SwapAngle) -> float:
    """Closed-form one-vs-rest tangle (= CKW sum, the bound is saturated)."""
    s, c = angle.s, angle.c
    if j == 0:
        return 4.0 * c ** (2 * n) * (1.0 - c ** (2 * n))
    if n < j:
        return 0.0
    a = s**2 * c ** (2 * (j - 1))
    return 4.0 * a * (1.0 - a)


def total_tangle_sum(n_reservoir: int, angle: SwapAngle) -> float:
    """Sum of squared concurrences over all pairs after the full N-collision run.

    Computed as half the sum of the per-qubit CKW sums, which is O(N);
    approaches 2 as N grows along the best-homogenization schedule.
    """
    c2 = angle.c**2
    s2 = angle.s**2
    n = n_reservoir
    total = 0.5 * 4.0 * c2**n * (1.0 - c2**n)
    a = np.full(n, s2) * np.power(c2, np.arange(n))
    total += 0.5 * float(np.sum(4.0 * a * (1.0 - a)))
    return total
