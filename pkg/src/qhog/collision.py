"""Exact pure-state simulation of the system qubit plus N reservoir qubits.

The joint state is a flat vector of 2**(N+1) amplitudes with qubit 0 (the
system) on the most significant bit.  Collisions apply the partial swap
between qubit 0 and one reservoir qubit; reduced density matrices come
straight from the amplitudes without ever forming the global density
matrix.

For the |1> system / |0> reservoir initial condition the dynamics never
leaves the one-excitation subspace, so the same evolution can be tracked
with just N+1 amplitudes (one per possible location of the excitation).
That fast path is what makes the exhaustive unwinding sweeps cheap.
"""

from __future__ import annotations

import os
from dataclasses import dataclass

import numpy as np

from .bloch import QubitState
from .homogenizer import SwapAngle, partial_swap_unitary
from .linalg import hermitian_eig, num_qubits_of

MAX_QUBITS_DEFAULT = 22
_ENV_CAP = "QHOG_MAX_QUBITS"


def max_qubits() -> int:
    """Total-qubit cap for the global state vector (env QHOG_MAX_QUBITS)."""
    raw = os.environ.get(_ENV_CAP)
    if raw is None:
        return MAX_QUBITS_DEFAULT
    cap = int(raw)
    if cap < 2:
        raise ValueError(f"{_ENV_CAP} must be at least 2, got {cap}")
    return cap


def apply_two_qubit(vec: np.ndarray, num_qubits: int, u4: np.ndarray, a: int, b: int) -> np.ndarray:
    """Apply a 4x4 unitary to qubits (a, b) of an amplitude vector."""
    t = vec.reshape([2] * num_qubits)
    t = np.moveaxis(t, (a, b), (0, 1))
    rest = t.shape[2:]
    out = (u4 @ t.reshape(4, -1)).reshape((2, 2) + rest)
    out = np.moveaxis(out, (0, 1), (a, b))
    return np.ascontiguousarray(out).reshape(-1)


def reduced_from_vector(vec: np.ndarray, num_qubits: int, keep) -> np.ndarray:
    """Reduced density matrix of ``keep`` (in the given order) from amplitudes."""
    keep = [int(q) for q in keep]
    if len(set(keep)) != len(keep):
        raise ValueError(f"duplicate qubit indices {keep}")
    if any(q < 0 or q >= num_qubits for q in keep):
        raise ValueError(f"qubit index out of range in {keep}")
    t = vec.reshape([2] * num_qubits)
    t = np.moveaxis(t, keep, range(len(keep)))
    m = t.reshape(2 ** len(keep), -1)
    return m @ m.conj().T


@dataclass
class CollisionState:
    """Joint pure state of the system (qubit 0) and N reservoir qubits."""

    vector: np.ndarray
    angle: SwapAngle
    log: list[int]

    @property
    def num_qubits(self) -> int:
        return num_qubits_of(self.vector.shape[0])

    @property
    def n_reservoir(self) -> int:
        return self.num_qubits - 1

    def copy(self) -> "CollisionState":
        return CollisionState(self.vector.copy(), self.angle, list(self.log))

    def collide(self, k: int) -> "CollisionState":
        """Partial swap between the system and reservoir qubit k (1-based)."""
        if not 1 <= k <= self.n_reservoir:
            raise ValueError(f"reservoir index {k} out of range 1..{self.n_reservoir}")
        p = partial_swap_unitary(self.angle)
        vec = apply_two_qubit(self.vector, self.num_qubits, p, 0, k)
        return CollisionState(vec, self.angle, self.log + [k])

    def run(self, order=None) -> "CollisionState":
        """Collide with reservoir qubits in ``order`` (default 1..N)."""
        if order is None:
            order = range(1, self.n_reservoir + 1)
        order = [int(k) for k in order]
        if len(set(order)) != len(order):
            raise ValueError(f"collision order contains repeats: {order}")
        state = self
        for k in order:
            state = state.collide(k)
        return state

    def reduced(self, qubits) -> np.ndarray:
        if isinstance(qubits, (int, np.integer)):
            qubits = [qubits]
        return reduced_from_vector(self.vector, self.num_qubits, qubits)

    def to_json_dict(self) -> dict:
        return {
            "num_qubits": self.num_qubits,
            "eta": self.angle.eta,
            "log": list(self.log),
            "amplitudes": [[z.real, z.imag] for z in self.vector],
        }


def init_pure(system, reservoir, n: int, angle: SwapAngle, cap: int | None = None) -> CollisionState:
    """Product state (system ket) x (reservoir ket)^n with an empty log."""
    system = np.asarray(system, dtype=complex)
    reservoir = np.asarray(reservoir, dtype=complex)
    for name, ket in (("system", system), ("reservoir", reservoir)):
        if ket.shape != (2,):
            raise ValueError(f"{name} ket must have two components")
        if abs(np.vdot(ket, ket).real - 1.0) > 1e-9:
            raise ValueError(f"{name} ket is not normalized")
    if n < 1:
        raise ValueError("need at least one reservoir qubit")
    cap = max_qubits() if cap is None else cap
    if n + 1 > cap:
        raise ValueError(f"{n + 1} qubits exceeds the configured cap of {cap}")
    vec = system
    block = reservoir
    todo = n
    # kron-doubling of the reservoir factor
    while todo > 0:
        if todo & 1:
            vec = np.kron(vec, block)
        todo >>= 1
        if todo:
            block = np.kron(block, block)
    return CollisionState(np.ascontiguousarray(vec), angle, [])


class MixedRun:
    """Convex combination of pure runs for a mixed initial system state."""

    def __init__(self, components: list[tuple[float, CollisionState]]):
        self.components = components

    def reduced(self, qubits) -> np.ndarray:
        out = None
        for weight, state in self.components:
            term = weight * state.reduced(qubits)
            out = term if out is None else out + term
        return out


def run_mixed_system(
    rho0: QubitState, reservoir, n: int, angle: SwapAngle, order=None
) -> MixedRun:
    """Run each eigenvector of a (possibly mixed) system state separately.

    The global map is linear in the initial system operator, so any
    reduced matrix of the true evolution is the same convex combination
    of the pure-component results.  The reservoir must be pure.
    """
    vals, vecs = hermitian_eig(rho0.density())
    components = []
    for i in range(2):
        weight = float(vals[i])
        if weight < 1e-14:
            continue
        ket = vecs[:, i]
        components.append((weight, init_pure(ket, reservoir, n, angle).run(order)))
    return MixedRun(components)


@dataclass(frozen=True)
class ExcitationState:
    """Amplitudes over the one-excitation basis: entry j = qubit j excited."""

    amplitudes: np.ndarray

    @property
    def num_qubits(self) -> int:
        return self.amplitudes.shape[0]

    @classmethod
    def initial(cls, num_qubits: int) -> "ExcitationState":
        """|1> on the system qubit, |0> everywhere else."""
        amps = np.zeros(num_qubits, dtype=complex)
        amps[0] = 1.0
        return cls(amps)

    def z_of(self, j: int) -> float:
        """sigma_z expectation of qubit j; the reduced state is diagonal here."""
        p1 = abs(self.amplitudes[j]) ** 2
        return 1.0 - 2.0 * p1

    def to_vector(self) -> np.ndarray:
        """Embed back into the full 2**n amplitude vector."""
        n = self.num_qubits
        vec = np.zeros(2**n, dtype=complex)
        for j, a in enumerate(self.amplitudes):
            vec[1 << (n - 1 - j)] = a
        return vec


def to_excitation(state: CollisionState, tol: float = 1e-12) -> ExcitationState:
    """Project a one-excitation CollisionState onto the small representation."""
    n = state.num_qubits
    vec = state.vector
    idx = [1 << (n - 1 - j) for j in range(n)]
    amps = np.array(vec[idx], dtype=complex)
    rest = vec.copy()
    rest[idx] = 0.0
    leak = float(np.sum(np.abs(rest) ** 2))
    if leak > tol:
        raise ValueError(f"state has weight {leak:.3e} outside the one-excitation sector")
    return ExcitationState(amps)


def excitation_collide(
    es: ExcitationState, k: int, angle: SwapAngle, inverse: bool = False
) -> ExcitationState:
    """Collision between the system slot (0) and slot k inside the sector.

    The pair (a_0, a_k) mixes through [[c, is], [is, c]] while every other
    amplitude picks up the spectator phase (c + is) coming from the
    partial swap acting on its |00> component; the inverse collision
    flips the sign of s.
    """
    if not 1 <= k < es.num_qubits:
        raise ValueError(f"slot {k} out of range 1..{es.num_qubits - 1}")
    c = angle.c
    s = -angle.s if inverse else angle.s
    amps = es.amplitudes * complex(c, s)
    a0, ak = es.amplitudes[0], es.amplitudes[k]
    amps[0] = c * a0 + 1j * s * ak
    amps[k] = 1j * s * a0 + c * ak
    return ExcitationState(amps)


def excitation_forward_run(n_reservoir: int, angle: SwapAngle) -> ExcitationState:
    """Fast-path forward homogenization of |1> against |0>^N in order 1..N."""
    es = ExcitationState.initial(n_reservoir + 1)
    for k in range(1, n_reservoir + 1):
        es = excitation_collide(es, k, angle)
    return es
