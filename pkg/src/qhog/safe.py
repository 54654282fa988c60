"""Unwinding sweeps: recovering the stored qubit needs the collision order.

After homogenizing |1> against nine |0> reservoir qubits, applying the
inverse partial swap in the exact reverse order restores the original
state; any other order does not.  This module replays every possible
unwinding order, reads off the sigma_z parameter z of the qubit guessed
to be the system (z = -1 means perfect recovery of |1>), and bins the
results into a fixed 21-bin histogram over [-1, 1].

The sweeps run in the one-excitation sector.  A depth-first walk over the
permutation tree shares common prefixes, so each tree edge costs exactly
one inverse collision; with a per-edge unit phase factored out only the
two involved amplitudes change, which is what makes 10! total unwindings
cheap.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

import numpy as np

from .collision import CollisionState, apply_two_qubit, excitation_forward_run
from .homogenizer import SwapAngle, partial_swap_unitary

EXACT_REVERSAL_TOL = 1e-9
NEAR_REVERSAL_TOL = 1e-6

NUM_BINS = 21


def bin_centers() -> list[float]:
    return [(i - 10) / 10.0 for i in range(NUM_BINS)]


def bin_index(z: float) -> int:
    """Bin of z for centers -1.0, -0.9, ..., 1.0 with width 0.1.

    Bins are half-open [center - 0.05, center + 0.05); values within 1e-9
    of a boundary are assigned upward, and the outermost bins absorb the
    closed endpoints -1 and +1.
    """
    z = min(1.0, max(-1.0, z))
    idx = int((z + 1.05) * 10.0 + 1e-9)
    return min(NUM_BINS - 1, max(0, idx))


@dataclass(frozen=True)
class UnwindTrial:
    chosen_system: int
    order: tuple[int, ...]
    z: float


@dataclass(frozen=True)
class UnwindHistogram:
    """Binned z counts of one sweep plus reversal bookkeeping."""

    counts: tuple[int, ...]
    total_trials: int
    n_reservoir: int
    eta: float
    chosen_system_mode: str
    exact_reversals: int
    near_reversals: int

    def to_csv(self) -> str:
        rows = ["z_center,count"]
        for center, count in zip(bin_centers(), self.counts):
            rows.append(f"{center!r},{count}")
        return "\n".join(rows) + "\n"

    def to_json_dict(self) -> dict:
        return {
            "N": self.n_reservoir,
            "eta": self.eta,
            "chosen_system_mode": self.chosen_system_mode,
            "total_trials": self.total_trials,
            "exact_reversals": self.exact_reversals,
            "near_reversals": self.near_reversals,
            "bins": [
                {"z_center": center, "count": count}
                for center, count in zip(bin_centers(), self.counts)
            ],
        }


def unwind(state: CollisionState, chosen_system: int, order) -> UnwindTrial:
    """Full-vector unwinding: inverse swaps between the chosen qubit and ``order``.

    ``order`` must be a permutation of all other qubit indices.  The input
    state is not modified.  Returns the sigma_z expectation of the chosen
    qubit's reduced state after the replay.
    """
    n = state.num_qubits
    order = tuple(int(q) for q in order)
    expected = set(range(n)) - {chosen_system}
    if sorted(order) != sorted(expected):
        raise ValueError(f"order {order} is not a permutation of the other qubits")
    p_inv = partial_swap_unitary(state.angle).conj().T
    vec = state.vector.copy()
    for q in order:
        vec = apply_two_qubit(vec, n, p_inv, chosen_system, q)
    rho = CollisionState(vec, state.angle, []).reduced(chosen_system)
    z = float((rho[0, 0] - rho[1, 1]).real)
    return UnwindTrial(chosen_system, order, z)


def unwind_z_excitation(amplitudes, chosen: int, order, angle: SwapAngle) -> float:
    """Replay one unwinding inside the excitation sector; returns z of ``chosen``."""
    c, s = angle.c, angle.s
    amps = np.asarray(amplitudes, dtype=complex).copy()
    spectator = complex(c, -s)
    for k in order:
        a0, ak = amps[chosen], amps[k]
        amps *= spectator
        amps[chosen] = c * a0 - 1j * s * ak
        amps[k] = -1j * s * a0 + c * ak
    return 1.0 - 2.0 * float(abs(amps[chosen]) ** 2)


@dataclass
class SweepStats:
    leaves: int = 0
    edges: int = 0


def enumerate_unwindings(amplitudes, chosen: int, pool, angle: SwapAngle, visit) -> SweepStats:
    """Depth-first sweep over all orders of ``pool`` with prefix sharing.

    Each edge of the permutation tree applies one inverse collision
    between ``chosen`` and the next pool element.  A unit phase common to
    all spectator amplitudes is divided out per edge, after which only the
    two involved amplitudes change; backtracking restores just those two.
    ``visit(order, z)`` is called at every leaf -- ``order`` is only valid
    for the duration of the call.
    """
    c, s = angle.c, angle.s
    u = complex(c * c, c * s)
    v = complex(s * s, -c * s)
    b = [complex(x) for x in amplitudes]
    stats = SweepStats()
    prefix: list[int] = []

    def dfs(remaining):
        if not remaining:
            bc = b[chosen]
            visit(prefix, 1.0 - 2.0 * (bc.real * bc.real + bc.imag * bc.imag))
            stats.leaves += 1
            return
        for i, k in enumerate(remaining):
            bc, bk = b[chosen], b[k]
            b[chosen] = u * bc + v * bk
            b[k] = v * bc + u * bk
            stats.edges += 1
            prefix.append(k)
            dfs(remaining[:i] + remaining[i + 1 :])
            prefix.pop()
            b[chosen], b[k] = bc, bk

    dfs(tuple(int(q) for q in pool))
    return stats


def _accumulate_exhaustive(amplitudes, chosen, pool, angle, counts, extras) -> int:
    """Run one full DFS, binning every leaf; returns the number of leaves."""

    def visit(_order, z):
        counts[bin_index(z)] += 1
        d = z + 1.0
        if -NEAR_REVERSAL_TOL <= d <= NEAR_REVERSAL_TOL:
            extras[1] += 1
            if -EXACT_REVERSAL_TOL <= d <= EXACT_REVERSAL_TOL:
                extras[0] += 1

    return enumerate_unwindings(amplitudes, chosen, pool, angle, visit).leaves


def _subtree_task(args) -> tuple[list[int], int, int, int]:
    """Worker: unwind one first-element subtree and return its histogram."""
    raw_amps, chosen, first, rest, angle = args
    c, s = angle.c, angle.s
    # apply the first edge with true amplitudes, then walk the subtree
    amps = np.asarray(raw_amps, dtype=complex).copy()
    a0, ak = amps[chosen], amps[first]
    amps *= complex(c, -s)
    amps[chosen] = c * a0 - 1j * s * ak
    amps[first] = -1j * s * a0 + c * ak
    counts = [0] * NUM_BINS
    extras = [0, 0]
    leaves = _accumulate_exhaustive(list(amps), chosen, rest, angle, counts, extras)
    return counts, leaves, extras[0], extras[1]


def _run_sweep(forward_amps, chosen_list, angle, threads) -> tuple[list[int], int, int, int]:
    counts = [0] * NUM_BINS
    extras = [0, 0]
    total = 0
    n = len(forward_amps)
    if threads <= 1:
        for chosen in chosen_list:
            pool = tuple(q for q in range(n) if q != chosen)
            total += _accumulate_exhaustive(list(forward_amps), chosen, pool, angle, counts, extras)
        return counts, total, extras[0], extras[1]

    tasks = []
    for chosen in chosen_list:
        pool = tuple(q for q in range(n) if q != chosen)
        for first in pool:
            rest = tuple(q for q in pool if q != first)
            tasks.append((list(forward_amps), chosen, first, rest, angle))
    with ProcessPoolExecutor(max_workers=threads) as pool_exec:
        for sub_counts, leaves, exact, near in pool_exec.map(_subtree_task, tasks):
            for i in range(NUM_BINS):
                counts[i] += sub_counts[i]
            total += leaves
            extras[0] += exact
            extras[1] += near
    return counts, total, extras[0], extras[1]


def _run_sampled(forward_amps, chosen_list, angle, sample, seed) -> tuple[list[int], int, int, int]:
    rng = np.random.default_rng(seed)
    counts = [0] * NUM_BINS
    extras = [0, 0]
    n = len(forward_amps)
    for _ in range(sample):
        chosen = chosen_list[int(rng.integers(len(chosen_list)))]
        pool = [q for q in range(n) if q != chosen]
        order = [pool[i] for i in rng.permutation(len(pool))]
        z = unwind_z_excitation(forward_amps, chosen, order, angle)
        counts[bin_index(z)] += 1
        d = z + 1.0
        if -NEAR_REVERSAL_TOL <= d <= NEAR_REVERSAL_TOL:
            extras[1] += 1
            if -EXACT_REVERSAL_TOL <= d <= EXACT_REVERSAL_TOL:
                extras[0] += 1
    return counts, sample, extras[0], extras[1]


def sweep_correct(
    n_reservoir: int = 9,
    angle: SwapAngle | None = None,
    threads: int = 1,
    sample: int | None = None,
    seed: int = 0,
) -> UnwindHistogram:
    """Unwind with the system qubit correctly identified, over all N! orders.

    Exactly one order (the reverse of the forward run) recovers |1>,
    i.e. z = -1.  ``sample`` switches to that many random orders instead
    of the exhaustive sweep.
    """
    if angle is None:
        raise ValueError("an interaction angle is required")
    forward = excitation_forward_run(n_reservoir, angle).amplitudes
    if sample is not None:
        counts, total, exact, near = _run_sampled(forward, [0], angle, sample, seed)
    else:
        counts, total, exact, near = _run_sweep(forward, [0], angle, threads)
    return UnwindHistogram(
        tuple(counts), total, n_reservoir, angle.eta, "correct", exact, near
    )


def sweep_incorrect(
    n_reservoir: int = 9,
    angle: SwapAngle | None = None,
    threads: int = 1,
    sample: int | None = None,
    seed: int = 0,
) -> UnwindHistogram:
    """Unwind with each reservoir qubit wrongly taken to be the system.

    Covers all N * N! combinations of wrong choice and order; none of
    them reverses the homogenization.
    """
    if angle is None:
        raise ValueError("an interaction angle is required")
    forward = excitation_forward_run(n_reservoir, angle).amplitudes
    chosen_list = list(range(1, n_reservoir + 1))
    if sample is not None:
        counts, total, exact, near = _run_sampled(forward, chosen_list, angle, sample, seed)
    else:
        counts, total, exact, near = _run_sweep(forward, chosen_list, angle, threads)
    return UnwindHistogram(
        tuple(counts), total, n_reservoir, angle.eta, "incorrect", exact, near
    )
