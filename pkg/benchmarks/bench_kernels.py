"""Time each hot kernel in its numba and numpy forms on realistic inputs.

    python benchmarks/bench_kernels.py [--resolution 1024] [--repeat 5]
"""

from __future__ import annotations

import time

import click
import numpy as np

from kpbound import kernels
from kpbound.conformal import boundary_quadrature
from kpbound.geometry import RadiiTriple, construct_canonical_domain


def _best_of(fn, args, repeat: int) -> float:
    fn(*args)  # warm-up (JIT compile / cache load)
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best


def workloads(resolution: int, rng: np.random.Generator):
    dom = construct_canonical_domain(RadiiTriple(0.6, 0.5, 0.4))
    q = boundary_quadrature(dom, resolution)
    sw = np.sqrt(q.weights).astype(complex)
    vals = rng.normal(size=q.size) + 1j * rng.normal(size=q.size)
    pts = rng.uniform(-0.6, 0.6, size=(64 * 64, 2))
    ring = 0.99 * np.exp(1j * np.linspace(0, 2 * np.pi, 4096, endpoint=False))
    dz = q.tangents * q.weights
    return {
        "hull_gap_many": (pts, dom.hull_params),
        "kerzman_stein_system": (q.nodes, q.tangents, sw),
        "kerzman_stein_apply": (q.nodes[::4].copy(), q.tangents[::4].copy(), q.nodes, q.tangents,
                                q.weights.astype(complex), vals),
        "cauchy_barycentric": (ring, q.nodes, dz, vals[None, :]),
    }


@click.command()
@click.option("--resolution", default=1024, show_default=True)
@click.option("--repeat", default=5, show_default=True)
def main(resolution, repeat):
    rng = np.random.default_rng(0)
    loads = workloads(resolution, rng)
    click.echo(f"{'kernel':<22} {'numba ms':>10} {'numpy ms':>10} {'speedup':>8}")
    for name, (fast, slow) in kernels.PAIRS.items():
        args = loads[name]
        tf = _best_of(fast, args, repeat)
        ts = _best_of(slow, args, repeat)
        click.echo(f"{name:<22} {1e3 * tf:>10.2f} {1e3 * ts:>10.2f} {ts / tf:>8.1f}")


if __name__ == "__main__":
    main()
