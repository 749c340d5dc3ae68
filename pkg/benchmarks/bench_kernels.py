"""Benchmark the numba kernels against the pure-numpy fallback.

Two levels:

* micro — each hot kernel on training-shaped arrays, both implementations
  imported directly (no env flag needed);
* end-to-end (--end-to-end) — a short latent-model training run in a
  subprocess per backend, selected via NPLAB_KERNELS.

Usage: python benchmarks/bench_kernels.py [--end-to-end] [--repeats N]
"""

import argparse
import os
import subprocess
import sys
import time

import numpy as np

from nplab import kernels_numba, kernels_numpy


def time_call(fn, *args, repeats=200):
    fn(*args)  # warm-up (JIT compile / cache load)
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best


def micro(repeats):
    rng = np.random.default_rng(0)
    act = rng.normal(size=(800, 128))          # encoder/decoder activations
    grad = rng.normal(size=(800, 128))
    logits = rng.normal(size=(400, 50))        # attention rows
    probs = kernels_numpy.softmax_fwd(logits)
    n_params = 120_000                          # synthetic-profile parameter count
    p = rng.normal(size=n_params)
    g = rng.normal(size=n_params)
    m = np.zeros(n_params)
    v = np.zeros(n_params)

    cases = [
        ("relu_fwd  800x128", lambda K: K.relu_fwd(act)),
        ("relu_bwd  800x128", lambda K: K.relu_bwd(grad, act)),
        ("softplus_fwd 800x128", lambda K: K.softplus_fwd(act)),
        ("softplus_bwd 800x128", lambda K: K.softplus_bwd(grad, act)),
        ("softmax_fwd 400x50", lambda K: K.softmax_fwd(logits)),
        ("softmax_bwd 400x50", lambda K: K.softmax_bwd(logits, probs)),
        (
            "adam 120k params",
            lambda K: K.adam_update(p.copy(), g, m.copy(), v.copy(), 5, 1e-3, 0.9, 0.999, 1e-8),
        ),
    ]
    print(f"{'kernel':<24s} {'numpy':>10s} {'numba':>10s} {'speedup':>9s}")
    for name, call in cases:
        t_np = time_call(lambda: call(kernels_numpy), repeats=repeats)
        t_nb = time_call(lambda: call(kernels_numba), repeats=repeats)
        print(f"{name:<24s} {t_np * 1e6:>8.1f}us {t_nb * 1e6:>8.1f}us {t_np / t_nb:>8.2f}x")


_E2E_SNIPPET = """
import time
import numpy as np
from nplab.backend import active_backend
from nplab.config import resolve_config
from nplab.models import build_model
from nplab.tasks import build_task
from nplab.training import train

cfg = resolve_config(None, [{
    "seed": 0,
    "model": {"variant": "dsvnp", "dim_lat": 64, "enc_hidden": [128, 128],
              "dec_hidden": [128, 128], "loc_hidden": [64]},
    "train": {"iterations": 300, "eval_every": 300, "batch_tasks": 8},
}])
task = build_task(cfg)
model = build_model(cfg, task.dx, task.dy)
t0 = time.perf_counter()
train(model, task, cfg)
dt = time.perf_counter() - t0
print(f"{active_backend()}: 300 iterations in {dt:.2f}s ({dt / 300 * 1e3:.2f} ms/iter)")
"""


def end_to_end():
    sys.stdout.flush()  # keep parent/child output ordered when piped
    for backend in ("numpy", "numba"):
        env = dict(os.environ, NPLAB_KERNELS=backend)
        subprocess.run([sys.executable, "-c", _E2E_SNIPPET], env=env, check=True)


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--end-to-end", action="store_true")
    ap.add_argument("--repeats", type=int, default=200)
    args = ap.parse_args()
    micro(args.repeats)
    if args.end_to_end:
        print()
        end_to_end()


if __name__ == "__main__":
    main()
