"""Compare the compiled permutation kernels against the pure-Python twins.

Micro-benchmarks compose/invert directly; the macro benchmark re-runs the
heaviest end-to-end workload (the 11-square orbit with level 27720) in a
subprocess with ORIGAMI_VEECH_PURE=1 so the backend choice happens at
import time.

Usage: python3 benchmarks/bench_kernels.py
"""

import os
import random
import subprocess
import sys
import time
from array import array

from origami_veech import _kernel_py
from origami_veech import kernel

try:
    from origami_veech import _kernel_cy
except ImportError:
    _kernel_cy = None

MACRO = """
import time
from origami_veech import kernel
from origami_veech.surface import L
from origami_veech.action import orbit, veech_generators
from origami_veech.analysis import cusp_data
from origami_veech.congruence import deficiency

t0 = time.perf_counter()
table = orbit(L(2, 10))
vg = veech_generators(table)
cd = cusp_data(table)
res = deficiency(vg, cd.level)
assert (res.d, res.e, res.f) == (225, 3, 75)
print("%s %.3f" % (kernel.backend(), time.perf_counter() - t0))
"""


def micro(impl, n=340, reps=20000):
    rng = random.Random(1)
    img = list(range(n))
    rng.shuffle(img)
    p = array("i", img)
    rng.shuffle(img)
    q = array("i", img)
    t0 = time.perf_counter()
    for _ in range(reps):
        impl.compose(p, q)
    t_compose = time.perf_counter() - t0
    t0 = time.perf_counter()
    for _ in range(reps):
        impl.invert(p)
    t_invert = time.perf_counter() - t0
    return t_compose, t_invert


def macro(pure):
    env = dict(os.environ)
    if pure:
        env["ORIGAMI_VEECH_PURE"] = "1"
    else:
        env.pop("ORIGAMI_VEECH_PURE", None)
    out = subprocess.run(
        [sys.executable, "-c", MACRO], env=env, capture_output=True, text=True
    )
    if out.returncode != 0:
        raise RuntimeError(out.stderr)
    return out.stdout.strip()


def main():
    print("active backend: %s" % kernel.backend())
    tc, ti = micro(_kernel_py)
    print("pure python  compose %.3fs  invert %.3fs  (20000 ops, n=340)" % (tc, ti))
    if _kernel_cy is not None:
        cc, ci = micro(_kernel_cy)
        print("cython       compose %.3fs  invert %.3fs  (speedup %.1fx / %.1fx)"
              % (cc, ci, tc / cc, ti / ci))
    else:
        print("cython       not built")
    print("macro: 11-square orbit, level 27720, full deficiency pipeline")
    print("  %s" % macro(pure=True))
    if _kernel_cy is not None:
        print("  %s" % macro(pure=False))


if __name__ == "__main__":
    main()
