"""Pure-Python permutation kernels.

Fallback twin of the compiled extension ``_kernel_cy``.  Permutations are
``array('i')`` buffers of 0-based images; these two functions are the inner
loop of the Schreier-Sims machinery and of orbit/transversal construction.
"""

from array import array


def compose(p, q):
    """Return r with r[i] = p[q[i]] (q applied first)."""
    return array("i", [p[j] for j in q])


def invert(p):
    """Return the inverse permutation of p."""
    out = array("i", bytes(4 * len(p)))
    for i, j in enumerate(p):
        out[j] = i
    return out
