"""Brute-force reference implementations.

These are the slow, definition-level computations used as independent
oracles: the full rank-4 curvature tensor, Ricci and |Rm|^2 by literal
index summation, and the Lie-algebra structure constants of so(4) under
the identification e_i^e_j -> (x -> <e_j,x>e_i - <e_i,x>e_j).

Fast paths elsewhere must agree with these on random inputs; the suites
and tests enforce that.
"""

import numpy as np

from .lambda2 import RAW_PAIRS, W, block_to_raw


def _expansion_matrix():
    """(256, 36) map from raw-basis matrix entries to the flat R_ijkl tensor."""
    exp = np.zeros((256, 36))
    for p, (i, j) in enumerate(RAW_PAIRS):
        for q, (k, l) in enumerate(RAW_PAIRS):
            col = 6 * p + q
            for (a, b, sa) in ((i, j, 1.0), (j, i, -1.0)):
                for (c, d, sc) in ((k, l, 1.0), (l, k, -1.0)):
                    exp[((a * 4 + b) * 4 + c) * 4 + d, col] = sa * sc
    return exp


_EXPAND = _expansion_matrix()


def r4_tensor(R):
    """Full curvature tensor R_ijkl, shape (4,4,4,4)."""
    raw = block_to_raw(R.matrix)
    return (_EXPAND @ raw.reshape(36)).reshape(4, 4, 4, 4)


def rm2_bruteforce(R) -> float:
    """Sum of R_ijkl^2 over all 256 index combinations."""
    t = r4_tensor(R)
    return float(np.sum(t * t))


def rm2_bruteforce_batch(matrices):
    raw = np.einsum("pa,nab,qb->npq", W, matrices, W).reshape(-1, 36)
    flat = raw @ _EXPAND.T
    return np.einsum("ni,ni->n", flat, flat)


def ricci_bruteforce(R):
    """Ric_ik = sum_j R_ijkj from the expanded tensor."""
    return np.einsum("ijkj->ik", r4_tensor(R))


def _skew(i, j):
    m = np.zeros((4, 4))
    m[i, j] = 1.0
    m[j, i] = -1.0
    return m


def structure_constants():
    """c[a,b,g] = <[w_a, w_b], w_g> for the block basis of Lambda^2 ~ so(4).

    The bracket is taken on the skew-endomorphism images of the basis
    2-forms; the result is mapped back to Lambda^2 and paired in the wedge
    inner product.  c is totally antisymmetric and block-diagonal: the
    self-dual and anti-self-dual trios each span an so(3) factor and the
    factors commute.
    """
    l_raw = [_skew(i, j) for (i, j) in RAW_PAIRS]
    l_w = [sum(W[p, k] * l_raw[p] for p in range(6)) for k in range(6)]
    c = np.zeros((6, 6, 6))
    for a in range(6):
        for b in range(6):
            br = l_w[a] @ l_w[b] - l_w[b] @ l_w[a]
            coeff = np.array([br[i, j] for (i, j) in RAW_PAIRS])
            c[a, b, :] = W.T @ coeff
    return c


STRUCTURE_C = structure_constants()
STRUCTURE_C.setflags(write=False)


def sharp_structconst(matrix):
    """(R#)_ab = 1/2 c_agd c_bez R_ge R_dz with the structure constants above."""
    m = np.asarray(matrix, dtype=float)
    x = np.einsum("agd,ge->aed", STRUCTURE_C, m)
    z = np.einsum("bez,dz->bed", STRUCTURE_C, m)
    return 0.5 * np.einsum("aed,bed->ab", x, z)
