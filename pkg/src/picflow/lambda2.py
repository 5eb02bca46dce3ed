"""Conventions and block algebra for curvature operators on Lambda^2(R^4).

Fixed conventions (everything downstream depends on these):

* Inner product on 2-forms: <u^v, x^y> = <u,x><v,y> - <u,y><v,x>, so the
  raw basis e1^e2, e1^e3, e1^e4, e2^e3, e2^e4, e3^e4 is orthonormal and the
  unit round 4-sphere is the identity operator.

* Scalar curvature: S = 2 tr(matrix).  For the unit sphere tr = 6, S = 12.

* Block basis (self-dual trio, then anti-self-dual trio):

      w1+ = (e12 + e34)/sqrt2   w1- = (e34 - e12)/sqrt2
      w2+ = (e13 - e24)/sqrt2   w2- = -(e13 + e24)/sqrt2
      w3+ = (e14 + e23)/sqrt2   w3- = (e14 - e23)/sqrt2

  The sign pattern of the anti-self-dual trio is calibrated once so that
  (i) sum(lambda_i^3) = 24 det B holds on random operators and (ii) the
  round-cylinder product metric S^3 x R comes out as A = C = (1/8) I,
  B = -(1/8) I.  Both are verified by the test suite; flipping any single
  sign breaks one of the two anchors.

* An operator is stored as its 6x6 symmetric matrix in the block basis,

      R = [[A, B], [B^t, C]],

  with A acting on the self-dual part and C on the anti-self-dual part.
  The first Bianchi identity is equivalent to tr A = tr C (= S/4).

* |Rm|^2 = sum over all four indices of R_ijkl^2 = 4 ||matrix||_F^2 (each
  unordered index pair appears four times).  Checked against a brute-force
  index summation in reference.py.

All operations here are pure functions over immutable values.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from enum import Enum
from typing import Optional

import numpy as np

from .errors import BianchiViolation, NonSymmetric

RAW_PAIRS = ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3))

SYM_TOL = 1e-12
BIANCHI_TOL = 1e-10


def _basis_change():
    w = np.zeros((6, 6))
    w[:, 0] = (1, 0, 0, 0, 0, 1)
    w[:, 1] = (0, 1, 0, 0, -1, 0)
    w[:, 2] = (0, 0, 1, 1, 0, 0)
    w[:, 3] = (-1, 0, 0, 0, 0, 1)
    w[:, 4] = (0, -1, 0, 0, -1, 0)
    w[:, 5] = (0, 0, 1, -1, 0, 0)
    return w / np.sqrt(2.0)


# Columns of W are the block-basis 2-forms in raw coordinates.
W = _basis_change()
W.setflags(write=False)

BASIS_TAG = "sd-asd/cylinder-calibrated"


def block_to_raw(matrix):
    """Matrix of the same operator in the raw wedge basis."""
    return W @ np.asarray(matrix) @ W.T


def raw_to_block(matrix):
    return W.T @ np.asarray(matrix) @ W


def _ricci_map():
    """(4,4,6,6) tensor T with Ric_ik = sum_pq T[i,k,p,q] * matrix[p,q].

    Built from the definition Ric_ik = sum_j R_ijkj, reading curvature
    components off the raw-basis matrix with antisymmetry signs.
    """
    pair_index = {p: n for n, p in enumerate(RAW_PAIRS)}

    def comp(mat_raw, i, j, k, l):
        if i == j or k == l:
            return 0.0
        si = 1.0 if i < j else -1.0
        sk = 1.0 if k < l else -1.0
        p = pair_index[(min(i, j), max(i, j))]
        q = pair_index[(min(k, l), max(k, l))]
        return si * sk * mat_raw[p, q]

    t = np.zeros((4, 4, 6, 6))
    for p in range(6):
        for q in range(6):
            e = np.zeros((6, 6))
            e[p, q] = 1.0
            for i in range(4):
                for k in range(4):
                    t[i, k, p, q] = sum(comp(e, i, j, k, j) for j in range(4))
    # fold the raw<->block change of basis in once
    return np.einsum("ikpq,pa,qb->ikab", t, W, W)


RIC_FROM_BLOCK = _ricci_map()
RIC_FROM_BLOCK.setflags(write=False)


def _freeze(a):
    a = np.array(a, dtype=float)
    a.setflags(write=False)
    return a


@dataclass(frozen=True)
class CurvatureOperator:
    """Symmetric operator on Lambda^2(R^4) in the calibrated block basis."""

    matrix: np.ndarray
    basis: str = BASIS_TAG

    @property
    def S(self) -> float:
        return 2.0 * float(np.trace(self.matrix))

    def scaled(self, t: float) -> "CurvatureOperator":
        return CurvatureOperator(_freeze(t * self.matrix))


@dataclass(frozen=True)
class BlockForm:
    A: np.ndarray
    B: np.ndarray
    C: np.ndarray


@dataclass(frozen=True)
class RicciData:
    ric: np.ndarray
    S: float
    ric0: np.ndarray
    lam: np.ndarray  # eigenvalues of the traceless part, ascending


@dataclass(frozen=True)
class EigenData:
    """Scalar and eigenvalue data in the A,C-diagonalizing basis."""

    S: float
    A_eigs: np.ndarray      # ascending
    C_eigs: np.ndarray
    a: np.ndarray           # traceless: A_i = S/12 + a_i
    c: np.ndarray
    B_singular: np.ndarray  # ascending, nonnegative
    b_sq_rows: np.ndarray   # row square-sums of B in the diagonalizing basis
    b_sq_cols: np.ndarray
    det_B: float
    lam: np.ndarray         # traceless-Ricci eigenvalues, ascending
    b: Optional[float]      # signed, b^3 = det B; set only when B B^t is isotropic
    B_diag: np.ndarray = field(repr=False, default=None)  # B in that basis


class PicClass(Enum):
    PIC = "PIC"
    NONNEG_IC = "NonnegIC"
    NEITHER = "Neither"


def _check_symmetric(m, name, tol=SYM_TOL):
    m = np.asarray(m, dtype=float)
    scale = 1.0 + np.abs(m).max()
    if np.abs(m - m.T).max() > tol * scale:
        raise NonSymmetric(f"{name} is asymmetric beyond {tol} relative tolerance")
    return 0.5 * (m + m.T)


def from_blocks(A, B, C) -> CurvatureOperator:
    """Assemble [[A,B],[B^t,C]], validating symmetry and the Bianchi trace."""
    A = _check_symmetric(A, "A")
    C = _check_symmetric(C, "C")
    B = np.asarray(B, dtype=float)
    tra, trc = np.trace(A), np.trace(C)
    if abs(tra - trc) > BIANCHI_TOL * (1.0 + abs(tra) + abs(trc)):
        raise BianchiViolation(f"tr A = {tra} but tr C = {trc}")
    m = np.zeros((6, 6))
    m[:3, :3] = A
    m[3:, 3:] = C
    m[:3, 3:] = B
    m[3:, :3] = B.T
    return CurvatureOperator(_freeze(m))


def operator_from_matrix(matrix) -> CurvatureOperator:
    """Validate a raw 6x6 block-basis matrix (symmetry + Bianchi)."""
    m = _check_symmetric(matrix, "matrix")
    return from_blocks(m[:3, :3], m[:3, 3:], m[3:, 3:])


def to_blocks(R: CurvatureOperator) -> BlockForm:
    m = R.matrix
    return BlockForm(_freeze(m[:3, :3]), _freeze(m[:3, 3:]), _freeze(m[3:, 3:]))


def ricci_of(R: CurvatureOperator) -> RicciData:
    """Ricci tensor Ric_ik = sum_j R_ijkj under the fixed conventions."""
    ric = np.einsum("ikab,ab->ik", RIC_FROM_BLOCK, R.matrix)
    S = float(np.trace(ric))
    ric0 = ric - (S / 4.0) * np.eye(4)
    lam = np.linalg.eigvalsh(ric0)
    return RicciData(_freeze(ric), S, _freeze(ric0), _freeze(lam))


def ricci_batch(matrices):
    """(n,4,4) Ricci tensors for a stack of block-basis matrices."""
    return np.einsum("ikab,nab->nik", RIC_FROM_BLOCK, matrices)


ISOTROPY_TOL = 1e-10


def eigen_data(R: CurvatureOperator) -> EigenData:
    """Diagonalize the traceless parts of A and C and re-express B there.

    The two rotations are taken in SO(3) (a column sign is flipped when the
    eigenvector matrix has determinant -1) so det B is preserved.  Repeated
    eigenvalues are allowed; every downstream quantity is a symmetric
    function of the tied entries.
    """
    m = R.matrix
    A, B, C = m[:3, :3], m[:3, 3:], m[3:, 3:]
    S = 2.0 * float(np.trace(m))
    ea, qa = np.linalg.eigh(A)
    ec, qc = np.linalg.eigh(C)
    if np.linalg.det(qa) < 0:
        qa = qa.copy()
        qa[:, 0] *= -1.0
    if np.linalg.det(qc) < 0:
        qc = qc.copy()
        qc[:, 0] *= -1.0
    bd = qa.T @ B @ qc
    det_b = float(np.linalg.det(bd))
    sing = np.linalg.svd(bd, compute_uv=False)[::-1].copy()  # ascending
    bbt = bd @ bd.T
    norm_sq = float(np.sum(bd * bd))
    iso_defect = np.abs(bbt - (norm_sq / 3.0) * np.eye(3)).max()
    b = float(np.cbrt(det_b)) if iso_defect <= ISOTROPY_TOL * (1.0 + norm_sq) else None
    ric = ricci_of(R)
    return EigenData(
        S=S,
        A_eigs=_freeze(ea),
        C_eigs=_freeze(ec),
        a=_freeze(ea - S / 12.0),
        c=_freeze(ec - S / 12.0),
        B_singular=_freeze(sing),
        b_sq_rows=_freeze((bd ** 2).sum(axis=1)),
        b_sq_cols=_freeze((bd ** 2).sum(axis=0)),
        det_B=det_b,
        lam=ric.lam,
        b=b,
        B_diag=_freeze(bd),
    )


def pic_quantities(R: CurvatureOperator):
    """(psi1, psi2) = (A1+A2, C1+C2), the isotropic-curvature margins."""
    m = R.matrix
    ea = np.linalg.eigvalsh(m[:3, :3])
    ec = np.linalg.eigvalsh(m[3:, 3:])
    return float(ea[0] + ea[1]), float(ec[0] + ec[1])


def pic_class(R: CurvatureOperator, tol: float = None) -> PicClass:
    """Classify by the sign of min(psi1, psi2) with an S-scaled tolerance."""
    psi1, psi2 = pic_quantities(R)
    if tol is None:
        tol = 1e-10 * (1.0 + abs(R.S))
    lo = min(psi1, psi2)
    if lo > tol:
        return PicClass.PIC
    if lo >= -tol:
        return PicClass.NONNEG_IC
    return PicClass.NEITHER


def induced_rotation(Q):
    """The 6x6 block-basis rotation induced by Q in SO(4) acting on R^4.

    Lambda^2(Q) maps e_i^e_j to Qe_i ^ Qe_j; for orientation-preserving Q it
    is block-diagonal (SO(3) x SO(3)) in the block basis.
    """
    Q = np.asarray(Q, dtype=float)
    raw = np.zeros((6, 6))
    for col, (i, j) in enumerate(RAW_PAIRS):
        u, v = Q[:, i], Q[:, j]
        for row, (k, l) in enumerate(RAW_PAIRS):
            raw[row, col] = u[k] * v[l] - u[l] * v[k]
    return W.T @ raw @ W


def rotate_operator(R: CurvatureOperator, Q) -> CurvatureOperator:
    """Conjugate by the frame change Q in SO(4)."""
    G = induced_rotation(Q)
    return operator_from_matrix(G @ R.matrix @ G.T)


def rm2_norm(R: CurvatureOperator) -> float:
    """|Rm|^2 = 4 ||matrix||_F^2."""
    return 4.0 * float(np.sum(R.matrix * R.matrix))


# ---------------------------------------------------------------------------
# JSON operator format: {"A": [[..]x3], "B": [[..]], "C": [[..]]} row-major,
# or {"matrix": [[..]x6]} in the block basis.

def parse_operator(obj) -> CurvatureOperator:
    if isinstance(obj, (str, bytes)):
        obj = json.loads(obj)
    if "matrix" in obj:
        m = np.asarray(obj["matrix"], dtype=float)
        if m.shape != (6, 6):
            raise ValueError(f"matrix must be 6x6, got {m.shape}")
        return operator_from_matrix(m)
    try:
        A, B, C = obj["A"], obj["B"], obj["C"]
    except KeyError as e:
        raise ValueError("operator JSON needs either 'matrix' or 'A','B','C'") from e
    A, B, C = (np.asarray(x, dtype=float) for x in (A, B, C))
    for name, x in (("A", A), ("B", B), ("C", C)):
        if x.shape != (3, 3):
            raise ValueError(f"block {name} must be 3x3, got {x.shape}")
    return from_blocks(A, B, C)


def serialize_operator(R: CurvatureOperator) -> dict:
    blocks = to_blocks(R)
    return {
        "A": blocks.A.tolist(),
        "B": blocks.B.tolist(),
        "C": blocks.C.tolist(),
    }
