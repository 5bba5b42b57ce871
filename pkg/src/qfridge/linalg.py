"""Dense complex matrix kernel for three-qubit (dimension 8) objects.

Everything here is plain numpy on small dense arrays: tensor products,
partial traces, commutators, Hilbert-Schmidt inner products, and an
SVD-based null-space solver for the 64x64 vectorized generator.

Basis convention (inherited by every other module): the computational basis
of the three qubits (c, r, h) is ordered with c most significant, so the
basis index is k = 4c + 2r + h.
"""

import numpy as np

from .errors import DegenerateKernelError

# index of each subsystem in the (c, r, h) ordering
SUBSYSTEMS = {"c": 0, "r": 1, "h": 2}

_MAX_DIM = 64


# ----------------------------------------------------------------------
# products and traces
# ----------------------------------------------------------------------

def tensor(A, B):
    """Kronecker product with the left factor most significant.

    Consistent with the k = 4c + 2r + h index convention:
    tensor(X_c, tensor(X_r, X_h)) puts X_c on the most significant qubit.
    """
    A = np.asarray(A)
    B = np.asarray(B)
    if A.ndim != 2 or A.shape[0] != A.shape[1]:
        raise ValueError("tensor: left operand must be square")
    if B.ndim != 2 or B.shape[0] != B.shape[1]:
        raise ValueError("tensor: right operand must be square")
    if A.shape[0] * B.shape[0] > _MAX_DIM:
        raise ValueError("tensor: result dimension exceeds %d" % _MAX_DIM)
    return np.kron(A, B)


def partial_trace(rho, which):
    """Trace out one qubit of an 8x8 operator.

    which : 'c', 'r' or 'h'. The remaining two qubits keep their relative
    order from (c, r, h), e.g. tracing 'r' leaves the (c, h) pair.
    Linear and trace-preserving.
    """
    rho = np.asarray(rho)
    if rho.shape != (8, 8):
        raise ValueError("partial_trace: expected an 8x8 matrix")
    if which not in SUBSYSTEMS:
        raise ValueError("partial_trace: subsystem must be one of 'c', 'r', 'h'")
    t = rho.reshape(2, 2, 2, 2, 2, 2)
    i = SUBSYSTEMS[which]
    # contract the row/column indices of the traced qubit
    spec = ["iabicd", "aibcid", "abicdi"][i]
    return np.einsum(spec + "->abcd", t).reshape(4, 4)


def commutator(A, B):
    """[A, B] = AB - BA."""
    A = np.asarray(A)
    B = np.asarray(B)
    if A.shape != B.shape:
        raise ValueError("commutator: dimension mismatch")
    return A @ B - B @ A


def hs_inner(A, B):
    """Hilbert-Schmidt inner product tr(A^dag B)."""
    A = np.asarray(A)
    B = np.asarray(B)
    if A.shape != B.shape:
        raise ValueError("hs_inner: dimension mismatch")
    return np.trace(A.conj().T @ B)


def hs_norm(A):
    """Hilbert-Schmidt (Frobenius) norm sqrt(tr(A^dag A)).

    For anti-Hermitian A this equals sqrt(-tr(A^2)); the norm reading keeps
    the generator-norm well defined when the argument is a mix of Hermitian
    and anti-Hermitian parts.
    """
    return float(np.linalg.norm(np.asarray(A)))


def trace_product(A, B):
    """tr(AB), no conjugation."""
    A = np.asarray(A)
    B = np.asarray(B)
    if A.shape != B.shape:
        raise ValueError("trace_product: dimension mismatch")
    # tr(AB) = sum_ij A_ij B_ji
    return np.sum(A * B.T)


def trace_distance(A, B):
    """Trace distance (1/2)||A - B||_1 between two Hermitian matrices."""
    ev = np.linalg.eigvalsh(np.asarray(A) - np.asarray(B))
    return 0.5 * float(np.abs(ev).sum())


# ----------------------------------------------------------------------
# kernel of the vectorized generator
# ----------------------------------------------------------------------

def null_space_1d(L, rel_tol=1e-10, gap_tol=1e-4):
    """One-dimensional kernel of a 64x64 superoperator, as a density matrix.

    SVD-based: the smallest singular value must be <= rel_tol * s_max and
    the second smallest >= gap_tol * s_max, otherwise the kernel is not
    unambiguously one-dimensional and a degeneracy error is raised.

    Returns the kernel vector reshaped to 8x8, normalized to unit trace and
    Hermitized. Postconditions checked: Hermiticity residual <= 1e-12,
    minimum eigenvalue >= -1e-10.
    """
    L = np.asarray(L, dtype=complex)
    n = L.shape[0]
    d = int(round(np.sqrt(n)))
    if L.shape != (n, n) or d * d != n:
        raise ValueError("null_space_1d: expected a square matrix of square dimension")

    _, s, vh = np.linalg.svd(L)
    smax = s[0] if s[0] > 0 else 1.0
    if s[-1] > rel_tol * smax:
        raise DegenerateKernelError(
            "no null vector: smallest singular value %.3e > %.3e relative"
            % (s[-1] / smax, rel_tol))
    if s[-2] < gap_tol * smax:
        raise DegenerateKernelError(
            "kernel dimension > 1: second singular value %.3e < %.3e relative"
            % (s[-2] / smax, gap_tol))

    rho = vh[-1].conj().reshape(d, d)
    tr = np.trace(rho)
    if abs(tr) < 1e-12:
        raise DegenerateKernelError("null vector is traceless; not a state")
    rho = rho / tr

    herm_res = np.linalg.norm(rho - rho.conj().T)
    if herm_res > 1e-12:
        raise DegenerateKernelError(
            "null vector not Hermitian after trace normalization (residual %.3e)"
            % herm_res)
    rho = 0.5 * (rho + rho.conj().T)

    min_eig = float(np.linalg.eigvalsh(rho).min())
    if min_eig < -1e-10:
        raise DegenerateKernelError(
            "null vector has negative eigenvalue %.3e" % min_eig)
    return rho
