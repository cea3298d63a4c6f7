"""Independent dense-linear-algebra backend.

Everything here is built from literal 2x2 letter matrices and numpy tensor
contractions, deliberately not from the symplectic phase formulas of the
exact layer, so agreement between the two routes is a meaningful check.

State vectors and density matrices index qubit 0 as the most significant bit:
basis state |b_0 b_1 ... b_{n-1}> has index sum_q b_q 2^(n-1-q), matching the
left-to-right reading of Pauli strings.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

import numpy as np

from .paulis import PauliOperator, PauliSum
from .stabilizer import ResourceBudgetError, StabilizerCode, validate

__all__ = [
    "DampingParameter",
    "FidelityResult",
    "pauli_matrix",
    "pauli_sum_matrix",
    "apply_pauli",
    "codewords",
    "matrix_element",
    "ad_channel",
    "apply_channel",
    "erasure_lemma_check",
    "transpose_recovery_kraus",
    "fidelity_experiment",
    "logical_class_matrix",
]

_I = np.eye(2, dtype=complex)
_X = np.array([[0, 1], [1, 0]], dtype=complex)
_Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
_Z = np.array([[1, 0], [0, -1]], dtype=complex)
_LETTER_MATS = {"I": _I, "X": _X, "Y": _Y, "Z": _Z}

DEFAULT_STATE_CAP = 14
DEFAULT_DENSITY_CAP = 10


@dataclass(frozen=True)
class DampingParameter:
    """Damping rate gamma of the energy-loss channel."""

    gamma: float

    def __post_init__(self):
        if not 0.0 <= self.gamma <= 1.0:
            raise ValueError(f"gamma must lie in [0, 1], got {self.gamma}")


def _as_gamma(gamma) -> float:
    return gamma.gamma if isinstance(gamma, DampingParameter) else DampingParameter(gamma).gamma


def pauli_matrix(p: PauliOperator, cap: int = 10) -> np.ndarray:
    """Dense 2^n x 2^n matrix of a signed Pauli, by literal Kronecker products."""
    if p.n > cap:
        raise ResourceBudgetError(f"dense matrix for n={p.n} exceeds cap {cap}")
    m = np.array([[1.0 + 0.0j]])
    for q in range(p.n):
        m = np.kron(m, _LETTER_MATS[p.letter(q)])
    return p.phase.value * m


def pauli_sum_matrix(ps: PauliSum, cap: int = 10) -> np.ndarray:
    """Dense matrix of an exact Pauli sum."""
    dim = 1 << ps.n
    out = np.zeros((dim, dim), dtype=complex)
    for (x, z), (re, im) in ps.items():
        out += complex(re, im) * pauli_matrix(PauliOperator(ps.n, x, z), cap=cap)
    return out


def apply_pauli(p: PauliOperator, vec: np.ndarray) -> np.ndarray:
    """Apply a Pauli to a state vector (or a stack of column vectors).

    Works letter by letter through tensor contractions; no 2^n x 2^n matrix
    is materialized.
    """
    n = p.n
    dim = 1 << n
    tail = vec.shape[1:]
    work = vec.reshape((2,) * n + tail)
    for q in range(n):
        letter = p.letter(q)
        if letter == "I":
            continue
        work = np.moveaxis(np.tensordot(_LETTER_MATS[letter], work, axes=([1], [q])), 0, q)
    return p.phase.value * work.reshape((dim,) + tail)


def codewords(code: StabilizerCode, cap: int = DEFAULT_STATE_CAP) -> list[np.ndarray]:
    """Orthonormal logical computational basis of the code space.

    |psi_0> is the joint +1 eigenstate of the signed generators and every
    logical Z; |psi_j> applies the logical X product for the bits of j in
    ascending index order.  The global phase is fixed by making the first
    nonvanishing amplitude of |psi_0> real and positive.
    """
    if code.n > cap:
        raise ResourceBudgetError(f"codewords for n={code.n} exceed cap {cap}")
    report = validate(code)
    if not report:
        raise ValueError(f"invalid code: {report.message}")
    n, k = code.n, code.k
    dim = 1 << n
    rng = np.random.default_rng(20100713)
    psi0 = None
    for _ in range(8):
        v = rng.standard_normal(dim) + 1j * rng.standard_normal(dim)
        for op in tuple(code.generators) + tuple(code.logical_z):
            v = 0.5 * (v + apply_pauli(op, v))
        norm = np.linalg.norm(v)
        if norm > 1e-8:
            psi0 = v / norm
            break
    if psi0 is None:
        raise ValueError("projector onto the code space annihilated every trial vector")
    lead = np.flatnonzero(np.abs(psi0) > 1e-8)[0]
    psi0 = psi0 * (psi0[lead].conjugate() / abs(psi0[lead]))

    states = []
    for j in range(1 << k):
        v = psi0
        for i in range(k):
            if (j >> i) & 1:
                v = apply_pauli(code.logical_x[i], v)
        states.append(v)
    gram = np.array([[np.vdot(a, b) for b in states] for a in states])
    if not np.allclose(gram, np.eye(1 << k), atol=1e-10):
        raise ValueError("codeword basis failed orthonormality")
    return states


def matrix_element(basis: list[np.ndarray], op: PauliSum) -> np.ndarray:
    """Matrix <psi_i| op |psi_j> over a state basis, term by term."""
    b_mat = np.column_stack(basis)
    if b_mat.shape[0] != (1 << op.n):
        raise ValueError(f"basis dimension {b_mat.shape[0]} does not match n={op.n}")
    kk = b_mat.shape[1]
    out = np.zeros((kk, kk), dtype=complex)
    for (x, z), (re, im) in op.items():
        wb = apply_pauli(PauliOperator(op.n, x, z), b_mat)
        out += complex(re, im) * (b_mat.conj().T @ wb)
    return out


def logical_class_matrix(amask: int, bmask: int, k: int) -> np.ndarray:
    """Matrix of the canonical logical representative L(a, b) in the codeword
    basis: entry (i, j) = (-1)^(b.j) delta_{i, j xor a}."""
    kk = 1 << k
    out = np.zeros((kk, kk), dtype=complex)
    for j in range(kk):
        out[j ^ amask, j] = -1.0 if (bmask & j).bit_count() & 1 else 1.0
    return out


# ---------------------------------------------------------------------------
# Channels.


def ad_channel(gamma) -> tuple[np.ndarray, np.ndarray]:
    """Kraus pair of the single-qubit damping channel at rate gamma."""
    g = _as_gamma(gamma)
    a0 = np.array([[1.0, 0.0], [0.0, np.sqrt(1.0 - g)]], dtype=complex)
    a1 = np.array([[0.0, np.sqrt(g)], [0.0, 0.0]], dtype=complex)
    return a0, a1


def _check_density(rho: np.ndarray, tol: float = 1e-10) -> int:
    dim = rho.shape[0]
    if rho.ndim != 2 or rho.shape[1] != dim or dim & (dim - 1):
        raise ValueError(f"expected a square 2^m density matrix, got shape {rho.shape}")
    if abs(np.trace(rho) - 1.0) > tol:
        raise ValueError(f"trace {np.trace(rho)} is not 1")
    if np.linalg.norm(rho - rho.conj().T) > tol * dim:
        raise ValueError("matrix is not Hermitian")
    return dim.bit_length() - 1


def apply_channel(rho: np.ndarray, gamma, qubits) -> np.ndarray:
    """Apply the damping channel independently to the given qubits of rho."""
    m = _check_density(rho)
    kraus = ad_channel(gamma)
    out = rho
    for q in sorted(set(qubits)):
        if not 0 <= q < m:
            raise ValueError(f"qubit {q} out of range for {m} qubits")
        out = _apply_kraus_1q(out, kraus, q, m)
    return out


def _apply_kraus_1q(rho: np.ndarray, kraus, q: int, m: int) -> np.ndarray:
    a = 1 << q
    b = 1 << (m - q - 1)
    r6 = rho.reshape(a, 2, b, a, 2, b)
    out = np.zeros_like(r6)
    for kmat in kraus:
        out += np.einsum("ix,axbcyd,jy->aibcjd", kmat, r6, kmat.conj())
    return out.reshape(rho.shape)


_INNER_CODE_INDICES = {
    "dualrail": (2, [1, 2]),  # span{|01>, |10>}
    "qutrit3": (3, [1, 2, 4]),  # span{|001>, |010>, |100>}
}


def erasure_lemma_check(gamma, rho_code: np.ndarray, inner: str = "dualrail") -> float:
    """Residual of the erasure-channel identity for one inner block.

    Applies the damping channel to every qubit of a state supported on the
    inner code and returns the Frobenius norm of
    E(rho) - (1-gamma) rho - gamma |0...0><0...0|.
    """
    g = _as_gamma(gamma)
    try:
        nq, idx = _INNER_CODE_INDICES[inner]
    except KeyError:
        raise ValueError(f"inner must be one of {sorted(_INNER_CODE_INDICES)}") from None
    m = _check_density(rho_code)
    if m != nq:
        raise ValueError(f"{inner} states live on {nq} qubits, got {m}")
    proj = np.zeros_like(rho_code)
    proj[np.ix_(idx, idx)] = rho_code[np.ix_(idx, idx)]
    if np.linalg.norm(proj - rho_code) > 1e-10:
        raise ValueError("state is not supported on the inner code space")
    out = apply_channel(rho_code, g, range(nq))
    target = (1.0 - g) * rho_code
    target[0, 0] += g
    return float(np.linalg.norm(out - target))


# ---------------------------------------------------------------------------
# Transpose-channel recovery and the fidelity experiment.


def _damping_product_on_columns(v: np.ndarray, g: float, damped: tuple[int, ...], n: int) -> np.ndarray:
    """Apply the Kraus product (A1 on `damped`, A0 elsewhere) to column vectors."""
    dim = v.shape[0]
    idx = np.arange(dim)
    wm = 0
    for q in damped:
        wm |= 1 << (n - q - 1)
    rest = (dim - 1) & ~wm
    ones_rest = np.bitwise_count(idx & rest)
    amp = np.sqrt(1.0 - g) ** ones_rest * np.sqrt(g) ** len(damped)
    sel = (idx & wm) == wm
    out = np.zeros_like(v)
    out[idx[sel] & ~wm] = (amp[sel][:, None] if v.ndim == 2 else amp[sel]) * v[sel]
    return out


def _recovery_vectors(v_code: np.ndarray, g: float, t: int, n: int):
    """Transpose-channel data: recovery column blocks W_j and the failure
    projector complement, built from the damping products of order <= t."""
    damp_sets = [w for r in range(t + 1) for w in combinations(range(n), r)]
    ms = [_damping_product_on_columns(v_code, g, w, n) for w in damp_sets]
    dim = v_code.shape[0]
    nmat = np.zeros((dim, dim), dtype=complex)
    for mcol in ms:
        nmat += mcol @ mcol.conj().T
    evals, evecs = np.linalg.eigh(nmat)
    keep = evals > max(evals.max(), 1e-300) * 1e-12
    inv_sqrt = (evecs[:, keep] / np.sqrt(evals[keep])) @ evecs[:, keep].conj().T
    support = evecs[:, keep] @ evecs[:, keep].conj().T
    ws = [inv_sqrt @ mcol for mcol in ms]
    return ws, support


def transpose_recovery_kraus(code: StabilizerCode, gamma, t: int, cap: int = 8) -> list[np.ndarray]:
    """Dense Kraus operators of the transpose-channel recovery (small n only).

    The final element projects onto the complement of the reachable space so
    the map is exactly trace preserving.
    """
    if code.n > cap:
        raise ResourceBudgetError(f"dense recovery for n={code.n} exceeds cap {cap}")
    g = _as_gamma(gamma)
    v_code = np.column_stack(codewords(code))
    ws, support = _recovery_vectors(v_code, g, t, code.n)
    kraus = [v_code @ w.conj().T for w in ws]
    kraus.append(np.eye(v_code.shape[0]) - support)
    return kraus


@dataclass(frozen=True)
class FidelityResult:
    """Entanglement-fidelity scaling measurement for one code."""

    gammas: tuple[float, ...]
    infidelities: tuple[float, ...]
    fitted_exponent: float
    fit_residual: float


def fidelity_experiment(
    code: StabilizerCode,
    t: int,
    gammas=None,
    cap: int = DEFAULT_DENSITY_CAP,
) -> FidelityResult:
    """Measure how the encode -> damp -> recover infidelity scales with gamma.

    Prepares the maximally entangled state between a k-qubit reference and the
    logical space, damps all n code qubits, applies the transpose-channel
    recovery built from damping products of order <= t, and fits the slope of
    log(1-F) against log(gamma) on the three smallest rates.
    """
    if gammas is None:
        gammas = np.geomspace(1e-3, 1e-2, 5)
    gammas = sorted(float(g) for g in gammas)
    if any(not 0.0 < g <= 0.05 for g in gammas):
        raise ValueError("damping rates must lie in (0, 0.05] for a leading-order fit")
    if code.n > cap:
        raise ResourceBudgetError(f"density experiment for n={code.n} exceeds cap {cap}")
    n, k = code.n, code.k
    kk = 1 << k
    v_code = np.column_stack(codewords(code))
    phi = v_code.T.reshape(-1) / np.sqrt(kk)
    rho0 = np.outer(phi, phi.conj())

    infids = []
    for g in gammas:
        rho = apply_channel(rho0, g, range(k, k + n))
        ws, support = _recovery_vectors(v_code, g, t, n)
        fail_cols = v_code - support @ v_code
        # branch vector for R_j = V W_j^dag is (I (x) W_j V^dag)|Phi>, which
        # collapses to the W_j columns stacked per reference index.
        branch_vecs = [w.T.reshape(-1) / np.sqrt(kk) for w in ws]
        branch_vecs.append(fail_cols.T.reshape(-1) / np.sqrt(kk))
        stack = np.column_stack(branch_vecs)
        fid = float(np.real(np.sum(stack.conj() * (rho @ stack))))
        infids.append(max(1.0 - fid, 0.0))

    if all(v < 1e-14 for v in infids):
        raise ValueError("all infidelities below 1e-14; exponent fit is degenerate")
    pts = min(3, len(gammas))
    lg = np.log(np.asarray(gammas[:pts]))
    li = np.log(np.maximum(np.asarray(infids[:pts]), 1e-300))
    slope, intercept = np.polyfit(lg, li, 1)
    resid = float(np.sqrt(np.mean((slope * lg + intercept - li) ** 2)))
    return FidelityResult(
        gammas=tuple(gammas),
        infidelities=tuple(infids),
        fitted_exponent=float(slope),
        fit_residual=resid,
    )
