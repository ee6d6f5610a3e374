"""Brute-force two-mode Fock-space machinery.

Coherent vectors, photon addition, partial trace, a cyclic Jacobi
eigensolver for Hermitian matrices, von Neumann entropy, and a numeric
Husimi function.  Everything works on explicitly truncated coefficient
arrays so the closed-form results elsewhere in the package can be checked
against direct linear algebra with no shared code path.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import (
    DegenerateStateError,
    DomainError,
    NumericalConsistencyError,
    TruncationError,
)
from .params import Family, PaecsSpec, TruncationPolicy, recommended_dim


@dataclass
class TwoModeFockState:
    """Coefficient matrix of a two-mode pure state.

    ``coeff[p, q]`` multiplies the number state |p> in mode a and |q> in
    mode b.  States may be held unnormalized between operator applications;
    ``raw_norm2`` preserves the squared norm a builder saw before it
    normalized, which is the brute-force value of the normalization
    constant.
    """

    coeff: np.ndarray
    raw_norm2: float | None = field(default=None, compare=False)

    def __post_init__(self) -> None:
        arr = np.asarray(self.coeff, dtype=complex)
        if arr.ndim != 2 or arr.shape[0] < 1 or arr.shape[1] < 1:
            raise DomainError("coeff must be a 2-D matrix")
        if not np.all(np.isfinite(arr.real)) or not np.all(np.isfinite(arr.imag)):
            raise DomainError("coeff entries must be finite")
        self.coeff = arr

    @property
    def dim_a(self) -> int:
        return self.coeff.shape[0]

    @property
    def dim_b(self) -> int:
        return self.coeff.shape[1]

    def norm2(self) -> float:
        return float(np.sum(np.abs(self.coeff) ** 2))

    def normalized(self) -> "TwoModeFockState":
        n2 = self.norm2()
        if n2 <= 0.0 or not math.isfinite(n2):
            raise DegenerateStateError("cannot normalize a zero-norm state")
        return TwoModeFockState(self.coeff / math.sqrt(n2), raw_norm2=n2)

    def tail_mass(self) -> float:
        """Probability weight in the last two rows plus last two columns."""
        prob = np.abs(self.coeff) ** 2
        total = float(prob.sum())
        if total == 0.0:
            return 0.0
        tail = float(prob[-2:, :].sum() + prob[:, -2:].sum())
        return tail / total


def coherent_fock(alpha: complex, dim: int) -> np.ndarray:
    """Coherent state |alpha> truncated to the first `dim` number states.

    c_p = exp(-|alpha|^2 / 2) alpha^p / sqrt(p!), evaluated through logs so
    large p cannot overflow the factorial.
    """
    if dim < 1:
        raise DomainError("dim must be >= 1")
    alpha = complex(alpha)
    out = np.zeros(dim, dtype=complex)
    mag2 = abs(alpha) ** 2
    if alpha == 0:
        out[0] = 1.0
        return out
    phase = alpha / abs(alpha)
    log_mag = math.log(abs(alpha))
    p = np.arange(dim)
    log_amp = -0.5 * mag2 + p * log_mag - 0.5 * np.array(
        [math.lgamma(k + 1) for k in range(dim)]
    )
    out = np.exp(log_amp) * phase**p
    return out


def apply_creation(state: TwoModeFockState, mode: str, count: int) -> TwoModeFockState:
    """Apply count creation operators to one mode; result is not normalized.

    The array grows by `count` along the affected mode so no amplitude is
    dropped; the squared norm after application is the brute-force
    normalization oracle.
    """
    if count < 0:
        raise DomainError("count must be >= 0")
    if mode not in ("a", "b"):
        raise DomainError("mode must be 'a' or 'b'")
    if count == 0:
        return TwoModeFockState(state.coeff.copy())
    c = state.coeff
    if mode == "a":
        dim = c.shape[0]
        out = np.zeros((dim + count, c.shape[1]), dtype=complex)
        weights = np.exp(
            0.5
            * np.array(
                [
                    math.lgamma(p + count + 1) - math.lgamma(p + 1)
                    for p in range(dim)
                ]
            )
        )
        out[count:, :] = weights[:, None] * c
    else:
        dim = c.shape[1]
        out = np.zeros((c.shape[0], dim + count), dtype=complex)
        weights = np.exp(
            0.5
            * np.array(
                [
                    math.lgamma(q + count + 1) - math.lgamma(q + 1)
                    for q in range(dim)
                ]
            )
        )
        out[:, count:] = weights[None, :] * c
    return TwoModeFockState(out)


def _branch_pair(family: Family, alpha: complex) -> tuple[complex, complex]:
    """Mode-b amplitudes of the two superposed branches (mode a gets +/- alpha)."""
    if family.kind == 1:
        return alpha, -alpha
    return -alpha, alpha


def _build_at_dim(spec: PaecsSpec, dim_a: int, dim_b: int) -> TwoModeFockState:
    base_a = dim_a - spec.m
    base_b = dim_b - spec.n
    ca_plus = coherent_fock(spec.alpha, base_a)
    ca_minus = coherent_fock(-spec.alpha, base_a)
    b_first, b_second = _branch_pair(spec.family, spec.alpha)
    cb_first = coherent_fock(b_first, base_b)
    cb_second = coherent_fock(b_second, base_b)
    raw = np.outer(ca_plus, cb_first) + spec.family.sign * np.outer(
        ca_minus, cb_second
    )
    state = TwoModeFockState(raw)
    state = apply_creation(state, "a", spec.m)
    state = apply_creation(state, "b", spec.n)
    n2 = state.norm2()
    if n2 < 1e-280:
        raise DegenerateStateError(
            f"superposition norm underflowed for {spec.family.value} at "
            f"alpha = {spec.alpha}"
        )
    return state.normalized()


def build_paecs_numeric(
    spec: PaecsSpec, policy: TruncationPolicy | None = None
) -> TwoModeFockState:
    """Construct the photon-added entangled coherent state by direct linear algebra.

    Superposes the two coherent product branches with the family sign,
    applies the creation operators, and normalizes.  The per-mode cutoff
    starts at max(policy.base_dim, recommended) and doubles until the tail
    mass clears policy.tail_tol.
    """
    if policy is None:
        policy = TruncationPolicy()
    if policy.max_dim < spec.m + 2 or policy.max_dim < spec.n + 2:
        raise TruncationError(
            f"max_dim {policy.max_dim} cannot hold photon additions "
            f"(m, n) = ({spec.m}, {spec.n})"
        )
    dim_a = min(
        policy.max_dim,
        max(policy.base_dim, recommended_dim(spec.alpha, spec.m), spec.m + 2),
    )
    dim_b = min(
        policy.max_dim,
        max(policy.base_dim, recommended_dim(spec.alpha, spec.n), spec.n + 2),
    )
    while True:
        state = _build_at_dim(spec, dim_a, dim_b)
        if state.tail_mass() < policy.tail_tol:
            return state
        if dim_a >= policy.max_dim and dim_b >= policy.max_dim:
            raise TruncationError(
                f"tail mass {state.tail_mass():.3e} still above "
                f"{policy.tail_tol:.1e} at max_dim {policy.max_dim}"
            )
        dim_a = min(2 * dim_a, policy.max_dim)
        dim_b = min(2 * dim_b, policy.max_dim)


@dataclass
class DensityMatrix:
    """Hermitian, unit-trace matrix with validation at construction."""

    matrix: np.ndarray

    def __post_init__(self) -> None:
        arr = np.asarray(self.matrix, dtype=complex)
        if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
            raise DomainError("density matrix must be square")
        if not np.all(np.isfinite(arr.real)) or not np.all(np.isfinite(arr.imag)):
            raise DomainError("density matrix entries must be finite")
        herm_defect = float(np.max(np.abs(arr - arr.conj().T)))
        if herm_defect > 1e-12:
            raise NumericalConsistencyError(
                f"matrix not Hermitian: max |M - M^H| = {herm_defect:.3e}"
            )
        trace = complex(np.trace(arr))
        if abs(trace - 1.0) > 1e-10:
            raise NumericalConsistencyError(
                f"trace deviates from 1 by {abs(trace - 1.0):.3e}"
            )
        self.matrix = arr

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]


def partial_trace_b(state: TwoModeFockState) -> DensityMatrix:
    """Reduced density matrix of mode b: rho[q, q'] = sum_p c[p,q] conj(c[p,q'])."""
    c = state.coeff
    rho = c.T @ c.conj()
    return DensityMatrix(rho)


def hermitian_eigensystem(
    matrix: np.ndarray,
    tol: float = 1e-14,
    max_sweeps: int = 100,
) -> tuple[np.ndarray, np.ndarray]:
    """Eigenvalues (descending) and eigenvectors of a Hermitian matrix.

    Cyclic Jacobi: each off-diagonal entry A[p, q] = r e^(i theta) is zeroed
    by the unitary that is the real Jacobi rotation for [[a, r], [r, b]]
    composed with the phase diag(1, e^(-i theta)).  Sweeps repeat until the
    off-diagonal Frobenius mass falls below `tol` (relative to the matrix
    scale when that exceeds one).
    """
    a = np.array(matrix, dtype=complex)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise DomainError("matrix must be square")
    n = a.shape[0]
    herm_defect = float(np.max(np.abs(a - a.conj().T))) if n else 0.0
    scale = max(1.0, float(np.linalg.norm(a))) if n else 1.0
    if herm_defect > 1e-12 * scale:
        raise NumericalConsistencyError(
            f"matrix not Hermitian: max |M - M^H| = {herm_defect:.3e}"
        )
    v = np.eye(n, dtype=complex)
    if n == 1:
        return np.array([a[0, 0].real]), v
    tol_eff = tol * scale
    # entries this small cannot lift the off-diagonal mass above tol_eff
    skip = tol_eff / (10.0 * n)
    for _ in range(max_sweeps):
        # measure the off-diagonal mass directly; total minus diagonal
        # cancels catastrophically once nearly converged
        off_part = a.copy()
        np.fill_diagonal(off_part, 0.0)
        off = float(np.linalg.norm(off_part))
        if off < tol_eff:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                r = abs(apq)
                if r <= skip:
                    continue
                phase = apq / r
                tau = (a[q, q].real - a[p, p].real) / (2.0 * r)
                if tau >= 0.0:
                    t = 1.0 / (tau + math.sqrt(1.0 + tau * tau))
                else:
                    t = -1.0 / (-tau + math.sqrt(1.0 + tau * tau))
                c = 1.0 / math.sqrt(1.0 + t * t)
                s = t * c
                # A <- U^H A U with U[p,p]=c, U[p,q]=s, U[q,p]=-s e^{-i th},
                # U[q,q]=c e^{-i th}
                col_p = a[:, p].copy()
                col_q = a[:, q].copy()
                a[:, p] = c * col_p - s * phase.conjugate() * col_q
                a[:, q] = s * col_p + c * phase.conjugate() * col_q
                row_p = a[p, :].copy()
                row_q = a[q, :].copy()
                a[p, :] = c * row_p - s * phase * row_q
                a[q, :] = s * row_p + c * phase * row_q
                a[p, q] = 0.0
                a[q, p] = 0.0
                vcol_p = v[:, p].copy()
                vcol_q = v[:, q].copy()
                v[:, p] = c * vcol_p - s * phase.conjugate() * vcol_q
                v[:, q] = s * vcol_p + c * phase.conjugate() * vcol_q
    else:
        raise NumericalConsistencyError(
            f"Jacobi sweeps did not converge below {tol:.1e} in {max_sweeps} sweeps"
        )
    vals = np.real(np.diag(a))
    order = np.argsort(vals)[::-1]
    return vals[order], v[:, order]


def density_spectrum(rho: DensityMatrix) -> np.ndarray:
    """All eigenvalues of a density matrix, descending.

    Rows whose diagonal entry is exactly zero carry no weight (positive
    semidefiniteness forces the whole row to zero), so they are stripped
    before the Jacobi iteration and restored as zero eigenvalues.
    """
    mat = rho.matrix
    diag = np.real(np.diag(mat))
    keep = np.flatnonzero(diag != 0.0)
    zeros = mat.shape[0] - keep.size
    if keep.size == 0:
        return np.zeros(mat.shape[0])
    sub = mat[np.ix_(keep, keep)]
    vals, _ = hermitian_eigensystem(sub)
    return np.sort(np.concatenate([vals, np.zeros(zeros)]))[::-1]


def vn_entropy(rho: DensityMatrix) -> float:
    """Von Neumann entropy in bits, with 0 log 0 taken as 0."""
    vals = density_spectrum(rho)
    low = float(vals.min(initial=0.0))
    if low < -1e-10:
        raise NumericalConsistencyError(
            f"density matrix eigenvalue {low:.3e} below -1e-10"
        )
    vals = np.clip(vals, 0.0, 1.0)
    positive = vals[vals > 0.0]
    return float(-np.sum(positive * np.log2(positive)))


def inner_product(state1: TwoModeFockState, state2: TwoModeFockState) -> complex:
    """<state1 | state2>, zero-padding to the larger cutoff of each mode."""
    da = max(state1.dim_a, state2.dim_a)
    db = max(state1.dim_b, state2.dim_b)
    c1 = np.zeros((da, db), dtype=complex)
    c2 = np.zeros((da, db), dtype=complex)
    c1[: state1.dim_a, : state1.dim_b] = state1.coeff
    c2[: state2.dim_a, : state2.dim_b] = state2.coeff
    return complex(np.sum(c1.conj() * c2))


def husimi_q_numeric(
    state: TwoModeFockState,
    z1: complex,
    z2: complex,
    error_budget: float = 1e-7,
) -> float:
    """Husimi function |<z1, z2 | state>|^2 / pi^2 from the coefficient matrix.

    A Cauchy-Schwarz style bound sqrt(tail_mass * coherent deficit) guards
    against cutoffs too small for the requested phase-space point; the bound
    is loose by construction (the true omitted mass sits far below the
    measured edge rows), so the budget only rejects cutoffs that cannot
    even guarantee ~1e-7 absolute accuracy.
    """
    cz1 = coherent_fock(z1, state.dim_a)
    cz2 = coherent_fock(z2, state.dim_b)
    deficit = max(
        1.0 - float(np.sum(np.abs(cz1) ** 2)),
        1.0 - float(np.sum(np.abs(cz2) ** 2)),
    )
    deficit = max(deficit, 0.0)
    bound = math.sqrt(state.tail_mass() * deficit)
    if bound > error_budget:
        raise TruncationError(
            f"amplitude error bound {bound:.3e} exceeds {error_budget:.1e} "
            f"at z1={z1}, z2={z2}; increase the cutoff"
        )
    amp = complex(cz1.conj() @ state.coeff @ cz2.conj())
    return abs(amp) ** 2 / math.pi**2


def state_dump(spec: PaecsSpec, state: TwoModeFockState) -> dict:
    """JSON-ready description of a built state, coefficients row-major."""
    coeffs = [
        [float(entry.real), float(entry.imag)]
        for entry in state.coeff.reshape(-1)
    ]
    return {
        "family": spec.family.value,
        "alpha_re": float(spec.alpha.real),
        "alpha_im": float(spec.alpha.imag),
        "m": spec.m,
        "n": spec.n,
        "dim_a": state.dim_a,
        "dim_b": state.dim_b,
        "coeffs": coeffs,
    }


def state_from_dump(payload: dict) -> tuple[PaecsSpec, TwoModeFockState]:
    """Inverse of `state_dump`."""
    spec = PaecsSpec(
        family=Family.from_string(payload["family"]),
        alpha=complex(payload["alpha_re"], payload["alpha_im"]),
        m=int(payload["m"]),
        n=int(payload["n"]),
    )
    dim_a = int(payload["dim_a"])
    dim_b = int(payload["dim_b"])
    flat = np.array(
        [complex(re, im) for re, im in payload["coeffs"]], dtype=complex
    )
    if flat.size != dim_a * dim_b:
        raise DomainError("coefficient count does not match dim_a * dim_b")
    return spec, TwoModeFockState(flat.reshape(dim_a, dim_b))
