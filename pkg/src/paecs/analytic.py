"""Closed forms for the photon-added entangled coherent states.

Normalization constants, number-basis expansions, scalar products between
family members, the two-branch Schmidt decomposition, and the reduced-state
spectrum and entanglement entropy.  Every quantity here has a brute-force
counterpart in `paecs.fock` used to validate it.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import (
    DegenerateStateError,
    DomainError,
    NumericalConsistencyError,
    UnsupportedCombinationError,
)
from .params import Family, PaecsSpec
from .special_functions import laguerre, laguerre_pm, overlap_kernel


def normalization(spec: PaecsSpec) -> float:
    """Normalization constant N of the photon-added superposition.

    N = [2 m! n! (L_m(-|a|^2) L_n(-|a|^2) + s e^(-4|a|^2) L_m(|a|^2)
    L_n(|a|^2))]^(-1/2) with s the family sign.  The bracket is assembled in
    the log domain so the factorials cannot overflow on the way to a small N.
    """
    x = abs(spec.alpha) ** 2
    m, n = spec.m, spec.n
    l_neg = laguerre(m, -x) * laguerre(n, -x)
    l_pos = laguerre(m, x) * laguerre(n, x)
    # L_m(-x) >= |L_m(x)| for x >= 0, so the ratio below is in [-1, 1]
    log_lead = math.lgamma(m + 1) + math.lgamma(n + 1) + math.log(l_neg)
    ratio = spec.family.sign * (l_pos / l_neg) * math.exp(-4.0 * x)
    bracket_factor = 1.0 + ratio
    if bracket_factor <= 0.0:
        raise DegenerateStateError(
            f"normalization bracket vanished for {spec.family.value} at "
            f"alpha = {spec.alpha}"
        )
    log_n = -0.5 * (math.log(2.0) + log_lead + math.log1p(ratio))
    return math.exp(log_n)


def _branch_sign_table(family: Family) -> list[tuple[int, int, int]]:
    """Coherent branch amplitudes as sign multipliers (a_sign, b_sign, weight)."""
    s = family.sign
    if family.kind == 1:
        return [(1, 1, 1), (-1, -1, s)]
    return [(1, -1, 1), (-1, 1, s)]


def fock_coefficients(spec: PaecsSpec, dim_a: int, dim_b: int) -> np.ndarray:
    """Number-basis coefficient matrix of the normalized state.

    The entry on |p+m, q+n> is N e^(-|a|^2) sqrt((p+m)! (q+n)!) / (p! q!)
    alpha^(p+q) s(p, q), where s(p, q) collects the branch parities:
    1 + s(-1)^(p+q) for kind 1 and (-1)^q + s(-1)^p for kind 2.
    """
    if dim_a < 1 or dim_b < 1:
        raise DomainError("dimensions must be >= 1")
    m, n = spec.m, spec.n
    alpha = spec.alpha
    out = np.zeros((dim_a, dim_b), dtype=complex)
    pref = normalization(spec) * math.exp(-abs(alpha) ** 2)
    pmax = dim_a - m
    qmax = dim_b - n
    if pmax < 1 or qmax < 1:
        return out
    if alpha == 0:
        # only the p = q = 0 term survives (plus families only)
        s00 = 1 + spec.family.sign
        out[m, n] = (
            pref
            * math.exp(0.5 * (math.lgamma(m + 1) + math.lgamma(n + 1)))
            * s00
        )
        return out
    phase = alpha / abs(alpha)
    log_mag = math.log(abs(alpha))
    p = np.arange(pmax)
    q = np.arange(qmax)
    lg = np.vectorize(math.lgamma)
    log_p = 0.5 * lg(p + m + 1) - lg(p + 1) + p * log_mag
    log_q = 0.5 * lg(q + n + 1) - lg(q + 1) + q * log_mag
    mag = np.exp(log_p[:, None] + log_q[None, :])
    phases = phase ** (p[:, None] + q[None, :])
    if spec.family.kind == 1:
        s_pq = 1 + spec.family.sign * (-1.0) ** (p[:, None] + q[None, :])
    else:
        s_pq = (-1.0) ** q[None, :] + spec.family.sign * (-1.0) ** p[:, None]
    out[m:, n:] = pref * mag * phases * s_pq
    return out


def scalar_product(bra: PaecsSpec, ket: PaecsSpec) -> complex:
    """<bra | ket> between two family members, by the coherent overlap kernel.

    Both states must carry the same relative sign; kind pairings (1,1),
    (2,2), (1,2) and (2,1) are covered by expanding each state into its two
    coherent branches and summing the per-mode kernels:

    sum over branches of N(bra) N(ket) c_bra c_ket
    A(m_ket, m_bra; a_bra, a_ket) A(n_ket, n_bra; b_bra, b_ket)

    where A(mu, nu; x, y) = <x| a^nu a-dagger^mu |y> is `overlap_kernel`.
    """
    if bra.family.sign != ket.family.sign:
        raise UnsupportedCombinationError(
            "scalar products are only available between states with the "
            "same relative sign"
        )
    total = 0.0 + 0.0j
    for a_sb, b_sb, c_bra in _branch_sign_table(bra.family):
        for a_sk, b_sk, c_ket in _branch_sign_table(ket.family):
            ka = overlap_kernel(ket.m, bra.m, a_sb * bra.alpha, a_sk * ket.alpha)
            kb = overlap_kernel(ket.n, bra.n, b_sb * bra.alpha, b_sk * ket.alpha)
            total += c_bra * c_ket * ka * kb
    return normalization(bra) * normalization(ket) * total


def _creation_1d(vec: np.ndarray, count: int) -> np.ndarray:
    """Apply count creation operators to a single-mode vector (unnormalized)."""
    if count == 0:
        return vec.copy()
    dim = vec.size
    out = np.zeros(dim + count, dtype=complex)
    weights = np.exp(
        0.5
        * np.array(
            [math.lgamma(p + count + 1) - math.lgamma(p + 1) for p in range(dim)]
        )
    )
    out[count:] = weights * vec
    return out


def excited_parity_coherent(
    alpha: complex, parity: str, k: int, dim: int
) -> np.ndarray:
    """Normalized k-photon-added even or odd coherent state, length `dim`.

    The parity label refers to the cat state before addition; the returned
    vector occupies number states of parity `parity` shifted by k.
    """
    if parity not in ("even", "odd"):
        raise DomainError("parity must be 'even' or 'odd'")
    if k < 0:
        raise DomainError("k must be >= 0")
    if dim < k + 1:
        raise DomainError("dim must exceed the photon-addition order")
    alpha = complex(alpha)
    from .fock import coherent_fock

    base = coherent_fock(alpha, dim - k)
    other = coherent_fock(-alpha, dim - k)
    cat = base + other if parity == "even" else base - other
    vec = _creation_1d(cat, k)
    norm = float(np.linalg.norm(vec))
    if norm < 1e-140:
        raise DegenerateStateError(
            f"{parity} coherent state vanishes at alpha = {alpha}"
        )
    return vec / norm


@dataclass(frozen=True)
class SchmidtForm:
    """Two-branch Schmidt-like decomposition of a family member.

    state = weight_1 |parity_1[0], m><- x ->|parity_1[1], n>
          + relative_sign * weight_2 |parity_2[0], m> x |parity_2[1], n>

    with |even/odd, k> the k-photon-added cat states of
    `excited_parity_coherent` and nonnegative weights.
    """

    spec: PaecsSpec
    weight_1: float
    weight_2: float
    parity_1: tuple[str, str]
    parity_2: tuple[str, str]
    relative_sign: int


def _branch_weights(spec: PaecsSpec) -> tuple[float, float]:
    """Squared branch weights, already normalized to sum to one.

    The branch L-products share the m! n! factorials and the N^2 e^(-2|a|^2)
    prefactor, so only ratios of the plus/minus Laguerre combinations
    survive; this keeps the weights finite for any allowed order.
    """
    x = abs(spec.alpha) ** 2
    lp_m = laguerre_pm(spec.m, x, +1)
    lm_m = laguerre_pm(spec.m, x, -1)
    lp_n = laguerre_pm(spec.n, x, +1)
    lm_n = laguerre_pm(spec.n, x, -1)
    if spec.family.sign > 0:
        p1 = lp_m * lp_n
        p2 = lm_m * lm_n
    else:
        p1 = lm_m * lp_n
        p2 = lp_m * lm_n
    total = p1 + p2
    if total <= 0.0 or not math.isfinite(total):
        raise DegenerateStateError(
            f"branch weights vanished for {spec.family.value} at "
            f"alpha = {spec.alpha}"
        )
    return p1 / total, p2 / total


def schmidt_decomposition(spec: PaecsSpec) -> SchmidtForm:
    """Decompose the state into its two photon-added cat-state branches.

    Plus families split into (even, even) and (odd, odd) branches, minus
    families into (odd, even) and (even, odd); kind 2 carries a relative
    minus sign between the branches.
    """
    w1sq, w2sq = _branch_weights(spec)
    if spec.family.sign > 0:
        parities = (("even", "even"), ("odd", "odd"))
    else:
        parities = (("odd", "even"), ("even", "odd"))
    return SchmidtForm(
        spec=spec,
        weight_1=math.sqrt(w1sq),
        weight_2=math.sqrt(w2sq),
        parity_1=parities[0],
        parity_2=parities[1],
        relative_sign=1 if spec.family.kind == 1 else -1,
    )


def reconstruct_from_schmidt(
    form: SchmidtForm, dim_a: int, dim_b: int
) -> np.ndarray:
    """Coefficient matrix rebuilt from the Schmidt branches."""
    spec = form.spec
    a1 = excited_parity_coherent(spec.alpha, form.parity_1[0], spec.m, dim_a)
    b1 = excited_parity_coherent(spec.alpha, form.parity_1[1], spec.n, dim_b)
    a2 = excited_parity_coherent(spec.alpha, form.parity_2[0], spec.m, dim_a)
    b2 = excited_parity_coherent(spec.alpha, form.parity_2[1], spec.n, dim_b)
    return form.weight_1 * np.outer(a1, b1) + (
        form.relative_sign * form.weight_2
    ) * np.outer(a2, b2)


def schmidt_eigenvalues(spec: PaecsSpec) -> tuple[float, float]:
    """The two nonzero eigenvalues of either reduced density matrix.

    Computed as the normalized squared branch weights; the equivalent
    surd form 1/2 +- sqrt(1/4 - lambda_1 lambda_2) is used only as a
    consistency guard on the radicand.
    """
    lam1, lam2 = _branch_weights(spec)
    radicand = 0.25 - lam1 * lam2
    if radicand < -1e-12:
        raise NumericalConsistencyError(
            f"eigenvalue radicand {radicand:.3e} below -1e-12"
        )
    if lam1 >= lam2:
        return lam1, lam2
    return lam2, lam1


@dataclass(frozen=True)
class EntropyResult:
    spec: PaecsSpec
    lambda_plus: float
    lambda_minus: float
    bits: float


def entropy(spec: PaecsSpec) -> EntropyResult:
    """Entanglement entropy in bits from the two-branch spectrum."""
    lam_p, lam_m = schmidt_eigenvalues(spec)
    bits = 0.0
    for lam in (lam_p, lam_m):
        if lam > 0.0:
            bits -= lam * math.log2(lam)
    return EntropyResult(
        spec=spec, lambda_plus=lam_p, lambda_minus=lam_m, bits=bits
    )
