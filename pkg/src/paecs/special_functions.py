"""Laguerre and two-variable Hermite polynomials plus the coherent overlap kernel.

Everything here is a plain function of numbers; no Fock-space arrays are
involved.  The combinations L_m^+/L_m^- and the kernel A_mn are the building
blocks for the closed-form normalization, Schmidt spectrum, and scalar
products of the photon-added states.
"""

from __future__ import annotations

import cmath
import math

from .errors import DomainError, OverflowDomainError

LAGUERRE_MAX_ORDER = 200
HERMITE_MAX_ORDER = 40

# exp() overflows double precision just above this exponent
_LOG_DBL_MAX = 709.78


def _check_order(value: int, cap: int, name: str) -> None:
    if not isinstance(value, int):
        raise DomainError(f"{name} must be an integer, got {value!r}")
    if value < 0:
        raise DomainError(f"{name} must be >= 0, got {value}")
    if value > cap:
        raise DomainError(f"{name} capped at {cap}, got {value}")


def _check_real(value: float, name: str) -> float:
    value = float(value)
    if not math.isfinite(value):
        raise DomainError(f"{name} must be finite")
    return value


def laguerre(m: int, x: float) -> float:
    """Laguerre polynomial L_m(x) by the three-term recurrence.

    (k+1) L_{k+1}(x) = (2k+1-x) L_k(x) - k L_{k-1}(x), upward from
    L_0 = 1 and L_1 = 1 - x.  Upward recurrence is the numerically stable
    direction here; `laguerre_sum` is the explicit-coefficient cross-check
    for small m.
    """
    _check_order(m, LAGUERRE_MAX_ORDER, "m")
    x = _check_real(x, "x")
    if m == 0:
        return 1.0
    prev = 1.0
    curr = 1.0 - x
    for k in range(1, m):
        prev, curr = curr, ((2 * k + 1 - x) * curr - k * prev) / (k + 1)
    return curr


def laguerre_sum(m: int, x: float) -> float:
    """L_m(x) from the explicit sum over l of (-1)^l m! / (l!)^2 / (m-l)! x^l.

    Alternating and therefore cancellation-prone for large m*x; intended as
    an independent check of `laguerre` at small orders, not for production
    evaluation.
    """
    _check_order(m, LAGUERRE_MAX_ORDER, "m")
    x = _check_real(x, "x")
    total = 0.0
    for l in range(m + 1):
        coeff = math.exp(
            math.lgamma(m + 1) - 2.0 * math.lgamma(l + 1) - math.lgamma(m - l + 1)
        )
        total += (-1.0) ** l * coeff * x**l
    return total


def laguerre_pm(m: int, x: float, sign: int) -> float:
    """The combination e^x L_m(-x) + sign * e^-x L_m(x).

    For x >= 0 the plus combination is strictly positive and the minus
    combination is nonnegative, vanishing linearly at x = 0.  These weight
    the even/odd branches of the Schmidt decomposition.
    """
    sign = _normalize_sign(sign)
    _check_order(m, LAGUERRE_MAX_ORDER, "m")
    x = _check_real(x, "x")
    if abs(x) > _LOG_DBL_MAX - 10.0:
        raise OverflowDomainError(f"e^|x| not representable for x = {x}")
    value = math.exp(x) * laguerre(m, -x) + sign * math.exp(-x) * laguerre(m, x)
    if not math.isfinite(value):
        raise OverflowDomainError(f"laguerre_pm overflow at m={m}, x={x}")
    return value


def _normalize_sign(sign) -> int:
    if sign in (1, +1, "+", "plus"):
        return 1
    if sign in (-1, "-", "minus"):
        return -1
    raise DomainError(f"sign must be +1 or -1, got {sign!r}")


def laguerre_combo(m: int, sm: int, n: int, sn: int, x: float) -> float:
    """m! n! L_m^(sm)(x) L_n^(sn)(x), accumulated in the log domain.

    The factorials alone can dwarf the final product, so magnitudes are
    summed as logs and exponentiated once; an unrepresentable result raises
    instead of silently returning inf.
    """
    a = laguerre_pm(m, x, sm)
    b = laguerre_pm(n, x, sn)
    if a == 0.0 or b == 0.0:
        return 0.0
    log_mag = (
        math.lgamma(m + 1)
        + math.lgamma(n + 1)
        + math.log(abs(a))
        + math.log(abs(b))
    )
    if log_mag > _LOG_DBL_MAX:
        raise OverflowDomainError(
            f"laguerre_combo overflow: log magnitude {log_mag:.1f} at "
            f"m={m}, n={n}, x={x}"
        )
    result = math.exp(log_mag)
    if a < 0.0:
        result = -result
    if b < 0.0:
        result = -result
    return result


def hermite2(m: int, n: int, xi: complex, eta: complex) -> complex:
    """Two-variable Hermite polynomial H_{m,n}(xi, eta).

    H_{m,n}(xi, eta) = sum_{l=0}^{min(m,n)} (-1)^l m! n! /
    (l! (m-l)! (n-l)!) xi^(m-l) eta^(n-l).  Symmetric under
    (m, xi) <-> (n, eta).
    """
    _check_order(m, HERMITE_MAX_ORDER, "m")
    _check_order(n, HERMITE_MAX_ORDER, "n")
    xi = complex(xi)
    eta = complex(eta)
    if not (
        math.isfinite(xi.real)
        and math.isfinite(xi.imag)
        and math.isfinite(eta.real)
        and math.isfinite(eta.imag)
    ):
        raise DomainError("xi, eta must be finite")
    xi_pow = [1.0 + 0.0j]
    for _ in range(m):
        xi_pow.append(xi_pow[-1] * xi)
    eta_pow = [1.0 + 0.0j]
    for _ in range(n):
        eta_pow.append(eta_pow[-1] * eta)
    lg_m = math.lgamma(m + 1)
    lg_n = math.lgamma(n + 1)
    total = 0.0 + 0.0j
    for l in range(min(m, n) + 1):
        coeff = math.exp(
            lg_m
            + lg_n
            - math.lgamma(l + 1)
            - math.lgamma(m - l + 1)
            - math.lgamma(n - l + 1)
        )
        total += (-1.0) ** l * coeff * xi_pow[m - l] * eta_pow[n - l]
    return total


def overlap_kernel(m: int, n: int, alpha: complex, beta: complex) -> complex:
    """Coherent matrix element A_mn(alpha, beta) of m creations / n annihilations.

    A_mn(alpha, beta) = (-i)^(m+n) exp(-|alpha|^2/2 - |beta|^2/2
    + conj(alpha) beta) H_{m,n}(i conj(alpha), i beta), which equals
    <alpha| a^n a-dagger^m |beta>.  Normal ordering of a^n a-dagger^m turns
    the operator into H_{m,n} of the ladder operators, and coherent states
    then substitute their amplitudes.
    """
    _check_order(m, HERMITE_MAX_ORDER, "m")
    _check_order(n, HERMITE_MAX_ORDER, "n")
    alpha = complex(alpha)
    beta = complex(beta)
    gauss = cmath.exp(
        -0.5 * abs(alpha) ** 2 - 0.5 * abs(beta) ** 2 + alpha.conjugate() * beta
    )
    return (-1j) ** (m + n) * gauss * hermite2(m, n, 1j * alpha.conjugate(), 1j * beta)
