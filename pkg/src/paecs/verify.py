"""Cross-validation of every closed form against the brute-force Fock route.

Each check returns a `CheckResult` with its worst error and tolerance;
`run_all` collects them into a `VerificationReport`.  The `perturb`
argument injects a relative fault into the analytic normalization so the
harness can demonstrate it actually fails when the two routes disagree.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field

import numpy as np

from .analytic import (
    entropy,
    fock_coefficients,
    normalization,
    scalar_product,
    schmidt_decomposition,
    schmidt_eigenvalues,
    reconstruct_from_schmidt,
)
from .fock import (
    build_paecs_numeric,
    density_spectrum,
    husimi_q_numeric,
    inner_product,
    partial_trace_b,
    vn_entropy,
)
from .husimi import local_maxima, q_analytic, q_grid, q_normalization
from .params import Family, PaecsSpec

# |alpha| grid shared by the normalization and eigenvalue checks; the last
# entry exercises a complex phase
ALPHA_GRID = (0.2, 0.5, 1.0, 1.5, 2.0, 0.8 * cmath.exp(1j * math.pi / 5))

SCALAR_SEED = 20230817
Q_POINT_SEED = 20230818

CONVENTION_NOTES = [
    "normalization bracket: the leading Laguerre factors take argument "
    "-|alpha|^2 (positive-term series); confirmed against brute-force norms",
    "reduced-state branch weights carry the squared normalization constant, "
    "as unit trace requires; spectrum confirmed against the Jacobi eigensolver",
    "overlap kernel index order is <alpha| a^n a-dagger^m |beta> (first index "
    "counts creations); confirmed against Fock-space matrix elements",
    "scalar-product prefactor reads N(bra orders at alpha) * N(ket orders at "
    "beta); confirmed against brute-force inner products",
]


@dataclass(frozen=True)
class CheckResult:
    name: str
    max_abs_error: float
    tolerance: float
    passed: bool
    notes: str = ""


@dataclass(frozen=True)
class VerificationReport:
    checks: tuple[CheckResult, ...]
    overall_pass: bool
    notes: tuple[str, ...] = field(default=tuple(CONVENTION_NOTES))

    def to_dict(self) -> dict:
        return {
            "overall_pass": self.overall_pass,
            "checks": [
                {
                    "name": c.name,
                    "max_abs_error": c.max_abs_error,
                    "tolerance": c.tolerance,
                    "passed": c.passed,
                    "notes": c.notes,
                }
                for c in self.checks
            ],
            "notes": list(self.notes),
        }


def _result(name: str, err: float, tol: float, notes: str = "") -> CheckResult:
    return CheckResult(
        name=name,
        max_abs_error=float(err),
        tolerance=float(tol),
        passed=bool(err <= tol),
        notes=notes,
    )


def check_normalization(perturb: float = 0.0, mn_max: int = 6) -> CheckResult:
    """N * sqrt(brute-force norm^2) must equal 1 for every family member."""
    worst = 0.0
    for fam in Family:
        for m in range(mn_max + 1):
            for n in range(mn_max + 1):
                for alpha in ALPHA_GRID:
                    spec = PaecsSpec(fam, alpha, m, n)
                    state = build_paecs_numeric(spec)
                    value = (1.0 + perturb) * normalization(spec)
                    worst = max(
                        worst, abs(value * math.sqrt(state.raw_norm2) - 1.0)
                    )
    return _result("normalization_vs_oracle", worst, 1e-9)


def check_fock_coefficients(perturb: float = 0.0) -> CheckResult:
    """Closed-form number-basis matrix equals the constructed one entrywise."""
    worst = 0.0
    for fam in Family:
        for (m, n) in ((0, 0), (1, 2), (2, 1), (3, 3)):
            for alpha in (0.7, 1.3, 0.8 * cmath.exp(1j * math.pi / 5)):
                spec = PaecsSpec(fam, alpha, m, n)
                state = build_paecs_numeric(spec)
                coeff = (1.0 + perturb) * fock_coefficients(
                    spec, state.dim_a, state.dim_b
                )
                worst = max(worst, float(np.max(np.abs(coeff - state.coeff))))
    return _result("fock_coefficients_vs_oracle", worst, 1e-10)


def check_eigenvalues(mn_max: int = 6) -> CheckResult:
    """Two-branch spectrum matches the top of the Jacobi spectrum; the rest
    of the oracle spectrum must be numerically zero."""
    worst = 0.0
    worst_residual = 0.0
    for fam in Family:
        for m in range(mn_max + 1):
            for n in range(mn_max + 1):
                for alpha in ALPHA_GRID:
                    spec = PaecsSpec(fam, alpha, m, n)
                    spectrum = density_spectrum(
                        partial_trace_b(build_paecs_numeric(spec))
                    )
                    lam_p, lam_m = schmidt_eigenvalues(spec)
                    worst = max(
                        worst,
                        abs(spectrum[0] - lam_p),
                        abs(spectrum[1] - lam_m),
                    )
                    if spectrum.size > 2:
                        worst_residual = max(
                            worst_residual, float(np.max(np.abs(spectrum[2:])))
                        )
    notes = f"largest residual oracle eigenvalue {worst_residual:.3e}"
    result = _result("schmidt_eigenvalues_vs_oracle", worst, 1e-9, notes)
    if worst_residual > 1e-10:
        return CheckResult(
            result.name, result.max_abs_error, result.tolerance, False, notes
        )
    return result


def check_entropy_exchange() -> CheckResult:
    """Entropy is unchanged under swapping the photon-addition orders."""
    worst = 0.0
    for fam in Family:
        for m in range(9):
            for n in range(9):
                for alpha in (0.3, 0.9, 1.7):
                    a = entropy(PaecsSpec(fam, alpha, m, n)).bits
                    b = entropy(PaecsSpec(fam, alpha, n, m)).bits
                    worst = max(worst, abs(a - b))
    oracle_worst = 0.0
    for fam in Family:
        for (m, n) in ((0, 1), (1, 2), (3, 1)):
            for alpha in (0.5, 1.2):
                ea = vn_entropy(
                    partial_trace_b(build_paecs_numeric(PaecsSpec(fam, alpha, m, n)))
                )
                eb = vn_entropy(
                    partial_trace_b(build_paecs_numeric(PaecsSpec(fam, alpha, n, m)))
                )
                oracle_worst = max(oracle_worst, abs(ea - eb))
    notes = (
        f"analytic worst {worst:.3e}; oracle worst {oracle_worst:.3e} "
        "(oracle tolerance 1e-9)"
    )
    passed = worst <= 1e-12 and oracle_worst <= 1e-9
    return CheckResult("entropy_exchange_symmetry", worst, 1e-12, passed, notes)


def check_maximal_entanglement() -> CheckResult:
    """Minus families with m = n are maximally entangled at every alpha."""
    worst = 0.0
    alphas = np.linspace(0.1, 2.0, 20)
    for fam in (Family.PSI1_MINUS, Family.PSI2_MINUS):
        for k in range(9):
            for alpha in alphas:
                bits = entropy(PaecsSpec(fam, float(alpha), k, k)).bits
                worst = max(worst, abs(bits - 1.0))
    return _result("minus_equal_orders_maximal", worst, 1e-10)


def check_entropy_argmax(alpha: float = 0.2, m_max: int = 20) -> CheckResult:
    """At small alpha the entropy over m peaks exactly at m = n."""
    mismatches = 0
    details = []
    for n in (0, 1, 4):
        curve = [
            entropy(PaecsSpec(Family.PSI1_MINUS, alpha, m, n)).bits
            for m in range(m_max + 1)
        ]
        best = int(np.argmax(curve))
        details.append(f"n={n}: argmax m={best}")
        if best != n:
            mismatches += 1
    return _result(
        "entropy_argmax_at_equal_orders",
        float(mismatches),
        0.0,
        "; ".join(details),
    )


def check_small_alpha_ordering(alpha: float = 0.1) -> CheckResult:
    """At |alpha| = 0.1 the unexcited minus state beats the excited ones."""
    base = entropy(PaecsSpec(Family.PSI1_MINUS, alpha, 0, 0)).bits
    violations = 0
    details = [f"(0,0): {base:.6f}"]
    for (m, n) in ((2, 1), (3, 7), (20, 4)):
        bits = entropy(PaecsSpec(Family.PSI1_MINUS, alpha, m, n)).bits
        details.append(f"({m},{n}): {bits:.6f}")
        if not base > bits:
            violations += 1
    return _result(
        "small_alpha_entropy_ordering", float(violations), 0.0, "; ".join(details)
    )


def check_scalar_products(cases: int = 20, perturb: float = 0.0) -> CheckResult:
    """Kernel-based scalar products match brute-force inner products."""
    rng = np.random.default_rng(SCALAR_SEED)
    worst = 0.0
    done = 0
    while done < cases:
        sign = "+" if rng.integers(0, 2) else "-"
        fam_bra = Family.from_string(f"psi{rng.integers(1, 3)}{sign}")
        fam_ket = Family.from_string(f"psi{rng.integers(1, 3)}{sign}")
        mb, nb, mk, nk = (int(v) for v in rng.integers(0, 5, size=4))
        alpha = complex(rng.uniform(-1.5, 1.5), rng.uniform(-1.5, 1.5)) / math.sqrt(2)
        beta = complex(rng.uniform(-1.5, 1.5), rng.uniform(-1.5, 1.5)) / math.sqrt(2)
        if sign == "-" and (alpha == 0 or beta == 0):
            continue
        bra = PaecsSpec(fam_bra, alpha, mb, nb)
        ket = PaecsSpec(fam_ket, beta, mk, nk)
        oracle = inner_product(
            build_paecs_numeric(bra), build_paecs_numeric(ket)
        )
        value = (1.0 + perturb) * scalar_product(bra, ket)
        worst = max(worst, abs(value - oracle))
        done += 1
    return _result("scalar_products_vs_oracle", worst, 1e-9)


def check_q_pointwise(points: int = 25, perturb: float = 0.0) -> CheckResult:
    """Closed-form Husimi values match |<z|psi>|^2 / pi^2 pointwise."""
    rng = np.random.default_rng(Q_POINT_SEED)
    worst = 0.0
    for fam in Family:
        for (m, n) in ((0, 0), (2, 1), (3, 7)):
            for alpha_sq in (0.05, 0.5):
                spec = PaecsSpec(fam, math.sqrt(alpha_sq), m, n)
                state = build_paecs_numeric(spec)
                for _ in range(points):
                    z1 = complex(rng.uniform(-4, 4), rng.uniform(-4, 4))
                    z2 = complex(rng.uniform(-4, 4), rng.uniform(-4, 4))
                    qa = (1.0 + perturb) * q_analytic(spec, z1, z2)
                    qn = husimi_q_numeric(state, z1, z2)
                    worst = max(worst, abs(qa - qn))
    return _result("husimi_analytic_vs_numeric", worst, 1e-10)


def check_q_normalization() -> CheckResult:
    """Q integrates to 1: 1e-6 for the pure Fock limit, 1e-2 elsewhere."""
    vacuum = q_normalization(PaecsSpec(Family.PSI1_PLUS, 0.0, 0, 0))
    vac_dev = abs(vacuum.value - 1.0)
    worst = 0.0
    flagged = []
    for fam in (Family.PSI1_PLUS, Family.PSI1_MINUS):
        for (m, n) in ((0, 0), (2, 1), (3, 7)):
            for alpha_sq in (0.05, 0.5):
                spec = PaecsSpec(fam, math.sqrt(alpha_sq), m, n)
                res = q_normalization(spec)
                worst = max(worst, abs(res.value - 1.0))
                if not res.ok:
                    flagged.append(f"{fam.value} ({m},{n}) |a|^2={alpha_sq}")
    notes = f"alpha=0 Fock-limit deviation {vac_dev:.3e} (tolerance 1e-6)"
    if flagged:
        notes += "; flagged: " + ", ".join(flagged)
    passed = vac_dev <= 1e-6 and worst <= 1e-2 and not flagged
    return CheckResult("husimi_normalization", max(worst, vac_dev), 1e-2, passed, notes)


def check_q_structure() -> CheckResult:
    """Default-slice peak structure: one maximum for (0,0); four maxima and
    exact axis zeros for (2,1)."""
    alpha = math.sqrt(0.05)
    grid00 = q_grid(PaecsSpec(Family.PSI1_PLUS, alpha, 0, 0))
    peaks00 = local_maxima(grid00.values)
    grid21 = q_grid(PaecsSpec(Family.PSI1_PLUS, alpha, 2, 1))
    peaks21 = local_maxima(grid21.values)
    i0 = int(np.flatnonzero(grid21.axis_1_values == 0.0)[0])
    zeros_ok = bool(
        np.all(grid21.values[i0, :] == 0.0) and np.all(grid21.values[:, i0] == 0.0)
    )
    failures = 0
    if len(peaks00) != 1:
        failures += 1
    if len(peaks21) != 4:
        failures += 1
    if not zeros_ok:
        failures += 1
    notes = (
        f"(0,0) maxima: {len(peaks00)}; (2,1) maxima: {len(peaks21)}; "
        f"axis zeros exact: {zeros_ok}"
    )
    return _result("husimi_peak_structure", float(failures), 0.0, notes)


def check_schmidt_reconstruction(mn_max: int = 5) -> CheckResult:
    """Rebuilding the state from its two Schmidt branches reproduces the
    closed-form coefficient matrix."""
    worst = 0.0
    for fam in Family:
        for m in range(mn_max + 1):
            for n in range(mn_max + 1):
                for alpha in (0.4, 0.9, 1.5, 0.9 * cmath.exp(1j * math.pi / 7)):
                    spec = PaecsSpec(fam, alpha, m, n)
                    state = build_paecs_numeric(spec)
                    recon = reconstruct_from_schmidt(
                        schmidt_decomposition(spec), state.dim_a, state.dim_b
                    )
                    worst = max(worst, float(np.max(np.abs(recon - state.coeff))))
    return _result("schmidt_reconstruction", worst, 1e-10)


def run_all(perturb: float = 0.0, quick: bool = False) -> VerificationReport:
    """Run every cross-check; `quick` shrinks the grids for smoke testing."""
    mn_max = 2 if quick else 6
    cases = 6 if quick else 20
    points = 4 if quick else 25
    recon_max = 2 if quick else 5
    checks = (
        check_normalization(perturb=perturb, mn_max=mn_max),
        check_fock_coefficients(perturb=perturb),
        check_eigenvalues(mn_max=mn_max),
        check_entropy_exchange(),
        check_maximal_entanglement(),
        check_entropy_argmax(),
        check_small_alpha_ordering(),
        check_scalar_products(cases=cases, perturb=perturb),
        check_q_pointwise(points=points, perturb=perturb),
        check_q_normalization(),
        check_q_structure(),
        check_schmidt_reconstruction(mn_max=recon_max),
    )
    return VerificationReport(
        checks=checks, overall_pass=all(c.passed for c in checks)
    )
