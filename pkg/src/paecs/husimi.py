"""Closed-form Husimi Q function, phase-space slices, and its quadrature.

Q(z1, z2) factorizes into a Gaussian envelope, the photon-addition powers
|z1|^2m |z2|^2n, and a four-exponential coherent interference bracket whose
argument couples the modes only through z1 + z2 (kind 1) or z1 - z2
(kind 2).  That separability also powers the tensor-product Gauss-Legendre
normalization check.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import DomainError, NumericalConsistencyError
from .params import PaecsSpec
from .analytic import normalization

_AXIS_1 = ("re_z1", "im_z1")
_AXIS_2 = ("re_z2", "im_z2")


@dataclass(frozen=True)
class PhaseSpaceSlice:
    """A 2-D slice through the 4-D phase space.

    ``axis_1`` picks the varying coordinate of z1 and ``axis_2`` of z2; the
    complementary coordinates are pinned at ``fixed_values``.  Both axes
    share ``range`` and ``points``.
    """

    axis_1: str = "re_z1"
    axis_2: str = "re_z2"
    fixed_values: tuple[float, float] = (0.0, 0.0)
    range: tuple[float, float] = (-4.0, 4.0)
    points: int = 121

    def __post_init__(self) -> None:
        if self.axis_1 not in _AXIS_1:
            raise DomainError(f"axis_1 must be one of {_AXIS_1}")
        if self.axis_2 not in _AXIS_2:
            raise DomainError(f"axis_2 must be one of {_AXIS_2}")
        if self.points < 2:
            raise DomainError("points must be >= 2")
        lo, hi = self.range
        if not (math.isfinite(lo) and math.isfinite(hi)) or lo >= hi:
            raise DomainError("range must satisfy lo < hi")

    def axis_values(self) -> np.ndarray:
        lo, hi = self.range
        return np.linspace(lo, hi, self.points)

    def z1_at(self, value: float) -> complex:
        if self.axis_1 == "re_z1":
            return complex(value, self.fixed_values[0])
        return complex(self.fixed_values[0], value)

    def z2_at(self, value: float) -> complex:
        if self.axis_2 == "re_z2":
            return complex(value, self.fixed_values[1])
        return complex(self.fixed_values[1], value)


def q_analytic(spec: PaecsSpec, z1: complex, z2: complex) -> float:
    """Closed-form Husimi value at one phase-space point.

    Q = N^2 / pi^2 |z1|^2m |z2|^2n exp(-2|a|^2 - |z1|^2 - |z2|^2)
    [e^(k* a + k a*) + s e^(-k* a + k a*) + s e^(k* a - k a*)
    + e^(-k* a - k a*)] with k = z1 + z2 for kind 1 and z1 - z2 for kind 2.
    The four exponentials are summed literally (around a common real shift
    so e^|k a| cannot overflow) and the imaginary remainder must vanish to
    rounding before the real part is accepted.
    """
    z1 = complex(z1)
    z2 = complex(z2)
    m, n = spec.m, spec.n
    r1 = abs(z1) ** 2
    r2 = abs(z2) ** 2
    if (m > 0 and r1 == 0.0) or (n > 0 and r2 == 0.0):
        return 0.0
    alpha = spec.alpha
    s = spec.family.sign
    kappa = z1 + z2 if spec.family.kind == 1 else z1 - z2
    core = kappa.conjugate() * alpha
    co_star = kappa * alpha.conjugate()
    args = (core + co_star, -core + co_star, core - co_star, -core - co_star)
    shift = max(a.real for a in args)
    bracket = (
        np.exp(args[0] - shift)
        + s * np.exp(args[1] - shift)
        + s * np.exp(args[2] - shift)
        + np.exp(args[3] - shift)
    )
    log_pref = (
        2.0 * math.log(normalization(spec))
        - 2.0 * abs(alpha) ** 2
        - r1
        - r2
        + shift
    )
    if m > 0:
        log_pref += m * math.log(r1)
    if n > 0:
        log_pref += n * math.log(r2)
    q = math.exp(log_pref) * complex(bracket) / math.pi**2
    if abs(q.imag) > 1e-14:
        raise NumericalConsistencyError(
            f"Husimi value has imaginary part {q.imag:.3e} at z1={z1}, z2={z2}"
        )
    value = q.real
    if value < -1e-14:
        raise NumericalConsistencyError(
            f"Husimi value {value:.3e} below -1e-14 at z1={z1}, z2={z2}"
        )
    return max(value, 0.0)


@dataclass(frozen=True)
class QGrid:
    """Husimi values sampled on a phase-space slice, row-major in axis_1."""

    spec: PaecsSpec
    slice: PhaseSpaceSlice
    axis_1_values: np.ndarray = field(repr=False)
    axis_2_values: np.ndarray = field(repr=False)
    values: np.ndarray = field(repr=False)


def q_grid(spec: PaecsSpec, slc: PhaseSpaceSlice | None = None) -> QGrid:
    """Sample `q_analytic` over a slice (defaults to the Im = 0 plane)."""
    if slc is None:
        slc = PhaseSpaceSlice()
    ax = slc.axis_values()
    values = np.empty((slc.points, slc.points))
    for i, x in enumerate(ax):
        z1 = slc.z1_at(float(x))
        for j, y in enumerate(ax):
            values[i, j] = q_analytic(spec, z1, slc.z2_at(float(y)))
    return QGrid(
        spec=spec,
        slice=slc,
        axis_1_values=ax.copy(),
        axis_2_values=ax.copy(),
        values=values,
    )


@dataclass(frozen=True)
class QuadratureResult:
    """Outcome of the Q normalization integral; `ok` is False when the
    estimate strays more than 0.05 from 1."""

    value: float
    nodes_per_axis: int
    half_width: float
    ok: bool


def _mode_integrals(
    order: int, amplitude: complex, half_width: float, nodes: int
) -> tuple[float, float, float, float]:
    """2-D Gauss-Legendre integrals of |z|^2k e^(-|z|^2) times
    cosh(u), sinh(u), cos(v), sin(v), u + iv = 2 conj(z) amplitude."""
    x, w = np.polynomial.legendre.leggauss(nodes)
    pts = half_width * x
    wts = half_width * w
    re, im = np.meshgrid(pts, pts, indexing="ij")
    w2 = np.outer(wts, wts)
    z = re + 1j * im
    r2 = re * re + im * im
    base = w2 * r2**order * np.exp(-r2)
    phase = 2.0 * z.conjugate() * amplitude
    u = phase.real
    v = phase.imag
    return (
        float(np.sum(base * np.cosh(u))),
        float(np.sum(base * np.sinh(u))),
        float(np.sum(base * np.cos(v))),
        float(np.sum(base * np.sin(v))),
    )


def q_normalization(spec: PaecsSpec, nodes_per_axis: int = 48) -> QuadratureResult:
    """Integral of Q over [-L, L]^4 by tensor-product Gauss-Legendre.

    L = |alpha| + sqrt(m + n) + 6.  The interference bracket separates into
    products of single-mode cosh/sinh/cos/sin integrals, so the full
    nodes^4 tensor sum is evaluated exactly as two nodes^2 factors per term.
    """
    if nodes_per_axis < 16:
        raise DomainError("nodes_per_axis must be >= 16")
    alpha = spec.alpha
    half_width = abs(alpha) + math.sqrt(spec.m + spec.n) + 6.0
    beta = alpha if spec.family.kind == 1 else -alpha
    ch1, sh1, cs1, sn1 = _mode_integrals(
        spec.m, alpha, half_width, nodes_per_axis
    )
    ch2, sh2, cs2, sn2 = _mode_integrals(
        spec.n, beta, half_width, nodes_per_axis
    )
    s = spec.family.sign
    bracket = 2.0 * (ch1 * ch2 + sh1 * sh2) + 2.0 * s * (cs1 * cs2 - sn1 * sn2)
    pref = normalization(spec) ** 2 * math.exp(-2.0 * abs(alpha) ** 2)
    value = pref * bracket / math.pi**2
    return QuadratureResult(
        value=value,
        nodes_per_axis=nodes_per_axis,
        half_width=half_width,
        ok=abs(value - 1.0) <= 0.05,
    )


def local_maxima(values: np.ndarray) -> list[tuple[int, int]]:
    """Interior grid points strictly larger than all eight neighbours."""
    out = []
    rows, cols = values.shape
    for i in range(1, rows - 1):
        for j in range(1, cols - 1):
            v = values[i, j]
            patch = values[i - 1 : i + 2, j - 1 : j + 2]
            if v > patch.max(initial=-np.inf, where=_NEIGHBOR_MASK, out=None):
                out.append((i, j))
    return out


_NEIGHBOR_MASK = np.array(
    [[True, True, True], [True, False, True], [True, True, True]]
)


def qgrid_csv_lines(grid: QGrid) -> list[str]:
    """CSV serialization: a two-line metadata header then axis1,axis2,q rows."""
    spec = grid.spec
    slc = grid.slice
    lines = [
        "# family,alpha_re,alpha_im,m,n,slice_axes,fixed",
        "# {},{},{},{},{},{}:{},{}:{}".format(
            spec.family.value,
            repr(float(spec.alpha.real)),
            repr(float(spec.alpha.imag)),
            spec.m,
            spec.n,
            slc.axis_1,
            slc.axis_2,
            repr(float(slc.fixed_values[0])),
            repr(float(slc.fixed_values[1])),
        ),
        "axis1,axis2,q_value",
    ]
    for i, x in enumerate(grid.axis_1_values):
        for j, y in enumerate(grid.axis_2_values):
            lines.append(
                f"{float(x)!r},{float(y)!r},{float(grid.values[i, j])!r}"
            )
    return lines


def qgrid_json_dict(grid: QGrid) -> dict:
    """JSON serialization mirroring the grid fields."""
    spec = grid.spec
    slc = grid.slice
    return {
        "family": spec.family.value,
        "alpha_re": float(spec.alpha.real),
        "alpha_im": float(spec.alpha.imag),
        "m": spec.m,
        "n": spec.n,
        "slice": {
            "axis_1": slc.axis_1,
            "axis_2": slc.axis_2,
            "fixed_values": [float(v) for v in slc.fixed_values],
            "range": [float(slc.range[0]), float(slc.range[1])],
            "points": slc.points,
        },
        "axis_1_values": [float(v) for v in grid.axis_1_values],
        "axis_2_values": [float(v) for v in grid.axis_2_values],
        "values": [[float(v) for v in row] for row in grid.values],
    }
