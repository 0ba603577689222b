"""Step-profile solids of revolution and the Pappus cross-check.

The N-term truncation of an L-series is read as a step profile over [0, N]:
rectangle n (on [n-1, n]) has complex height f_n = chi(n) / n^s.  Revolving
each rectangle about the axis gives a cylinder of volume pi * f_n^2, so the
total volume is V = pi * sum(chi(n)^2 * n^-2s).  The profile's barycenter
has closed forms

    xi  = sum((n - 1/2) * f_n) / sum(f_n)        (abscissa)
    eta = (1/2) * sum(f_n^2) / sum(f_n)          (height)

and the Pappus relation V = 2 * pi * eta * S (with S = sum(f_n) the profile
area) is an exact identity at every truncation; ``pappus_check`` reports the
residual.  All quantities are formal: heights are complex, so "areas" and
"volumes" are complex numbers and a profile can have total area exactly zero
(then the barycenter is undefined -- ZeroAreaError).

The barycenter is computed both from the closed forms and by midpoint
quadrature of the defining integrals over the step function (midpoint panels
aligned to the unit intervals integrate step data exactly); the two paths
must agree to 1e-10 relative.  The abscissa xi is reported for completeness
but nothing downstream consumes it.

``transformed_equation_residual`` returns the pair (S_N, W_N) with
W_N = sum(chi(n)^2 * n^-2s): W is a sum of nonnegative terms whenever chi is
real and t = 0, which is the positivity fact the audit module records.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .characters import DirichletCharacter
from .lseries import LPoint, as_lpoint, partial_sum

__all__ = [
    "PappusReport",
    "StepProfile",
    "ZeroAreaError",
    "barycenter",
    "barycenter_quadrature",
    "cylinder_volume",
    "pappus_check",
    "rect_area",
    "step_profile",
    "transformed_equation_residual",
]

_AGREEMENT_TOL = 1e-10


class ZeroAreaError(ValueError):
    """The step profile's total area is exactly zero; no barycenter exists."""


@dataclass(frozen=True)
class StepProfile:
    """A step function on [0, n_rects]: rectangle n has height heights[n-1]."""

    n_rects: int
    heights: tuple
    s: LPoint
    modulus: int

    @property
    def lower(self) -> float:
        """The profile's lower boundary (the axis)."""
        return 0.0

    @property
    def a(self) -> float:
        """Left end of the support interval."""
        return 0.0

    @property
    def b(self) -> float:
        """Right end of the support interval."""
        return float(self.n_rects)

    def height_at(self, z: float) -> complex:
        """The step value at z in [0, b) (right-open panels)."""
        return self.heights[int(math.floor(z))]


def _power_term(chi: DirichletCharacter, s: LPoint, n: int, multiple: int = 1) -> complex:
    """chi(n)^multiple * n^(-multiple * s), via the exact character value."""
    v = chi.value_exact(n)
    if v == 0:
        return 0j
    value = chi.value_complex(n) ** multiple if not isinstance(v, int) else complex(v**multiple)
    sigma, t = multiple * s.sigma, multiple * s.t
    amp = n ** (-sigma)
    if t == 0.0:
        return value * amp
    angle = t * math.log(n)
    return value * complex(amp * math.cos(angle), -amp * math.sin(angle))


def rect_area(chi: DirichletCharacter, s, n: int) -> complex:
    """Signed (complex) area of rectangle n: chi(n) * n^-s."""
    if n < 1:
        raise ValueError(f"rectangle index must be >= 1, got {n}")
    return _power_term(chi, as_lpoint(s), n, multiple=1)


def cylinder_volume(chi: DirichletCharacter, s, n: int) -> complex:
    """Volume of the revolved rectangle n: pi * chi(n)^2 * n^-2s."""
    if n < 1:
        raise ValueError(f"rectangle index must be >= 1, got {n}")
    return math.pi * _power_term(chi, as_lpoint(s), n, multiple=2)


def step_profile(chi: DirichletCharacter, s, n_rects: int) -> StepProfile:
    """The truncation profile: heights f_n = chi(n) * n^-s for n = 1..N."""
    s = as_lpoint(s)
    if n_rects < 1:
        raise ValueError(f"need at least one rectangle, got {n_rects}")
    heights = tuple(_power_term(chi, s, n) for n in range(1, n_rects + 1))
    return StepProfile(n_rects=n_rects, heights=heights, s=s, modulus=chi.modulus)


def _midpoint_quadrature(f, a: float, b: float, panels: int) -> complex:
    """Midpoint rule with `panels` equal panels (exact on per-panel constants
    and linear integrands)."""
    h = (b - a) / panels
    return sum((f(a + (i + 0.5) * h) for i in range(panels)), 0j) * h


def barycenter_quadrature(profile: StepProfile) -> tuple:
    """(xi, eta) by midpoint quadrature of the defining integrals.

    xi = integral(z * f(z)) / integral(f(z)),
    eta = (1/2) * integral(f(z)^2) / integral(f(z)), panels aligned to the
    unit steps so the quadrature is exact for the step integrands.
    """
    n = profile.n_rects
    area = _midpoint_quadrature(profile.height_at, 0.0, float(n), n)
    if area == 0:
        raise ZeroAreaError("step profile has total area exactly zero")
    moment = _midpoint_quadrature(lambda z: z * profile.height_at(z), 0.0, float(n), n)
    square = _midpoint_quadrature(lambda z: profile.height_at(z) ** 2, 0.0, float(n), n)
    return moment / area, square / (2 * area)


def barycenter(profile: StepProfile) -> tuple:
    """(xi, eta) of the step profile, from the closed forms

        xi  = sum((n - 1/2) * f_n) / sum(f_n)
        eta = (1/2) * sum(f_n^2) / sum(f_n)

    cross-checked against midpoint quadrature of the defining integrals
    (the two paths must agree to 1e-10 relative).  Raises ZeroAreaError when
    sum(f_n) is exactly zero.
    """
    heights = profile.heights
    area = sum(heights, 0j)
    if area == 0:
        raise ZeroAreaError("step profile has total area exactly zero")
    moment = sum(((n - 0.5) * f for n, f in enumerate(heights, start=1)), 0j)
    square = sum((f * f for f in heights), 0j)
    xi = moment / area
    eta = square / (2 * area)
    xi_q, eta_q = barycenter_quadrature(profile)
    scale = max(1.0, abs(xi), abs(eta))
    if abs(xi - xi_q) > _AGREEMENT_TOL * scale or abs(eta - eta_q) > _AGREEMENT_TOL * scale:
        raise ArithmeticError(
            f"closed-form and quadrature barycenters disagree: "
            f"({xi}, {eta}) vs ({xi_q}, {eta_q})"
        )
    return xi, eta


@dataclass(frozen=True)
class PappusReport:
    """The Pappus identity audit at one truncation: profile area S, solid
    volume V, barycenter (xi, eta), and residual |V - 2 pi eta S|."""

    profile_area: complex
    volume: complex
    xi: complex
    eta: complex
    residual: float

    @property
    def relative_residual(self) -> float:
        return self.residual / max(1.0, abs(self.volume))

    def to_json_dict(self) -> dict:
        return {
            "S": {"re": self.profile_area.real, "im": self.profile_area.imag},
            "V": {"re": self.volume.real, "im": self.volume.imag},
            "xi": {"re": self.xi.real, "im": self.xi.imag},
            "eta": {"re": self.eta.real, "im": self.eta.imag},
            "residual": self.residual,
        }


def pappus_check(chi: DirichletCharacter, s, n_rects: int) -> PappusReport:
    """Check V = 2 pi eta S at truncation N.

    S comes from the plain truncation sum, V from the cylinder volumes
    (independent arithmetic: squared character values against squared
    heights), and eta from the barycenter closed form, so the residual
    genuinely compares two computation paths.  Exact zero profile area
    raises ZeroAreaError (propagated from the barycenter).
    """
    s = as_lpoint(s)
    profile = step_profile(chi, s, n_rects)
    area = partial_sum(chi, s, n_rects)
    volume = sum((cylinder_volume(chi, s, n) for n in range(1, n_rects + 1)), 0j)
    xi, eta = barycenter(profile)
    residual = abs(volume - 2 * math.pi * eta * area)
    return PappusReport(
        profile_area=area, volume=volume, xi=xi, eta=eta, residual=residual
    )


def transformed_equation_residual(chi: DirichletCharacter, s, n_terms: int) -> tuple:
    """(S_N, W_N): the truncation sum and its squared-character companion
    W_N = sum(chi(n)^2 * n^-2s).  For real chi at t = 0 every W term is
    nonnegative, so W_N > 0 and is nondecreasing in N."""
    s = as_lpoint(s)
    if n_terms < 1:
        raise ValueError(f"need at least one term, got {n_terms}")
    series_sum = partial_sum(chi, s, n_terms)
    w_sum = sum((_power_term(chi, s, n, multiple=2) for n in range(1, n_terms + 1)), 0j)
    return series_sum, w_sum
