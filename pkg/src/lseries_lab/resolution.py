"""Amplitude/phase vector resolutions of a truncated L-series.

The truncation sum(chi(n) * n^-s, n <= N) factors componentwise into two
length-N vectors in either of two ways:

* ``amplitude_chi`` -- a_vec[n] = chi(n) / n^sigma carries the character,
  p_vec[n] = n^-it = cos(t ln n) - i sin(t ln n) is the bare phase;
* ``phase_chi`` -- a_vec[n] = 1 / n^sigma is the bare amplitude,
  p_vec[n] = chi(n) * n^-it carries the character.

In both variants a_vec[k] * p_vec[k] = chi(k+1) * (k+1)^-s, so the bilinear
dot of the pair reproduces the truncation (``reconstruct_identity``).  Formal
norms and cosines use the unconjugated pairing from :mod:`lseries_lab.cgeom`;
a vector whose formal norm is exactly zero is *isotropic* and has no cosine
(that is a distinct error, not a division blowup).  ``phase_series_sums``
exposes the raw phase partial sums (sum cos(t ln n), sum sin(t ln n)); at
t = 0 the cosine sum counts terms exactly (integer path), which is the
divergence witness the audit module fits.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .characters import DirichletCharacter
from .cgeom import principal_sqrt
from .lseries import LPoint, as_lpoint, partial_sum

__all__ = [
    "AMPLITUDE_CHI",
    "IsotropicVectorError",
    "PHASE_CHI",
    "ResolutionVectors",
    "VARIANTS",
    "build_vectors",
    "formal_cosine",
    "formal_norm",
    "phase_series_sums",
    "reconstruct_identity",
]

AMPLITUDE_CHI = "amplitude_chi"
PHASE_CHI = "phase_chi"
VARIANTS = (AMPLITUDE_CHI, PHASE_CHI)


class IsotropicVectorError(ValueError):
    """A vector with formal norm exactly zero has no formal cosine."""


@dataclass(frozen=True)
class ResolutionVectors:
    """The two factor vectors of a truncated series at s, entry k <-> n = k+1."""

    n_terms: int
    variant: str
    a_vec: tuple
    p_vec: tuple
    s: LPoint


def build_vectors(
    chi: DirichletCharacter, s, n_terms: int, variant: str
) -> ResolutionVectors:
    """Factor the N-term truncation at s into (a_vec, p_vec) per `variant`."""
    s = as_lpoint(s)
    if n_terms < 1:
        raise ValueError(f"need at least one term, got {n_terms}")
    if variant not in VARIANTS:
        raise ValueError(f"unknown variant {variant!r}; expected one of {VARIANTS}")
    sigma, t = s.sigma, s.t
    a_vec = []
    p_vec = []
    for n in range(1, n_terms + 1):
        amp = n ** (-sigma)
        if t == 0.0:
            phase = complex(1.0, 0.0)
        else:
            angle = t * math.log(n)
            phase = complex(math.cos(angle), -math.sin(angle))
        value = chi.value_complex(n)
        if variant == AMPLITUDE_CHI:
            a_vec.append(value * amp)
            p_vec.append(phase)
        else:
            a_vec.append(complex(amp, 0.0))
            p_vec.append(value * phase)
    return ResolutionVectors(
        n_terms=n_terms, variant=variant, a_vec=tuple(a_vec), p_vec=tuple(p_vec), s=s
    )


def formal_norm(vec) -> complex:
    """principal_sqrt(sum v_k^2); may be 0 (isotropic) or non-real."""
    return principal_sqrt(sum((v * v for v in vec), 0j))


def formal_cosine(u, v) -> complex:
    """Bilinear dot over the product of formal norms.

    Raises IsotropicVectorError if either formal norm is exactly zero --
    e.g. (1, i) is a nonzero isotropic vector.
    """
    if len(u) != len(v):
        raise ValueError(f"vector lengths differ: {len(u)} vs {len(v)}")
    norm_u = formal_norm(u)
    if norm_u == 0:
        raise IsotropicVectorError("first vector is isotropic (formal norm 0)")
    norm_v = formal_norm(v)
    if norm_v == 0:
        raise IsotropicVectorError("second vector is isotropic (formal norm 0)")
    dot = sum((a * b for a, b in zip(u, v)), 0j)
    return dot / (norm_u * norm_v)


def reconstruct_identity(
    chi: DirichletCharacter, s, n_terms: int, variant: str
) -> tuple:
    """(lhs, rhs, residual): bilinear dot of the factor vectors vs the
    direct truncation.  The residual |lhs - rhs| sits at rounding level for
    every N -- the factorization is exact term by term."""
    vectors = build_vectors(chi, s, n_terms, variant)
    lhs = sum((a * p for a, p in zip(vectors.a_vec, vectors.p_vec)), 0j)
    rhs = partial_sum(chi, s, n_terms)
    return lhs, rhs, abs(lhs - rhs)


def phase_series_sums(t: float, n_terms: int) -> tuple:
    """(sum cos(t ln n), sum sin(t ln n)) for n = 1..n_terms.

    At t = 0 every cosine term is exactly 1 and every sine term exactly 0,
    so the sums are (n_terms, 0) by integer counting -- no rounding.
    """
    if n_terms < 1:
        raise ValueError(f"need at least one term, got {n_terms}")
    if t == 0.0:
        return float(n_terms), 0.0
    cos_sum = 0.0
    sin_sum = 0.0
    for n in range(1, n_terms + 1):
        angle = t * math.log(n)
        cos_sum += math.cos(angle)
        sin_sum += math.sin(angle)
    return cos_sum, sin_sum
