"""Formal (unconjugated) bilinear geometry over C^n.

Vectors of complex numbers are given the *bilinear* pairing sum(u_k * v_k)
with no conjugation, so "lengths" are formal: the squared norm of a nonzero
vector can be zero (isotropic), negative, or non-real, and square roots are
taken on the principal branch with argument in (-pi/2, pi/2].  In this
geometry the cosine theorem

    (|AB|^2 + |AC|^2 - |BC|^2) / 2 = AB . AC

is an exact polynomial identity, and the triangle area

    area = principal_sqrt(|AB|^2 |AC|^2 - (AB . AC)^2) / 2

satisfies the Gram identity 4*area^2 + (AB . AC)^2 = |AB|^2 |AC|^2 and is
symmetric between the (AB, AC) and (AC, BC) vertex forms.

`verify_appendix` recomputes a frozen table of worked three-point examples
(two points in C^2, C^3, and C^4 with small Gaussian-integer coordinates)
and reports each recomputed quantity against its expected value.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass

__all__ = [
    "AppendixCheck",
    "CVector",
    "DimensionMismatchError",
    "TriangleReport",
    "bilinear_dot",
    "cosine_theorem_check",
    "formal_norm_sq",
    "principal_sqrt",
    "triangle_area",
    "triangle_report",
    "verify_appendix",
]


class DimensionMismatchError(ValueError):
    """Raised when two vectors of different dimensions are paired."""


@dataclass(frozen=True)
class CVector:
    """A point or displacement in C^n, stored as a tuple of complex numbers."""

    components: tuple

    def __init__(self, components):
        object.__setattr__(self, "components", tuple(complex(c) for c in components))

    @property
    def dim(self) -> int:
        return len(self.components)

    def __sub__(self, other: "CVector") -> "CVector":
        if self.dim != other.dim:
            raise DimensionMismatchError(f"dimensions differ: {self.dim} vs {other.dim}")
        return CVector(a - b for a, b in zip(self.components, other.components))


@dataclass(frozen=True)
class TriangleReport:
    """All bilinear data of the triangle ABC: squared side norms, both vertex
    dots, both formal cosines, and the formal area."""

    ab_sq: complex
    ac_sq: complex
    bc_sq: complex
    dot_ab_ac: complex
    dot_ac_bc: complex
    cos_ab_ac: complex
    cos_ac_bc: complex
    area: complex


def bilinear_dot(u: CVector, v: CVector) -> complex:
    """Unconjugated pairing sum(u_k * v_k)."""
    if u.dim != v.dim:
        raise DimensionMismatchError(f"dimensions differ: {u.dim} vs {v.dim}")
    return sum((a * b for a, b in zip(u.components, v.components)), 0j)


def formal_norm_sq(u: CVector) -> complex:
    """Formal squared norm sum(u_k^2); may be zero, negative, or non-real."""
    return bilinear_dot(u, u)


def principal_sqrt(z: complex) -> complex:
    """Square root with argument in (-pi/2, pi/2].

    Negative reals map to +i * sqrt(|z|); a negative-zero imaginary part is
    normalized away first so the branch is a function of the value alone.
    """
    z = complex(z)
    if z.imag == 0.0:
        z = complex(z.real, 0.0)
    return cmath.sqrt(z)


def cosine_theorem_check(a: CVector, b: CVector, c: CVector) -> tuple:
    """(lhs_half, dot, residual) for the cosine theorem at vertex A.

    lhs_half = (|AB|^2 + |AC|^2 - |BC|^2) / 2 and dot = AB . AC; the two are
    equal as polynomials in the coordinates, so residual = |lhs_half - dot|
    is rounding-level for any inputs.
    """
    ab, ac, bc = b - a, c - a, c - b
    lhs_half = (formal_norm_sq(ab) + formal_norm_sq(ac) - formal_norm_sq(bc)) / 2
    dot = bilinear_dot(ab, ac)
    return lhs_half, dot, abs(lhs_half - dot)


def triangle_area(a: CVector, b: CVector, c: CVector) -> complex:
    """Formal area principal_sqrt(|AB|^2 |AC|^2 - (AB . AC)^2) / 2."""
    ab, ac = b - a, c - a
    gram = formal_norm_sq(ab) * formal_norm_sq(ac) - bilinear_dot(ab, ac) ** 2
    return principal_sqrt(gram) / 2


def _formal_cos(u: CVector, v: CVector) -> complex:
    nu = principal_sqrt(formal_norm_sq(u))
    nv = principal_sqrt(formal_norm_sq(v))
    return bilinear_dot(u, v) / (nu * nv)


def triangle_report(a: CVector, b: CVector, c: CVector) -> TriangleReport:
    """Full bilinear triangle data for the points A, B, C."""
    ab, ac, bc = b - a, c - a, c - b
    return TriangleReport(
        ab_sq=formal_norm_sq(ab),
        ac_sq=formal_norm_sq(ac),
        bc_sq=formal_norm_sq(bc),
        dot_ab_ac=bilinear_dot(ab, ac),
        dot_ac_bc=bilinear_dot(ac, bc),
        cos_ab_ac=_formal_cos(ab, ac),
        cos_ac_bc=_formal_cos(ac, bc),
        area=triangle_area(a, b, c),
    )


@dataclass(frozen=True)
class AppendixCheck:
    """One recomputed golden quantity: example number, quantity name, the
    recomputed and expected values, |difference| relative to the expected
    scale, and a pass flag."""

    example: int
    quantity: str
    computed: complex
    expected: complex
    residual: float
    ok: bool


# Golden worked examples: three points each, with every published quantity.
# Expected dots and squared norms are exact Gaussian integers; expected areas
# are coef * principal_sqrt(radicand) with exact integer radicands.
_I = 1j
APPENDIX_POINTS = {
    1: (
        CVector([1 + _I, 3]),
        CVector([-_I, 2 * _I]),
        CVector([1, -_I]),
    ),
    2: (
        CVector([1 + _I, 1 - _I, 2 * _I]),
        CVector([1 - _I, 1 + _I, -2 * _I]),
        CVector([1, 0, _I]),
    ),
    3: (
        CVector([8 * _I, 14, 8 - _I, 1]),
        CVector([6, 15 * _I, 17, -8]),
        CVector([3 - _I, 10 + 7 * _I, 11, 3 * _I]),
    ),
}

APPENDIX_EXPECTED = {
    1: {
        "ab_sq": 2 - 8j,
        "ac_sq": 7 + 6j,
        "bc_sq": -9 + 2j,
        "cos_lhs_ab_ac": 9 - 2j,
        "dot_ab_ac": 9 - 2j,
        "cos_lhs_ac_bc": -2 + 8j,
        "dot_ac_bc": -2 + 8j,
        "area": (0.5, -15 - 8j),
        "area_alt": (0.5, -15 - 8j),
    },
    2: {
        "ab_sq": -24 + 0j,
        "ac_sq": -2 - 2j,
        "bc_sq": -10 + 2j,
        "cos_lhs_ab_ac": -8 - 2j,
        "dot_ab_ac": -8 - 2j,
        "cos_lhs_ac_bc": 6 + 0j,
        "dot_ac_bc": 6 + 0j,
        "area": (1.0, -3 + 4j),
        "area_alt": (1.0, -3 + 4j),
    },
    3: {
        "ab_sq": 104 - 498j,
        "ac_sq": -105 - 110j,
        "bc_sq": 135 - 106j,
        "cos_lhs_ab_ac": -68 - 251j,
        "dot_ab_ac": -68 - 251j,
        "cos_lhs_ac_bc": -37 + 141j,
        "dot_ac_bc": -37 + 141j,
        "area": (0.5, -7323 + 6714j),
        "area_alt": (0.5, -7323 + 6714j),
    },
}

_REL_TOL = 1e-12


def _expected_value(spec) -> complex:
    if isinstance(spec, tuple):
        coef, radicand = spec
        return coef * principal_sqrt(radicand)
    return complex(spec)


def _area_from_pair(u: CVector, v: CVector) -> complex:
    gram = formal_norm_sq(u) * formal_norm_sq(v) - bilinear_dot(u, v) ** 2
    return principal_sqrt(gram) / 2


def verify_appendix(expected: dict | None = None) -> list[AppendixCheck]:
    """Recompute every golden example quantity and compare to the table.

    `expected` defaults to the frozen table; passing a modified copy is how
    tests exercise the mismatch path.  Residuals are |computed - expected| /
    max(1, |expected|) and must stay within 1e-12 for `ok`.
    """
    if expected is None:
        expected = APPENDIX_EXPECTED
    checks = []
    for example, (a, b, c) in APPENDIX_POINTS.items():
        ab, ac, bc = b - a, c - a, c - b
        lhs_a, dot_a, _ = cosine_theorem_check(a, b, c)
        # Cosine theorem at the (AC, BC) pairing: sides AC, BC with third AB.
        lhs_c = (formal_norm_sq(ac) + formal_norm_sq(bc) - formal_norm_sq(ab)) / 2
        dot_c = bilinear_dot(ac, bc)
        computed = {
            "ab_sq": formal_norm_sq(ab),
            "ac_sq": formal_norm_sq(ac),
            "bc_sq": formal_norm_sq(bc),
            "cos_lhs_ab_ac": lhs_a,
            "dot_ab_ac": dot_a,
            "cos_lhs_ac_bc": lhs_c,
            "dot_ac_bc": dot_c,
            "area": triangle_area(a, b, c),
            "area_alt": _area_from_pair(ac, bc),
        }
        for quantity, got in computed.items():
            want = _expected_value(expected[example][quantity])
            residual = abs(got - want) / max(1.0, abs(want))
            checks.append(
                AppendixCheck(
                    example=example,
                    quantity=quantity,
                    computed=got,
                    expected=want,
                    residual=residual,
                    ok=residual <= _REL_TOL,
                )
            )
    return checks
