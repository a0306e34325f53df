"""Closed-form Hilbert-Kunz functions of Rees algebra ideals.

Covers three regimes:

* dimension 1, ideal (I, It): quasi-polynomial in e with leading term
  e0 * q^2, assembled from the ring invariants (e0, e1, r, rho), the
  length table of small powers and the periodic corrections alpha;
* dimension 1, (J, It) with I a parameter ideal: q^2 e0(J) + q alpha_J(e);
* dimension d >= 2, parameter ideal, (I, It): an exact piecewise
  polynomial in s, with branches selected by comparing s to d.

All outputs are exact; multiplicities are rationals, lengths integers.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, replace
from fractions import Fraction
from typing import Optional, Sequence

from .combinatorics import binomial, binomial_poly_expand
from .hilbert_samuel import c_of_d
from .polynomials import Poly


@dataclass(frozen=True)
class PeriodicSequence:
    """Periodic integer sequence; the value at index e is values[e mod period]."""

    values: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.values:
            raise ValueError("period must be at least 1")

    @property
    def period(self) -> int:
        return len(self.values)

    def value_at(self, e: int) -> int:
        return self.values[e % self.period]

    @classmethod
    def constant(cls, value: int) -> "PeriodicSequence":
        return cls((value,))


@dataclass(frozen=True)
class QuasiPolynomialHK:
    """One exact polynomial in q per residue class of e modulo the period.

    ``valid_from_e`` is metadata: agreement with actual lengths is only
    asserted for e at or above that threshold (when known).
    """

    polys: tuple[Poly, ...]
    prime: Optional[int] = None
    valid_from_e: Optional[int] = None

    def __post_init__(self) -> None:
        if not self.polys:
            raise ValueError("period must be at least 1")
        degrees = {p.degree for p in self.polys}
        if len(degrees) != 1:
            raise ValueError(f"residue-class polynomials have mixed degrees {degrees}")

    @property
    def period(self) -> int:
        return len(self.polys)

    @property
    def degree(self) -> int:
        return self.polys[0].degree

    def poly_for(self, e: int) -> Poly:
        return self.polys[e % self.period]

    def value_at(self, e: int) -> int:
        """Evaluate at q = p^e; requires the prime to be set."""
        if self.prime is None:
            raise ValueError("no prime attached; evaluate poly_for(e) directly")
        value = self.poly_for(e)(self.prime**e)
        if value.denominator != 1:
            raise ArithmeticError(f"non-integral length {value} at e={e}")
        return int(value)

    def format(self, var: str = "q") -> list[str]:
        return [p.format(var) for p in self.polys]


@dataclass(frozen=True)
class Dim1Input:
    """Invariants of an m-primary ideal of a 1-dimensional local ring.

    lengths[n] is the length of R/I^n for n = 0 .. max(r-1, rho);
    alpha[n] is the periodic correction for I^n, n = 0 .. r-1.  rho may
    be omitted (None) when delegating to the Cohen-Macaulay case.
    """

    e0: int
    e1: int
    r: int
    rho: Optional[int]
    lengths: tuple[int, ...]
    alpha: tuple[PeriodicSequence, ...]
    p: int

    def __post_init__(self) -> None:
        if self.e0 < 1:
            raise ValueError("e0 must be positive")
        if self.r < 0:
            raise ValueError("reduction number must be nonnegative")
        if len(self.alpha) != self.r:
            raise ValueError(f"need exactly r={self.r} alpha sequences, got {len(self.alpha)}")
        needed = max(self.r - 1, self.rho if self.rho is not None else -1) + 1
        if len(self.lengths) < needed:
            raise ValueError(f"need lengths for n = 0..{needed - 1}, got {len(self.lengths)}")
        if self.lengths:
            if self.lengths[0] != 0:
                raise ValueError("lengths[0] is the length of R/R and must be 0")
            if any(a > b for a, b in zip(self.lengths, self.lengths[1:])):
                raise ValueError("lengths must be nondecreasing")


def _lcm_period(alpha: Sequence[PeriodicSequence]) -> int:
    period = 1
    for seq in alpha:
        period = math.lcm(period, seq.period)
    return period


def dim1_hk(inp: Dim1Input) -> QuasiPolynomialHK:
    """Quasi-polynomial for the length of R(I)/(I, It)^[q], large e.

    The constant part depends on how the reduction number r compares to
    the postulation number rho:

        rho + 1 <= r:  -e0 C(r,2) + e1 r + sum_{n<r} len(n)
        r < rho + 1:   -e0 (r(r-1) - rho(rho+1)/2) + (2r-rho-1) e1 + beta

    with beta = sum_{n<r} len(n) - sum_{n=r}^{rho} len(n); each residue
    class additionally picks up 2 * sum_{n<r} alpha_n(e).
    """
    if inp.rho is None:
        raise ValueError("rho is required; use cordim1_hk to default it")
    e0, e1, r, rho = inp.e0, inp.e1, inp.r, inp.rho
    if rho + 1 <= r:
        base = -e0 * binomial(r, 2) + e1 * r + sum(inp.lengths[:r])
    else:
        beta = sum(inp.lengths[:r]) - sum(inp.lengths[r : rho + 1])
        base = (
            -e0 * (r * (r - 1) - rho * (rho + 1) // 2)
            + (2 * r - rho - 1) * e1
            + beta
        )
    period = _lcm_period(inp.alpha)
    polys = []
    for residue in range(period):
        const = base + 2 * sum(seq.value_at(residue) for seq in inp.alpha)
        polys.append(Poly([const, 0, e0]))
    return QuasiPolynomialHK(tuple(polys), prime=inp.p)


def cordim1_hk(inp: Dim1Input) -> QuasiPolynomialHK:
    """Cohen-Macaulay ring: the postulation number is r - 1, always case one."""
    if inp.rho is not None:
        raise ValueError("rho must be omitted; it is forced to r - 1 here")
    return dim1_hk(replace(inp, rho=inp.r - 1))


def sop_dim1_hk(e0J: int, alphaJ: PeriodicSequence, p: int) -> QuasiPolynomialHK:
    """Length of R(I)/(J, It)^[q] for parameter I: q^2 e0(J) + q alpha_J(e)."""
    if e0J < 1:
        raise ValueError("e0J must be positive")
    polys = tuple(
        Poly([0, alphaJ.value_at(residue), e0J]) for residue in range(alphaJ.period)
    )
    return QuasiPolynomialHK(polys, prime=p)


def ehk_rees_dim1(e0J: int) -> int:
    """Hilbert-Kunz multiplicity of (J, It)R(I) in dimension 1: e0(J) itself."""
    if e0J < 1:
        raise ValueError("e0J must be positive")
    return e0J


def _validate_cm_args(d: int, e0: int, s: int) -> None:
    if d < 2:
        raise ValueError("d must be at least 2")
    if e0 < 1:
        raise ValueError("e0 must be positive")
    if s < 1:
        raise ValueError("s must be positive")


def cm_sop_hk(d: int, e0: int, s: int) -> int:
    """Length of R(I)/(I, It)^[s] for a parameter ideal, exact branch evaluation.

    For s >= d:

        e0 [ d s^(d+1)/2 - s^d (d-2)/2 + d C(s+d-1, d+1) ]

    For s < d, write d = k1 s + k2 (0 <= k2 < s) and use the matching
    alternating-sum display (off = 1 when k2 = 0, else 0):

        e0 [ (d-k1+off) s^(d+1) + d C(s+d-1, d+1)
             - sum_{i=0}^{d-1} (-1)^i C(d,i) C((d-i-k1+off)s + d-1, d+1) ]
    """
    _validate_cm_args(d, e0, s)
    if s >= d:
        value = (
            Fraction(d * s ** (d + 1), 2)
            - Fraction(s**d * (d - 2), 2)
            + d * binomial(s + d - 1, d + 1)
        )
        if value.denominator != 1:
            raise ArithmeticError(f"non-integral length {value}")
        return e0 * int(value)
    k1, k2 = divmod(d, s)
    off = 1 if k2 == 0 else 0
    total = (d - k1 + off) * s ** (d + 1) + d * binomial(s + d - 1, d + 1)
    for i in range(d):
        total -= (-1) ** i * binomial(d, i) * binomial((d - i - k1 + off) * s + d - 1, d + 1)
    return e0 * total


def cm_sop_hk_polynomial(d: int, e0: int) -> Poly:
    """The s >= d closed form expanded exactly as a polynomial in s."""
    if d < 2:
        raise ValueError("d must be at least 2")
    if e0 < 1:
        raise ValueError("e0 must be positive")
    poly = (
        Poly.term(Fraction(d, 2), d + 1)
        - Poly.term(Fraction(d - 2, 2), d)
        + binomial_poly_expand(d) * d
    )
    return poly * e0


def ehk_cm_sop(d: int, e0: int) -> Fraction:
    """Generalized Hilbert-Kunz multiplicity of (I, It)R(I): c(d) e0."""
    if d < 1:
        raise ValueError("d must be at least 1")
    if e0 < 1:
        raise ValueError("e0 must be positive")
    return c_of_d(d) * e0


def eto_yoshida_bound(d: int, e0: int) -> Fraction:
    """Upper bound c(d) e0 for the multiplicity of the Rees algebra."""
    return ehk_cm_sop(d, e0)


def compare_to_eto_yoshida(value: Fraction, d: int, e0: int) -> str:
    """Classify a computed multiplicity against the bound: 'equal', 'below' or 'violation'."""
    bound = eto_yoshida_bound(d, e0)
    if value == bound:
        return "equal"
    if value < bound:
        return "below"
    return "violation"


def stanley_reisner_ehk(d: int, facets: int) -> Fraction:
    """Multiplicity of the Rees algebra of the irrelevant maximal ideal: c(d) f_{d-1}."""
    if d < 2:
        raise ValueError("d must be at least 2")
    if facets < 1:
        raise ValueError("facet count must be positive")
    return c_of_d(d) * facets


@dataclass(frozen=True)
class PiecewiseHKFormula:
    """Branch-aware evaluator for the dimension >= 2 parameter-ideal formula."""

    d: int
    e0: int

    def __post_init__(self) -> None:
        if self.d < 2:
            raise ValueError("d must be at least 2")
        if self.e0 < 1:
            raise ValueError("e0 must be positive")

    def branch(self, s: int) -> tuple[str, int, int]:
        """Branch label and the division data (k1, k2) of d = k1 s + k2."""
        if s < 1:
            raise ValueError("s must be positive")
        k1, k2 = divmod(self.d, s)
        if s >= self.d:
            return ("s>=d", k1, k2)
        return ("s<d,k2=0" if k2 == 0 else "s<d,k2!=0", k1, k2)

    def value(self, s: int) -> int:
        return cm_sop_hk(self.d, self.e0, s)

    def polynomial(self) -> Poly:
        return cm_sop_hk_polynomial(self.d, self.e0)

    def multiplicity(self) -> Fraction:
        return ehk_cm_sop(self.d, self.e0)
