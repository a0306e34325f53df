"""Exact Hilbert-Kunz functions of Rees algebra ideals.

Closed forms for the lengths of R(I)/(I, It)^[s] (and relatives) with
brute-force staircase and Groebner oracles to verify them, all in
exact integer and rational arithmetic.
"""

from .combinatorics import (
    StirlingTable,
    binomial,
    binomial_poly_expand,
    cycle_count,
    alternating_binomial_sum,
    alternating_binomial_sum_closed_form,
    stirling_first,
    stirling_second,
)
from .hilbert_samuel import (
    AsymptoticCoefficients,
    HilbertContext,
    asymptotic_coefficients,
    c_of_d,
    hilbert_F,
    hilbert_H,
    reduction_number_power,
)
from .hk_formulas import (
    Dim1Input,
    PeriodicSequence,
    PiecewiseHKFormula,
    QuasiPolynomialHK,
    cm_sop_hk,
    cm_sop_hk_polynomial,
    compare_to_eto_yoshida,
    cordim1_hk,
    dim1_hk,
    ehk_cm_sop,
    ehk_rees_dim1,
    eto_yoshida_bound,
    sop_dim1_hk,
    stanley_reisner_ehk,
)
from .monomial_algebra import (
    InfiniteColength,
    Monomial,
    MonomialIdeal,
    ResourceCapExceeded,
    colength_by_inclusion_exclusion,
    minimalize,
    parse_ideal,
)
from .binomial_groebner import (
    BinomialRelation,
    GroebnerBasisBM,
    buchberger,
    ideals_equal,
    quotient_colength,
)
from .polynomials import Poly, interpolate
from .rees_oracle import (
    InconsistentSamples,
    InsufficientSamples,
    NonPolynomialSamples,
    OracleError,
    ReesInstanceDim1,
    ReesInstanceMonomial,
    SampleSet,
    StabilizationNotReached,
    alpha_table,
    estimate_ehk,
    fit_quasi_polynomial,
    rees_colength_dim1,
    rees_colength_monomial,
)

__version__ = "0.1.0"
