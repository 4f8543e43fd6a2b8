"""Exact algebra for rational matrix-valued functions over the Gaussian rationals.

The package provides, entirely in exact arithmetic:

* scalars in Q(i) and points of the extended complex plane (``scalars``),
* univariate polynomials and Q(i) root extraction (``poly``),
* reduced rational functions with paraconjugation and valuations (``ratfun``),
* rational matrices with Smith-McMillan structure, pole/zero degrees,
  McMillan degree and minimal right inverses (``ratmat``),
* para-unitary (all-pass) matrices and Blaschke-Potapov factorization
  (``allpass``),
* pole/zero cancellation analysis for matrix products (``cancellation``),
* spectra, spectral factors and a uniqueness harness for stochastically
  minimal factors with prescribed analyticity regions (``spectra``),
* a JSON-speaking command line front end (``cli``).
"""

from .scalars import Comparison, GaussianRational, INFINITY, Point
from .poly import Poly, gaussian_roots
from .ratfun import RatFun, blaschke
from .ratmat import RatMat, SMStructure
from .allpass import (
    AllPassFactorization,
    ElementaryFactor,
    degree_of_factorization,
    is_parahermitian,
    is_paraunitary,
    make_elementary,
    potapov_factorize,
)
from .cancellation import (
    CancellationReport,
    analyze_product,
    degree_deficit_identity_holds,
    paired_cancellation_holds,
    pole_additivity_holds,
    support_points,
)
from .spectra import (
    Region,
    Side,
    Spectrum,
    UniquenessResult,
    Verdict,
    analytic_in,
    generate_instance,
    is_spectral_factor,
    is_stochastically_minimal,
    perturb_with_allpass,
    psd_on_circle,
    region_contains,
    run_sweep,
    transfer_between,
    uniqueness_check,
)

__version__ = "0.1.0"

__all__ = [
    "AllPassFactorization",
    "CancellationReport",
    "Comparison",
    "ElementaryFactor",
    "GaussianRational",
    "INFINITY",
    "Point",
    "Poly",
    "RatFun",
    "RatMat",
    "Region",
    "SMStructure",
    "Side",
    "Spectrum",
    "UniquenessResult",
    "Verdict",
    "analytic_in",
    "analyze_product",
    "blaschke",
    "degree_deficit_identity_holds",
    "degree_of_factorization",
    "gaussian_roots",
    "generate_instance",
    "is_parahermitian",
    "is_paraunitary",
    "is_spectral_factor",
    "is_stochastically_minimal",
    "make_elementary",
    "paired_cancellation_holds",
    "perturb_with_allpass",
    "pole_additivity_holds",
    "potapov_factorize",
    "psd_on_circle",
    "region_contains",
    "run_sweep",
    "support_points",
    "transfer_between",
    "uniqueness_check",
]
