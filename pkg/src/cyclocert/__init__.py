"""Deterministic prime generation with verifiable cyclotomic ring certificates.

Construct candidates N with a known large prime factor q of Phi_p(N), then
certify primality with a constant number of exponentiations in the ring
Z[x]/(N, x**p - d).
"""

from .bench import BenchReport, BenchRow, run_bench
from .carmichael import (
    CarmichaelReport,
    carmichael_direct,
    factorize,
    korselt_check,
    search_carmichael,
)
from .certfile import (
    CertFileError,
    CertFormatError,
    CertInvariantError,
    CertVersionError,
    cert_decode,
    cert_encode,
)
from .certify import (
    CERT_FORMAT_VERSION,
    Certificate,
    GenerationError,
    Outcome,
    Phase1Result,
    Phase1Status,
    Reason,
    Verdict,
    generate_certificate,
    phase1_generate,
    phase2_cyclotomic,
    sprp_filter,
    unitary_project,
    verify,
)
from .chain import (
    ChainResult,
    ChainStatus,
    cyclotomic_roots,
    forward_construct,
    forward_search,
    reversed_construct,
    select_base_d,
    structural_bound_ok,
)
from .numtheory import (
    SeedPrime,
    SeedTrust,
    is_probable_prime,
    make_seed,
    mod_pow,
    monogenic_ok,
    pth_residue,
    sqrt_minus3,
)
from .ring import (
    RingContext,
    RingElement,
    UnitClassification,
    UnitKind,
    classify_unit,
    cyclotomic_value,
    element,
    make_context,
    one,
    ring_mul,
    ring_norm,
    ring_pow,
    scalar,
    sylvester_norm,
    theta,
    unchecked_context,
    zero,
)

__all__ = [
    "BenchReport",
    "BenchRow",
    "CERT_FORMAT_VERSION",
    "CarmichaelReport",
    "CertFileError",
    "CertFormatError",
    "CertInvariantError",
    "CertVersionError",
    "Certificate",
    "ChainResult",
    "ChainStatus",
    "GenerationError",
    "Outcome",
    "Phase1Result",
    "Phase1Status",
    "Reason",
    "RingContext",
    "RingElement",
    "SeedPrime",
    "SeedTrust",
    "UnitClassification",
    "UnitKind",
    "Verdict",
    "carmichael_direct",
    "cert_decode",
    "cert_encode",
    "classify_unit",
    "cyclotomic_roots",
    "cyclotomic_value",
    "element",
    "factorize",
    "forward_construct",
    "forward_search",
    "generate_certificate",
    "is_probable_prime",
    "korselt_check",
    "make_context",
    "make_seed",
    "mod_pow",
    "monogenic_ok",
    "one",
    "phase1_generate",
    "phase2_cyclotomic",
    "pth_residue",
    "reversed_construct",
    "ring_mul",
    "ring_norm",
    "ring_pow",
    "run_bench",
    "scalar",
    "search_carmichael",
    "select_base_d",
    "sprp_filter",
    "sqrt_minus3",
    "structural_bound_ok",
    "sylvester_norm",
    "theta",
    "unchecked_context",
    "unitary_project",
    "verify",
    "zero",
]

__version__ = "0.1.0"
