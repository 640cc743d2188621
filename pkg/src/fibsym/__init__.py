"""Symmetric numerical semigroups generated by Fibonacci and Lucas triples."""

from .classification import (
    Family,
    IndexTriple,
    OracleConfidence,
    Reason,
    Status,
    Verdict,
    classify,
    classify_fibonacci,
    classify_generators,
    classify_generic,
    classify_lucas,
    fibonacci_sufficient_inequality,
    lucas_sufficient_inequality,
    sweep,
)
from .errors import (
    BoundTooSmall,
    NonMinimalGenerators,
    NotSymmetric,
    OracleInfeasible,
    SemigroupError,
    TruncationExceeded,
)
from .kernel import (
    GenSet2,
    GenSet3,
    HilbertForm,
    RelationMatrix,
    SymmetricCertificate,
    frobenius2,
    hilbert_coefficient,
    is_minimal_genset,
    johnson_matrix,
    membership2,
    minimal_relations,
    symmetric_closed_forms,
)
from .oracle import OracleReport, check_equivalence, enumerate_semigroup
from .sequences import (
    fib,
    fib_gcd,
    lucas,
    lucas_coprime,
    lucas_gcd,
    lucas_is_even,
    two_adic_split,
)

__version__ = "0.1.0"
