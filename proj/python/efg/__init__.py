from ._core import (
    Database,
    DatabaseNotFound,
    Error,
    IoError,
    ParseError,
    UnknownColumn,
    UnsupportedOrder,
    BudgetExceeded,
    automorphism_count,
    build_database,
    canonical_code,
    canonical_graph6,
    characteristic_polynomial,
    chromatic_polynomial,
    columns,
    enumerate_connected,
    fractional_chromatic_number,
    graph6_of_code,
    invariants,
    laplacian_polynomial,
    oeis_lookup,
    spectral_gap,
    submission_filter,
    tutte_polynomial,
)
