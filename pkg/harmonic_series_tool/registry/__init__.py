"""
Registry Package

Identity catalog and verification runner.
"""
from .catalog import (
    CATALOG,
    get_identity,
    bind_params,
    parse_rational,
    sweep_bindings,
)

from .runner import (
    list_identities,
    evaluate_side,
    verify,
    verify_all,
    select_records,
)

__all__ = [
    # Catalog
    'CATALOG',
    'get_identity',
    'bind_params',
    'parse_rational',
    'sweep_bindings',

    # Verification
    'list_identities',
    'evaluate_side',
    'verify',
    'verify_all',
    'select_records',
]
