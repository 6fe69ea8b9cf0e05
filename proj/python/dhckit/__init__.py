"""Exact combinatorics of d-series, unipotent block shadows, symbol calculus,
and wreath-product character tables.

Everything is computed in exact integer / cyclotomic arithmetic; big values
cross the boundary as Python ints, polynomials as display strings.
"""

from ._core import (
    __version__,
    acceptance,
    beta_set,
    criterion,
    cyclotomic,
    d_core,
    degree_ratio,
    distinct_power_products,
    ell_part,
    ennola_delta,
    family_key,
    gl_order,
    hook_degree_valuation,
    in_regular_set,
    levi_shadows,
    minimal_symbols,
    mn_value,
    one_step,
    order_mod,
    partitions_of,
    registry_jsonl,
    registry_rows,
    series_partition,
    symbol,
    symbol_series,
    unipotent_blocks,
    v_valuation,
    wreath_table,
)

__all__ = [
    "__version__",
    "acceptance",
    "beta_set",
    "criterion",
    "cyclotomic",
    "d_core",
    "degree_ratio",
    "distinct_power_products",
    "ell_part",
    "ennola_delta",
    "family_key",
    "gl_order",
    "hook_degree_valuation",
    "in_regular_set",
    "levi_shadows",
    "minimal_symbols",
    "mn_value",
    "one_step",
    "order_mod",
    "partitions_of",
    "registry_jsonl",
    "registry_rows",
    "series_partition",
    "symbol",
    "symbol_series",
    "unipotent_blocks",
    "v_valuation",
    "wreath_table",
]
