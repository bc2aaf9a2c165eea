"""Exact q-series engine for overpartition rank differences.

Thin Python veneer over the C++ core: catalog lookup, identity
verification, rank count tables, rank-difference series, and named series
expansion.  All coefficients are exact rationals serialized as decimal
strings.
"""

try:
    # Installed layout: the extension lives inside the package.
    from ._qrank import (
        catalog_ids,
        catalog_info,
        count_table,
        overpartition_count,
        rank_diff,
        series_coeffs,
        verify,
        verify_all,
    )
except ImportError:
    # Build-tree layout: the extension sits on sys.path by itself.
    from _qrank import (
        catalog_ids,
        catalog_info,
        count_table,
        overpartition_count,
        rank_diff,
        series_coeffs,
        verify,
        verify_all,
    )

__all__ = [
    "catalog_ids",
    "catalog_info",
    "count_table",
    "overpartition_count",
    "rank_diff",
    "series_coeffs",
    "verify",
    "verify_all",
]

__version__ = "1.0.0"
