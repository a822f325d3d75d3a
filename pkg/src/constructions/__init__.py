"""
Graph Constructions
Parametric families, the verified catalog, and kernel-preserving operations
"""

from .result import ConstructionResult, certify_kernel_vectors
from .families import path, cycle, complete, satellite, satellite_kernel_vector, cartesian_product
from .catalog import CatalogEntry, catalog, catalog_names, get_catalog, build_catalog, check_entry
from .operations import (
    k2_product_ack,
    add_vertex_dominating,
    nut_extension,
    multi_attach,
    duplicate_vertices,
)

__all__ = [
    "ConstructionResult",
    "certify_kernel_vectors",
    "path",
    "cycle",
    "complete",
    "satellite",
    "satellite_kernel_vector",
    "cartesian_product",
    "CatalogEntry",
    "catalog",
    "catalog_names",
    "get_catalog",
    "build_catalog",
    "check_entry",
    "k2_product_ack",
    "add_vertex_dominating",
    "nut_extension",
    "multi_attach",
    "duplicate_vertices",
]
