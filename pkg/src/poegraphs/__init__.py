"""Prime-order-element graphs of finite Abelian groups.

Construction of the graphs, exact structural decomposition and spectra,
and mechanical verification of the known structural and spectral results
at desk scale.
"""

from .charpoly import CharPolyExact, char_poly
from .errors import InputError, ResourceLimitError, SpecSyntaxError
from .graph import PoeGraph, build_poe_graph
from .groups import Element, GroupSpec, PrimePowerDecomposition
from .isomorphism import IsoResult, graphs_isomorphic
from .partitions import Partition, coarsest_equitable_partition, quotient_divides, verify_equitable
from .primes import is_prime
from .spectral import (
    SpectrumSummary,
    integer_roots_with_multiplicity,
    numeric_eigenvalues,
    predicted_spectrum,
    spectrum_of_graph,
    verify_spectrum,
)
from .structure import Component, connected_components, distance
from .theorems import Finding, StructurePrediction, TheoremCheck, predict_structure, verify_structure

__version__ = "0.1.0"

__all__ = [
    "CharPolyExact",
    "Component",
    "Element",
    "Finding",
    "GroupSpec",
    "InputError",
    "IsoResult",
    "Partition",
    "PoeGraph",
    "PrimePowerDecomposition",
    "ResourceLimitError",
    "SpecSyntaxError",
    "SpectrumSummary",
    "StructurePrediction",
    "TheoremCheck",
    "build_poe_graph",
    "char_poly",
    "coarsest_equitable_partition",
    "connected_components",
    "distance",
    "graphs_isomorphic",
    "integer_roots_with_multiplicity",
    "is_prime",
    "numeric_eigenvalues",
    "predict_structure",
    "predicted_spectrum",
    "quotient_divides",
    "spectrum_of_graph",
    "verify_equitable",
    "verify_spectrum",
    "verify_structure",
]
