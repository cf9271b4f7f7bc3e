"""Conditional (k, r)-coloring of graphs: exact search, closed forms and constructions."""

from condcolor.graph import Graph, InputError
from condcolor.kernel import Coloring, VerificationReport, verify_conditional
from condcolor.solver import ChiCertificate, compute_chi_r

__all__ = [
    "ChiCertificate",
    "Coloring",
    "Graph",
    "InputError",
    "VerificationReport",
    "compute_chi_r",
    "verify_conditional",
]
