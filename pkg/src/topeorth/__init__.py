"""Tope decompositions along symmetric cycles of simple oriented matroids.

Builds the simplicial complexes attached to a decomposition, their long
f- and h-vectors, and checks the Dehn-Sommerville type and orthogonality
relations between two such complexes, exactly.
"""
from .complexes import SimplicialComplex, beta_vector, lambda_complex, long_f_vector, simplex_boundary
from .cycles import NotFound, SymmetricCycle, distinguished_cycle, find_symmetric_cycle, validate_cycle
from .decomp import Decomposition, brute_force_decompose, decompose
from .instances import (
    GeneratorMatrix,
    OMInstance,
    arrangement_instance,
    hypercube_instance,
    realizable_instance,
    region_count,
    validate_instance,
)
from .signvec import SignVector, negate, reorient, separation_set, tope_sum
from .spectra import long_h_vector, omega_long_f, orthogonality_check
from .verify import ExperimentPlan, negative_controls, run_experiment

__version__ = "0.1.0"
