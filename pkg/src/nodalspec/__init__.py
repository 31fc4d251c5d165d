"""Spectral tools for small graphs: eigenvalue multiplicities, nodal domains,
the spectral radius order and equiangular line certificates."""
from ._kernels import BACKEND
from .certify import decompose, edge_disjoint_check, monotonicity_check, theorem_bound, two_cycle_grid_check
from .equiangular import (certificate_check, extract_lines, gram_matrix, lower_bound_construct,
                          max_lines_formula, psd_rank, verify_lines)
from .errors import *  # noqa: F401,F403
from .families import barbell, cycle, dumbbell, path, spider, tadpole, theta
from .graph import Graph, build_graph
from .nodal import multiplicity_audit, nodal_maximizer, strong_nodal_count
from .radius_order import enumerate_connected, kappa_search
from .spectra import adjacency_eigen, interlacing_check, n_lambda, spectral_radius, spider_radius

__version__ = "0.1.0"
