"""
Spectral and combinatorial graph invariants, bounds on the clique and chromatic
numbers, and the campaigns that verify those bounds over many graphs.
"""

##########################################################################
## Module Info
##########################################################################

# Import the version number at the top level
from .version import get_version, __version_info__

# Ensure that logging is configured at import time
from .logging import setup_logging
setup_logging()

# Primary API
from .graph import Graph, from_edge_list, parse_edge_list
from .graph6 import parse_graph6, encode_graph6
from .spectral import Spectrum, spectrum_of
from .combinatorics import clique_number, chromatic_number
from .harness import evaluate_graph, run_corpus, run_gnp_search, run_kneser_family, run_sweep


##########################################################################
## Package Version
##########################################################################

__version__ = get_version(short=True)
