"""Certificate-producing algorithms for cycles in graphs with kappa > alpha.

Every positive answer comes with an explicit vertex sequence that is
re-verified against the input graph before it is returned.
"""

__version__ = "0.1.0"

from .decorated import (
    TriangulatedCycle,
    TriangulatedPath,
    greedy_triangulated_path,
    hamilton_with_triangles,
    realizable_prefix_lengths,
    short_cycle_bound,
    short_triangulated_cycle,
)
from .errors import *  # noqa: F401,F403
from .generators import ModelSpec, generate
from .graph import CycleWitness, Graph, PathWitness, Verdict, parse_edge_list, serialize, verify_cycle, verify_path
from .invariants import (
    GraphProfile,
    MengerFan,
    independence_number,
    menger_fan,
    min_degree,
    profile,
    vertex_connectivity,
)
from .pipeline import RangePlan, certify_pancyclic, range_plan
from .spectrum import (
    DensityCertificate,
    SpectrumCertificate,
    TrianglePartition,
    combine_segments,
    cycle_spectrum_bruteforce,
    find_even_cycle,
    find_small_cycles,
    odd_from_even,
    triangle_partition,
    verify_density,
)
from .surgery import SurgeryResult, augment_path, chord_jump_search, shorten_by_degree, shorten_by_independence
