"""Separated collections of subsets in oriented matroids."""
from .core import (OrientedMatroid, SignedSet, ValidationReport, is_isomorphic, matroid_from_json,
                   matroid_to_json, tutte_eval, validate_axioms, weak_map_exists, weak_map_leq)
from .construct import (Chirotope, DirectedGraph, VectorConfiguration, alternating, census_rank3_simple,
                        chirotope_of, corank2_family, figure_matroid, free, from_digraph, from_vectors,
                        is_positively_orientable, pentagon_cone)
from .errors import CoLoopDeletion, LoopContraction, NotCorank2, OMError, ResourceLimit, ValidationError
from .separation import (collection_of, is_colocalization, is_collection_separated, is_pair_separated,
                         lifting_circuits, sigma_of, weakly_separated)
from .tilings import (bad_collection_certificate, enumerate_colocalizations, max_by_size_collections,
                      mutation_components, purity_check, tiling_of, verify_tiling)
from .graphsep import (Triangulation, UndirectedGraph, coherent_count, g_separated, is_coherent,
                       outerplanar, t_ab, tree_of_triangulation)

__version__ = "0.1.0"
