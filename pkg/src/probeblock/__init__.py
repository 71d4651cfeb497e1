"""Recognition of probe block and probe complete graphs, with certificates.

The library decides, in time linear in the graph size, whether a graph is a
(partitioned or unpartitioned) 1- or 2-probe block graph or a 2-probe
complete graph.  Positive answers come with the non-probe sets and the
minimal embedding; negative answers come with a staged refutation.  A
desk-scale oracle layer (exhaustive search, forbidden-pattern catalogs,
exact edge clique cover) provides independent ground truth for testing.
"""

from .decomposition import BlockDecomposition, block_decomposition, peel_order
from .gen import GenSpec, plant, random_block_graph, random_graph
from .graphs import (Graph, ParseError, complement, compose, complete_graph,
                     cycle_graph, empty_graph, induced, parse_graph,
                     path_graph, to_edge_list, to_graph6)
from .oracle import (OracleSizeError, brute_kprobe, edge_clique_cover_min,
                     forbidden_witness)
from .patterns import catalog_names, find_induced, hole, isomorphic, pattern
from .probe import (Embedding, ImpossibleBranch, ProbePartition,
                    RecognitionOutcome, Refutation, dump_partition,
                    enhanced_graph, find_nonprobes, load_partition,
                    recognize_2probe_block, recognize_2probe_complete,
                    recognize_probe_block, verify_partitioned)
from .structure import (CheckResult, CompleteSplitFailure, CompleteSplitPartition,
                        KxyzFailure, KxyzPartition, block_structures,
                        complete_split, is_block_graph, is_chordal,
                        is_distance_hereditary, is_ptolemaic, kxyz,
                        universal_set)

__version__ = "0.1.0"

__all__ = [
    "BlockDecomposition", "block_decomposition", "peel_order",
    "GenSpec", "plant", "random_block_graph", "random_graph",
    "Graph", "ParseError", "complement", "compose", "complete_graph",
    "cycle_graph", "empty_graph", "induced", "parse_graph", "path_graph",
    "to_edge_list", "to_graph6",
    "OracleSizeError", "brute_kprobe", "edge_clique_cover_min", "forbidden_witness",
    "catalog_names", "find_induced", "hole", "isomorphic", "pattern",
    "Embedding", "ImpossibleBranch", "ProbePartition", "RecognitionOutcome",
    "Refutation", "dump_partition", "enhanced_graph", "find_nonprobes",
    "load_partition", "recognize_2probe_block", "recognize_2probe_complete",
    "recognize_probe_block", "verify_partitioned",
    "CheckResult", "CompleteSplitFailure", "CompleteSplitPartition",
    "KxyzFailure", "KxyzPartition", "block_structures", "complete_split",
    "is_block_graph", "is_chordal", "is_distance_hereditary", "is_ptolemaic",
    "kxyz", "universal_set",
]
