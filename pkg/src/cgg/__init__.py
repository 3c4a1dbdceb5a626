"""Convex geometric graphs with no k+1 pairwise disjoint edges and a long free boundary arc."""

from .bounds import (
    Clause,
    FmaxResult,
    LossProfile,
    f_max,
    loss_direct,
    loss_formula,
    loss_profile,
    triangular_identity,
    valid_params,
)
from .constructions import (
    ConstructionSpec,
    allowed_edges,
    central_choice,
    construct_extremal,
    construct_gnk,
    construct_gnkl,
    construct_star,
    gnk_in_frame,
)
from .core import (
    ArcSplit,
    Cgg,
    Edge,
    EdgeBlock,
    FreeArcs,
    Labelling,
    arc_split,
    block,
    direction_counts,
    edge_direction,
    edge_order,
    edges_in_direction,
    emanating_vertex,
    free_arcs,
    is_free_arc,
    lies_behind,
)
from .disjoint import DisjointWitness, edges_disjoint, is_ik1_free, max_disjoint_bruteforce, max_disjoint_set
from .errors import CggError, ConstructionIntegrityError, InfeasibleBlockError, ParseError, UnsupportedVersionError
from .io import GraphDocument, parse, parse_document, serialize
from .render import render_dot, render_svg
from .search import SearchCertificate, VerifyReport, search_f, verify_graph

__version__ = "0.1.0"
