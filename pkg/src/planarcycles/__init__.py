"""Induced cycle counting and extremal constructions for planar graphs."""

from .constructions import (
    FamilyReport,
    FormulaTable,
    fi_formula,
    gen_F,
    gen_family_member,
    gen_Fprime,
    h0,
    h1,
    is_in_family,
)
from .cycles import (
    CycleCountReport,
    XDecomposition,
    count_induced_cycles,
    count_paths,
    induced_cycles_through_path,
    lemma_bounds,
    x_decomposition,
)
from .graph import Graph, common_neighbourhood, delete_vertices, from_edge_list
from .graph6 import graph6_decode, graph6_encode
from .planarity import Embedding, PlanarityResult, faces, is_planar
from .search import (
    PropertyViolation,
    SearchReport,
    enumerate_planar,
    max_induced_6cycles,
    property_suite,
    random_planar,
)
from .structure import (
    EmptyK27Witness,
    GoodSixCycle,
    HubCycleWitness,
    central_principal_check,
    find_empty_k27,
    find_good_6cycle,
    hub_cycle_probe,
    principal_neighbours,
    vertex_minimum_probe,
    xyz_intersection,
)

__version__ = "0.1.0"
