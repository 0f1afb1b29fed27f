"""Cutsets of finite Boolean lattices: constructions, decision procedures, censuses."""

from .constructions import (
    BlockPartition,
    Direction,
    TreeUniverse,
    WitnessResult,
    dense_subset_of_maximal_chain,
    lemma1_chain,
    lemma2_witness,
    lemma3b_antichain,
    separator_count,
    theorem3_cutset,
    tree_chain_family,
    tree_order_compare,
)
from .cutset_analysis import (
    contains_maximal_antichain,
    find_avoiding_chain,
    is_cutset,
    is_maximal_antichain,
    is_minimal_cutset,
    is_nontrivial,
    largest_antichain_in_family,
    longest_chain_in_family,
    sole_meeting_chain,
    theorem1_antichain_extraction,
    theorem1_chain_extraction,
)
from .errors import CapacityError, CutsetError, PreconditionError, UsageError
from .lattice_core import (
    Chain,
    Family,
    MaximalChain,
    Order,
    compare_sets,
    complete_to_maximal_chain,
    enumerate_maximal_chains,
    initial_segment,
    parse_family,
    format_family,
)
from .survey import SurveyReport, census, dsw_check
