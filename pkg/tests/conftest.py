import sys
from pathlib import Path

import numpy as np
import pytest

sys.path.insert(0, str(Path(__file__).parent))

from toughcycles import _kernels as K


@pytest.fixture(scope="session", autouse=True)
def warm_kernels():
    """Touch every jit kernel once so compilation (disk-cached) happens
    outside any timed block."""
    rows = np.array([0b010, 0b101, 0b010], dtype=np.int64)  # path 0-1-2
    tri = np.array([0b110, 0b101, 0b011], dtype=np.int64)
    K.popcount(np.int64(7))
    K.component_count(rows, 3, 0)
    K.reachable_set(rows, 0, 0b110)
    K.toughness_scan(rows, 3)
    K.toughness_bnb(rows, 3, 10_000)
    K.tough_violation(rows, 3, 1, 1)
    K.find_small_cut(rows, 3, 1)
    K.vertex_connectivity_flow(rows, 3)
    K.alpha_max(rows, 0b111)
    K.lex_min_independent_set(rows, 0b101, 2)
    K.p2kp1_violating_edge(rows, 3, 1)
    K.p2kp1_contains_naive(rows, 3, 1)
    K.lemma_first_violation(rows, 3, 1)
    K.hamiltonian_cycle_dp(tri, 3)
    K.longest_cycle_search(tri, 3, 10_000)
    K.cycles_of_length(tri, 3, 3, 4, 10_000)
    K.find_non_dominating_cycle(tri, 3, 3, 10_000)
