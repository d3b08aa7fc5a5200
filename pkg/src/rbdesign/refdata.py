"""Embedded reference designs.

Each design is stored as a tuple of replicates, each replicate a tuple of
six blocks (ascending tuples of variety numbers 1..36).  GAMMA_RC_8 and
DELTA_RC_8 are also reachable by construction (galaxies of the Sylvester
graph, superposed Latin squares); equality with these embedded copies is
asserted in the test suite.  THETA_8 exists only as data: it is the
published 8-replicate design produced by an external simulated-annealing
package, and the six Latin squares driving the delta family are recovered
from DELTA_RC_8 replicates 3..8.
"""

# columns replicate, rows replicate, then the six galaxy replicates
GAMMA_RC_8 = (
    ((1, 7, 13, 19, 25, 31), (2, 8, 14, 20, 26, 32), (3, 9, 15, 21, 27, 33), (4, 10, 16, 22, 28, 34), (5, 11, 17, 23, 29, 35), (6, 12, 18, 24, 30, 36)),
    ((1, 2, 3, 4, 5, 6), (7, 8, 9, 10, 11, 12), (13, 14, 15, 16, 17, 18), (19, 20, 21, 22, 23, 24), (25, 26, 27, 28, 29, 30), (31, 32, 33, 34, 35, 36)),
    ((1, 8, 18, 21, 28, 35), (2, 7, 16, 24, 29, 33), (6, 10, 13, 23, 27, 32), (3, 12, 17, 19, 26, 34), (4, 11, 15, 20, 25, 36), (5, 9, 14, 22, 30, 31)),
    ((2, 7, 15, 23, 30, 34), (1, 8, 17, 22, 27, 36), (3, 11, 14, 24, 28, 31), (5, 10, 18, 20, 25, 33), (6, 9, 16, 19, 26, 35), (4, 12, 13, 21, 29, 32)),
    ((3, 10, 14, 19, 29, 36), (4, 9, 18, 23, 26, 31), (2, 12, 15, 22, 25, 35), (1, 11, 16, 21, 30, 32), (5, 8, 13, 24, 27, 34), (6, 7, 17, 20, 28, 33)),
    ((4, 9, 17, 24, 25, 32), (3, 10, 13, 20, 30, 35), (5, 7, 16, 21, 26, 36), (6, 8, 15, 22, 29, 31), (1, 12, 14, 23, 28, 33), (2, 11, 18, 19, 27, 34)),
    ((5, 12, 16, 20, 27, 31), (6, 11, 14, 21, 25, 34), (4, 8, 17, 19, 30, 33), (2, 9, 13, 23, 28, 36), (3, 7, 18, 22, 29, 32), (1, 10, 15, 24, 26, 35)),
    ((6, 11, 13, 22, 26, 33), (5, 12, 15, 19, 28, 32), (1, 9, 18, 20, 29, 34), (4, 7, 14, 24, 27, 35), (2, 10, 17, 21, 30, 31), (3, 8, 16, 23, 25, 36)),
)

# search-package reference design; concurrences all in {1, 2}
THETA_8 = (
    ((2, 6, 17, 18, 29, 33), (7, 9, 11, 24, 25, 27), (1, 8, 12, 13, 14, 34), (3, 4, 15, 16, 20, 28), (10, 19, 23, 26, 30, 36), (5, 21, 22, 31, 32, 35)),
    ((17, 22, 24, 28, 30, 32), (11, 14, 18, 26, 33, 35), (3, 4, 8, 10, 27, 29), (1, 5, 7, 16, 25, 36), (6, 9, 13, 20, 21, 23), (2, 12, 15, 19, 31, 34)),
    ((4, 11, 12, 15, 21, 30), (9, 10, 16, 26, 31, 33), (3, 5, 7, 18, 22, 34), (14, 17, 19, 20, 24, 25), (1, 8, 23, 28, 29, 35), (2, 6, 13, 27, 32, 36)),
    ((7, 13, 15, 30, 33, 35), (2, 3, 5, 11, 20, 23), (1, 6, 10, 12, 22, 25), (4, 14, 24, 29, 31, 36), (8, 9, 18, 19, 28, 32), (16, 17, 21, 26, 27, 34)),
    ((1, 2, 4, 9, 22, 26), (7, 8, 11, 17, 23, 31), (5, 12, 19, 27, 28, 33), (3, 6, 14, 16, 30, 32), (10, 13, 20, 24, 34, 35), (15, 18, 21, 25, 29, 36)),
    ((5, 9, 14, 29, 30, 34), (8, 20, 21, 22, 33, 36), (4, 6, 7, 19, 27, 35), (3, 13, 25, 26, 28, 31), (1, 10, 11, 15, 17, 32), (2, 12, 16, 18, 23, 24)),
    ((2, 7, 10, 14, 21, 28), (1, 18, 20, 27, 30, 31), (3, 9, 12, 17, 35, 36), (5, 6, 8, 15, 24, 26), (4, 23, 25, 32, 33, 34), (11, 13, 16, 19, 22, 29)),
    ((7, 12, 20, 26, 29, 32), (4, 5, 10, 13, 17, 18), (1, 3, 19, 21, 24, 33), (2, 8, 16, 25, 30, 35), (9, 14, 15, 22, 23, 27), (6, 11, 28, 31, 34, 36)),
)

# columns replicate, rows replicate, then six superposed Latin squares
DELTA_RC_8 = (
    ((1, 7, 13, 19, 25, 31), (2, 8, 14, 20, 26, 32), (3, 9, 15, 21, 27, 33), (4, 10, 16, 22, 28, 34), (5, 11, 17, 23, 29, 35), (6, 12, 18, 24, 30, 36)),
    ((1, 2, 3, 4, 5, 6), (7, 8, 9, 10, 11, 12), (13, 14, 15, 16, 17, 18), (19, 20, 21, 22, 23, 24), (25, 26, 27, 28, 29, 30), (31, 32, 33, 34, 35, 36)),
    ((1, 8, 15, 22, 29, 36), (2, 7, 16, 24, 27, 35), (3, 12, 13, 23, 26, 34), (4, 11, 14, 19, 30, 33), (5, 10, 18, 21, 25, 32), (6, 9, 17, 20, 28, 31)),
    ((1, 9, 14, 24, 29, 34), (2, 11, 13, 21, 28, 36), (3, 7, 17, 22, 30, 32), (4, 8, 18, 23, 27, 31), (5, 12, 16, 20, 25, 33), (6, 10, 15, 19, 26, 35)),
    ((1, 9, 16, 23, 30, 32), (2, 10, 13, 24, 29, 33), (3, 8, 18, 19, 28, 35), (4, 7, 17, 21, 26, 36), (5, 12, 14, 22, 27, 31), (6, 11, 15, 20, 25, 34)),
    ((1, 10, 17, 20, 27, 36), (2, 9, 18, 22, 25, 35), (3, 11, 16, 24, 26, 31), (4, 12, 15, 19, 29, 32), (5, 8, 13, 21, 30, 34), (6, 7, 14, 23, 28, 33)),
    ((1, 11, 18, 22, 26, 33), (2, 12, 17, 19, 27, 34), (3, 10, 14, 23, 25, 36), (4, 9, 13, 20, 30, 35), (5, 7, 15, 24, 28, 32), (6, 8, 16, 21, 29, 31)),
    ((1, 12, 14, 21, 28, 35), (2, 10, 15, 23, 30, 31), (3, 7, 18, 20, 29, 34), (4, 8, 17, 24, 25, 33), (5, 9, 16, 19, 26, 36), (6, 11, 13, 22, 27, 32)),
)

# Cached annealer output whose efficiency-factor multiset equals that of
# delta_design(4, "RC") while no variety permutation matches their
# concurrence matrices.  Reproduce with:
#     anneal(SearchConfig(v=36, k=6, r=4, initial_temperature=0.35,
#                         cooling_rate=0.96, moves_per_temperature=400,
#                         restarts=2, seed=1, workers=2))
THETA_4_SEARCHED = (
    ((10, 14, 22, 26, 33, 36), (3, 18, 19, 23, 27, 30), (2, 12, 13, 21, 29, 35), (1, 4, 16, 17, 25, 28), (7, 11, 20, 24, 31, 32), (5, 6, 8, 9, 15, 34)),
    ((2, 8, 16, 22, 24, 27), (4, 14, 18, 32, 34, 35), (1, 5, 10, 11, 12, 19), (3, 9, 21, 28, 31, 33), (7, 15, 23, 25, 26, 29), (6, 13, 17, 20, 30, 36)),
    ((4, 7, 12, 30, 33, 34), (1, 2, 15, 18, 31, 36), (6, 11, 22, 23, 28, 35), (9, 10, 17, 27, 29, 32), (8, 16, 19, 20, 21, 26), (3, 5, 13, 14, 24, 25)),
    ((3, 11, 16, 29, 34, 36), (9, 12, 18, 20, 22, 25), (2, 5, 26, 28, 30, 32), (4, 8, 10, 13, 23, 31), (1, 6, 7, 14, 21, 27), (15, 17, 19, 24, 33, 35)),
)
