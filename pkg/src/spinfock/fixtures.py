"""Embedded reference data for the verification suite and the tests.

Fock vectors are stored as {label: {exponent: coefficient}} maps; matrices
carry explicit row/column label lists.  Everything here is frozen input for
comparisons, never computed.
"""

from __future__ import annotations

from .laurent import LaurentPoly
from .fock import FockVector
from .modular import ReducedMatrix


def fock_vector(data: dict) -> FockVector:
    return FockVector({lam: LaurentPoly(poly) for lam, poly in data.items()})


# lowering action worked examples, h = 5
F2_ON_542 = {
    (6, 4, 2): {4: 1, 2: 1},
    (5, 5, 2): {1: 1},
    (5, 4, 2, 1): {0: 1},
}
F2_ON_552 = {
    (6, 5, 2): {0: 1, 4: -1},
    (5, 5, 2, 1): {0: 1},
}

# intermediate and canonical vectors at degree 9, h = 3
A_3321_H3 = {
    (3, 3, 2, 1): {0: 1},
    (3, 3, 3): {1: 1},
    (4, 3, 2): {2: 1, 6: -1},
    (5, 3, 1): {0: 1, 2: 2},
    (5, 4): {2: 1, 4: 1},
    (6, 2, 1): {2: 2, 4: 1},
    (6, 3): {3: 2},
    (7, 2): {4: 1, 6: 1},
    (8, 1): {4: 1},
    (9,): {5: 1},
}
G_3321_H3 = {
    (3, 3, 2, 1): {0: 1},
    (3, 3, 3): {1: 1},
    (4, 3, 2): {2: 1, 6: -1},
    (5, 3, 1): {2: 2},
    (5, 4): {4: 1},
    (6, 2, 1): {2: 1, 4: 1},
    (6, 3): {3: 1},
    (7, 2): {4: 1},
    (8, 1): {4: 1},
    (9,): {5: 1},
}
G_531_H3 = {
    (5, 3, 1): {0: 1},
    (5, 4): {2: 1},
    (6, 2, 1): {2: 1},
    (6, 3): {3: 1},
    (7, 2): {6: 1},
}
G_432_H3 = {
    (4, 3, 2): {0: 1},
    (5, 3, 1): {4: 1},
    (7, 2): {2: 1},
    (8, 1): {6: 1},
}

# full canonical basis matrix at h = 3, degree 10 (12 rows, 4 columns)
CANONICAL_3_10 = {
    (3, 3, 3, 1): {
        (3, 3, 3, 1): {0: 1},
        (4, 3, 2, 1): {1: 1, 5: -1},
        (4, 3, 3): {2: 1},
        (5, 4, 1): {1: 1, 3: 1},
        (6, 3, 1): {2: 2},
        (6, 4): {4: 1},
        (7, 2, 1): {3: 1, 5: 1},
        (7, 3): {4: 1},
        (9, 1): {4: 1},
        (10,): {6: 1},
    },
    (4, 3, 2, 1): {
        (4, 3, 2, 1): {0: 1},
        (4, 3, 3): {1: 1},
        (5, 4, 1): {2: 1, 4: 1},
        (6, 3, 1): {3: 1},
        (7, 2, 1): {2: 1},
        (7, 3): {3: 1},
        (9, 1): {5: 1},
    },
    (5, 3, 2): {
        (5, 3, 2): {0: 1},
        (8, 2): {2: 1},
    },
    (5, 4, 1): {
        (5, 4, 1): {0: 1},
        (6, 3, 1): {1: 1},
        (6, 4): {3: 1},
        (7, 2, 1): {4: 1},
        (7, 3): {5: 1},
    },
}

# canonical vectors at h = 7, degree 21, with their shared bottom label
G_75432_H7 = {
    (7, 5, 4, 3, 2): {0: 1},
    (7, 6, 4, 3, 1): {2: 1},
    (7, 7, 5, 2): {1: 1},
    (7, 7, 6, 1): {3: 1},
    (8, 6, 4, 3): {2: 1},
    (8, 6, 5, 2): {2: 1, 4: 1},
    (8, 7, 6): {3: 1},
    (9, 5, 4, 3): {4: 1},
    (9, 6, 5, 1): {4: 1, 6: 1},
    (9, 7, 5): {5: 1},
}
G_654321_H7 = {
    (6, 5, 4, 3, 2, 1): {0: 1},
    (7, 5, 4, 3, 2): {1: 1},
    (7, 6, 4, 3, 1): {1: 1},
    (7, 6, 5, 2, 1): {1: 1},
    (7, 7, 4, 3): {2: 1},
    (7, 7, 5, 2): {2: 1},
    (7, 7, 6, 1): {2: 1},
    (7, 7, 7): {3: 1},
    (8, 6, 4, 3): {3: 1, 5: 1},
    (8, 6, 5, 2): {3: 1, 5: 1},
    (8, 7, 6): {4: 1, 8: -1},
    (9, 6, 5, 1): {3: 1, 5: 1},
    (9, 7, 5): {4: 1, 6: 1},
}
SHARED_BOTTOM_H7_21 = (9, 7, 5)

# external decomposition matrix: double cover of S_10 in characteristic 3
DECOMP_S10_P3_CSV = """\
,3331,3331',4321,4321',532,541,541'
4321,0,0,1,1,0,0,0
532,0,0,0,0,1,0,0
532',0,0,0,0,1,0,0
541,1,1,1,1,0,0,1
541',1,1,1,1,0,1,0
631,2,2,1,1,0,1,1
631',2,2,1,1,0,1,1
64,1,1,0,0,0,1,1
721,1,1,0,1,0,0,1
721',1,1,1,0,0,1,0
73,1,1,1,1,0,1,1
82,0,0,0,0,1,0,0
91,1,1,1,1,0,0,0
10,0,1,0,0,0,0,0
10',1,0,0,0,0,0,0
"""

# its reduction (10 rows, 4 columns)
_REDUCED_3_10_ROWS = [
    ((4, 3, 2, 1), (0, 2, 0, 0)),
    ((5, 3, 2), (0, 0, 1, 0)),
    ((5, 4, 1), (2, 2, 0, 1)),
    ((6, 3, 1), (4, 2, 0, 2)),
    ((6, 4), (2, 0, 0, 2)),
    ((7, 2, 1), (2, 1, 0, 1)),
    ((7, 3), (2, 2, 0, 2)),
    ((8, 2), (0, 0, 1, 0)),
    ((9, 1), (2, 2, 0, 0)),
    ((10,), (1, 0, 0, 0)),
]
_REDUCED_3_10_COLS = ((3, 3, 3, 1), (4, 3, 2, 1), (5, 3, 2), (5, 4, 1))


def reduced_matrix_3_10() -> ReducedMatrix:
    labels = tuple(sorted(_REDUCED_3_10_COLS, reverse=True))
    columns = {mu: {} for mu in labels}
    for lam, values in _REDUCED_3_10_ROWS:
        for mu, v in zip(_REDUCED_3_10_COLS, values):
            if v:
                columns[mu][lam] = v
    return ReducedMatrix(3, 10, labels, columns)


# ladder data for (11, 7, 7, 4) at h = 7: 22 ladders, peeling order
LADDERS_11774_H7 = (
    (3, 1), (2, 1), (1, 1), (0, 1), (1, 1), (2, 1),
    (3, 3), (2, 2), (1, 2), (0, 2), (1, 1), (2, 1),
    (3, 2), (2, 1), (1, 1), (0, 1), (1, 1), (2, 1),
    (3, 2), (2, 1), (1, 1), (0, 1),
)

# residues of columns 0..10 at h = 7
RESIDUE_ROW_H7 = (3, 2, 1, 0, 1, 2, 3, 3, 2, 1, 0)

# crystal strings for h = 3, color 1
STRING_FROM_2 = ((2,), (2, 1), (3, 1), (4, 1))
STRING_FROM_32 = ((3, 2), (3, 2, 1), (3, 3, 1), (4, 3, 1))

# enumeration fixtures
DP3_7 = ((7,), (6, 1), (5, 2), (4, 3), (4, 2, 1), (3, 3, 1))
DPR3_10 = ((5, 4, 1), (5, 3, 2), (4, 3, 2, 1), (3, 3, 3, 1))

# degree-11, p = 3 export: reduced-matrix column labels, and the statement
# (quoted from external tables) of which normalized canonical columns the
# external matrix columns combine; data for outside comparison only.
M11_P3_COLUMN_LABELS = ((6, 4, 1), (5, 4, 2), (5, 3, 2, 1), (4, 3, 3, 1), (3, 3, 3, 2))
M11_P3_EXTERNAL_COMBINATIONS = (
    ((3, 3, 3, 2),),
    ((4, 3, 3, 1), (6, 4, 1)),
    ((5, 3, 2, 1),),
    ((5, 4, 2),),
    ((6, 4, 1),),
)
