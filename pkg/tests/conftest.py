"""Shared fixtures: reference inputs and session-cached solves.

Expected values marked "frozen" were computed beforehand with an independent
40-digit mpmath implementation of the same closed forms (separate code path:
mpmath's ellipf/ellipk/ellipfun and tanh-sinh quadrature), then truncated to
double precision.
"""
from fractions import Fraction

import pytest

import quadpot as qp

# (A, B, reference u_inf) with vertices (1, 0, B, A)
REFERENCE_TABLE = [
    (7 + 5j, -1 + 2j, 0.3782951219491777),
    (8 + 3j, -1 + 1j, 0.3507184214435048),
    (5 + 5j, -3 + 1j, 0.4209495357540314),
    (7 + 4j, -3 + 3j, 0.4473431220217027),
    (5 + 5j, -1 + 2j, 0.3916188047098933),
    (7 + 5j, 0 + 1j, 0.3172197705784933),
    (7 + 3j, 1 + 2j, 0.3917841755037506),
    (4 + 5j, -2 + 1j, 0.3960930352825737),
    (1 + 1j, 0 + 1j, 0.5000000000000000),
]

EP1_VERTICES = (1, 0, complex(Fraction(-19, 25), Fraction(21, 25)),
                complex(Fraction(28, 25), Fraction(69, 50)))
EP2_VERTICES = (1, 0, complex(Fraction(-3, 25), Fraction(21, 25)),
                complex(Fraction(42, 25), 4))

# frozen oracle values
ROW1_ANGLES = (0.22114206162369552, 0.35241638234956673,
               0.53338336643052514, 0.89305818959621261)
EP1_ANGLES = (0.47239032928827609, 0.26590225125617638,
              0.64506515180799162, 0.61664226764755591)
ROW1_T = 2.9094140785888797
ROW1_Z0 = 1.7425283274488838 + 3.6024408657903805j
EP1_T = 1.9669104562141728
EP1_U = 0.47181326335634284
EP1_V = 0.58379651554985528
EP2_U = 0.33405232792306179

DISK_A5B17 = dict(a=0.29943312067996364, gamma=0.88463717706795318,
                  lam=0.12759583285719005, h=1.09533123838968040,
                  u0=0.33274387327886574)
DISK_A3B28_U0 = 0.48721483282368342


@pytest.fixture(scope="session")
def square():
    return qp.Quadrilateral(1, 0, 1j, 1 + 1j)


@pytest.fixture(scope="session")
def square_solution(square):
    return qp.u_infinity(square)


@pytest.fixture(scope="session")
def row1_solution():
    return qp.u_infinity(qp.Quadrilateral(1, 0, -1 + 2j, 7 + 5j))


@pytest.fixture(scope="session")
def ep1_solution():
    return qp.u_infinity(qp.Quadrilateral(*EP1_VERTICES))


@pytest.fixture(scope="session")
def ep2_solution():
    return qp.u_infinity(qp.Quadrilateral(*EP2_VERTICES))


@pytest.fixture(scope="session")
def table_solutions():
    return [qp.u_infinity(qp.Quadrilateral(1, 0, B, A))
            for A, B, _ in REFERENCE_TABLE]
