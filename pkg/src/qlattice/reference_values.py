"""Published reference values for the two built-in lattices at bond scale 1.

These are regression constants only; nothing in the package computes from
them. The cubic-diagonal polynomial texts are reproduced as printed, and
their monomial labels are known to disagree with the printed coefficient
vectors (see ``DOCUMENTED_DISCREPANCIES``).
"""

from fractions import Fraction

B3 = (
    (1, 0, 0, 0, 0, 0, 0, 0),
    (1, 0, 0, 1, 0, 0, 0, 0),
    (1, 0, 1, 0, 0, 0, 0, 0),
    (1, 0, 1, 1, 0, 0, 1, 0),
    (1, 1, 0, 0, 0, 0, 0, 0),
    (1, 1, 0, 1, 0, 1, 0, 0),
    (1, 1, 1, 0, 1, 0, 0, 0),
    (1, 1, 1, 1, 1, 1, 1, 1),
)

B2 = (
    (1, 0, 0, 0),
    (1, 0, 1, 0),
    (1, 1, 0, 0),
    (1, 1, 1, 1),
)

STATE_TABLE_3 = tuple(tuple(int(c) for c in f"{r:03b}") for r in range(8))
STATE_TABLE_2 = tuple(tuple(int(c) for c in f"{r:02b}") for r in range(4))

CUBIC_DIAG_COEFFS = {
    "c_da": (1, -2, -1, 0, 2, 0, -1, 2),
    "c_db": (0, 0, 1, 1, -2, -2, -1, 2),
}

FCC_COEFFS = {
    "c_da": (Fraction(1, 2), -1, -1, 2),
    "c_db": (Fraction(1, 2), -1, 0, 0),
}

CUBIC_DIAG_POLYNOMIALS = {
    "da": "1 - 2*q1 - q2 + 2*q1*q2 - q3*q1 + 2*q1*q2*q3",
    "db": "q2 + q3 - 2*q1*q2 - 2*q2*q3 - q3*q1 + 2*q1*q2*q3",
}

FCC_POLYNOMIALS = {
    "da": "1/2 - q1 - q2 + 2*q1*q2",
    "db": "1/2 - q1",
}

PER_TURN_QUBITS = {"cubic-diag": 5, "fcc": 4}
DEGREES_OF_FREEDOM = {"cubic-diag": 18, "fcc": 12}

DOCUMENTED_DISCREPANCIES = {
    ("cubic-diag", "da"): "printed polynomial labels the q2*q3 term as q3*q1",
    ("cubic-diag", "db"): "printed polynomial swaps the q1*q3 and q2*q3 coefficients",
}
