from collections import Counter
from fractions import Fraction as F
from itertools import product

import pytest
from hypothesis import given
from hypothesis import strategies as st

from oracles import CUBIC_DA, CUBIC_DB, FCC_DA, FCC_DB, expected_turns
from qlattice.encoder import (
    coefficients,
    decode_turn,
    encode,
    encode_direct,
    encode_planar,
    qubit_budget,
)
from qlattice.errors import BitstringFormatError, InvalidSpecError
from qlattice.lattice import (
    DirectLatticeSpec,
    PlanarLatticeSpec,
    builtin_cubic_diag,
    builtin_fcc,
    direction_set,
    to_direct,
)
from qlattice.multilinear import format_poly

positive = st.fractions(min_value=F(1, 20), max_value=20, max_denominator=20)


def reachable(enc):
    return {r.displacement for r in enc.turn_table if r.valid}


class TestPlanar:
    def test_cubic_yz_first_direction(self, cubic):
        assert decode_turn(cubic, "000" + "01").displacement == (0, 1, 0)

    def test_fcc_xy_first_direction(self, fcc):
        assert decode_turn(fcc, "00" + "11").displacement == (F(1, 2), F(1, 2), 0)

    @pytest.mark.parametrize("direction", range(8))
    def test_plane_00_is_null(self, cubic, direction):
        bits = tuple(int(c) for c in format(direction, "03b")) + (0, 0)
        assert cubic.displacement_at(bits) == (0, 0, 0)
        assert not decode_turn(cubic, bits).valid

    def test_variable_numbering(self, cubic):
        assert cubic.direction_qubits == 3 and cubic.plane_qubits == 2
        assert cubic.dx.variable_count == 5
        assert format_poly(cubic.components["a"]) == "1 - 2*q1 - q2 + 2*q1*q2 - q2*q3 + 2*q1*q2*q3"

    def test_layout(self, fcc):
        assert fcc.layout.to_dict() == {
            "direction_bits": 2, "plane_bits": 2, "bit_order": "direction_then_plane",
            "invalid_direction_states": [], "invalid_plane_states": [0],
        }

    def test_padding_for_three_directions(self):
        spec = PlanarLatticeSpec("tri", 1, [1, 0, -1], [0, 1, -1])
        enc = encode_planar(spec)
        assert enc.direction_qubits == 2
        assert enc.layout.invalid_direction_states == (3,)
        assert enc.valid_state_count == 9
        rec = decode_turn(enc, "11" + "01")
        assert not rec.valid and rec.reason == "padded-direction"
        assert sum(r.valid for r in enc.turn_table) == 9

    def test_rejects_invalid(self):
        with pytest.raises(InvalidSpecError):
            encode_planar(PlanarLatticeSpec("dup", 1, [1, 1], [0, 0]))

    def test_wrong_kind(self):
        with pytest.raises(InvalidSpecError):
            encode_planar(DirectLatticeSpec("d", [(1, 0, 0), (0, 1, 0)]))


class TestDirect:
    def test_first_direction(self):
        enc = encode_direct(DirectLatticeSpec("four", [(1, 0, 0), (0, 1, 0), (0, 0, 1), (-1, 0, 0)]))
        assert decode_turn(enc, "00").displacement == (1, 0, 0)

    def test_fcc_as_twelve_directions(self, fcc):
        enc = encode_direct(to_direct(builtin_fcc(1)))
        assert enc.width == 4
        states = [decode_turn(enc, format(s, "04b")) for s in range(16)]
        assert [s.valid for s in states] == [True] * 12 + [False] * 4
        assert {s.displacement for s in states if s.valid} == reachable(fcc)
        assert enc.layout.invalid_direction_states == (12, 13, 14, 15)

    def test_two_directions(self):
        enc = encode(DirectLatticeSpec("pm", [(1, 0, 0), (-1, 0, 0)]))
        assert enc.width == 1
        assert all(r.valid for r in enc.turn_table)

    def test_three_coefficient_vectors(self):
        assert len(coefficients(DirectLatticeSpec("pm", [(1, 0, 0), (-1, 0, 0)]))) == 3


class TestCoefficients:
    def test_cubic(self):
        c_da, c_db = coefficients(builtin_cubic_diag(1))
        assert c_da == [1, -2, -1, 0, 2, 0, -1, 2]
        assert c_db == [0, 0, 1, 1, -2, -2, -1, 2]

    def test_fcc(self):
        assert coefficients(builtin_fcc(1)) == ([F(1, 2), -1, -1, 2], [F(1, 2), -1, 0, 0])

    def test_fcc_doubled(self):
        one, two = coefficients(builtin_fcc(1)), coefficients(builtin_fcc(2))
        assert [[2 * c for c in v] for v in one] == [list(v) for v in two]

    @given(positive)
    def test_linear_in_d(self, d):
        for factory in (builtin_fcc, builtin_cubic_diag):
            base, scaled = coefficients(factory(1)), coefficients(factory(d))
            assert [[d * c for c in v] for v in base] == [list(v) for v in scaled]


class TestBudget:
    def test_cubic(self):
        assert qubit_budget(builtin_cubic_diag(1), 2).per_turn == 5

    def test_fcc(self):
        assert qubit_budget(builtin_fcc(1), 2).per_turn == 4

    def test_cubic_total(self):
        assert qubit_budget(builtin_cubic_diag(1), 4).total == 15

    def test_direct(self):
        assert qubit_budget(to_direct(builtin_fcc(1)), 3).per_turn == 4

    def test_too_few_beads(self):
        with pytest.raises(ValueError):
            qubit_budget(builtin_fcc(1), 1)


class TestTurnCensusByHand:
    def test_cubic_split(self, cubic):
        valid = [r for r in cubic.turn_table if r.valid]
        assert len(cubic.turn_table) == 32 and len(valid) == 24
        assert all(r.bits.endswith("00") for r in cubic.turn_table if not r.valid)
        mult = Counter(r.displacement for r in valid)
        assert len(mult) == 18
        assert sorted(Counter(mult.values()).items()) == [(1, 12), (2, 6)]

    def test_fcc(self, fcc):
        valid = [r for r in fcc.turn_table if r.valid]
        assert len(valid) == 12 and len({r.displacement for r in valid}) == 12


@pytest.mark.parametrize("da,db,factory", [
    (CUBIC_DA, CUBIC_DB, builtin_cubic_diag), (FCC_DA, FCC_DB, builtin_fcc),
])
def test_every_valid_state_matches_table(da, db, factory):
    enc = encode(factory(1))
    table = expected_turns(da, db)
    for bits, disp in table.items():
        assert decode_turn(enc, bits).displacement == disp
    assert {r.bits for r in enc.turn_table if r.valid} == set(table)


def test_decoded_steps_in_direction_set(cubic, fcc):
    for enc in (cubic, fcc):
        assert reachable(enc) == direction_set(enc.spec)


@st.composite
def planar_specs(draw):
    values = st.integers(-3, 3).map(F) | st.fractions(-2, 2, max_denominator=4)
    pairs = draw(st.lists(st.tuples(values, values).filter(lambda p: p != (0, 0)),
                          min_size=2, max_size=9, unique=True))
    return PlanarLatticeSpec("rand", 1, [a for a, _ in pairs], [b for _, b in pairs])


@given(planar_specs())
def test_planar_direct_equivalence(spec):
    planar = encode_planar(spec)
    direct = encode_direct(to_direct(spec))
    assert reachable(planar) == reachable(direct) == direction_set(spec)


def test_field_format_errors(fcc):
    with pytest.raises(BitstringFormatError):
        decode_turn(fcc, "001")
    with pytest.raises(BitstringFormatError):
        decode_turn(fcc, "00x1")
    with pytest.raises(BitstringFormatError):
        decode_turn(fcc, [0, 0, 2, 1])


def test_field_accepts_bit_sequences(fcc):
    for bits in product((0, 1), repeat=4):
        assert decode_turn(fcc, bits) == decode_turn(fcc, "".join(map(str, bits)))
