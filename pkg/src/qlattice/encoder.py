"""Compile lattice specs into per-turn displacement polynomials.

Planar lattices use ``k = ceil(log2 K)`` direction qubits followed by two
plane qubits ``p1 = q_{k+1}``, ``p2 = q_{k+2}``:

    plane  p1p2  selector
    y-z    01    (1 - p1) * p2
    z-x    10    p1 * (1 - p2)
    x-y    11    p1 * p2

and the per-axis steps are

    dx = S_xy * da + S_zx * db
    dy = S_yz * da + S_xy * db
    dz = S_zx * da + S_yz * db

Plane state 00 is never a move; every selector vanishes there and the
layout records it as invalid. Direction states at or above K (padding up to
a power of two) interpolate to zero and are likewise invalid.

Direct lattices encode their N steps on ``ceil(log2 N)`` qubits with one
polynomial per axis and no plane selection.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property

from .errors import BitstringFormatError, InvalidSpecError
from .lattice import (
    DirectLatticeSpec,
    PlanarLatticeSpec,
    require_valid,
)
from .multilinear import (
    MultilinearPolynomial,
    evaluate,
    format_poly,
    poly_from_values,
    solve_coefficients,
    state_bits,
)
from .rational import format_rational

PLANE_BY_STATE = {0b01: "yz", 0b10: "zx", 0b11: "xy"}
STATE_BY_PLANE = {v: k for k, v in PLANE_BY_STATE.items()}


def qubits_for(count: int) -> int:
    """``ceil(log2 count)``, at least 1."""
    return max(1, (count - 1).bit_length())


@dataclass(frozen=True)
class Layout:
    direction_bits: int
    plane_bits: int
    invalid_direction_states: tuple = ()
    invalid_plane_states: tuple = ()
    bit_order: str = "direction_then_plane"

    @property
    def width(self):
        return self.direction_bits + self.plane_bits

    def to_dict(self):
        return {
            "direction_bits": self.direction_bits,
            "plane_bits": self.plane_bits,
            "bit_order": self.bit_order,
            "invalid_direction_states": list(self.invalid_direction_states),
            "invalid_plane_states": list(self.invalid_plane_states),
        }


@dataclass(frozen=True)
class TurnRecord:
    """One decoded turn field."""

    bits: str
    valid: bool
    plane: str | None
    displacement: tuple | None
    reason: str | None = None

    def to_dict(self):
        return {
            "bits": self.bits,
            "plane": self.plane,
            "displacement": None
            if self.displacement is None
            else [format_rational(c) for c in self.displacement],
        }


@dataclass(frozen=True, eq=False)
class TurnEncoding:
    spec: PlanarLatticeSpec | DirectLatticeSpec
    direction_qubits: int
    plane_qubits: int
    dx: MultilinearPolynomial
    dy: MultilinearPolynomial
    dz: MultilinearPolynomial
    valid_state_count: int
    layout: Layout
    components: dict = field(default_factory=dict)

    @property
    def kind(self):
        return self.spec.kind

    @property
    def width(self):
        return self.direction_qubits + self.plane_qubits

    @property
    def state_count(self):
        return 1 << self.width

    def displacement_at(self, bits):
        return (evaluate(self.dx, bits), evaluate(self.dy, bits), evaluate(self.dz, bits))

    @cached_property
    def turn_table(self) -> tuple:
        """Decoded record for every field value ``0 .. 2**width - 1``."""
        return tuple(self._decode_state(s) for s in range(self.state_count))

    def _decode_state(self, s):
        bits = state_bits(s, self.width)
        text = "".join(map(str, bits))
        direction = s >> self.plane_qubits
        plane = None
        if self.plane_qubits:
            pstate = s & ((1 << self.plane_qubits) - 1)
            plane = PLANE_BY_STATE.get(pstate)
            if plane is None:
                return TurnRecord(text, False, None, None, "plane-unselected")
        if direction in self.layout.invalid_direction_states:
            return TurnRecord(text, False, plane, None, "padded-direction")
        return TurnRecord(text, True, plane, self.displacement_at(bits))

    def to_dict(self):
        return {
            "lattice": self.spec.name,
            "kind": self.kind,
            "per_turn_qubits": self.width,
            "valid_state_count": self.valid_state_count,
            "layout": self.layout.to_dict(),
            "coefficients": {
                f"c_d{axis}": [format_rational(c) for c in coeffs]
                for axis, coeffs in zip(_axis_names(self.kind), self.coefficient_vectors())
            },
            "polynomials": {
                **{f"d{axis}": format_poly(p) for axis, p in self.components.items()},
                "dx": format_poly(self.dx),
                "dy": format_poly(self.dy),
                "dz": format_poly(self.dz),
            },
        }

    def coefficient_vectors(self):
        return tuple(self._coefficients)

    @cached_property
    def _coefficients(self):
        return _component_coefficients(self.spec)


def _axis_names(kind):
    return ("a", "b") if kind == "planar" else ("a", "b", "c")


def _padded(values, k):
    return list(values) + [Fraction(0)] * ((1 << k) - len(values))


def _component_values(spec):
    if isinstance(spec, PlanarLatticeSpec):
        k = qubits_for(spec.direction_count)
        return k, [_padded(spec.delta_a, k), _padded(spec.delta_b, k)]
    k = qubits_for(spec.direction_count)
    return k, [_padded([v[axis] for v in spec.directions], k) for axis in range(3)]


def _component_coefficients(spec):
    k, columns = _component_values(spec)
    return [solve_coefficients(k, col) for col in columns]


def coefficients(spec) -> tuple:
    """Coefficient vectors in basis-matrix column order.

    ``(c_da, c_db)`` for planar specs, ``(c_da, c_db, c_dc)`` for direct ones.
    """
    require_valid(spec)
    return tuple(_component_coefficients(spec))


def plane_selectors(first: int, variable_count: int):
    """``(S_yz, S_zx, S_xy)`` over plane qubits ``q_first`` and ``q_{first+1}``."""
    p1 = MultilinearPolynomial.variable(first, variable_count)
    p2 = MultilinearPolynomial.variable(first + 1, variable_count)
    return ((1 - p1) * p2, p1 * (1 - p2), p1 * p2)


def encode_planar(spec: PlanarLatticeSpec) -> TurnEncoding:
    if not isinstance(spec, PlanarLatticeSpec):
        raise InvalidSpecError("encode_planar needs a planar spec", ["not a planar spec"])
    require_valid(spec)
    k, (va, vb) = _component_values(spec)
    n = k + 2
    da = poly_from_values(k, va).with_variable_count(n)
    db = poly_from_values(k, vb).with_variable_count(n)
    s_yz, s_zx, s_xy = plane_selectors(k + 1, n)
    K = spec.direction_count
    layout = Layout(
        direction_bits=k,
        plane_bits=2,
        invalid_direction_states=tuple(range(K, 1 << k)),
        invalid_plane_states=(0,),
    )
    return TurnEncoding(
        spec=spec,
        direction_qubits=k,
        plane_qubits=2,
        dx=s_xy * da + s_zx * db,
        dy=s_yz * da + s_xy * db,
        dz=s_zx * da + s_yz * db,
        valid_state_count=3 * K,
        layout=layout,
        components={"a": da.with_variable_count(k), "b": db.with_variable_count(k)},
    )


def encode_direct(spec: DirectLatticeSpec) -> TurnEncoding:
    if not isinstance(spec, DirectLatticeSpec):
        raise InvalidSpecError("encode_direct needs a direct spec", ["not a direct spec"])
    require_valid(spec)
    k, (vx, vy, vz) = _component_values(spec)
    N = spec.direction_count
    px, py, pz = (poly_from_values(k, v) for v in (vx, vy, vz))
    return TurnEncoding(
        spec=spec,
        direction_qubits=k,
        plane_qubits=0,
        dx=px,
        dy=py,
        dz=pz,
        valid_state_count=N,
        layout=Layout(direction_bits=k, plane_bits=0,
                      invalid_direction_states=tuple(range(N, 1 << k))),
        components={"a": px, "b": py, "c": pz},
    )


def encode(spec) -> TurnEncoding:
    if isinstance(spec, PlanarLatticeSpec):
        return encode_planar(spec)
    if isinstance(spec, DirectLatticeSpec):
        return encode_direct(spec)
    raise InvalidSpecError(f"cannot encode {type(spec).__name__}", ["unknown spec type"])


@dataclass(frozen=True)
class QubitBudget:
    per_turn: int
    beads: int

    @property
    def total(self):
        return self.total_for(self.beads)

    def total_for(self, m):
        return self.per_turn * (m - 1)

    def to_dict(self):
        return {"per_turn": self.per_turn, "beads": self.beads, "total": self.total}


def qubit_budget(spec, m: int) -> QubitBudget:
    if not isinstance(m, int) or m < 2:
        raise ValueError(f"bead count must be an integer >= 2, got {m!r}")
    require_valid(spec)
    k = qubits_for(spec.direction_count)
    per_turn = k + 2 if isinstance(spec, PlanarLatticeSpec) else k
    return QubitBudget(per_turn, m)


def _field_bits(enc, field_value):
    if isinstance(field_value, str):
        text = field_value
        if any(ch not in "01" for ch in text):
            raise BitstringFormatError(f"turn field {text!r} is not a 0/1 string")
    else:
        bits = list(field_value)
        if any(b not in (0, 1) for b in bits):
            raise BitstringFormatError(f"turn field {bits!r} has non-binary entries")
        text = "".join(str(b) for b in bits)
    if len(text) != enc.width:
        raise BitstringFormatError(
            f"turn field has {len(text)} bits, layout needs {enc.width}",
            expected_length=enc.width,
        )
    return int(text, 2) if text else 0


def decode_turn(enc: TurnEncoding, field_value) -> TurnRecord:
    """Evaluate the displacement polynomials on one turn field.

    ``field_value`` is a 0/1 string or bit sequence, direction bits first.
    """
    return enc.turn_table[_field_bits(enc, field_value)]

