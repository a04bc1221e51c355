"""Lattice turn geometries.

A planar spec lists K in-plane displacement pairs ``(da_k, db_k)`` that are
placed into each of the three orthogonal planes:

    y-z plane:  (0,    da_k, db_k)
    z-x plane:  (db_k, 0,    da_k)
    x-y plane:  (da_k, db_k, 0)

A direct spec lists its 3D step vectors explicitly and needs no plane
selection. Both kinds are plain values; :func:`validate` reports problems as
data and the encoders refuse specs that fail it.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Union

from .errors import InvalidSpecError, SpecParseError
from .rational import as_rational, format_rational, parse_rational

PLANES = ("yz", "zx", "xy")


@dataclass(frozen=True)
class PlanarLatticeSpec:
    name: str
    d: Fraction
    delta_a: tuple
    delta_b: tuple

    def __post_init__(self):
        object.__setattr__(self, "d", as_rational(self.d))
        object.__setattr__(self, "delta_a", tuple(as_rational(v) for v in self.delta_a))
        object.__setattr__(self, "delta_b", tuple(as_rational(v) for v in self.delta_b))

    @property
    def kind(self):
        return "planar"

    @property
    def pairs(self):
        return list(zip(self.delta_a, self.delta_b))

    @property
    def direction_count(self):
        return len(self.delta_a)


@dataclass(frozen=True)
class DirectLatticeSpec:
    name: str
    directions: tuple = field(default=())

    def __post_init__(self):
        dirs = tuple(tuple(as_rational(c) for c in v) for v in self.directions)
        object.__setattr__(self, "directions", dirs)

    @property
    def kind(self):
        return "direct"

    @property
    def direction_count(self):
        return len(self.directions)


LatticeSpec = Union[PlanarLatticeSpec, DirectLatticeSpec]


def place_in_plane(plane, da, db):
    """3D displacement for in-plane pair ``(da, db)`` in ``plane``."""
    zero = Fraction(0)
    if plane == "yz":
        return (zero, da, db)
    if plane == "zx":
        return (db, zero, da)
    if plane == "xy":
        return (da, db, zero)
    raise ValueError(f"unknown plane {plane!r}")


def _require_positive(d):
    d = as_rational(d)
    if d <= 0:
        raise InvalidSpecError(f"bond scale must be positive, got {format_rational(d)}",
                               [f"non-positive bond scale {format_rational(d)}"])
    return d


def builtin_fcc(d=1) -> PlanarLatticeSpec:
    """Face-centred cubic: four face-diagonal steps per plane, 12 directions in all."""
    d = _require_positive(d)
    h = d / 2
    return PlanarLatticeSpec("fcc", d, (h, -h, -h, h), (h, h, -h, -h))


def builtin_cubic_diag(d=1) -> PlanarLatticeSpec:
    """Cubic lattice with planar diagonals: eight steps per plane, counter-clockwise from +a."""
    d = _require_positive(d)
    z = Fraction(0)
    return PlanarLatticeSpec(
        "cubic-diag", d, (d, d, z, -d, -d, -d, z, d), (z, d, d, d, z, -d, -d, -d)
    )


BUILTINS = {"fcc": builtin_fcc, "cubic-diag": builtin_cubic_diag}


def validate(spec: LatticeSpec) -> list[str]:
    """All invariant violations of ``spec``; an empty list means the spec is usable."""
    problems = []
    if isinstance(spec, PlanarLatticeSpec):
        if spec.d <= 0:
            problems.append(f"non-positive bond scale {format_rational(spec.d)}")
        if len(spec.delta_a) != len(spec.delta_b):
            problems.append(
                f"length mismatch: delta_a has {len(spec.delta_a)} entries, "
                f"delta_b has {len(spec.delta_b)}"
            )
        pairs = spec.pairs
        if len(pairs) < 2:
            problems.append(f"need at least 2 in-plane directions, got {len(pairs)}")
        seen = {}
        for k, pair in enumerate(pairs):
            if pair == (0, 0):
                problems.append(f"zero direction at index {k}")
            if pair in seen:
                problems.append(
                    f"duplicate direction ({_fmt(pair)}) at indices {seen[pair]} and {k}"
                )
            else:
                seen[pair] = k
    elif isinstance(spec, DirectLatticeSpec):
        if len(spec.directions) < 2:
            problems.append(f"need at least 2 directions, got {len(spec.directions)}")
        seen = {}
        for k, v in enumerate(spec.directions):
            if len(v) != 3:
                problems.append(f"direction {k} has {len(v)} components, expected 3")
                continue
            if all(c == 0 for c in v):
                problems.append(f"zero direction at index {k}")
            if v in seen:
                problems.append(f"duplicate direction ({_fmt(v)}) at indices {seen[v]} and {k}")
            else:
                seen[v] = k
    else:
        problems.append(f"unknown spec type {type(spec).__name__}")
    return problems


def require_valid(spec):
    problems = validate(spec)
    if problems:
        raise InvalidSpecError(f"invalid lattice spec {getattr(spec, 'name', '?')!r}", problems)
    return spec


def _fmt(vec):
    return ", ".join(format_rational(c) for c in vec)


def plane_displacements(spec: PlanarLatticeSpec) -> list:
    """The 3K plane-placed displacements, plane-major, duplicates kept."""
    return [place_in_plane(p, a, b) for p in PLANES for a, b in spec.pairs]


def direction_set(spec: LatticeSpec) -> frozenset:
    require_valid(spec)
    if isinstance(spec, PlanarLatticeSpec):
        return frozenset(plane_displacements(spec))
    return frozenset(spec.directions)


def degrees_of_freedom(spec: LatticeSpec) -> int:
    """Number of distinct 3D steps the lattice allows."""
    return len(direction_set(spec))


def to_direct(spec: PlanarLatticeSpec, name=None) -> DirectLatticeSpec:
    """Deduplicated plane placements as a direct spec, first-occurrence order."""
    require_valid(spec)
    seen = []
    for v in plane_displacements(spec):
        if v not in seen:
            seen.append(v)
    return DirectLatticeSpec(name or f"{spec.name}-direct", tuple(seen))


def scaled(spec: LatticeSpec, factor) -> LatticeSpec:
    factor = as_rational(factor)
    if isinstance(spec, PlanarLatticeSpec):
        return PlanarLatticeSpec(
            spec.name,
            spec.d * factor,
            tuple(v * factor for v in spec.delta_a),
            tuple(v * factor for v in spec.delta_b),
        )
    return DirectLatticeSpec(spec.name, tuple(tuple(c * factor for c in v) for v in spec.directions))


# -- JSON spec files ------------------------------------------------------------

_PLANAR_KEYS = {"name", "kind", "d", "delta_a", "delta_b"}
_DIRECT_KEYS = {"name", "kind", "directions"}


def spec_from_dict(data, d=None) -> LatticeSpec:
    """Build a spec from its JSON object.

    Planar ``delta_a``/``delta_b`` entries are in units of the bond scale
    ``d``; the stored spec holds the actual displacements. Direct directions
    are taken as-is and multiplied by ``d`` when it is given.
    """
    if not isinstance(data, dict):
        raise SpecParseError("lattice spec must be a JSON object")
    kind = data.get("kind")
    if kind == "planar":
        allowed, required = _PLANAR_KEYS, {"name", "kind", "delta_a", "delta_b"}
    elif kind == "direct":
        allowed, required = _DIRECT_KEYS, {"name", "kind", "directions"}
    else:
        raise SpecParseError(f"'kind' must be 'planar' or 'direct', got {kind!r}")
    unknown = sorted(set(data) - allowed)
    if unknown:
        raise SpecParseError(f"unknown keys for {kind} spec: {', '.join(unknown)}")
    missing = sorted(required - set(data))
    if missing:
        raise SpecParseError(f"missing keys: {', '.join(missing)}")
    name = data["name"]
    if not isinstance(name, str):
        raise SpecParseError("'name' must be a string")

    if kind == "planar":
        scale = parse_rational(data.get("d", "1"))
        if d is not None:
            scale = as_rational(d)
        da = _rational_list(data["delta_a"], "delta_a")
        db = _rational_list(data["delta_b"], "delta_b")
        return PlanarLatticeSpec(name, scale, [v * scale for v in da], [v * scale for v in db])

    dirs = data["directions"]
    if not isinstance(dirs, list):
        raise SpecParseError("'directions' must be a list of [x, y, z] string triples")
    parsed = []
    for k, v in enumerate(dirs):
        if not isinstance(v, list):
            raise SpecParseError(f"direction {k} must be a list")
        parsed.append(tuple(_rational_list(v, f"directions[{k}]")))
    spec = DirectLatticeSpec(name, tuple(parsed))
    return scaled(spec, d) if d is not None else spec


def _rational_list(values, what):
    if not isinstance(values, list):
        raise SpecParseError(f"'{what}' must be a list of rational strings")
    try:
        return [parse_rational(v) for v in values]
    except SpecParseError as exc:
        raise SpecParseError(f"{what}: {exc}") from None


def spec_to_dict(spec: LatticeSpec) -> dict:
    if isinstance(spec, PlanarLatticeSpec):
        d = spec.d
        return {
            "name": spec.name,
            "kind": "planar",
            "d": format_rational(d),
            "delta_a": [format_rational(v / d) for v in spec.delta_a],
            "delta_b": [format_rational(v / d) for v in spec.delta_b],
        }
    return {
        "name": spec.name,
        "kind": "direct",
        "directions": [[format_rational(c) for c in v] for v in spec.directions],
    }


def load_spec(path, d=None) -> LatticeSpec:
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as exc:
        raise SpecParseError(f"cannot read lattice spec {path}: {exc.strerror or exc}") from None
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SpecParseError(f"{path}: invalid JSON: {exc}") from None
    return spec_from_dict(data, d=d)


def resolve_lattice(source: str, d=None) -> LatticeSpec:
    """``builtin:<name>`` or a path to a JSON spec file."""
    if source.startswith("builtin:"):
        key = source.split(":", 1)[1]
        if key not in BUILTINS:
            raise SpecParseError(
                f"unknown builtin lattice {key!r}; choose from {', '.join(sorted(BUILTINS))}"
            )
        return BUILTINS[key](1 if d is None else d)
    return load_spec(source, d=d)
