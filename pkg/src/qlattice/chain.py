"""Decode chain bitstrings into bead coordinates.

A chain of ``m`` beads is ``m - 1`` turn fields written left to right, the
first field being the bead 1 -> bead 2 turn. Within a field the direction
bits come first, then the plane bits, each group most-significant first.
Invalid turns still advance decoding with a zero step so full populations
can be analysed; the conformation is then marked invalid.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .encoder import TurnEncoding, TurnRecord, decode_turn
from .errors import BitstringFormatError, ContractError
from .rational import format_decimal, format_rational

ORIGIN = (Fraction(0), Fraction(0), Fraction(0))


@dataclass(frozen=True)
class Conformation:
    beads: tuple
    turns: tuple
    valid: bool
    self_avoiding: bool | None

    @property
    def bead_count(self):
        return len(self.beads)

    def to_dict(self):
        return {
            "beads": [[format_rational(c) for c in b] for b in self.beads],
            "valid": self.valid,
            "self_avoiding": self.self_avoiding,
            "turns": [t.to_dict() for t in self.turns],
        }


def split_fields(enc: TurnEncoding, bits: str, m: int | None = None) -> list[str]:
    """Cut a chain bitstring into per-turn fields, checking length and alphabet."""
    if not isinstance(bits, str):
        raise BitstringFormatError("bitstring must be a str of 0/1 characters")
    w = enc.width
    for i, ch in enumerate(bits):
        if ch not in "01":
            raise BitstringFormatError(
                f"non-binary character {ch!r} at position {i} (turn field {i // w})",
                field_index=i // w,
            )
    if m is not None:
        if m < 1:
            raise BitstringFormatError(f"bead count must be >= 1, got {m}")
        expected = w * (m - 1)
        if len(bits) != expected:
            raise BitstringFormatError(
                f"bitstring has {len(bits)} bits, expected {expected} "
                f"({m - 1} turns x {w} bits)",
                field_index=min(len(bits), expected) // w,
                expected_length=expected,
            )
    elif len(bits) % w:
        raise BitstringFormatError(
            f"bitstring length {len(bits)} is not a multiple of the {w}-bit turn width",
            field_index=len(bits) // w,
            expected_length=(len(bits) // w + 1) * w,
        )
    return [bits[i : i + w] for i in range(0, len(bits), w)]


def _pairwise_distinct(beads):
    return len(set(beads)) == len(beads)


def decode_chain(enc: TurnEncoding, bits: str, origin=ORIGIN, m: int | None = None) -> Conformation:
    """Cumulative decode of every turn field, starting from ``origin``."""
    fields = split_fields(enc, bits, m)
    pos = tuple(Fraction(c) for c in origin)
    if len(pos) != 3:
        raise ValueError("origin must have three coordinates")
    beads = [pos]
    turns = []
    for f in fields:
        rec = decode_turn(enc, f)
        turns.append(rec)
        if rec.valid:
            pos = (pos[0] + rec.displacement[0], pos[1] + rec.displacement[1],
                   pos[2] + rec.displacement[2])
        beads.append(pos)
    valid = all(t.valid for t in turns)
    return Conformation(
        beads=tuple(beads),
        turns=tuple(turns),
        valid=valid,
        self_avoiding=_pairwise_distinct(beads) if valid else None,
    )


def self_avoiding(c: Conformation) -> bool:
    """True when no two beads share a lattice point."""
    if not c.valid:
        raise ContractError("self-avoidance is undefined for an invalid conformation")
    return _pairwise_distinct(c.beads)


def export_xyz(c: Conformation, comment: str = "qlattice conformation") -> str:
    """XYZ text, one ``C x y z`` line per bead."""
    if not c.valid:
        raise ContractError("cannot export an invalid conformation")
    comment = comment.replace("\n", " ")
    lines = [str(len(c.beads)), comment]
    for b in c.beads:
        lines.append("C " + " ".join(format_decimal(v) for v in b))
    return "\n".join(lines) + "\n"


def single_bead(origin=ORIGIN) -> Conformation:
    return Conformation((tuple(Fraction(v) for v in origin),), (), True, True)


__all__ = [
    "Conformation",
    "TurnRecord",
    "decode_chain",
    "export_xyz",
    "self_avoiding",
    "single_bead",
    "split_fields",
]
