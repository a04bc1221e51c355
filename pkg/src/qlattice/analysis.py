"""Exhaustive desk-scale enumeration over turn states and chain bitstrings."""

from __future__ import annotations

import math
from collections import Counter
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from . import _kernels, linalg
from . import reference_values as ref
from .encoder import TurnEncoding, coefficients, decode_turn, encode, qubit_budget
from .errors import ResourceLimitError
from .lattice import builtin_cubic_diag, builtin_fcc, degrees_of_freedom
from .multilinear import basis_matrix, format_poly, parse_poly, state_table
from .rational import format_rational

MAX_TURN_BITS = 24
MAX_CHAIN_BITS = 30


@dataclass(frozen=True)
class TurnCensus:
    total_states: int
    valid_states: int
    distinct_displacements: int
    multiplicity: dict

    def to_dict(self):
        rows = sorted(self.multiplicity.items())
        return {
            "total_states": self.total_states,
            "valid_states": self.valid_states,
            "distinct_displacements": self.distinct_displacements,
            "multiplicity": [
                {"displacement": [format_rational(c) for c in d], "count": n} for d, n in rows
            ],
        }


def census_turns(enc: TurnEncoding) -> TurnCensus:
    """Decode every per-turn state and tally the displacements reached."""
    if enc.width > MAX_TURN_BITS:
        raise ResourceLimitError(
            f"turn width {enc.width} exceeds enumeration guard of {MAX_TURN_BITS} bits",
            required=enc.width, limit=MAX_TURN_BITS,
        )
    counts = Counter()
    for s in range(1 << enc.width):
        rec = decode_turn(enc, format(s, f"0{enc.width}b"))
        if rec.valid:
            counts[rec.displacement] += 1
    return TurnCensus(
        total_states=1 << enc.width,
        valid_states=sum(counts.values()),
        distinct_displacements=len(counts),
        multiplicity=dict(counts),
    )


@dataclass(frozen=True)
class ChainCensus:
    m: int
    total_bitstrings: int
    valid: int
    self_avoiding: int
    distinct_conformations: int

    def to_dict(self):
        return {
            "m": self.m,
            "total_bitstrings": self.total_bitstrings,
            "valid": self.valid,
            "self_avoiding": self.self_avoiding,
            "distinct_conformations": self.distinct_conformations,
        }


@dataclass
class PartialChainCensus:
    """Counts over a sub-range of bitstrings; merge is associative and commutative."""

    total: int
    valid: int
    self_avoiding: int
    seen: np.ndarray = field(repr=False)

    def merge(self, other: "PartialChainCensus") -> "PartialChainCensus":
        return PartialChainCensus(
            self.total + other.total,
            self.valid + other.valid,
            self.self_avoiding + other.self_avoiding,
            self.seen | other.seen,
        )

    def finish(self, m) -> ChainCensus:
        distinct = int(np.unpackbits(self.seen).sum())
        return ChainCensus(m, self.total, self.valid, self.self_avoiding, distinct)


@dataclass(frozen=True)
class StepTable:
    """Per-state integer displacements scaled by ``scale`` plus distinct-step ids."""

    scale: int
    table: np.ndarray
    ids: np.ndarray
    steps: tuple

    @property
    def radix(self):
        return max(1, len(self.steps))


def step_table(enc: TurnEncoding) -> StepTable:
    records = enc.turn_table
    disps = [r.displacement for r in records if r.valid]
    scale = math.lcm(1, *(c.denominator for d in disps for c in d))
    steps = sorted(set(disps))
    index = {d: i for i, d in enumerate(steps)}
    table = np.zeros((len(records), 3), dtype=np.int64)
    ids = np.full(len(records), -1, dtype=np.int64)
    for s, r in enumerate(records):
        if r.valid:
            table[s] = [int(c * scale) for c in r.displacement]
            ids[s] = index[r.displacement]
    return StepTable(scale, table, ids, tuple(steps))


def _chain_bits(enc, m):
    if m < 1:
        raise ValueError(f"bead count must be >= 1, got {m}")
    bits = enc.width * (m - 1)
    if bits > MAX_CHAIN_BITS:
        raise ResourceLimitError(
            f"exhaustive census needs {bits} bits ({m - 1} turns x {enc.width}); "
            f"guard is {MAX_CHAIN_BITS}",
            required=bits, limit=MAX_CHAIN_BITS,
        )
    return bits


def partial_census(enc, m, start, stop, backend=None, steps=None) -> PartialChainCensus:
    """Census over chain indices ``[start, stop)``; index bits read as the chain bitstring."""
    _chain_bits(enc, m)
    steps = steps or step_table(enc)
    turns = m - 1
    codes = steps.radix**turns
    seen = np.zeros((codes + 7) // 8, dtype=np.uint8)
    valid, avoiding = _kernels.census_range(
        steps.table, steps.ids, enc.width, turns, steps.radix, start, stop, seen, backend
    )
    return PartialChainCensus(stop - start, valid, avoiding, seen)


def census_chains(enc: TurnEncoding, m: int, partitions: int = 1, workers: int = 1,
                  backend: str | None = None) -> ChainCensus:
    """Exhaustive decode of all ``2**(width*(m-1))`` bitstrings.

    The range is cut into ``partitions`` contiguous chunks, optionally run on
    ``workers`` threads; the merged result does not depend on either.
    """
    total = 1 << _chain_bits(enc, m)
    steps = step_table(enc)
    partitions = max(1, min(partitions, total))
    bounds = [total * i // partitions for i in range(partitions + 1)]
    ranges = list(zip(bounds[:-1], bounds[1:]))

    def run(r):
        return partial_census(enc, m, r[0], r[1], backend=backend, steps=steps)

    if workers > 1 and len(ranges) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(run, ranges))
    else:
        parts = [run(r) for r in ranges]
    merged = parts[0]
    for p in parts[1:]:
        merged = merged.merge(p)
    return merged.finish(m)


# -- published-value verification ----------------------------------------------


@dataclass(frozen=True)
class VerifyItem:
    lattice: str
    item: str
    status: str
    expected: object
    computed: object
    note: str = ""

    def to_dict(self):
        return {
            "lattice": self.lattice,
            "item": self.item,
            "status": self.status,
            "expected": self.expected,
            "computed": self.computed,
            "note": self.note,
        }


@dataclass(frozen=True)
class VerifyReport:
    items: tuple

    @property
    def passed(self):
        return all(i.status != "mismatch" for i in self.items)

    @property
    def overall(self):
        return "PASS" if self.passed else "FAIL"

    def to_dict(self):
        return {"overall": self.overall, "items": [i.to_dict() for i in self.items]}

    def table(self):
        rows = [(i.lattice, i.item, i.status, i.note) for i in self.items]
        widths = [max(len(r[k]) for r in rows + [("lattice", "item", "status", "")])
                  for k in range(3)]
        out = [f"{'lattice':<{widths[0]}}  {'item':<{widths[1]}}  {'status':<{widths[2]}}  note"]
        out.append("-" * (sum(widths) + 10))
        for lat, item, status, note in rows:
            out.append(f"{lat:<{widths[0]}}  {item:<{widths[1]}}  {status:<{widths[2]}}  {note}".rstrip())
        out.append(f"overall: {self.overall}")
        return "\n".join(out)


def _fr(values):
    return [format_rational(Fraction(v)) for v in values]


def _status(ok):
    return "match" if ok else "mismatch"


def _term_diff(expected, computed):
    e, c = expected.terms, computed.terms
    parts = []
    for mono in sorted(set(e) | set(c), key=lambda t: (len(t), t)):
        if e.get(mono, 0) != c.get(mono, 0):
            name = "*".join(f"q{i}" for i in mono) or "1"
            parts.append(f"{name}: printed {format_rational(e.get(mono, 0))}, "
                         f"solved {format_rational(c.get(mono, 0))}")
    return "; ".join(parts)


def _verify_lattice(name, spec, n, ref_matrix, ref_coeffs, ref_polys):
    items = []
    B = basis_matrix(n)
    items.append(VerifyItem(name, f"B{n}", _status(B.entries == ref_matrix),
                            [list(r) for r in ref_matrix], B.as_lists()))
    table = state_table(n)
    ref_table = ref.STATE_TABLE_3 if n == 3 else ref.STATE_TABLE_2
    items.append(VerifyItem(name, f"QS{n}", _status(table.rows == ref_table),
                            [list(r) for r in ref_table], [list(r) for r in table.rows]))

    computed = coefficients(spec)
    # independent route: direct elimination on [B_n | delta]
    direct = [linalg.solve(B.entries, col) for col in (spec.delta_a, spec.delta_b)]
    solved_ok = {}
    for key, comp, indep in zip(("c_da", "c_db"), computed, direct):
        expected = [Fraction(v) for v in ref_coeffs[key]]
        ok = comp == expected and indep == expected
        solved_ok[key] = comp == indep
        note = "" if comp == indep else "encoder and direct solve disagree"
        items.append(VerifyItem(name, key, _status(ok), _fr(expected), _fr(comp), note))

    enc = encode(spec)
    for key, text in ref_polys.items():
        printed = parse_poly(text, n)
        solved = enc.components[key[1]]
        doc = ref.DOCUMENTED_DISCREPANCIES.get((name, key))
        if printed == solved:
            status, note = "match", ""
        elif doc and solved_ok[f"c_{key}"]:
            status = "documented-discrepancy"
            note = f"{doc} ({_term_diff(printed, solved)})"
        else:
            status, note = "mismatch", _term_diff(printed, solved)
        items.append(VerifyItem(name, f"{key} polynomial", status, text, format_poly(solved), note))

    budget = qubit_budget(spec, 2).per_turn
    items.append(VerifyItem(name, "per-turn qubits", _status(budget == ref.PER_TURN_QUBITS[name]),
                            ref.PER_TURN_QUBITS[name], budget))
    dof = degrees_of_freedom(spec)
    census = census_turns(enc).distinct_displacements
    items.append(VerifyItem(name, "degrees of freedom",
                            _status(dof == census == ref.DEGREES_OF_FREEDOM[name]),
                            ref.DEGREES_OF_FREEDOM[name], dof,
                            "" if dof == census else f"turn census found {census}"))
    return items


def verify_published(which=("cubic-diag", "fcc")) -> VerifyReport:
    """Compare computed matrices, coefficients, budgets and counts to the reference values."""
    if isinstance(which, str):
        which = (which,)
    items = []
    for name in which:
        if name == "cubic-diag":
            items += _verify_lattice(name, builtin_cubic_diag(1), 3, ref.B3,
                                     ref.CUBIC_DIAG_COEFFS, ref.CUBIC_DIAG_POLYNOMIALS)
        elif name == "fcc":
            items += _verify_lattice(name, builtin_fcc(1), 2, ref.B2,
                                     ref.FCC_COEFFS, ref.FCC_POLYNOMIALS)
        else:
            raise ValueError(f"no reference values for lattice {name!r}")
    return VerifyReport(tuple(items))
