from collections import Counter
from fractions import Fraction

import pytest

from oracles import CUBIC_DA, CUBIC_DB, FCC_DA, FCC_DB, chain_census, expected_turns
from qlattice.analysis import (
    MAX_TURN_BITS,
    census_chains,
    census_turns,
    partial_census,
    step_table,
    verify_published,
)
from qlattice.chain import decode_chain
from qlattice.encoder import encode
from qlattice.errors import ResourceLimitError
from qlattice.lattice import DirectLatticeSpec, degrees_of_freedom

CUBIC_TURNS = expected_turns(CUBIC_DA, CUBIC_DB)
FCC_TURNS = expected_turns(FCC_DA, FCC_DB)

# Frozen from oracles.chain_census (pure brute force, no library code).
ORACLE = {
    ("cubic-diag", 2): (32, 24, 24, 18),
    ("cubic-diag", 3): (1024, 576, 540, 324),
    ("fcc", 2): (16, 12, 12, 12),
    ("fcc", 3): (256, 144, 132, 144),
    ("fcc", 4): (4096, 1728, 1404, 1728),
}


class TestTurnCensus:
    def test_cubic(self, cubic):
        c = census_turns(cubic)
        assert (c.total_states, c.valid_states, c.distinct_displacements) == (32, 24, 18)
        assert sorted(Counter(c.multiplicity.values()).items()) == [(1, 12), (2, 6)]
        doubled = {d for d, n in c.multiplicity.items() if n == 2}
        assert all(sorted(map(abs, d)) == [0, 0, 1] for d in doubled)

    def test_fcc(self, fcc):
        c = census_turns(fcc)
        assert (c.total_states, c.valid_states, c.distinct_displacements) == (16, 12, 12)
        assert set(c.multiplicity.values()) == {1}

    def test_two_directions(self):
        c = census_turns(encode(DirectLatticeSpec("pm", [(1, 0, 0), (-1, 0, 0)])))
        assert (c.total_states, c.valid_states, c.distinct_displacements) == (2, 2, 2)

    def test_agrees_with_degrees_of_freedom(self, cubic, fcc):
        for enc in (cubic, fcc):
            assert census_turns(enc).distinct_displacements == degrees_of_freedom(enc.spec)

    def test_invariants(self, cubic):
        c = census_turns(cubic)
        assert c.valid_states == sum(c.multiplicity.values())
        assert c.distinct_displacements == len(c.multiplicity)

    def test_guard(self):
        # a real encoding this wide is itself too large to build
        stub = type("Stub", (), {"width": MAX_TURN_BITS + 1})()
        with pytest.raises(ResourceLimitError):
            census_turns(stub)


class TestChainCensus:
    @pytest.mark.parametrize("key", sorted(ORACLE))
    def test_matches_oracle(self, cubic, fcc, key):
        enc = {"cubic-diag": cubic, "fcc": fcc}[key[0]]
        c = census_chains(enc, key[1])
        assert (c.total_bitstrings, c.valid, c.self_avoiding, c.distinct_conformations) == ORACLE[key]

    def test_oracle_table_is_current(self):
        # recompute a cheap row so the frozen numbers stay honest
        assert chain_census(FCC_TURNS, 4, 3) == ORACLE[("fcc", 3)]
        assert chain_census(CUBIC_TURNS, 5, 2) == ORACLE[("cubic-diag", 2)]

    def test_cubic_three_beads_by_reversal_count(self, cubic):
        c = census_chains(cubic, 3)
        reversals = sum(
            1 for a in CUBIC_TURNS.values() for b in CUBIC_TURNS.values()
            if all(x + y == 0 for x, y in zip(a, b))
        )
        assert c.self_avoiding == c.valid - reversals

    def test_matches_decode_chain(self, cubic):
        seen, valid, avoiding = set(), 0, 0
        for i in range(1 << 10):
            conf = decode_chain(cubic, format(i, "010b"))
            if conf.valid:
                valid += 1
                avoiding += conf.self_avoiding
                seen.add(conf.beads)
        c = census_chains(cubic, 3)
        assert (c.valid, c.self_avoiding, c.distinct_conformations) == (valid, avoiding, len(seen))

    def test_monotone(self, cubic, fcc):
        for enc in (cubic, fcc):
            per_turn = census_turns(enc).valid_states
            prev = census_chains(enc, 2)
            for m in (3, 4):
                cur = census_chains(enc, m)
                assert cur.self_avoiding <= prev.self_avoiding * per_turn
                assert cur.self_avoiding <= cur.valid <= cur.total_bitstrings
                prev = cur

    @pytest.mark.parametrize("partitions,workers", [(1, 1), (2, 1), (7, 1), (5, 3), (64, 4)])
    def test_partition_invariance(self, cubic, partitions, workers):
        assert census_chains(cubic, 4, partitions, workers) == census_chains(cubic, 4)

    def test_merge_is_commutative(self, fcc):
        a = partial_census(fcc, 3, 0, 100)
        b = partial_census(fcc, 3, 100, 256)
        ab, ba = a.merge(b).finish(3), b.merge(a).finish(3)
        assert ab == ba == census_chains(fcc, 3)

    def test_single_bead(self, fcc):
        c = census_chains(fcc, 1)
        assert (c.total_bitstrings, c.valid, c.self_avoiding, c.distinct_conformations) == (1, 1, 1, 1)

    def test_guard(self, cubic):
        with pytest.raises(ResourceLimitError) as info:
            census_chains(cubic, 8)
        assert info.value.required == 35

    def test_step_table_is_exact(self, fcc):
        st = step_table(fcc)
        assert st.scale == 2
        for s, rec in enumerate(fcc.turn_table):
            if rec.valid:
                assert tuple(Fraction(int(v), st.scale) for v in st.table[s]) == rec.displacement
            else:
                assert st.ids[s] == -1


class TestVerifyPublished:
    def test_overall(self):
        report = verify_published()
        assert report.overall == "PASS"
        statuses = Counter(i.status for i in report.items)
        assert statuses["mismatch"] == 0
        assert statuses["documented-discrepancy"] == 2

    def test_flags_cubic_prose(self):
        items = {(i.lattice, i.item): i for i in verify_published().items}
        for key in ("da polynomial", "db polynomial"):
            assert items[("cubic-diag", key)].status == "documented-discrepancy"
            assert items[("fcc", key)].status == "match"
        assert "q2*q3" in items[("cubic-diag", "da polynomial")].note

    def test_json_round_trips(self):
        import json

        d = verify_published("fcc").to_dict()
        assert json.loads(json.dumps(d)) == d
        assert all(i["status"] == "match" for i in d["items"])

    def test_unknown_lattice(self):
        with pytest.raises(ValueError):
            verify_published("diamond")

    def test_table_text(self):
        text = verify_published().table()
        assert text.splitlines()[-1] == "overall: PASS"
        assert "documented-discrepancy" in text
