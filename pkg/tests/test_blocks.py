import pytest

from charblocks.blocks import (
    BlockId,
    block_partitions,
    block_partitions_via_hooks,
    blocks_of,
    c_mu,
    extremal_lambda,
    min_c_over_regular,
    opposite_sign_partner,
)
from charblocks.characters import char_value
from charblocks.partitions import (
    add_hooks_of_length,
    e_core,
    is_e_class_regular,
    partitions_of,
)
from charblocks.sweeps import (
    lemma1_sweep,
    nonvanishing_row_structure_check,
    verify_chibar,
    verify_dichotomy,
    verify_remark1,
    verify_remark2,
    verify_theorem1,
)


class TestBlockId:
    def test_valid(self):
        b = BlockId(e=4, core=(2, 1), weight=1)
        assert b.n == 7

    def test_invalid_core(self):
        with pytest.raises(ValueError):
            BlockId(e=3, core=(3,), weight=1)

    def test_e1_requires_empty_core(self):
        with pytest.raises(ValueError):
            BlockId(e=1, core=(1,), weight=1)
        assert BlockId(e=1, core=(), weight=5).n == 5

    def test_empty_block_of_s0_rejected(self):
        with pytest.raises(ValueError):
            BlockId(e=2, core=(), weight=0)


class TestBlockPartitions:
    def test_examples(self):
        b = BlockId(e=4, core=(2, 1), weight=1)
        assert block_partitions(b) == [(6, 1), (4, 3), (2, 2, 2, 1), (2, 1, 1, 1, 1, 1)]
        b = BlockId(e=2, core=(), weight=2)
        assert block_partitions(b) == list(partitions_of(4))
        b = BlockId(e=3, core=(3, 1), weight=0)
        assert block_partitions(b) == [(3, 1)]

    def test_hook_generation_agrees(self):
        for e in range(2, 5):
            for n in range(1, 10):
                for b in blocks_of(e, n):
                    if b.weight <= 2:
                        assert block_partitions_via_hooks(b) == block_partitions(b)

    def test_blocks_partition_all_partitions(self):
        for e in range(2, 5):
            for n in range(1, 10):
                seen = []
                for b in blocks_of(e, n):
                    seen.extend(block_partitions(b))
                assert sorted(seen) == sorted(partitions_of(n))


class TestCount:
    def test_paper_zero_cases(self):
        assert c_mu(BlockId(e=3, core=(6, 4, 2), weight=1), (10, 2, 1, 1, 1)).count == 0
        assert c_mu(BlockId(e=4, core=(2, 1), weight=1), (2, 2, 2, 1)).count == 0

    def test_s4_count(self):
        r = c_mu(BlockId(e=2, core=(), weight=2), (3, 1))
        assert r.count == 3
        assert r.witnesses == [(4,), (2, 2), (1, 1, 1, 1)]

    def test_witness_consistency(self):
        for e in range(2, 5):
            for b in blocks_of(e, 6):
                for lam in partitions_of(6):
                    r = c_mu(b, lam)
                    assert r.count == len(r.witnesses)
                    assert r.witnesses == sorted(set(r.witnesses), reverse=True)
                    for nu in r.witnesses:
                        assert e_core(nu, e) == b.core
                        assert char_value(nu, lam) != 0

    def test_size_mismatch(self):
        with pytest.raises(ValueError):
            c_mu(BlockId(e=2, core=(), weight=2), (3,))


class TestExtremal:
    def test_examples(self):
        assert extremal_lambda(BlockId(e=2, core=(), weight=2)) == (3, 1)
        assert extremal_lambda(BlockId(e=4, core=(2, 1), weight=1)) == (7,)
        assert extremal_lambda(BlockId(e=3, core=(3, 1), weight=0)) == (4,)

    def test_attains_weight_plus_one(self):
        for e in range(2, 6):
            for n in range(1, 11):
                for b in blocks_of(e, n):
                    lam = extremal_lambda(b)
                    assert sum(lam) == b.n
                    assert is_e_class_regular(lam, e)
                    assert c_mu(b, lam).count == b.weight + 1


class TestMinOverRegular:
    def test_examples(self):
        b = BlockId(e=2, core=(), weight=2)
        best, argmin, zeros = min_c_over_regular(b)
        assert best == 3
        assert c_mu(b, argmin).count == 3

        best, _, zeros = min_c_over_regular(BlockId(e=4, core=(2, 1), weight=1))
        assert best == 2
        assert (2, 2, 2, 1) in zeros

        best, argmin, _ = min_c_over_regular(BlockId(e=2, core=(), weight=1))
        assert best == 2 and argmin == (1, 1)

    def test_weight_zero_min_is_one(self):
        for e in range(2, 5):
            for n in range(1, 9):
                for b in blocks_of(e, n):
                    if b.weight == 0:
                        best, _, _ = min_c_over_regular(b)
                        assert best == 1


class TestOppositeSignPartner:
    def test_examples(self):
        b = BlockId(e=2, core=(), weight=1)
        assert opposite_sign_partner((2,), (), b, (1, 1)) == (1, 1)
        assert opposite_sign_partner((1, 1), (), b, (1, 1)) == (2,)

    def test_partner_properties_and_injectivity(self):
        for e in (2, 3):
            for n in range(2, 9):
                for b in blocks_of(e, n):
                    if b.weight == 0:
                        continue
                    for psi in block_partitions(b):
                        for lam in partitions_of(n):
                            if not is_e_class_regular(lam, e):
                                continue
                            if char_value(psi, lam) == 0:
                                continue
                            partners = {}
                            for k in range(1, b.weight + 1):
                                from charblocks.partitions import (
                                    remove_hooks_of_length,
                                )

                                for phi, _ in remove_hooks_of_length(psi, k * e):
                                    beta = opposite_sign_partner(psi, phi, b, lam)
                                    assert beta != psi
                                    assert e_core(beta, e) == b.core
                                    assert char_value(beta, lam) != 0
                                    assert phi not in partners
                                    partners[phi] = beta
                            # distinct removals give distinct partners
                            vals = list(partners.values())
                            assert len(vals) == len(set(vals))

    def test_precondition_errors(self):
        b = BlockId(e=2, core=(), weight=1)
        with pytest.raises(ValueError):
            # hook length 1 is not divisible by e=2
            opposite_sign_partner((2,), (1,), b, (1, 1))
        with pytest.raises(ValueError):
            # character value of psi on lam is zero
            b2 = BlockId(e=2, core=(), weight=2)
            opposite_sign_partner((2, 1, 1), (2,), b2, (3, 1))


class TestSweeps:
    def test_theorem1_small(self):
        report = verify_theorem1([2, 3], 8)
        assert report.passed()
        assert all(r["ok"] for r in report.rows)

    def test_theorem1_parallel_matches_serial(self):
        serial = verify_theorem1([2], 7, jobs=1)
        parallel = verify_theorem1([2], 7, jobs=2)
        assert serial.rows == parallel.rows
        assert serial.verdict == parallel.verdict

    def test_dichotomy_small(self):
        report = verify_dichotomy([2, 3, 4], 8)
        assert report.passed()

    def test_lemma1_hand_case(self):
        # delta1=(2), delta2=(1,1): the only common removal results are
        # gamma=(1) (legs 0 and 1) and gamma=() (legs 0 and 1); sign product -1
        report = lemma1_sweep(2)
        assert report.passed()
        assert report.rows == [{"m": 2, "checked": 1, "failures": 0}]

    def test_lemma1_small(self):
        report = lemma1_sweep(6)
        assert report.passed()
        assert all(r["failures"] == 0 for r in report.rows)

    def test_remark1_exploratory(self):
        report = verify_remark1([2], 5)
        assert report.passed()
        # S_2 whole-table case: both characters non-zero on the 2-cycle
        b = BlockId(e=2, core=(), weight=1)
        assert c_mu(b, (2,)).count == 2

    def test_remark2_small(self):
        report = verify_remark2(7)
        assert report.passed()
        by_n = {r["n"]: r for r in report.rows}
        assert by_n[3]["c_(n-1,1)"] == 2
        assert by_n[4]["c_(n-1,1)"] == 3

    def test_chibar_sweep_small(self):
        assert verify_chibar(6).passed()

    def test_row_structure_small(self):
        report = nonvanishing_row_structure_check(8, (2, 3, 4))
        assert report.passed()

    def test_report_serialization(self):
        import json

        report = verify_theorem1([2], 5)
        obj = json.loads(report.to_json(meta=False))
        assert obj["verdict"] == "pass"
        assert "meta" not in obj
        obj = json.loads(report.to_json(meta=True))
        assert "generated" in obj["meta"]
        text = report.to_text()
        assert text.endswith("verdict: pass")
