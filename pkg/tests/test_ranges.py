import pytest

from corpuscope.ranges import (
    context_count,
    equipartition,
    partition_invariant,
    write_partition_tsv,
)


def freqs_from_spec(spec):
    """{frequency: n_items} -> a frequency table with that histogram."""
    out = {}
    for f, n in spec.items():
        for i in range(n):
            out[f"w{f}_{i}"] = f
    return out


FOUR_RANGE = freqs_from_spec({2: 6, 3: 4, 4: 3, 6: 2})


class TestContextCount:
    def test_three_items_of_frequency_two(self):
        assert context_count([2, 2, 2]) == 6

    def test_pair(self):
        assert context_count([5, 3]) == 8

    def test_empty(self):
        assert context_count([]) == 0


class TestEquipartition:
    def test_four_equal_ranges(self):
        p = equipartition(FOUR_RANGE, (2, 2), (3, 3))
        assert p.ranges == [(2, 2), (3, 3), (4, 4), (5, 6)]
        assert p.per_range_contexts == [12, 12, 12, 12]
        assert p.k == 4
        assert p.n_c == 12

    def test_contiguity(self):
        p = equipartition(FOUR_RANGE, (2, 2), (3, 3))
        for (lo1, hi1), (lo2, hi2) in zip(p.ranges, p.ranges[1:]):
            assert lo2 == hi1 + 1

    def test_greedy_closure_bound(self):
        spec = {2: 10, 3: 7, 4: 5, 5: 4, 6: 3, 7: 3, 8: 2,
                9: 2, 10: 1, 12: 1, 15: 1, 30: 1}
        freqs = freqs_from_spec(spec)
        p = equipartition(freqs, (2, 2), (3, 3))
        c1, c2 = p.per_range_contexts[:2]
        target = (c1 + c2) / 2
        for (lo, hi), ctx in zip(p.ranges[2:-1], p.per_range_contexts[2:-1]):
            assert ctx >= target
            # closed at the first crossing: without the final frequency
            # level the range was still below target
            assert ctx - hi * spec.get(hi, 0) < target

    def test_first_seed_must_start_at_two(self):
        with pytest.raises(ValueError):
            equipartition(FOUR_RANGE, (3, 4), (5, 6))

    def test_seeds_must_be_contiguous(self):
        with pytest.raises(ValueError):
            equipartition(FOUR_RANGE, (2, 3), (5, 6))

    def test_empty_second_seed_rejected(self):
        freqs = freqs_from_spec({2: 5})
        with pytest.raises(ValueError):
            equipartition(freqs, (2, 2), (3, 3))

    def test_frequency_one_excluded(self):
        freqs = dict(freqs_from_spec({2: 6, 3: 4}), hapax_a=1, hapax_b=1)
        p = equipartition(freqs, (2, 2), (3, 3))
        assert sum(p.per_range_contexts) == 6 * 2 + 4 * 3

    def test_tail_absorbed(self):
        # heavy high-frequency tail that never reaches the seed target
        freqs = freqs_from_spec({2: 6, 3: 4, 50: 1})
        p = equipartition(freqs, (2, 2), (3, 3))
        assert p.ranges[-1][1] == 50
        assert sum(p.per_range_contexts) == 12 + 12 + 50


class TestPartitionInvariant:
    def test_exact_identity(self):
        p = equipartition(FOUR_RANGE, (2, 2), (3, 3))
        product, total, rel_error = partition_invariant(p)
        assert product == 48
        assert total == 48
        assert rel_error == 0.0

    def test_identity_with_awkward_division(self):
        freqs = freqs_from_spec({2: 5, 3: 4, 4: 2})
        p = equipartition(freqs, (2, 2), (3, 3))
        product, total, rel_error = partition_invariant(p)
        assert rel_error == 0.0
        assert product == total

    def test_tsv(self, tmp_path):
        p = equipartition(FOUR_RANGE, (2, 2), (3, 3))
        path = write_partition_tsv(p, tmp_path / "r.tsv")
        lines = path.read_text().splitlines()
        assert lines[0] == "lo\thi\tn_items\tcontexts"
        assert lines[1] == "2\t2\t6\t12"
        assert lines[-1].startswith("# k=4")
