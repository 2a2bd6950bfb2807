import pytest

from grasseff.partitions import BoxedPartition, box_basis_size, dual, enumerate_box, make_partition


def test_enumerate_codim2_2x2():
    got = [p.trimmed() for p in enumerate_box(2, 2, 2)]
    assert got == [(2,), (1, 1)]


def test_enumerate_empty_partition():
    assert [p.trimmed() for p in enumerate_box(2, 2, 0)] == [()]


def test_enumerate_2x3():
    assert [p.trimmed() for p in enumerate_box(2, 3, 3)] == [(3,), (2, 1)]


def test_enumerate_out_of_range_is_empty():
    assert enumerate_box(2, 2, 5) == []
    assert enumerate_box(2, 2, -1) == []


def test_enumerate_counts_telescope():
    for k, w in [(2, 2), (2, 3), (3, 3), (4, 2)]:
        total = sum(len(enumerate_box(k, w, m)) for m in range(k * w + 1))
        assert total == box_basis_size(k, w)


def test_enumerate_strictly_ordered_no_duplicates():
    for k, w in [(2, 3), (3, 3)]:
        for m in range(k * w + 1):
            parts = [p.parts for p in enumerate_box(k, w, m)]
            assert len(set(parts)) == len(parts)
            assert parts == sorted(parts, reverse=True)


def test_dual_examples():
    assert dual(make_partition((2,), 2, 2)).trimmed() == (2,)
    assert dual(make_partition((1, 1), 2, 2)).trimmed() == (1, 1)
    assert dual(make_partition((2, 2), 2, 2)).trimmed() == ()


def test_dual_involution_all_small_boxes():
    for k in range(1, 5):
        for w in range(1, 5):
            if k * w > 16:
                continue
            for m in range(k * w + 1):
                for lam in enumerate_box(k, w, m):
                    d = dual(lam)
                    assert dual(d) == lam
                    assert lam.size + d.size == k * w


def test_invalid_partitions_rejected():
    with pytest.raises(ValueError):
        BoxedPartition((1, 2), 2, 2)  # not weakly decreasing
    with pytest.raises(ValueError):
        BoxedPartition((3, 0), 2, 2)  # exceeds box width
    with pytest.raises(ValueError):
        make_partition((1, 1, 1), 2, 2)  # too many nonzero parts


def test_make_partition_pads_and_trims():
    p = make_partition((2,), 3, 2)
    assert p.parts == (2, 0, 0)
    assert p.trimmed() == (2,)
    assert make_partition((2, 1, 0, 0), 3, 2).parts == (2, 1, 0)
