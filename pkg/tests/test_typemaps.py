import pytest

from coxcat.core import (
    EMPTY,
    InternalInvariantError,
    SetPartition,
    ValidationError,
    noncrossing_partitions,
    nonaligned_blocks,
    nonnested_blocks,
    type_of,
)
from coxcat.models import MarkedPair, MarkedTriple, enumerate_family, marked_pairs
from coxcat.signed import SignedPartition, signed_type, zero_block_size
from coxcat.typemaps import (
    NcDecomposition,
    decompose,
    iota_b,
    iota_b_inverse,
    iota_d,
    iota_d_inverse,
    is_connected,
    nc_to_nn,
    nn_to_nc,
    rearrange,
    rho,
    rho_bar,
    rho_bar_inverse,
    rho_by_search,
    rho_inverse,
    star,
    uplus,
    xi,
    xi_bar,
    xi_bar_inverse,
)

sp = SetPartition.from_blocks
FIG2 = sp([[1, 4, 10], [2, 3], [5, 6, 7, 9], [8]])


def test_rho_examples():
    assert rho(FIG2) == sp([[1, 3], [2, 4, 6, 9], [5, 7, 10], [8]])
    assert rho(sp([[1, 2, 3]])) == sp([[1, 2, 3]])
    allsing = sp([[1], [2], [3]])
    assert rho(allsing) == allsing
    assert rho(sp([[1, 4], [2, 3]])) == sp([[1, 3], [2, 4]])


def test_rho_matches_search_and_inverts():
    for n in range(8):
        for p in noncrossing_partitions(n):
            q = rho(p, check=False)
            assert q == rho_by_search(p)
            assert rho_inverse(q, check=False) == p


def test_rho_requires_noncrossing():
    with pytest.raises(ValidationError):
        rho(sp([[1, 3], [2, 4]]))


def test_rho_bar_example():
    m = MarkedPair.make(FIG2, [(8,), (1, 4, 10)])
    out = rho_bar(m)
    assert out.sigma == rho(FIG2)
    assert set(out.marked) == {(8,), (5, 7, 10)}
    assert [b[-1] for b in m.marked] == [b[-1] for b in out.marked]
    assert rho_bar_inverse(out) == m


def test_algebra_examples():
    assert star(sp([[1, 2, 4], [3]]), sp([[1, 2], [3]])) == sp([[1, 2, 4, 8], [3], [5, 6], [7]])
    assert star(EMPTY, EMPTY) == sp([[1]])
    assert star(EMPTY, sp([[1, 2]])) == sp([[1, 2], [3]])
    assert star(sp([[1, 2]]), EMPTY) == sp([[1, 2, 3]])
    assert uplus(sp([[1, 2]]), sp([[1]])) == sp([[1, 2], [3]])
    assert is_connected(sp([[1, 3], [2]]))
    assert not is_connected(sp([[1], [2]]))
    assert not is_connected(EMPTY)
    with pytest.raises(ValidationError):
        star(sp([[1], [2]]), EMPTY)


def test_decompose_examples():
    d = decompose(sp([[1, 2], [3, 5], [4]]), 1)
    assert d == NcDecomposition(sp([[1, 2]]), sp([[1]]), sp([[1]]))
    d1 = decompose(sp([[1, 2], [3]]), 1)
    d2 = decompose(sp([[1, 2], [3]]), 2)
    assert d1 == NcDecomposition(sp([[1, 2]]), EMPTY, EMPTY)
    assert d2 == NcDecomposition(EMPTY, EMPTY, sp([[1, 2]]))
    with pytest.raises(ValidationError):
        decompose(EMPTY, 1)
    with pytest.raises(ValidationError):
        decompose(sp([[1]]), 3)


def test_decompose_reassembles_everywhere():
    for n in range(1, 8):
        for p in noncrossing_partitions(n):
            for variant in (1, 2):
                d = decompose(p, variant)
                assert uplus(d.prefix, star(d.connected_part, d.tail)) == p


def test_xi_examples():
    assert xi(sp([[1, 2]])) == sp([[1, 2]])
    assert xi(sp([[1, 3], [2], [4]])) == sp([[1], [2, 3], [4]])
    allsing = sp([[1], [2], [3]])
    assert xi(allsing) == allsing
    assert xi(EMPTY) == EMPTY


def test_xi_worked_example_n27():
    # a large fixed instance exercising long mixed decompositions
    upper = sp(
        [[1, 4], [2, 3], [5, 6, 7, 8], [9], [10, 12, 25], [11], [13, 14, 15],
         [16, 17], [18, 22, 24], [19, 21], [20], [23], [26], [27]]
    )
    lower = sp(
        [[1], [2, 6, 12], [3, 5], [4], [7, 8, 9], [10, 11], [13, 15, 25], [14],
         [16, 17, 18, 23], [19, 20], [21, 22], [24], [26], [27]]
    )
    assert xi(upper) == lower
    assert xi(lower) == upper


def test_xi_involution_and_statistics():
    for n in range(8):
        for p in noncrossing_partitions(n):
            q = xi(p, check=False)
            assert xi(q, check=False) == p
            assert type_of(q) == type_of(p)
            assert len(nonnested_blocks(q)) == len(nonaligned_blocks(p))
            assert [len(b) for b in nonnested_blocks(p)] == [len(b) for b in nonaligned_blocks(q)]


def test_xi_bar_example():
    m = MarkedPair.make(sp([[1, 3], [2], [4]]), [(1, 3), (4,)])
    out = xi_bar(m)
    assert out.sigma == sp([[1], [2, 3], [4]])
    assert set(out.marked) == {(2, 3), (4,)}
    assert xi_bar_inverse(out) == m
    empty = MarkedPair.make(sp([[1, 3], [2], [4]]), [])
    assert xi_bar(empty).marked == ()
    for n in range(1, 6):
        for m in marked_pairs(n, "nc_nn"):
            out = xi_bar(m, check=False)
            assert sorted(len(b) for b in m.marked) == sorted(len(b) for b in out.marked)


def test_rearrange_and_iota():
    m = MarkedPair.make(sp([[1, 2], [3], [4]]), [(1, 2), (3,), (4,)])
    out = iota_b(m)
    assert out.sigma == sp([[1], [2, 3], [4]])
    assert set(out.marked) == set(out.sigma.blocks)
    assert iota_b_inverse(out) == m
    even = MarkedPair.make(sp([[1, 2], [3], [4]]), [(1, 2), (4,)])
    assert iota_b(even) == even
    with pytest.raises(ValidationError):
        rearrange(m, (1, 2))


def test_iota_d_epsilon_zero_matches_iota_b():
    for n in range(1, 6):
        from coxcat.models import marked_triples

        for t in marked_triples(n, "nc_nn_pm"):
            out = iota_d(t, check=False)
            assert out.epsilon == t.epsilon
            assert iota_d_inverse(out, check=False) == t
            if t.epsilon == 0:
                assert out.pair == iota_b(t.pair, check=False)


@pytest.mark.parametrize("family,src,dst", [("B", "nc_b", "nn_b"), ("C", "nc_b", "nn_c"), ("D", "nc_d", "nn_d")])
def test_composed_maps_small(family, src, dst):
    for n in range(2, 5):
        target = set(enumerate_family(dst, n))
        images = set()
        for p in enumerate_family(src, n):
            q = nc_to_nn(family, p)
            assert q in target
            assert signed_type(q) == signed_type(p)
            assert zero_block_size(q) == zero_block_size(p)
            assert nn_to_nc(family, q) == p
            images.add(q)
        assert images == target


def test_composed_map_type_oracle_fig4():
    fig4 = SignedPartition.from_blocks(
        [[1, 4, 5, -10], [-1, -4, -5, 10], [2, 3], [-2, -3], [7, 9, -7, -9], [6], [-6], [8], [-8]]
    )
    q = nc_to_nn("B", fig4)
    from coxcat.models import is_member

    assert is_member(q, "nn_b")
    assert signed_type(q) == (4, 2, 1, 1)
    assert zero_block_size(q) == 4
