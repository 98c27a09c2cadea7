import pytest

import oracles
from ivlattice.enumeration import sp_filter
from ivlattice.interval import canonical_form, is_admissible, is_interval_order
from ivlattice.poset import PatternId, Poset, contains_induced
from ivlattice.sp_tamari import (
    PlanarTree,
    TreeError,
    binary_trees,
    catalan,
    enumerate_trees,
    matches_rotation_tamari,
    rotation_tamari,
    tree_to_poset,
    verify_meet_subsemilattice,
    verify_sp_correspondence,
    verify_tamari_restriction,
)


def path(n):
    node = []
    for _ in range(n):
        node = [node]
    return PlanarTree.parse(node)


def star(n):
    return PlanarTree.parse([[] for _ in range(n)])


def test_path_gives_antichain():
    for n in range(1, 6):
        assert tree_to_poset(path(n)).poset == Poset.antichain(n)


def test_star_gives_chain():
    for n in range(1, 6):
        assert tree_to_poset(star(n)).poset == Poset.chain(n)


def test_small_tree():
    T = PlanarTree.parse([[[]], []])
    assert T.n == 3
    assert list(T.descendants(1)) == [2]
    assert tree_to_poset(T).pairs() == [(1, 3), (2, 3)]


def test_tree_json():
    T = PlanarTree.parse([[[]], []])
    assert T.to_json() == {"tree": [[[]], []]}
    assert PlanarTree.from_json(T.to_json()) == T
    with pytest.raises(TreeError):
        PlanarTree.from_json({"tree": [[1]]})
    with pytest.raises(TreeError):
        tree_to_poset(PlanarTree.parse([]))


def test_tree_counts():
    assert [len(enumerate_trees(n)) for n in range(1, 8)] == [
        oracles.catalan_by_recursion(n) for n in range(1, 8)]
    assert len(enumerate_trees(4)) == 14
    assert [catalan(n) for n in range(1, 6)] == [1, 2, 5, 14, 42]
    assert len({T.structure for T in enumerate_trees(6)}) == 132


@pytest.mark.parametrize("n", range(1, 7))
def test_tree_images(n):
    for T in enumerate_trees(n):
        P = tree_to_poset(T).poset
        assert is_admissible(P, range(1, n + 1))
        assert is_interval_order(P)
        assert contains_induced(P, PatternId.FENCE_N) is None
        assert canonical_form(P).poset == P


@pytest.mark.parametrize("n", range(1, 6))
def test_tree_images_match_oracle(n, catalogs):
    images = {tree_to_poset(T).code for T in enumerate_trees(n)}
    assert len(images) == catalan(n) == len(sp_filter(catalogs(n)))


@pytest.mark.parametrize("n", range(1, 7))
def test_verification_suites(n, catalogs):
    cat = catalogs(n)
    for verify in (verify_sp_correspondence, verify_tamari_restriction,
                   verify_meet_subsemilattice):
        report = verify(n, cat)
        assert report.ok, report.to_json()


def test_fence_is_a_join_of_series_parallel_orders(catalogs):
    report = verify_meet_subsemilattice(4, catalogs(4))
    witness = report.witnesses["join_leaves_class"]
    assert witness["join"] == [(1, 4), (2, 3), (2, 4)]
    for side in ("a", "b"):
        P = Poset.from_pairs(4, witness[side])
        assert contains_induced(P, PatternId.FENCE_N) is None


def test_no_join_witness_below_four(catalogs):
    for n in (1, 2, 3):
        report = verify_meet_subsemilattice(n, catalogs(n))
        assert "join_leaves_class" not in report.witnesses


def test_rotation_model():
    for n in range(1, 6):
        G = rotation_tamari(n)
        assert G.number_of_nodes() == catalan(n) == len(binary_trees(n))
        assert G.number_of_edges() == catalan(n) * (n - 1) // 2


@pytest.mark.parametrize("n", range(1, 6))
def test_restriction_matches_rotation_lattice(n, catalogs):
    assert matches_rotation_tamari(n, catalogs(n))
