"""Family enumerators: counts, soundness, dedup, and the Prufer bijection."""

import itertools

import pytest

from harmrad.families import (
    FAMILY_CAPS,
    Family,
    FamilySpec,
    canonical_mask,
    connected_graphs,
    edge_mask,
    graph_from_mask,
    labeled_trees,
    pair_index,
    pair_table,
    prufer_decode,
    unicyclic_graphs,
)
from harmrad.graphs import build_graph, cyclomatic_number, is_connected

from helpers import (
    brute_connected_masks,
    connected_count_recurrence,
    is_isomorphic_brute,
    unicyclic_count_formula,
)


class TestPairLayout:
    def test_pair_table_order(self):
        assert pair_table(4) == [(0, 1), (0, 2), (1, 2), (0, 3), (1, 3), (2, 3)]

    def test_pair_index_consistency(self):
        for n in (2, 5, 8):
            for p, (i, j) in enumerate(pair_table(n)):
                assert pair_index(i, j) == p

    def test_mask_round_trip(self):
        g = build_graph(5, [(0, 4), (1, 2), (2, 3)])
        assert graph_from_mask(5, edge_mask(5, g.edge_list())) == g


class TestConnectedGraphs:
    def test_recurrence_matches_known_values(self):
        # the inclusion-exclusion oracle itself reproduces the known table
        assert [connected_count_recurrence(n) for n in range(1, 8)] == [
            1, 1, 4, 38, 728, 26704, 1866256,
        ]

    @pytest.mark.parametrize("n,count", [(1, 1), (2, 1), (3, 4), (4, 38), (5, 728)])
    def test_labeled_counts(self, n, count):
        got = sum(1 for _ in connected_graphs(FamilySpec(Family.CONNECTED, n)))
        assert got == count == connected_count_recurrence(n)

    def test_matches_brute_masks(self):
        for n in (2, 3, 4):
            ours = [
                edge_mask(g.n, g.edge_list())
                for g in connected_graphs(FamilySpec(Family.CONNECTED, n))
            ]
            assert ours == brute_connected_masks(n)

    def test_all_connected(self):
        for g in connected_graphs(FamilySpec(Family.CONNECTED, 4)):
            assert is_connected(g)

    def test_dedup_n4_gives_six_classes(self):
        got = list(connected_graphs(FamilySpec(Family.CONNECTED, 4, dedup=True)))
        assert len(got) == 6

    @pytest.mark.parametrize("n,classes", [(1, 1), (2, 1), (3, 2), (5, 21)])
    def test_dedup_class_counts(self, n, classes):
        got = sum(1 for _ in connected_graphs(FamilySpec(Family.CONNECTED, n, dedup=True)))
        assert got == classes

    def test_cap_enforced(self):
        with pytest.raises(ValueError):
            list(connected_graphs(FamilySpec(Family.CONNECTED, FAMILY_CAPS[Family.CONNECTED] + 1)))

    def test_cap_override(self):
        spec = FamilySpec(Family.TREES, 11, allow_large=True)
        it = labeled_trees(spec)
        g = next(it)
        assert g.n == 11 and g.m == 10


class TestCanonicalForm:
    def test_invariant_under_relabeling(self):
        for n in (3, 4, 5):
            for g in connected_graphs(FamilySpec(Family.CONNECTED, n)):
                base = canonical_mask(n, edge_mask(n, g.edge_list()))
                for perm in itertools.islice(itertools.permutations(range(n)), 8):
                    edges = [(perm[u], perm[v]) for u, v in g.edges()]
                    assert canonical_mask(n, edge_mask(n, edges)) == base

    def test_dedup_soundness_n_le_5(self):
        # every labeled connected graph is isomorphic to exactly one
        # emitted representative
        for n in (3, 4, 5):
            reps = list(connected_graphs(FamilySpec(Family.CONNECTED, n, dedup=True)))
            for g in connected_graphs(FamilySpec(Family.CONNECTED, n)):
                matches = sum(1 for r in reps if is_isomorphic_brute(g, r))
                assert matches == 1


class TestLabeledTrees:
    @pytest.mark.parametrize("n,count", [(1, 1), (2, 1), (3, 3), (4, 16), (5, 125), (6, 1296)])
    def test_cayley_counts(self, n, count):
        got = sum(1 for _ in labeled_trees(FamilySpec(Family.TREES, n)))
        assert got == count

    def test_trees_are_trees_and_distinct(self):
        seen = set()
        for g in labeled_trees(FamilySpec(Family.TREES, 5)):
            assert g.m == g.n - 1
            assert is_connected(g)
            key = tuple(g.edge_list())
            assert key not in seen
            seen.add(key)
        assert len(seen) == 125

    def test_prufer_decode_known_sequence(self):
        # classic example: sequence (3,3,3,4) on 6 vertices is the spider
        # with legs 0,1,2 at vertex 3 and tail 3-4-5
        edges = prufer_decode((3, 3, 3, 4), 6)
        assert sorted(edges) == [(0, 3), (1, 3), (2, 3), (3, 4), (4, 5)]

    def test_prufer_decode_against_naive(self):
        # independent naive decoder: repeatedly join the smallest leaf
        def naive(seq, n):
            seq = list(seq)
            deg = [1] * n
            for x in seq:
                deg[x] += 1
            edges = []
            leaves = sorted(v for v in range(n) if deg[v] == 1)
            for x in seq:
                leaf = leaves.pop(0)
                edges.append(tuple(sorted((leaf, x))))
                deg[x] -= 1
                if deg[x] == 1:
                    import bisect

                    bisect.insort(leaves, x)
            edges.append(tuple(sorted(leaves)))
            return sorted(edges)

        for n in (3, 4, 5):
            for seq in itertools.product(range(n), repeat=n - 2):
                assert sorted(prufer_decode(seq, n)) == naive(seq, n)

    def test_dedup_tree_classes_n6(self):
        got = sum(1 for _ in labeled_trees(FamilySpec(Family.TREES, 6, dedup=True)))
        assert got == 6  # unlabeled trees on 6 vertices


class TestUnicyclicGraphs:
    @pytest.mark.parametrize("n,count", [(3, 1), (4, 15), (5, 222), (6, 3660)])
    def test_counts_match_formula(self, n, count):
        assert unicyclic_count_formula(n) == count
        got = sum(1 for _ in unicyclic_graphs(FamilySpec(Family.UNICYCLIC, n)))
        assert got == count

    def test_n3_is_triangle(self):
        (g,) = list(unicyclic_graphs(FamilySpec(Family.UNICYCLIC, 3)))
        assert g.edge_list() == [(0, 1), (0, 2), (1, 2)]

    def test_matches_edge_subset_oracle(self):
        # independent definition: connected graphs with m = n
        for n in (4, 5):
            expected = {
                mask
                for mask in brute_connected_masks(n)
                if bin(mask).count("1") == n
            }
            got = {
                edge_mask(n, g.edge_list())
                for g in unicyclic_graphs(FamilySpec(Family.UNICYCLIC, n))
            }
            assert got == expected

    def test_no_duplicates_and_k1(self):
        seen = set()
        for g in unicyclic_graphs(FamilySpec(Family.UNICYCLIC, 5)):
            assert cyclomatic_number(g) == 1
            key = edge_mask(5, g.edge_list())
            assert key not in seen
            seen.add(key)

    def test_rejects_n_below_3(self):
        with pytest.raises(ValueError):
            list(unicyclic_graphs(FamilySpec(Family.UNICYCLIC, 2)))
