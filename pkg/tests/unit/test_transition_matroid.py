"""Tests for the transition matroid and touch-graph dualities."""

import random

import pytest

from src.core.entities import LabelKind, Transition, TransitionGroundLabel, Transversal
from src.core.exceptions import BudgetExceeded, InputError
from src.core.services import moves, tracing, words
from src.core.services.transition_matroid import (
    check_dual_pair,
    circuit_nullity_holds,
    detach_minor,
    graph_matroid,
    is_direct_sum,
    las_vergnas_martin_check,
    rank_of_transversal,
    relabel_after_kappa,
    restricted_matroid,
    same_transition_matroid,
    switched_transversal,
    touch_matroid,
    transition_matroid,
    transversal_labels,
    transversal_ranks,
    verify_touch_duality,
    weak_map_holds,
)

from ..corpus import graph_from_word, random_corpus


def word_system(text):
    return words.graph_from_family(words.parse_dow(text))


def digits(g, text):
    return Transversal.from_digits(g.vertices, text)


class TestTransitionMatroid:
    """Tests for building M_τ from an Euler system."""

    def test_abab_columns(self, abab):
        """Test the (I | A | I + A) columns of the abab graph."""
        c = tracing.euler_system_from_transversal(abab, Transversal.uniform(abab.vertices, 0))

        m = transition_matroid(c)

        assert m.rep.column_masks == (1, 2, 2, 1, 3, 3)
        assert [str(label) for label in m.ground[:2]] == ["φa=t0", "φb=t0"]

    def test_two_loop_has_a_loop(self, two_loop):
        """Test that the single vertex gives (1 | 0 | 1)."""
        m = graph_matroid(two_loop)

        assert m.rep.column_masks == (1, 0, 1)
        assert [label.kind for label in m.loops()] == [LabelKind.CHI]

    def test_doubled_triangle_is_fano_plus_two(self):
        """Test that seven columns are the seven nonzero vectors of GF(2)^3."""
        _, c = word_system("a b c a b c")

        m = transition_matroid(c)

        assert sorted(m.rep.column_masks[:7]) == list(range(1, 8))
        assert m.rank() == 3

    def test_vertex_triples_sum_to_zero(self, corpus):
        """Test that the three columns at a vertex add to zero."""
        for g in corpus.values():
            m = graph_matroid(g)
            for v in g.vertices:
                masks = [m.rep.column_masks[m.index_of(TransitionGroundLabel(v, p))] for p in range(3)]
                assert masks[0] ^ masks[1] ^ masks[2] == 0

    def test_full_rank_is_n(self, corpus):
        """Test r(T(F)) = n."""
        for g in corpus.values():
            assert graph_matroid(g).rank() == g.n

    def test_circuit_nullity(self, corpus):
        """Test |P| = n + c(F) - r(τ(P)) for every transversal."""
        graphs = list(corpus.values()) + random_corpus(15, 5, seed=1)
        for g in graphs:
            m = graph_matroid(g)
            sizes = tracing.partition_sizes(g)
            ranks = transversal_ranks(g, m=m)
            for size, rank in zip(sizes, ranks):
                assert size == g.n + g.component_count - rank

    @pytest.mark.slow
    def test_circuit_nullity_sweep(self):
        """Test |P| = n + c(F) - r(τ(P)) on 50 random graphs up to eight vertices."""
        for g in random_corpus(50, 8, seed=3):
            sizes = tracing.partition_sizes(g)
            ranks = transversal_ranks(g)
            assert len(ranks) == 3 ** g.n
            for size, rank in zip(sizes, ranks):
                assert size == g.n + g.component_count - rank

    def test_circuit_nullity_single(self, doubled_triangle):
        """Test the single-transversal check."""
        for t in Transversal.enumerate(doubled_triangle.vertices):
            assert circuit_nullity_holds(doubled_triangle, t)

    def test_euler_transversals_are_bases(self, abab):
        """Test that τ(P) is a basis exactly when P is an Euler system."""
        m = graph_matroid(abab)
        euler = set(tracing.euler_transversals(abab))
        for t in Transversal.enumerate(abab.vertices):
            assert m.is_basis(transversal_labels(t)) == (t in euler)

    def test_independent_of_euler_system(self, corpus):
        """Test that every Euler system represents the same matroid."""
        for name in ("abab", "aabb", "abcabc", "two_words"):
            g = corpus[name]
            base = graph_matroid(g)
            for c in tracing.all_euler_systems(g):
                assert transition_matroid(c).same_rank_function(base)

    @pytest.mark.slow
    def test_independent_of_euler_system_sweep(self, corpus):
        """Test every Euler system of every corpus and random graph up to five vertices."""
        for g in list(corpus.values()) + random_corpus(8, 5, seed=5):
            base = graph_matroid(g)
            for c in tracing.all_euler_systems(g):
                assert transition_matroid(c).same_rank_function(base)

    def test_different_graphs_differ(self, abab, aabb):
        """Test that abab and aabb have different matroids on shared labels."""
        assert not same_transition_matroid(abab, aabb)

    def test_same_transition_matroid_vertex_sets(self, abab, two_loop):
        """Test that the vertex sets must agree."""
        with pytest.raises(InputError):
            same_transition_matroid(abab, two_loop)

    def test_relabel_after_kappa(self):
        """Test the φ/χ/ψ relabelling rule against a recomputed system."""
        for g in random_corpus(10, 5, seed=4):
            c = tracing.euler_system(g)
            labels = tracing.label_pairings(c)
            h = tracing.interlacement(c)
            for v in g.vertices:
                expected = tracing.label_pairings(tracing.kappa_transform(c, v))
                assert relabel_after_kappa(labels, h, v) == expected

    def test_relabel_unknown_vertex(self, abab):
        """Test the error for a vertex outside the labels."""
        c = tracing.euler_system(abab)
        with pytest.raises(InputError):
            relabel_after_kappa(tracing.label_pairings(c), tracing.interlacement(c), "z")


class TestDetachment:
    """Tests for detachment minors."""

    def test_doubled_triangle_detaches_to_abab(self):
        """Test contracting φ at c against the detached graph."""
        g, c = word_system("a b c a b c")
        m = transition_matroid(c)

        detached = moves.detachment(g, Transition("c", 0))
        minor = detach_minor(m, "c", 0)

        assert detached.is_isomorphic(graph_from_word("a b a b"))
        assert minor.same_rank_function(graph_matroid(detached))

    def test_two_loop_detaches_to_nothing(self, two_loop):
        """Test that contracting the Euler transition leaves the empty matroid."""
        c = tracing.euler_system(two_loop)
        p = c.transversal.pairing_at("v")

        minor = detach_minor(graph_matroid(two_loop), "v", p)

        assert minor.size == 0
        assert moves.detachment(two_loop, Transition("v", p)).n == 0

    def test_minor_matches_detachment(self):
        """Test φ and ψ detachments of random graphs."""
        for g in random_corpus(10, 4, seed=8):
            c = tracing.euler_system(g)
            m = transition_matroid(c)
            labels = tracing.label_pairings(c)
            for v in g.vertices:
                for kind in (LabelKind.PHI, LabelKind.PSI):
                    p = labels[v][kind]
                    detached = moves.detachment(g, Transition(v, p))
                    assert detach_minor(m, v, p).same_rank_function(graph_matroid(detached))

    def test_bad_pairing(self, abab):
        """Test that the kept pairing must be 0, 1 or 2."""
        with pytest.raises(InputError):
            detach_minor(graph_matroid(abab), "a", 3)


class TestTouchGraphs:
    """Tests for touch-graph duality and dual pairs."""

    def test_touch_duality_everywhere(self, corpus):
        """Test Tch(P) against the dual of M_τ(P) for every transversal."""
        graphs = list(corpus.values()) + random_corpus(10, 4, seed=2)
        for g in graphs:
            m = graph_matroid(g)
            for t in Transversal.enumerate(g.vertices):
                assert verify_touch_duality(g, t, m=m)

    @pytest.mark.slow
    def test_touch_duality_random_transversals(self):
        """Test 100 random graph and transversal pairs up to seven vertices."""
        rng = random.Random(6)
        for g in random_corpus(100, 7, seed=6):
            k = rng.randrange(3 ** g.n)
            assert verify_touch_duality(g, Transversal.from_index(g.vertices, k))

    def test_two_loop_touch_is_a_coloop(self, two_loop):
        """Test the |P| = 2 partition of the two-loop vertex."""
        t = Transversal.uniform(two_loop.vertices, 0)

        touch = touch_matroid(two_loop, t)

        assert touch.rank() == 1
        assert restricted_matroid(graph_matroid(two_loop), t).rank() == 0

    def test_abab_dual_pair(self, abab):
        """Test (φa, χb) with (χa, φb)."""
        report = check_dual_pair(abab, digits(abab, "01"), digits(abab, "10"))

        assert (report.r1, report.r2, report.union_rank) == (1, 1, 2)
        assert report.is_dual_pair
        assert report.verified

    def test_abab_not_dual_pair(self, abab):
        """Test (φa, φb) with (ψa, ψb)."""
        report = check_dual_pair(abab, digits(abab, "00"), digits(abab, "22"))

        assert (report.r1, report.r2) == (2, 1)
        assert not report.is_dual_pair
        assert report.to_dict()["union_rank"] == 2

    def test_dual_pair_needs_disjoint(self, abab):
        """Test that transversals agreeing somewhere are refused."""
        with pytest.raises(InputError):
            check_dual_pair(abab, digits(abab, "01"), digits(abab, "02"))

    def test_dual_pair_sweep(self):
        """Test consistency of every disjoint pair on random graphs."""
        rng = random.Random(9)
        for g in random_corpus(10, 4, seed=9):
            m = graph_matroid(g)
            for _ in range(10):
                t1 = Transversal.from_index(g.vertices, rng.randrange(3 ** g.n))
                t2 = Transversal(g.vertices, tuple((p + rng.choice((1, 2))) % 3 for p in t1.pairings))
                report = check_dual_pair(g, t1, t2, m=m)
                assert report.union_rank == g.n
                assert report.r1 + report.r2 >= g.n

    def test_weak_map(self):
        """Test that no subset breaks the weak-map property."""
        rng = random.Random(6)
        for g in random_corpus(8, 4, seed=6):
            m = graph_matroid(g)
            t1 = Transversal.from_index(g.vertices, rng.randrange(3 ** g.n))
            t2 = Transversal(g.vertices, tuple((p + 1) % 3 for p in t1.pairings))
            for mask in range(1 << g.n):
                subset = [v for i, v in enumerate(g.vertices) if (mask >> i) & 1]
                assert weak_map_holds(g, t1, t2, subset, m=m)

    def test_las_vergnas_martin(self, abab):
        """Test the touch-graph formula over every switching set."""
        assert las_vergnas_martin_check(abab, digits(abab, "01"), digits(abab, "10"))
        assert las_vergnas_martin_check(abab, digits(abab, "10"), digits(abab, "01"))

    def test_las_vergnas_martin_needs_dual_pair(self, abab):
        """Test that a non-dual pair is refused."""
        with pytest.raises(InputError):
            las_vergnas_martin_check(abab, digits(abab, "00"), digits(abab, "22"))

    def test_switched_transversal(self, abab):
        """Test switching on a subset."""
        t = switched_transversal(digits(abab, "01"), digits(abab, "10"), ["b"])

        assert t.digits == "00"

    def test_direct_sum(self, abab):
        """Test the direct-sum check on a dual pair and a non-pair."""
        m = graph_matroid(abab)
        first = transversal_labels(digits(abab, "01"))
        second = transversal_labels(digits(abab, "10"))

        assert is_direct_sum(m, first, second)
        assert not is_direct_sum(m, transversal_labels(digits(abab, "00")), transversal_labels(digits(abab, "22")))

    def test_direct_sum_overlap(self, abab):
        """Test that overlapping parts are refused."""
        m = graph_matroid(abab)
        labels = transversal_labels(digits(abab, "01"))

        with pytest.raises(InputError):
            is_direct_sum(m, labels, labels)

    def test_rank_of_transversal(self, abab):
        """Test a single transversal rank."""
        assert rank_of_transversal(graph_matroid(abab), digits(abab, "22")) == 1

    def test_exhaustive_limit(self, abab):
        """Test that a zero limit refuses the duality check."""
        with pytest.raises(BudgetExceeded):
            verify_touch_duality(abab, digits(abab, "01"), limit=0)
