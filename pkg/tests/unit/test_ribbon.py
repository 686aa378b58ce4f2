"""Tests for ribbon graphs, their surfaces and twisted duals."""

import pytest

from src.core.algebra import SparsePoly
from src.core.entities import RibbonEdge, RibbonGraph
from src.core.exceptions import BudgetExceeded, InputError
from src.core.services import ribbon
from src.core.services.polynomials import tutte_eval

from ..corpus import ribbon_loop, ribbon_torus, random_ribbon

x = SparsePoly.variable("x")
y = SparsePoly.variable("y")
z = SparsePoly.variable("z")


def loop_pair() -> RibbonGraph:
    """A plane loop at v next to a twisted loop at w."""
    return RibbonGraph(
        ("v", "w"),
        (("h1", "h2"), ("k1", "k2")),
        (RibbonEdge("e", "h1", "h2", 1), RibbonEdge("f", "k1", "k2", -1)),
    )


class TestMedial:
    """Tests for the medial graph and its two transversals."""

    def test_loop_medial(self):
        """Test one medial vertex with δ = {01|23} and ε = {03|12}."""
        f, delta, epsilon = ribbon.medial(ribbon_loop(1))

        assert f.vertices == ("e",)
        assert f.check().ok
        assert delta.digits == "0"
        assert epsilon.digits == "2"

    def test_twisted_epsilon(self):
        """Test that a twisted band follows {02|13}."""
        _, _, epsilon = ribbon.medial(ribbon_loop(-1))

        assert epsilon.digits == "1"

    def test_profile(self):
        """Test the circuit counts reported for a plane loop."""
        profile = ribbon.medial_profile(ribbon_loop(1))

        assert profile["delta_circuits"] == 1
        assert profile["epsilon_circuits"] == 2

    def test_rebuild_from_partitions(self):
        """Test that the medial transversals give back the loops."""
        for sign in (1, -1):
            f, delta, epsilon = ribbon.medial(ribbon_loop(sign))

            rebuilt = ribbon.from_partitions(f, delta, epsilon)

            assert len(rebuilt.vertices) == 1
            assert [e.sign for e in rebuilt.edges] == [sign]

    def test_rebuild_needs_distinct_transitions(self):
        """Test that δ and ε must differ at every vertex."""
        f, delta, _ = ribbon.medial(ribbon_loop(1))

        with pytest.raises(InputError):
            ribbon.from_partitions(f, delta, delta)


class TestSurface:
    """Tests for boundaries, orientability and genus."""

    def test_plane_loop(self):
        """Test the sphere."""
        summary = ribbon.surface_summary(ribbon_loop(1))

        assert summary.boundary_count == 2
        assert summary.euler_characteristic == 2
        assert summary.orientable
        assert summary.genus == (0,)

    def test_twisted_loop(self):
        """Test the projective plane."""
        summary = ribbon.surface_summary(ribbon_loop(-1))

        assert summary.boundary_count == 1
        assert summary.euler_characteristic == 1
        assert not summary.orientable
        assert summary.genus == (1,)

    def test_torus(self):
        """Test two interleaved loops."""
        summary = ribbon.surface_summary(ribbon_torus())

        assert summary.boundary_count == 1
        assert summary.euler_characteristic == 0
        assert summary.genus == (1,)
        assert summary.to_dict()["components"][0]["genus"] == 1

    def test_components(self):
        """Test that each component is closed up separately."""
        g = loop_pair()

        chi, pieces = ribbon.euler_genus(g)

        assert len(ribbon.component_ribbons(g)) == 2
        assert chi == 3
        assert [p.orientable for p in pieces] == [True, False]
        assert ribbon.surface_summary(g).genus == (0, 1)

    def test_isolated_vertex(self):
        """Test that a bare vertex is a sphere with one boundary."""
        g = RibbonGraph(("v",), ((),), ())

        summary = ribbon.surface_summary(g)

        assert summary.boundary_count == 1
        assert summary.euler_characteristic == 2

    def test_sub_ribbon_boundaries(self):
        """Test boundaries of spanning sub-ribbon graphs."""
        g = ribbon_torus()

        assert ribbon.boundary_components(g) == 1
        assert ribbon.boundary_components(g, []) == 1
        assert ribbon.boundary_components(g, ["e1"]) == 2

    def test_unknown_sub_ribbon_edge(self):
        """Test the edge-name check."""
        with pytest.raises(InputError):
            ribbon.boundary_components(ribbon_torus(), ["e9"])

    def test_half_twist_breaks_orientability(self):
        """Test that a half-twist on a plane loop gives the twisted loop."""
        twisted = ribbon.half_twist(ribbon_loop(1), ["e"])

        assert not ribbon.orientable(twisted)
        assert [e.sign for e in twisted.edges] == [-1]

    def test_orientability_tests_agree(self):
        """Test the constraint graph, Euler system and partition criteria."""
        for seed in range(20):
            g = random_ribbon(seed)
            expected = ribbon.orientable(g)
            assert ribbon.orientable_by_euler_system(g) == expected
            assert ribbon.orientable_by_partitions(g) == expected

    def test_untwisted_is_orientable(self):
        """Test that all-positive signs always give an orientable surface."""
        for seed in range(10):
            g = random_ribbon(seed)
            plain = g.with_signs({e.name: 1 for e in g.edges})
            assert ribbon.orientable(plain)

    def test_partition_sweep_cap(self):
        """Test the edge cap of the partition criterion."""
        with pytest.raises(BudgetExceeded):
            ribbon.orientable_by_partitions(ribbon_torus(), cap=1)


class TestTwistedDuals:
    """Tests for designation permutations at medial vertices."""

    def test_dual_of_plane_loop(self):
        """Test that the dual of a plane loop is a bridge on two vertices."""
        dual = ribbon.geometric_dual(ribbon_loop(1))

        assert len(dual.vertices) == 2
        u, v = dual.ends(dual.edges[0])
        assert u != v
        assert ribbon.surface_summary(dual).euler_characteristic == 2
        assert ribbon.orientable(dual)

    def test_double_dual(self):
        """Test that dualizing twice gives back a plane loop."""
        back = ribbon.geometric_dual(ribbon.geometric_dual(ribbon_loop(1)))

        assert len(back.vertices) == 1
        assert [e.sign for e in back.edges] == [1]
        assert ribbon.boundary_components(back) == 2

    def test_dual_swaps_vertices_and_boundaries(self):
        """Test V* = F and the preserved surface."""
        for seed in range(15):
            g = random_ribbon(seed)
            dual = ribbon.geometric_dual(g)
            before = ribbon.surface_summary(g)
            after = ribbon.surface_summary(dual)
            assert len(dual.vertices) == before.boundary_count
            assert after.euler_characteristic == before.euler_characteristic
            assert after.orientable == before.orientable

    def test_partial_dual_on_everything(self):
        """Test that the partial dual on all edges has the geometric dual's shape."""
        g = ribbon_torus()

        partial = ribbon.partial_dual(g, ["e1", "e2"])
        full = ribbon.geometric_dual(g)

        assert len(partial.vertices) == len(full.vertices)
        assert ribbon.surface_summary(partial).euler_characteristic == 0

    def test_bad_designation(self):
        """Test that a designation must permute (0, 1, 2)."""
        with pytest.raises(InputError):
            ribbon.twisted_dual(ribbon_loop(1), {"e": (0, 0, 1)})

    def test_unknown_edge(self):
        """Test a designation for a missing edge."""
        with pytest.raises(InputError):
            ribbon.twisted_dual(ribbon_loop(1), {"x": ribbon.SWAP_DELTA_EPSILON})


class TestRibbonMatroids:
    """Tests for the cycle matroid and the Bollobás-Riordan sum."""

    def test_cycle_duality(self):
        """Test M(G) against the dual of the δ restriction."""
        assert ribbon.cycle_duality_holds(ribbon_torus())
        for seed in range(15):
            assert ribbon.cycle_duality_holds(random_ribbon(seed))

    def test_loops(self):
        """Test the plane and twisted loop."""
        assert ribbon.bollobas_riordan(ribbon_loop(1)) == 1 + y
        assert ribbon.bollobas_riordan(ribbon_loop(-1)) == 1 + y * z

    def test_weights(self):
        """Test an integer edge weight."""
        assert ribbon.bollobas_riordan(ribbon_loop(1), {"e": 3}) == 1 + 3 * y

    def test_z_one_is_tutte(self):
        """Test BR(x, y, 1) = T(x, y + 1)."""
        for seed in range(10):
            g = random_ribbon(seed)
            br = ribbon.bollobas_riordan(g).substitute(z=1)
            assert br == tutte_eval(ribbon.ribbon_cycle_matroid(g)).substitute(y=y + 1)

    def test_orientable_has_even_twist(self):
        """Test that every z exponent is even on an orientable surface."""
        for seed in range(10):
            g = random_ribbon(seed)
            g = g.with_signs({e.name: 1 for e in g.edges})
            p = ribbon.bollobas_riordan(g)
            position = p.variables.index("z")
            assert all(exps[position] % 2 == 0 for _, exps in p.sorted_terms())

    def test_threads(self):
        """Test that the thread pool gives the same sum."""
        g = random_ribbon(3, max_edges=6)

        assert ribbon.bollobas_riordan(g, workers=3) == ribbon.bollobas_riordan(g, workers=1)

    def test_edge_cap(self):
        """Test the configured edge cap."""
        with pytest.raises(BudgetExceeded):
            ribbon.bollobas_riordan(ribbon_torus(), cap=1)
