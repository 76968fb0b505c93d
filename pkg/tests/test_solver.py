import itertools

import pytest

from schurperturb.intset import IntSet, hosting_sets, is_sum_free
from schurperturb.solver import (
    BLUE,
    RED,
    ColourConstraint,
    Colouring,
    HostingHypergraph,
    SchurStatus,
    Status,
    check_hmin_properties,
    find_loose_cycle,
    find_schur_colouring,
    is_schur,
    minimal_obstruction,
    validate_colouring,
)


def oracle_is_schur(s: IntSet) -> bool:
    """Exhaustive 2^|S| oracle: Schur iff no red/blue split is sum-free/sum-free."""
    elems = s.elements()
    for k in range(len(elems) + 1):
        for red in itertools.combinations(elems, k):
            red_set = IntSet(s.n, red)
            if is_sum_free(red_set) and is_sum_free(s.difference(red_set)):
                return False
    return True


class TestIsSchur:
    def test_baseline_4_and_5(self):
        assert is_schur(IntSet(4, range(1, 5))) is SchurStatus.NOT_SCHUR
        assert is_schur(IntSet(5, range(1, 6))) is SchurStatus.SCHUR
        assert oracle_is_schur(IntSet(5, range(1, 6)))
        assert not oracle_is_schur(IntSet(4, range(1, 5)))

    def test_witness_validates(self):
        out = find_schur_colouring(IntSet(4, range(1, 5)))
        assert out.status is Status.COLOURABLE
        assert validate_colouring(IntSet(4, range(1, 5)), out.witness) == []

    def test_empty_set(self):
        assert is_schur(IntSet(6)) is SchurStatus.NOT_SCHUR

    def test_exhaustive_oracle_small(self):
        n = 10
        for mask in range(1 << n):
            s = IntSet(n, [i + 1 for i in range(n) if mask >> i & 1])
            verdict = is_schur(s)
            assert verdict is not SchurStatus.UNKNOWN
            assert (verdict is SchurStatus.SCHUR) == oracle_is_schur(s)

    def test_budget_zero(self):
        assert is_schur(IntSet(5, range(1, 6)), budget=0) is SchurStatus.UNKNOWN

    def test_budget_negative(self):
        with pytest.raises(ValueError):
            find_schur_colouring(IntSet(3, [1]), budget=-1)


class TestConstraints:
    def test_force_blue_top(self):
        s = IntSet(10, [2, 3, 4, 9, 10])
        base = IntSet(10, [9, 10])
        out = find_schur_colouring(s, ColourConstraint.force_blue(base))
        assert out.status is Status.COLOURABLE
        assert {9, 10} <= out.witness.blue()
        assert validate_colouring(s, out.witness) == []

    def test_unsatisfiable_constraint(self):
        # 1, 2 both blue is monochromatic on the degenerate edge {1, 2}
        s = IntSet(4, [1, 2])
        out = find_schur_colouring(s, ColourConstraint.force_blue([1, 2]))
        assert out.status is Status.NOT_COLOURABLE

    def test_empty_allowed_set(self):
        s = IntSet(4, [1, 3])
        out = find_schur_colouring(s, ColourConstraint({1: frozenset()}))
        assert out.status is Status.NOT_COLOURABLE


class TestValidateColouring:
    def test_reports_monochromatic(self):
        s = IntSet(6, [1, 2, 3])
        bad = validate_colouring(s, Colouring({1: RED, 2: RED, 3: RED}))
        assert (1, 2, 3) in bad and (1, 2) in bad

    def test_partial_colouring_rejected(self):
        with pytest.raises(ValueError):
            validate_colouring(IntSet(5, [1, 2]), Colouring({1: RED}))


class TestMinimalObstruction:
    def test_colourable_instance(self):
        res = minimal_obstruction(IntSet(4, range(1, 5)))
        assert res.status is Status.COLOURABLE
        assert res.hypergraph is None

    def test_minimality(self):
        s = IntSet(5, range(1, 6))
        res = minimal_obstruction(s)
        assert res.status is Status.NOT_COLOURABLE
        edges = res.hypergraph.edges
        elems = s.elements()
        # obstruction itself is uncolourable, every proper subset colourable
        from schurperturb.solver import _solve_edges

        assert (
            _solve_edges(elems, edges, ColourConstraint.free(), 10**7).status
            is Status.NOT_COLOURABLE
        )
        for drop in edges:
            rest = [e for e in edges if e != drop]
            assert (
                _solve_edges(elems, rest, ColourConstraint.free(), 10**7).status
                is Status.COLOURABLE
            )

    def test_budget_propagates(self):
        res = minimal_obstruction(IntSet(14, range(1, 15)), budget=3)
        assert res.status is Status.BUDGET_EXCEEDED


class TestHminProperties:
    def test_report(self):
        base = IntSet(10, [9, 10])
        h = HostingHypergraph(10, IntSet(10, range(1, 11)), [(1, 2, 3), (3, 4, 7)])
        rep = check_hmin_properties(h, base)
        assert rep.uniform3 and rep.one_base_per_edge and rep.linear

    def test_violations(self):
        base = IntSet(10, [6, 7])
        h = HostingHypergraph(
            10, IntSet.full(10), [(1, 2), (1, 6, 7), (1, 2, 3), (1, 2, 4)]
        )
        rep = check_hmin_properties(h, base)
        assert not rep.uniform3
        assert not rep.one_base_per_edge  # (1, 6, 7) holds two base elements
        assert not rep.linear  # (1,2,3) and (1,2,4) share two vertices


class TestLooseCycle:
    def test_finds_hand_built_cycle(self):
        edges = [(1, 2, 3), (3, 4, 5), (5, 6, 7), (7, 8, 1)]
        h = HostingHypergraph(8, IntSet.full(8), edges)
        cycle = find_loose_cycle(h, IntSet(8, [2, 6]))
        assert cycle is not None
        assert len(cycle.edges) >= 3
        assert set(cycle.types) <= {"t1", "t2"}

    def test_no_cycle_in_path(self):
        edges = [(1, 2, 3), (3, 4, 5), (5, 6, 7)]
        h = HostingHypergraph(7, IntSet.full(7), edges)
        assert find_loose_cycle(h, IntSet(7)) is None

    def test_types_and_consecutive_pairs(self):
        edges = [(1, 2, 3), (3, 4, 5), (5, 6, 1)]
        base = IntSet(6, [2, 4])
        h = HostingHypergraph(6, IntSet.full(6), edges)
        cycle = find_loose_cycle(h, base)
        assert cycle is not None
        assert sorted(cycle.types) == ["t1", "t2", "t2"]
        d = cycle.to_json_dict()
        assert set(d) == {"edges", "types", "consecutive_t2_pairs"}

    def test_requires_three_uniform(self):
        h = HostingHypergraph(5, IntSet.full(5), [(1, 2)])
        with pytest.raises(ValueError):
            find_loose_cycle(h, IntSet(5))


class TestNodeAccounting:
    def test_nodes_counted(self):
        out = find_schur_colouring(IntSet(9, range(1, 10)))
        assert out.nodes_explored >= 1

    def test_budget_boundary(self):
        s = IntSet(13, range(1, 14))
        full = find_schur_colouring(s)
        exact = find_schur_colouring(s, budget=full.nodes_explored)
        assert exact.status is full.status
        short = find_schur_colouring(s, budget=full.nodes_explored - 1)
        assert short.status is Status.BUDGET_EXCEEDED
