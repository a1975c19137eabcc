import pytest
from hypothesis import given
from hypothesis import strategies as st

from hodgeblow import (
    BettiVector,
    HodgeDiamond,
    ValidationError,
    anti_diagonal_sums,
    direct_sum,
    euler_p,
    make_model,
    serre_symmetric,
    shift,
    topological_euler,
)
from hodgeblow.diamond import DimensionMismatchError, derived_betti, disjoint_union, hodge_symmetric
from hodgeblow.render import parse_rendered, render_diamond

POINT = HodgeDiamond.from_matrix([[1]])
CP2 = HodgeDiamond.from_matrix([[1, 0, 0], [0, 1, 0], [0, 0, 1]])
CP3 = HodgeDiamond.from_matrix([[int(p == q) for q in range(4)] for p in range(4)])
GENUS2 = HodgeDiamond.from_matrix([[1, 2], [2, 1]])


@st.composite
def diamonds(draw, n=None, max_n=4, hi=9):
    if n is None:
        n = draw(st.integers(0, max_n))
    rows = draw(
        st.lists(
            st.lists(st.integers(0, hi), min_size=n + 1, max_size=n + 1),
            min_size=n + 1,
            max_size=n + 1,
        )
    )
    return HodgeDiamond(n, rows)


@st.composite
def serre_diamonds(draw, n):
    d = draw(diamonds(n=n))
    return HodgeDiamond(n, [[d[min((p, q), (n - p, n - q))] for q in range(n + 1)] for p in range(n + 1)])


def test_out_of_range_reads_zero():
    assert GENUS2[-1, 0] == 0
    assert GENUS2[0, 2] == 0
    assert GENUS2[1, 0] == 2


def test_negative_entries_rejected():
    with pytest.raises(ValidationError):
        HodgeDiamond.from_matrix([[1, -1], [0, 1]])
    with pytest.raises(ValidationError):
        HodgeDiamond.from_matrix([[1, 0], [0]])


class TestShift:
    def test_identity(self):
        assert shift(POINT, 0, 0) == POINT

    def test_point_into_threefold(self):
        d = shift(POINT, 1, 3)
        assert d.n == 3
        assert d.total() == 1 and d[1, 1] == 1

    def test_genus2_curve(self):
        assert shift(GENUS2, 1, 3).to_lists() == [
            [0, 0, 0, 0],
            [0, 1, 2, 0],
            [0, 2, 1, 0],
            [0, 0, 0, 0],
        ]

    def test_target_too_small(self):
        with pytest.raises(DimensionMismatchError):
            shift(GENUS2, 1, 1)

    @given(diamonds(), st.integers(0, 3), st.integers(0, 2))
    def test_preserves_entries(self, d, i, extra):
        s = shift(d, i, d.n + i + extra)
        assert s.total() == d.total()
        assert sorted(x for row in s.h for x in row if x) == sorted(x for row in d.h for x in row if x)


class TestDirectSum:
    def test_zero_is_identity(self):
        assert direct_sum(GENUS2, HodgeDiamond.zero(1)) == GENUS2

    def test_cp2_doubled(self):
        assert direct_sum(CP2, CP2).to_lists() == [[2, 0, 0], [0, 2, 0], [0, 0, 2]]

    def test_mismatch(self):
        with pytest.raises(DimensionMismatchError):
            direct_sum(CP2, GENUS2)

    @given(st.integers(0, 4).flatmap(lambda n: st.tuples(diamonds(n=n), diamonds(n=n), diamonds(n=n))))
    def test_commutative_associative(self, abc):
        a, b, c = abc
        assert direct_sum(a, b) == direct_sum(b, a)
        assert direct_sum(direct_sum(a, b), c) == direct_sum(a, direct_sum(b, c))

    @given(st.integers(0, 4).flatmap(lambda n: st.tuples(serre_diamonds(n), serre_diamonds(n))))
    def test_serre_closed(self, ab):
        assert serre_symmetric(direct_sum(*ab))


class TestSymmetry:
    def test_cp3(self):
        assert serre_symmetric(CP3)

    def test_constructed_asymmetry(self):
        rows = CP3.to_lists()
        rows[1][0] = 2
        rows[2][3] = 1
        assert not serre_symmetric(HodgeDiamond.from_matrix(rows))

    @pytest.mark.parametrize("g", [0, 1, 2, 7])
    def test_curves(self, g):
        c = HodgeDiamond.from_matrix([[1, g], [g, 1]])
        assert serre_symmetric(c) and hodge_symmetric(c)


class TestEuler:
    def test_euler_p(self):
        assert euler_p(CP2) == (1, -1, 1)
        assert euler_p(GENUS2) == (-1, 1)
        assert euler_p(HodgeDiamond.zero(3)) == (0, 0, 0, 0)

    def test_topological(self):
        assert topological_euler(BettiVector(3, (1, 0, 1, 0, 1, 0, 1))) == 4
        assert topological_euler(BettiVector(1, (1, 4, 1))) == -2
        assert topological_euler(BettiVector(0, (1,))) == 1


class TestAntiDiagonal:
    def test_cp2(self):
        assert anti_diagonal_sums(CP2) == {-2: 0, -1: 0, 0: 3, 1: 0, 2: 0}

    def test_genus2(self):
        assert anti_diagonal_sums(GENUS2) == {-1: 2, 0: 2, 1: 2}

    def test_point(self):
        assert anti_diagonal_sums(POINT) == {0: 1}

    @given(diamonds())
    def test_total(self, d):
        assert sum(anti_diagonal_sums(d).values()) == d.total()


class TestModelValidation:
    def test_derived_betti_gives_zero_defect(self):
        m = make_model("CP2", CP2, flags={"e1_degenerate": True})
        assert m.betti_derived and m.betti.b == (1, 0, 1, 0, 1)

    def test_frolicher_violation(self):
        with pytest.raises(ValidationError, match="Frölicher inequality violated at k=1"):
            make_model("bad", [[1, 2], [2, 1]], betti=[1, 6, 1])

    def test_poincare_violation(self):
        with pytest.raises(ValidationError, match="Poincaré"):
            make_model("bad", [[1, 2], [2, 1]], betti=[1, 4, 0])

    def test_connected_needs_h00_one(self):
        with pytest.raises(ValidationError, match="h\\^\\{0,0\\}"):
            make_model("two", [[2]])
        assert make_model("two", [[2]], connected=False).diamond[0, 0] == 2

    def test_kaehler_with_asymmetric_diamond(self):
        h = [[1, 2, 2, 1], [3, 6, 6, 3], [3, 6, 6, 3], [1, 2, 2, 1]]
        with pytest.raises(ValidationError, match="Hodge-symmetry contradiction"):
            make_model("x", h, flags={"kaehler": True})

    def test_flag_chain_contradiction(self):
        with pytest.raises(ValidationError, match="flag contradiction"):
            make_model("x", CP2, flags={"kaehler": True, "ddbar": False})

    def test_e1_flag_against_betti(self):
        with pytest.raises(ValidationError, match="E1-degeneracy contradiction"):
            make_model("x", [[1, 2], [2, 1]], betti=[1, 2, 1], flags={"e1_degenerate": True})
        with pytest.raises(ValidationError, match="E1-degeneracy contradiction"):
            make_model("x", [[1, 2], [2, 1]], betti=[1, 4, 1], flags={"e1_degenerate": False})

    def test_inference_only_strengthens(self):
        m = make_model("x", [[1, 3], [2, 1]], betti=[1, 4, 1])
        assert m.flags.e1_degenerate is False
        assert m.flags.ddbar is False and m.flags.fujiki is False and m.flags.kaehler is False
        m = make_model("y", CP2, flags={"kaehler": True})
        assert m.flags.fujiki and m.flags.ddbar and m.flags.e1_degenerate

    def test_errors_are_collected(self):
        with pytest.raises(ValidationError) as info:
            make_model("bad", [[1, 0], [0, 1]], betti=[1, 3, 2])
        assert len(info.value.violations) >= 2

    def test_disjoint_union(self):
        p = make_model("p", [[1]], flags={"kaehler": True})
        u = disjoint_union([p, p], name="2p")
        assert not u.connected and u.diamond[0, 0] == 2 and u.betti.b == (2,)


@given(diamonds(max_n=3))
def test_render_round_trip(d):
    assert parse_rendered(render_diamond(d)) == d


def test_render_cp2():
    assert render_diamond(CP2) == ["  1", " 0 0", "0 1 0", " 0 0", "  1"]


def test_derived_betti_matches_degree_sums():
    assert derived_betti(GENUS2).b == (1, 4, 1)


def test_euler_p_follows_alternating_sum_over_q():
    # CP2: the middle row has its single 1 at q = 1, so it counts -1
    assert euler_p(CP2)[1] == -CP2[1, 1]


def test_torus_one_is_elliptic_curve():
    from hodgeblow import curve, torus

    assert torus(1).diamond == curve(1).diamond and torus(1).betti == curve(1).betti
