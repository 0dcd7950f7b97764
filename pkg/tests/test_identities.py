from hypothesis import given, settings
from hypothesis import strategies as st

import pytest

from schurtrails.identities import (
    AuditReport,
    IdentityReport,
    OrbitResult,
    _witness,
    bijection_audit,
    explore_orbit,
    schur_of,
    verify_ciucu,
    verify_dodgson,
    verify_general,
    verify_kirillov,
    verify_kleber,
    verify_pluecker,
)
from schurtrails.partitions import Partition
from schurtrails.polyring import (
    FormalMatrix,
    Monomial,
    Polynomial,
    a_var,
    determinant,
    formal_h,
    minor,
    x_var,
)
from schurtrails.schur import jacobi_trudi_matrix


def coeff_sum(poly):
    return sum(c for _, c in poly.terms())


def count_of(parts, N):
    return coeff_sum(schur_of(parts, N))


# ---------------------------------------------------------------- reports

def test_report_round_trip():
    rep = verify_general((2, 1))
    assert rep.identity == "general"
    assert rep.equal
    assert rep.witness is None
    assert rep.params == {"lambda": [2, 1], "N": 2}
    payload = rep.to_json()
    assert set(payload) == {"identity", "params", "equal", "lhs_terms", "rhs_terms", "elapsed_ms"}
    assert payload["lhs_terms"] == rep.lhs.n_terms()
    assert payload["elapsed_ms"] >= 0


def test_witness_names_first_differing_monomial():
    lhs = Polynomial({Monomial({x_var(1): 2}): 3, Monomial({x_var(2): 1}): 1})
    rhs = Polynomial({Monomial({x_var(1): 2}): 1, Monomial({x_var(2): 1}): 1})
    assert _witness(lhs, rhs) == "x1^2: 3 versus 1"
    assert _witness(lhs, lhs) is None
    # a failed report keeps the witness
    assert "witness" in IdentityReport("t", {}, lhs, rhs, False, _witness(lhs, rhs), 0.0).to_json()


def test_schur_of_negative_part_is_zero():
    assert schur_of((2, -1), 3).is_zero()
    assert schur_of((), 3) == Polynomial.const(1)
    assert schur_of((0, 0), 2) == Polynomial.const(1)


# ---------------------------------------------------------------- general

def test_general_two_parts_explicit():
    rep = verify_general((1, 1), N=2)
    s1 = Polynomial({Monomial({x_var(1): 1}): 1, Monomial({x_var(2): 1}): 1})
    assert rep.lhs == s1 * s1
    assert rep.rhs == schur_of((1, 1), 2) + schur_of((2,), 2)
    assert rep.equal


def test_general_counts_split():
    rep = verify_general((2, 1), N=2)
    assert rep.equal
    assert coeff_sum(rep.lhs) == 6
    assert coeff_sum(schur_of((2, 1), 2)) == 2
    assert coeff_sum(schur_of((3,), 2)) == 4


def test_general_zero_parts():
    rep = verify_general((0, 0), N=2)
    assert rep.equal
    assert rep.lhs == Polynomial.const(1)


def test_general_small_sweep():
    shapes = [
        (1, 1), (2, 1), (2, 2), (3, 1), (3, 3),
        (2, 1, 1), (2, 2, 1), (3, 2, 1), (3, 3, 3), (2, 1, 0),
    ]
    for parts in shapes:
        for N in (2, 3):
            assert verify_general(parts, N).equal, (parts, N)


def test_general_input_validation():
    with pytest.raises(ValueError):
        verify_general((3,))
    with pytest.raises(ValueError, match="weakly decreasing"):
        verify_general((3, 4))


def test_kirillov_preset():
    rep = verify_kirillov(2, 2, N=3)
    assert rep.identity == "kirillov"
    assert rep.params == {"c": 2, "r": 2, "N": 3}
    assert rep.equal
    base = verify_general((2, 2, 2), N=3)
    assert rep.lhs == base.lhs and rep.rhs == base.rhs
    with pytest.raises(ValueError):
        verify_kirillov(2, 0)


# ---------------------------------------------------------------- dodgson

def test_dodgson_two_by_two():
    rep = verify_dodgson(1)
    a = {(i, j): Polynomial.variable(a_var(i, j)) for i in (1, 2) for j in (1, 2)}
    assert rep.lhs == a[1, 1] * a[2, 2] - a[1, 2] * a[2, 1]
    assert rep.rhs == a[1, 1] * a[2, 2] - a[2, 1] * a[1, 2]
    assert rep.equal


def test_dodgson_sizes():
    for r in (1, 2, 3):
        rep = verify_dodgson(r)
        assert rep.equal, r
        assert rep.params == {"r": r}
    with pytest.raises(ValueError):
        verify_dodgson(0)


def test_dodgson_specializes_to_window_exchange():
    lam = (6, 4, 2)
    exponents = [lam[i] - (i + 1) + (j + 1) for i in range(3) for j in range(3)]
    assert len(set(exponents)) == 9  # the entry substitution loses nothing
    sub = {
        a_var(i + 1, j + 1): formal_h(lam[i] - (i + 1) + (j + 1))
        for i in range(3)
        for j in range(3)
    }
    matrix = FormalMatrix.generic(3, 3)

    def jt(parts):
        return determinant(jacobi_trudi_matrix(parts))

    assert determinant(matrix).substitute(sub) == jt((6, 4, 2))
    assert minor(matrix, (2,), (2,)).substitute(sub) == jt((4,))
    assert minor(matrix, (1, 2), (1, 2)).substitute(sub) == jt((6, 4))
    assert minor(matrix, (2, 3), (2, 3)).substitute(sub) == jt((4, 2))
    assert minor(matrix, (2, 3), (1, 2)).substitute(sub) == jt((3, 1))
    assert minor(matrix, (1, 2), (2, 3)).substitute(sub) == jt((7, 5))
    rep = verify_dodgson(2)
    assert rep.lhs.substitute(sub) == rep.rhs.substitute(sub)
    assert verify_general((6, 4, 2), N=3).equal


# ---------------------------------------------------------------- pluecker

def test_pluecker_formal_n2():
    for r_list in ((), (1,), (2,), (1, 2)):
        rep = verify_pluecker(2, r_list)
        assert rep.equal, r_list
        assert rep.params["mode"] == "formal"
    # exchanging nothing reproduces the left side verbatim
    rep = verify_pluecker(2, ())
    assert rep.lhs == rep.rhs


def test_pluecker_formal_n3_single_row():
    for r_list in ((1,), (2,), (3,)):
        assert verify_pluecker(3, r_list).equal, r_list


def test_pluecker_formal_needs_n():
    with pytest.raises(ValueError):
        verify_pluecker(None, (1,))
    with pytest.raises(ValueError):
        verify_pluecker(2, (3,))
    with pytest.raises(ValueError):
        verify_pluecker(2, (1,), mode="sideways")


def test_pluecker_schur_exchange():
    rep = verify_pluecker(2, (1,), mode="schur", lam=(4, 2), sigma=(3, 1), N=3)
    assert rep.equal
    assert rep.params["products"] == [[[3, 2], [4, 1]], [[1, 1], [4, 4]]]
    assert rep.lhs == schur_of((4, 2), 3) * schur_of((3, 1), 3)
    assert rep.rhs == schur_of((3, 2), 3) * schur_of((4, 1), 3) + schur_of((1, 1), 3) * schur_of((4, 4), 3)


def test_pluecker_schur_rejects_non_partition_exchange():
    with pytest.raises(ValueError, match="does not give a partition"):
        verify_pluecker(2, (2,), mode="schur", lam=(2, 0), sigma=(2, 1), N=2)


def test_pluecker_schur_needs_shapes():
    with pytest.raises(ValueError):
        verify_pluecker(2, (1,), mode="schur")


# ---------------------------------------------------------------- ciucu

def test_ciucu_pairs():
    rep = verify_ciucu((1, 2), 1, N=3)
    assert rep.equal
    assert rep.rhs == 2 * (schur_of((2,), 3) * schur_of((1,), 3))
    rep = verify_ciucu((1, 3), 1, N=3)
    assert rep.equal
    assert rep.rhs == 2 * (schur_of((3,), 3) * schur_of((1,), 3))


def test_ciucu_four_indices():
    rep = verify_ciucu((1, 2, 3, 4), 2, N=3)
    assert rep.equal
    # alternating split: {2,4} -> (3,2) against {1,3} -> (2,1)
    assert rep.rhs == 4 * (schur_of((3, 2), 3) * schur_of((2, 1), 3))
    assert rep.params == {"T": [1, 2, 3, 4], "k": 2, "N": 3}


def test_ciucu_malformed_sets():
    with pytest.raises(ValueError, match="2k"):
        verify_ciucu((1, 2, 3, 4), 1, N=3)
    with pytest.raises(ValueError, match="repeated"):
        verify_ciucu((1, 1), 1)
    with pytest.raises(ValueError, match="positive"):
        verify_ciucu((0, 1), 1)
    with pytest.raises(ValueError):
        verify_ciucu((1, 2), 0)


# ---------------------------------------------------------------- kleber

def test_kleber_two_one_first_corner():
    rep = verify_kleber((2, 1), 1)
    assert rep.equal
    assert rep.params["N"] == 3
    assert rep.params["products"] == [
        [1, [3, 1], [1, 1]],
        [1, [2, 2], [1, 1]],
        [1, [2, 2, 2], []],
    ]


def test_kleber_two_one_second_corner():
    rep = verify_kleber((2, 1), 2)
    assert rep.equal
    assert rep.params["products"] == [
        [1, [3, 2], [1]],
        [1, [2, 2, 2], []],
        [1, [2, 1, 1], [2]],
    ]


def test_kleber_rectangle_matches_kirillov():
    rep = verify_kleber((2, 2), 1, N=3)
    assert rep.equal
    assert rep.params["products"] == [[1, [3, 3], [1, 1]], [1, [2, 2, 2], [2]]]
    kir = verify_kirillov(2, 2, N=3)
    pairs = {frozenset((tuple(a), tuple(b))) for _, a, b in
             ((s, a, b) for s, a, b in rep.params["products"])}
    assert pairs == {frozenset(((3, 3), (1, 1))), frozenset(((2, 2, 2), (2,)))}
    assert rep.rhs == kir.rhs
    assert rep.lhs == kir.lhs


def test_kleber_small_sweep():
    cases = [((1,), 1), ((2,), 1), ((3, 1), 1), ((3, 1), 2), ((2, 2), 1),
             ((3, 2, 1), 1), ((3, 2, 1), 2), ((3, 2, 1), 3)]
    for parts, k in cases:
        assert verify_kleber(parts, k).equal, (parts, k)


def test_kleber_corner_range():
    with pytest.raises(ValueError):
        verify_kleber((2, 1), 0)
    with pytest.raises(ValueError):
        verify_kleber((2, 1), 3)
    with pytest.raises(ValueError):
        verify_kleber((2, 2), 2)


# ---------------------------------------------------------------- orbit

def test_orbit_single_windows():
    res = explore_orbit((2,), (1,), t=-1, selected=(1,), N=2)
    initial = ((2,), (0,), (1,), (0,))
    case_a = ((), (), (2, 1), (0, 0))
    case_b = ((0,), (0,), (3,), (0,))
    assert res.initial == initial
    assert res.S0 == frozenset([initial])
    assert res.S1 == frozenset([case_a, case_b])
    assert res.counts0 == {initial: 6}
    assert res.counts1 == {case_a: 2, case_b: 4}
    assert res.O0_size == res.O1_size == 6
    assert res.weight0 == schur_of((2,), 2) * schur_of((1,), 2)
    assert res.weight1 == schur_of((2, 1), 2) + schur_of((3,), 2)
    assert res.parity_uniform and not res.degenerate


def test_orbit_three_part_windows():
    res = explore_orbit((5, 4, 3), (4, 3, 2), t=-1, selected=(1,), N=3)
    assert res.selected == ((4, 3),)
    exchanged = ((3, 2, 1), (0, 0, 0), (6, 5, 4), (0, 0, 0))
    kept = ((4, 3), (0, 0), (5, 4, 3, 2), (0, 0, 0, 0))
    assert res.S1 == frozenset([exchanged])  # the kept layout needs four rows
    assert kept not in res.S1
    assert res.O0_size == res.O1_size == 64
    assert res.weight0 == schur_of((5, 4, 3), 3) * schur_of((4, 3, 2), 3)
    assert res.weight1 == schur_of((3, 2, 1), 3) * schur_of((6, 5, 4), 3)


def test_orbit_square_expansion_terms():
    res = explore_orbit((2, 1), (2, 1), t=1, selected=(2,), N=2)
    assert res.selected == ((1, 2),)
    assert res.initial == ((2, 1), (0, 0), (2, 1), (0, 0))
    assert res.S0 == frozenset([res.initial])
    outer_pairs = {frozenset((q[0], q[2])) for q in res.S1}
    assert outer_pairs == {
        frozenset(((3, 1), (1, 1))),
        frozenset(((2, 2), (1, 1))),
    }
    assert res.O0_size == res.O1_size == 4
    assert sorted(res.counts1.values()) == [1, 3]
    assert res.weight1 == (
        schur_of((3, 1), 2) * schur_of((1, 1), 2) + schur_of((2, 2), 2) * schur_of((1, 1), 2)
    )


def test_orbit_square_expansion_three_vars():
    res = explore_orbit((2, 1), (2, 1), t=1, selected=(2,), N=3)
    outer_pairs = {frozenset((q[0], q[2])) for q in res.S1}
    # the empty factor of the square expansion shows up as one bare column
    assert outer_pairs == {
        frozenset(((3, 1), (1, 1))),
        frozenset(((2, 2), (1, 1))),
        frozenset(((2, 2, 2), (0,))),
    }
    assert res.O0_size == res.O1_size == 64
    assert sorted(res.counts1.values()) == [1, 18, 45]
    assert res.parity_uniform
    assert res.weight1 == verify_kleber((2, 1), 1, N=3).rhs


@pytest.mark.slow
def test_orbit_three_part_windows_four_vars():
    res = explore_orbit((5, 4, 3), (4, 3, 2), t=-1, selected=(1,), N=4)
    exchanged = ((3, 2, 1), (0, 0, 0), (6, 5, 4), (0, 0, 0))
    kept = ((4, 3), (0, 0), (5, 4, 3, 2), (0, 0, 0, 0))
    # with a fourth variable the kept layout is realizable, so both appear
    assert res.S1 == frozenset([exchanged, kept])
    assert res.O0_size == res.O1_size
    assert res.weight0 == schur_of((5, 4, 3), 4) * schur_of((4, 3, 2), 4)
    assert res.weight1 == (
        schur_of((3, 2, 1), 4) * schur_of((6, 5, 4), 4)
        + schur_of((4, 3), 4) * schur_of((5, 4, 3, 2), 4)
    )


def test_orbit_no_selection_is_degenerate():
    res = explore_orbit((2,), (1,), t=-1, selected=(), N=2)
    assert res.degenerate
    assert res.S0 == frozenset([res.initial])
    assert res.S1 == frozenset()
    assert res.O0_size == 6 and res.O1_size == 0


def test_orbit_selection_out_of_range():
    with pytest.raises(ValueError, match="out of range"):
        explore_orbit((2,), (1,), t=-1, selected=(5,), N=2)
    # identical layouts make every terminal coincident: nothing to select
    with pytest.raises(ValueError, match="out of range"):
        explore_orbit((2, 1), (2, 1), t=0, selected=(1,), N=2)


# ---------------------------------------------------------------- audit

def test_audit_splits_objects():
    rep = bijection_audit((2, 1), N=2)
    assert rep.objects == 6
    assert rep.case_a == 2
    assert rep.case_b == 4
    assert rep.to_json()["lambda"] == [2, 1]


def test_audit_single_variable_is_forced():
    rep = bijection_audit((1, 1), N=1)
    assert rep.objects == 1
    assert rep.case_a == 0
    assert rep.case_b == 1


def test_audit_four_part_window():
    assert bijection_audit((5, 4, 3, 2), N=2).objects == 0
    rep = bijection_audit((5, 4, 3, 2), N=3)
    assert rep.objects == 64
    assert rep.case_a == 0
    assert rep.case_b == 64


def test_audit_needs_two_parts():
    with pytest.raises(ValueError):
        bijection_audit((3,), N=2)


audit_partitions_st = st.lists(
    st.integers(min_value=0, max_value=3), min_size=2, max_size=4
).map(lambda ps: tuple(sorted(ps, reverse=True)))


@settings(max_examples=25, deadline=None)
@given(parts=audit_partitions_st, N=st.sampled_from([2, 3]))
def test_audit_counts_match_products(parts, N):
    rep = bijection_audit(parts, N)
    r = len(parts) - 1
    assert rep.objects == count_of(parts[:r], N) * count_of(parts[1:], N)
    assert rep.case_a == count_of(parts[1:r], N) * count_of(parts, N)
    assert rep.case_b == count_of([p - 1 for p in parts[1:]], N) * count_of(
        [p + 1 for p in parts[:r]], N
    )
