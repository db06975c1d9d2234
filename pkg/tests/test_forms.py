from math import gcd, isqrt

import pytest
from hypothesis import given, strategies as st

from dstriples.arith import sqrt_mod
from dstriples.forms import (
    AUTO,
    AUTO_PRIME,
    B,
    IDENTITY,
    PELL,
    PRINCIPAL,
    IntMatrix2,
    QuadForm,
    auto_power,
    brute_force_pell,
    chain_matrix,
    chebyshev_s,
    family_iterate,
    first_positive_index,
    iter_positive_members,
    members_in_box,
    neg_auto_power,
    reduce_definite,
    reduce_indefinite,
    rpapf_indefinite,
    solve_definite,
    solve_pell_families,
    unique_xy_solution,
)


def test_auto_power_small_values():
    assert auto_power(0) == IDENTITY
    assert auto_power(1) == IntMatrix2(3, 4, 2, 3)
    assert auto_power(2) == IntMatrix2(17, 24, 12, 17)
    assert auto_power(-1) == AUTO_PRIME.inverse()


def test_auto_power_equals_repeated_products():
    m = IDENTITY
    inv = AUTO_PRIME.inverse()
    for n in range(21):
        assert auto_power(n) == m
        m = m @ AUTO_PRIME
    m = IDENTITY
    for n in range(0, -21, -1):
        assert auto_power(n) == m
        m = m @ inv


def test_neg_auto_power_equals_repeated_products():
    assert AUTO == IntMatrix2(-1, -2, -2, -5)
    m = IDENTITY
    for n in range(16):
        assert neg_auto_power(n) == m
        m = m @ -AUTO
    assert neg_auto_power(-1) == (-AUTO).inverse()


def test_chebyshev_values_follow_pell_numbers():
    # S(n-1, 6) is the sequence 0, 1, 6, 35, 204, ...
    want = [0, 1, 6, 35, 204, 1189, 6930, 40391]
    assert [chebyshev_s(n - 1) for n in range(len(want))] == want
    assert chebyshev_s(-2) == -1


def test_pell_form_reaches_principal_form():
    ts, chain = reduce_indefinite(PELL)
    assert ts == (0, 1)
    assert chain[-1] == PRINCIPAL
    assert PELL.transform(B) == PRINCIPAL


def test_right_neighbour_step_of_principal_form():
    assert PRINCIPAL.step(-2) == QuadForm(-1, 2, 1)


def test_step_agrees_with_matrix_transform():
    f = QuadForm(-289, 90, -7)
    for t in range(-5, 6):
        assert f.step(t) == f.transform(IntMatrix2(0, -1, 1, t))


def test_reduction_of_minus_289_form():
    ts, chain = reduce_indefinite(QuadForm(-289, 90, -7))
    assert ts == (-6, 2, 2)
    assert [f.as_tuple() for f in chain] == [(-289, 90, -7), (-7, -6, -1), (-1, 2, 1), (1, 2, -1)]


def test_chain_is_equivalent_to_product_matrix():
    f = QuadForm(-2737, 930, -79)
    ts, chain = reduce_indefinite(f)
    assert f.transform(chain_matrix(ts)) == chain[-1]
    assert all(g.disc == 8 for g in chain)


def test_rpapfs_of_minus_2737():
    assert [j for j, _ in rpapf_indefinite(-2737)] == [74, 465, 1145, 1201, 1536, 1592, 2272, 2663]


def test_rpapfs_for_unit_and_nonsolvable_k():
    assert rpapf_indefinite(-1) == [(0, QuadForm(-1, 0, 2))]
    assert rpapf_indefinite(-9) == []
    with pytest.raises(ValueError):
        rpapf_indefinite(0)


def test_families_of_minus_2737():
    fams = solve_pell_families(-2737)
    first = {f.j: family_iterate(f, first_positive_index(f)).as_tuple() for f in fams}
    family_one = sorted(first[f.j] for f in fams if f.family_tag == "I")
    assert family_one == [(1, 37), (25, 41), (31, 43), (41, 47)]
    assert first[74] == (145, 109)
    assert all(f.family_tag == ("I" if first[f.j][0] < first[f.j][1] else "II") for f in fams)


def test_families_of_minus_289():
    fams = solve_pell_families(-289)
    assert sorted(f.fundamental.as_tuple() for f in fams) == [(-7, 13), (7, 13)]
    neg = next(f for f in fams if f.fundamental.X == -7)
    assert family_iterate(neg, 1).as_tuple() == (31, 25)
    assert neg.t_tuple == (-6, 2, 2)


def test_conjugate_families_pair_up():
    for k in (-2737, -289, -7 * 7 * 17, -4361):
        fams = solve_pell_families(k)
        js = {f.j for f in fams}
        assert all(f.conjugate_j in js for f in fams)
        fund = {f.fundamental.as_tuple() for f in fams}
        assert all((-x, y) in fund for x, y in fund if y != 0)


def test_family_size_matches_root_count():
    for a in range(1, 400):
        fams = solve_pell_families(-a)
        roots = [j for j in sqrt_mod(2, a) if gcd(a, 2 * j, (j * j - 2) // -a) == 1]
        assert len(fams) == len(roots)


def test_unique_xy_examples():
    assert [s.as_tuple() for s in unique_xy_solution(7)] == [(1, 5)]
    assert [s.as_tuple() for s in unique_xy_solution(119)] == [(41, 89), (79, 101)]
    assert unique_xy_solution(3) == []


@pytest.mark.parametrize("s", [1, 2, 8, -7])
def test_unique_xy_rejects_bad_s(s):
    with pytest.raises(ValueError):
        unique_xy_solution(s)


def test_unique_xy_solutions_are_proper_and_below_diagonal():
    for s in range(3, 200, 2):
        for sol in unique_xy_solution(s):
            assert sol.X * sol.X - 2 * sol.Y * sol.Y == -s * s
            assert 0 < sol.X < sol.Y and gcd(sol.X, sol.Y) == 1


def test_reduce_definite_examples():
    ts, chain = reduce_definite(QuadForm(17, 14, 3))
    assert ts == (2, -1)
    assert [f.as_tuple() for f in chain[1:]] == [(3, -2, 1), (1, 0, 2)]
    ts, chain = reduce_definite(QuadForm(6, 4, 1))
    assert len(ts) == 1 and chain[-1] == QuadForm(1, 0, 2)


def test_reduce_definite_rejects_indefinite_forms():
    with pytest.raises(ValueError):
        reduce_definite(PELL)


def test_solve_definite_examples():
    assert solve_definite(153) == ((-11, 4), (-5, 8), (5, 8), (11, 4))
    assert solve_definite(1) == ((-1, 0), (1, 0))
    assert (9, 2) in solve_definite(89)


def test_solve_definite_against_search():
    for a in range(1, 1500):
        want = set()
        for k in range(0, isqrt(a // 2) + 1):
            tt = a - 2 * k * k
            t = isqrt(tt)
            if t * t == tt and gcd(t, k) == 1:
                want |= {(t, k), (-t, k)}
        assert set(solve_definite(a)) == want, a


@pytest.mark.parametrize("k", [-1, -7, -14, -17, -23, -49, -119, -289, -2737, -4999])
def test_members_in_box_equal_brute_force(k):
    found = sorted(
        sol.as_tuple() for fam in solve_pell_families(k) for sol in members_in_box(fam, 1000, 2000)
    )
    assert found == brute_force_pell(k, 1000, 2000)


def test_all_negative_k_up_to_5000_against_brute_force():
    for k in range(-1, -5001, -1):
        fams = solve_pell_families(k)
        if not fams:
            # no family means no proper solution at all
            assert brute_force_pell(k, 300, 300) == []
            continue
        found = sorted(sol.as_tuple() for fam in fams for sol in members_in_box(fam, 300, 300))
        assert found == brute_force_pell(k, 300, 300), k


def test_positive_k_families_solve_the_equation():
    for k in (1, 2, 7, 14, 17, 23, 31, 41, 47, 119):
        fams = solve_pell_families(k)
        assert fams
        for fam in fams:
            x, y = fam.fundamental.as_tuple()
            assert x * x - 2 * y * y == k and gcd(x, y) == 1


def test_first_positive_member_is_below_sqrt2_and_x_grows():
    for a in (7, 17, 23, 31, 41, 47, 49, 71, 73, 289, 2737, 4361):
        for fam in solve_pell_families(-a):
            members = []
            it = iter_positive_members(fam)
            for _ in range(6):
                members.append(next(it))
            first = members[0]
            assert first.X > 0
            assert first.X * first.X < 2 * first.Y * first.Y
            prev = family_iterate(fam, first_positive_index(fam) - 1)
            assert prev.X <= 0
            assert all(m1.X < m2.X and m1.Y < m2.Y for m1, m2 in zip(members, members[1:]))


def test_parity_of_proper_solutions():
    # X is odd for odd a; Y is odd for a = 1 (mod 8) and even for a = 7 (mod 8)
    for a in range(1, 3000, 2):
        fams = solve_pell_families(-a)
        if a % 8 in (3, 5):
            assert fams == ()
        for fam in fams:
            sol = family_iterate(fam, first_positive_index(fam))
            assert sol.X % 2 == 1
            assert sol.Y % 2 == (1 if a % 8 == 1 else 0)


def test_unique_xy_solution_gives_q_equal_c3_triples():
    for s in range(7, 200, 2):
        for sol in unique_xy_solution(s):
            assert (sol.Y - sol.X) % 2 == 0
            x, y = (sol.Y - sol.X) // 2, (sol.Y + sol.X) // 2
            assert x * x + y * y + 6 * x * y == s * s
            q = (x + y + s) // 2
            assert q * q == x * y + (x + y) * q


@given(st.integers(min_value=-8, max_value=8), st.integers(min_value=-8, max_value=8))
def test_auto_power_is_a_homomorphism(m, n):
    assert auto_power(m) @ auto_power(n) == auto_power(m + n)
