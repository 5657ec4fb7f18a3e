import itertools

import pytest
from fractions import Fraction

from hodgerep.errors import InvalidTypeError
from hodgerep.rootdata import (
    LieType,
    catalogued_types,
    dual_weight,
    duality_permutation,
    mu_plus_mu_star_closed_form,
    root_system,
    root_to_weight_coords,
    weight_to_root_coords,
)

Q = Fraction

ALGEBRA_DIMS = {
    "A": lambda r: r * (r + 2),
    "B": lambda r: r * (2 * r + 1),
    "C": lambda r: r * (2 * r + 1),
    "D": lambda r: r * (2 * r - 1),
    "E": lambda r: {6: 78, 7: 133, 8: 248}[r],
    "F": lambda r: 52,
    "G": lambda r: 14,
}


def fundamental(rank, i):
    return tuple(int(j == i - 1) for j in range(rank))


@pytest.mark.parametrize("family,rank", [
    ("A", 0), ("B", 1), ("C", 1), ("D", 3), ("E", 5), ("E", 9), ("F", 3), ("G", 4),
])
def test_rank_bounds_rejected(family, rank):
    with pytest.raises(InvalidTypeError):
        LieType(family, rank)


def test_rank_bounds_accepted():
    for t in [("A", 1), ("B", 2), ("C", 2), ("D", 4), ("E", 6), ("F", 4), ("G", 2)]:
        LieType(*t)


def test_a1_catalog():
    rsd = root_system(LieType("A", 1))
    assert rsd.cartan == ((2,),)
    assert rsd.positive_roots == ((1,),)
    assert weight_to_root_coords(LieType("A", 1), (1,)) == (Q(1, 2),)


def test_a2_positive_roots():
    rsd = root_system(LieType("A", 2))
    assert set(rsd.positive_roots) == {(1, 0), (0, 1), (1, 1)}


def test_b3_positive_roots_count():
    # (dim so(7) - 3) / 2 = (21 - 3) / 2
    assert len(root_system(LieType("B", 3)).positive_roots) == 9


def test_positive_root_counts_match_algebra_dims():
    for t in catalogued_types(8):
        dim = ALGEBRA_DIMS[t.family](t.rank)
        assert len(root_system(t).positive_roots) == (dim - t.rank) // 2, str(t)


def test_weyl_vector_is_half_sum_of_positive_roots():
    for t in catalogued_types(8):
        rsd = root_system(t)
        total = [Q(0)] * t.rank
        for beta in rsd.positive_roots:
            for j in range(t.rank):
                total[j] += beta[j]
        fund = root_to_weight_coords(t, [x / 2 for x in total])
        assert fund == tuple([Q(1)] * t.rank), str(t)


def test_inverse_cartan_exact():
    for t in catalogued_types(8):
        rsd = root_system(t)
        n = t.rank
        for i in range(n):
            for j in range(n):
                entry = sum(rsd.inverse_cartan[i][k] * rsd.cartan[k][j]
                            for k in range(n))
                assert entry == (1 if i == j else 0), str(t)


def test_symmetrizer_makes_cartan_symmetric():
    for t in catalogued_types(8):
        rsd = root_system(t)
        r = t.rank
        for i in range(r):
            for j in range(r):
                assert (rsd.cartan[i][j] * rsd.symmetrizer[j]
                        == rsd.cartan[j][i] * rsd.symmetrizer[i]), str(t)


def test_weight_to_root_coords_examples():
    assert weight_to_root_coords(LieType("C", 3), (0, 0, 1)) == (Q(1), Q(2), Q(3, 2))
    assert weight_to_root_coords(LieType("A", 3), (1, 0, 0)) == (Q(3, 4), Q(2, 4), Q(1, 4))


def test_root_coords_round_trip_exact():
    for t in catalogued_types(8):
        for i in range(1, t.rank + 1):
            w = fundamental(t.rank, i)
            rc = weight_to_root_coords(t, w)
            back = root_to_weight_coords(t, rc)
            assert back == tuple(Q(c) for c in w), (str(t), i)


def test_dual_weight_examples():
    assert dual_weight(LieType("A", 4), fundamental(4, 2)) == fundamental(4, 3)
    mu = (2, 0, 1, 3, 0)
    assert dual_weight(LieType("B", 5), mu) == mu
    assert dual_weight(LieType("D", 5), fundamental(5, 4)) == fundamental(5, 5)
    assert dual_weight(LieType("D", 6), fundamental(6, 5)) == fundamental(6, 5)
    assert dual_weight(LieType("E", 6), fundamental(6, 1)) == fundamental(6, 6)
    assert dual_weight(LieType("E", 6), fundamental(6, 3)) == fundamental(6, 5)
    assert dual_weight(LieType("E", 7), fundamental(7, 7)) == fundamental(7, 7)


def test_dual_weight_is_involution():
    for t in catalogued_types(8):
        coords = range(4) if t.rank <= 4 else range(2)
        for mu in itertools.product(coords, repeat=t.rank):
            assert dual_weight(t, dual_weight(t, mu)) == mu


def test_duality_permutation_is_diagram_automorphism():
    for t in catalogued_types(8):
        perm = duality_permutation(t)
        cartan = root_system(t).cartan
        for i in range(t.rank):
            for j in range(t.rank):
                assert cartan[perm[i]][perm[j]] == cartan[i][j], str(t)


def test_closed_form_examples():
    assert mu_plus_mu_star_closed_form(LieType("E", 6), fundamental(6, 1)) == \
        tuple(Q(x) for x in (2, 2, 3, 4, 3, 2))
    assert mu_plus_mu_star_closed_form(LieType("A", 4), fundamental(4, 1)) == \
        tuple(Q(1) for _ in range(4))
    assert mu_plus_mu_star_closed_form(LieType("G", 2), fundamental(2, 1)) == \
        (Q(4), Q(2))
    # C3 item: 2 alpha1 + 4 alpha2 + 3 alpha3 for omega3
    assert mu_plus_mu_star_closed_form(LieType("C", 3), fundamental(3, 3)) == \
        (Q(2), Q(4), Q(3))


def test_closed_form_equals_inverse_cartan_route():
    """Validates node numbering, the inverse Cartan and the -w0 table at once."""
    for t in catalogued_types(8):
        for i in range(1, t.rank + 1):
            w = fundamental(t.rank, i)
            closed = mu_plus_mu_star_closed_form(t, w)
            direct = tuple(
                a + b for a, b in zip(weight_to_root_coords(t, w),
                                      weight_to_root_coords(t, dual_weight(t, w)))
            )
            assert closed == direct, (str(t), i)


def test_closed_form_linear_in_mu():
    for t in [LieType("A", 3), LieType("B", 3), LieType("C", 3), LieType("D", 4),
              LieType("F", 4), LieType("G", 2)]:
        for mu in itertools.product(range(3), repeat=t.rank):
            if not any(mu):
                continue
            total = [Q(0)] * t.rank
            for i, c in enumerate(mu):
                part = mu_plus_mu_star_closed_form(t, fundamental(t.rank, i + 1))
                for j in range(t.rank):
                    total[j] += c * part[j]
            assert tuple(total) == mu_plus_mu_star_closed_form(t, mu)


def test_parse():
    assert LieType.parse("C3") == LieType("C", 3)
    assert LieType.parse("e7") == LieType("E", 7)
    with pytest.raises(InvalidTypeError):
        LieType.parse("X2")
    with pytest.raises(InvalidTypeError):
        LieType.parse("A")
