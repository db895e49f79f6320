"""Endomorphism and structure matrices: assembly, inversion, invariance."""

import pytest

from descent_kit import (
    GF,
    QQ,
    DStructure,
    OperatorTower,
    PresentedRing,
    RingMatrix,
    StructureAlgebra,
    associated_matrix,
    change_of_basis_check,
    classify_descent_matrix,
    difference_algebra,
    dual_numbers,
    endo_matrix,
    invert_descent_matrix,
    invertibility_equivalences,
)
from descent_kit import linear
from descent_kit.errors import NonInvertibleMatrix, SingularBasisChange
from conftest import COEFF_BUILDERS, dual_basis_algebra, random_tower


def _dual_tower(field, f_on_eps):
    """(A, id) <= (B = A[eps]/(eps^2), f) in the difference case."""
    a = PresentedRing.base_field(field)
    b = dual_basis_algebra(a)
    d = difference_algebra(field)
    e = DStructure.identity(a, d)
    images = {"1": [b.basis_el(0)], "eps": [f_on_eps(b)]}
    return OperatorTower(e, b, d, [images["1"], images["eps"]])


def test_projection_endomorphism_matrix():
    tower = _dual_tower(QQ, lambda b: b.zero_el())  # tau(eps) = 0
    m = endo_matrix(tower.algebra, tower.endo_images(0))
    assert m.render() == [["1", "0"], ["0", "0"]]


def test_twist_endomorphism_matrix_over_polynomial_ring():
    kx = PresentedRing.make(QQ, ("x",), [])
    b = dual_basis_algebra(kx)
    images = [b.basis_el(0), b.basis_el(1).scale(kx.var("x"))]
    m = endo_matrix(b, images)
    assert m.render() == [["1", "0"], ["0", "x"]]
    with pytest.raises(NonInvertibleMatrix) as err:
        m.inverse()
    assert "x" in str(err.value)


def test_identity_endomorphism_matrix():
    a = PresentedRing.base_field(QQ)
    b = dual_basis_algebra(a)
    m = endo_matrix(b, [b.basis_el(0), b.basis_el(1)])
    assert m == RingMatrix.identity(a, 2)


def test_associated_matrix_difference_case():
    tower = _dual_tower(QQ, lambda b: b.zero_el())
    dm = associated_matrix(tower)
    assert dm.render() == [["1", "0"], ["0", "0"]]
    with pytest.raises(NonInvertibleMatrix):
        invert_descent_matrix(dm)
    assert dm.invertible == "no"


def test_associated_matrix_differential_case():
    # D = dual numbers, B = Q[y]/(y^2), f = id + delta(y)=y: M = [[I,0],[Delta,I]]
    a = PresentedRing.base_field(QQ)
    b = StructureAlgebra(
        a, ("1", "y"),
        [[[a.one, a.zero], [a.zero, a.one]], [[a.zero, a.one], [a.zero, a.zero]]],
    )
    d = dual_numbers(QQ)
    e = DStructure.identity(a, d)
    tower = OperatorTower(
        e, b, d, [[b.basis_el(0), b.zero_el()], [b.basis_el(1), b.basis_el(1)]]
    )
    dm = associated_matrix(tower)
    assert dm.render() == [
        ["1", "0", "0", "0"],
        ["0", "1", "0", "0"],
        ["0", "0", "1", "0"],
        ["0", "1", "0", "1"],
    ]
    # independent assembly straight from the defining formula
    l, r = 2, 2
    for m in range(l):
        for j in range(l):
            for n in range(r):
                for i in range(r):
                    acc = a.zero
                    for k in range(l):
                        acc = acc + tower.lambda_f(n, k, i).scale(d.a(j, k, m))
                    assert a.equal(dm.blocks[m][j].entry(n, i), acc)
    inv = invert_descent_matrix(dm).inverse
    assert inv.render() == [
        ["1", "0", "0", "0"],
        ["0", "1", "0", "0"],
        ["0", "0", "1", "0"],
        ["0", "-1", "0", "1"],
    ]
    assert dm.matrix * inv == RingMatrix.identity(a, 4)
    assert inv * dm.matrix == RingMatrix.identity(a, 4)


def test_identity_structure_gives_identity_matrix():
    field = GF(5)
    a = PresentedRing.base_field(field)
    b = dual_basis_algebra(a)
    d = difference_algebra(field)
    tower = OperatorTower(
        DStructure.identity(a, d), b, d, [[b.basis_el(0)], [b.basis_el(1)]]
    )
    dm = associated_matrix(tower)
    assert dm.matrix == RingMatrix.identity(a, 2)
    assert invert_descent_matrix(dm).inverse == RingMatrix.identity(a, 2)


def test_block_lower_triangular_in_stratified_basis(rng):
    for name in ("dual", "jets3", "dual_times_field"):
        for field in (QQ, GF(5)):
            coeff = COEFF_BUILDERS[name](field)
            tower = random_tower(field, coeff, "nil2", rng)
            dm = associated_matrix(tower)
            zero = RingMatrix.zero(tower.base_ring, dm.r, dm.r)
            for m in range(dm.l):
                for j in range(dm.l):
                    if m < j:
                        assert dm.blocks[m][j] == zero
            for j in range(dm.l):
                factor = coeff.factor_of[j]
                assert dm.blocks[j][j] == endo_matrix(
                    tower.algebra, tower.endo_images(factor)
                )


def test_invertibility_theorem_randomized(rng):
    """Matrix invertible iff every associated endomorphism matrix is.

    At least 50 randomized valid structures over QQ and GF(5), across the
    four standard coefficient algebras and three module-algebra families.
    """
    checked = 0
    mismatches = 0
    for field in (QQ, GF(5)):
        for name in ("dual", "pair_of_fields", "jets3", "dual_times_field"):
            coeff = COEFF_BUILDERS[name](field)
            for kind in ("nil2", "split", "nil3"):
                for _ in range(3):
                    tower = random_tower(field, coeff, kind, rng)
                    dm = classify_descent_matrix(associated_matrix(tower))
                    endos_ok = all(
                        endo_matrix(tower.algebra, tower.endo_images(factor)).is_invertible()
                        for factor in range(coeff.factor_count)
                    )
                    if (dm.invertible == "yes") != endos_ok:
                        mismatches += 1
                    if dm.invertible == "yes":
                        n = dm.r * dm.l
                        assert dm.matrix * dm.inverse == RingMatrix.identity(
                            tower.base_ring, n
                        )
                        assert dm.inverse * dm.matrix == RingMatrix.identity(
                            tower.base_ring, n
                        )
                    checked += 1
    assert checked >= 50
    assert mismatches == 0


def _random_invertible(field, size, rng):
    while True:
        rows = [
            [field.normalize(rng.randrange(5) - 2) for _ in range(size)]
            for _ in range(size)
        ]
        if linear.inverse(field, rows) is not None:
            return rows


def test_change_of_basis_invariance_randomized(rng):
    """Conjugation by the inflated change of basis, 25+ random instances."""
    checked = 0
    for field in (QQ, GF(5)):
        for name in ("dual", "pair_of_fields", "jets3", "dual_times_field"):
            coeff = COEFF_BUILDERS[name](field)
            for kind in ("nil2", "split"):
                for _ in range(2):
                    tower = random_tower(field, coeff, kind, rng)
                    x = _random_invertible(field, coeff.dim, rng)
                    assert change_of_basis_check(tower, x)
                    checked += 1
    assert checked >= 25


def test_change_of_basis_identity_and_dual_example(rng):
    tower = _dual_tower(QQ, lambda b: b.basis_el(1))
    # X = identity
    assert change_of_basis_check(tower, [[QQ.one]])
    # dual-number coefficients with eta = {1, 1+eps}
    coeff = dual_numbers(QQ)
    towerd = random_tower(QQ, coeff, "nil2", rng)
    x = [[QQ.one, QQ.one], [QQ.zero, QQ.one]]
    assert change_of_basis_check(towerd, x)
    with pytest.raises(SingularBasisChange):
        change_of_basis_check(towerd, [[QQ.one, QQ.one], [QQ.one, QQ.one]])


def test_invertibility_equivalences_examples():
    tower = _dual_tower(QQ, lambda b: b.zero_el())
    report = invertibility_equivalences(tower, tower.endo_images(0))
    assert report["all_agree"] and not report["matrix_invertible_given_basis"]

    a = PresentedRing.base_field(QQ)
    b = dual_basis_algebra(a)
    report_id = invertibility_equivalences(b, [b.basis_el(0), b.basis_el(1)])
    assert report_id["all_agree"] and report_id["matrix_invertible_given_basis"]

    kx = PresentedRing.make(QQ, ("x",), [])
    bx = dual_basis_algebra(kx)
    report_x = invertibility_equivalences(
        bx, [bx.basis_el(0), bx.basis_el(1).scale(kx.var("x"))]
    )
    assert report_x["all_agree"] and not report_x["sigma_of_basis_is_basis"]


def test_invertibility_equivalences_random_agreement(rng):
    for field in (QQ, GF(5)):
        coeff = difference_algebra(field)
        for kind in ("nil2", "split", "nil3"):
            for _ in range(4):
                tower = random_tower(field, coeff, kind, rng)
                report = invertibility_equivalences(tower, tower.endo_images(0))
                assert report["all_agree"]


def test_bijectivity_matches_matrix_over_field_base():
    """Over A = k[i]/(i^2+1) with conjugation on A: the matrix of sigma is
    invertible exactly when sigma is bijective as a k-linear map on B."""
    a = PresentedRing.make(QQ, ("i",), [PresentedRing.make(QQ, ("i",), []).el("i^2+1")])
    b = dual_basis_algebra(a, label="y")
    conj = {"i": a.el("-i")}

    def k_linear_rank(sigma_a_images, sigma_b_images):
        a_basis = a.staircase()
        rows = []
        for s in a_basis:
            from descent_kit import Polynomial
            s_poly = Polynomial(a.field, {s: a.field.one})
            sigma_s = a.nf(s_poly.substitute({v: conj[v] for v in conj}))
            for idx in range(b.rank):
                image = sigma_b_images[idx].scale(sigma_s)
                row = []
                for coord in image.coords:
                    row.extend(a.coordinates(coord, a_basis))
                rows.append(row)
        return linear.rank(a.field, rows)

    dim = len(a.staircase()) * b.rank
    bij = [b.basis_el(0), b.basis_el(1).scale(a.var("i"))]  # sigma(y) = i y
    assert endo_matrix(b, bij).is_invertible()
    assert k_linear_rank(conj, bij) == dim

    nonbij = [b.basis_el(0), b.zero_el()]  # sigma(y) = 0
    assert not endo_matrix(b, nonbij).is_invertible()
    assert k_linear_rank(conj, nonbij) < dim
