from dataclasses import replace

import pytest

from extrinsic_lie.linalg import SparseMatrix
from extrinsic_lie.realize import (
    GAUSS_SUITE,
    LambdaMap,
    UnsupportedFamily,
    bracket_closure_check,
    build_realization,
    central_element,
    check_realization,
    common_csa_check,
    decompose,
    extract_lambda,
    gauss_equation_check,
    homomorphism_check,
    omega,
    omega_matrix,
    p_basis,
    parity_check,
    symplectic_form_check,
)
from extrinsic_lie.reports import FAIL, FINDING, PASS


@pytest.fixture(scope="module")
def sym2_1():
    return build_realization("sym2", (1,))


@pytest.fixture(scope="module")
def sym2_2():
    return build_realization("sym2", (2,))


@pytest.mark.parametrize("family,params,blocks", [
    ("sym2", (1,), (1, 1, 1)),
    ("sym2", (3,), (1, 3, 6)),
    ("wedge2", (4,), (1, 6, 3)),
    ("standard-so", (4,), (1, 3, 1)),
    ("standard-so", (5,), (1, 4, 1)),
    ("tensor", (1, 2), (1, 3, 2)),
    ("halfspin-D5", (), (1, 10, 5)),
])
def test_blocks(family, params, blocks):
    q = build_realization(family, params)
    assert q.blocks == blocks
    assert q.grades == tuple(sorted(q.grades))


def test_sym2_basis_names(sym2_2):
    assert sym2_2.names[0] == "e0.e0"
    assert set(sym2_2.names[1:3]) == {"e0.e1", "e0.e2"}
    assert set(sym2_2.names[3:]) == {"e1.e1", "e1.e2", "e2.e2"}


def test_halfspin_blocks_are_exterior_powers():
    q = build_realization("halfspin", ())
    for name, g in zip(q.names, q.grades):
        assert name.count("^") + 1 == 5 - 2 * g


def test_floors_and_unsupported():
    for fam, params in [("wedge2", (3,)), ("standard-so", (3,)), ("tensor", (2, 1)), ("sym2", (0,))]:
        with pytest.raises(ValueError):
            build_realization(fam, params)
    with pytest.raises(UnsupportedFamily):
        build_realization("e6-27", ())
    with pytest.raises(ValueError):
        build_realization("sym2", (1, 2))


def test_bracket_closure_and_negative_control(sym2_2):
    assert bracket_closure_check(sym2_2).status == PASS
    e0 = sym2_2.e[0]
    key = next(iter(e0.entries))
    bumped = SparseMatrix(e0.n, {**e0.entries, key: e0.entries[key] + 1})
    broken = replace(sym2_2, e=(bumped,) + sym2_2.e[1:])
    assert bracket_closure_check(broken).status == FAIL
    assert bracket_closure_check(build_realization("tensor", (1, 1))).status == PASS


def test_homomorphism(sym2_2):
    assert homomorphism_check(sym2_2, samples=200).status == PASS


def test_homomorphism_detects_wrong_model(sym2_2):
    # swapping two Cartan generators breaks the relations seen in the reference
    broken = replace(sym2_2, h=(sym2_2.h[1], sym2_2.h[0]))
    assert homomorphism_check(broken, samples=200).status == FAIL


def test_lambda_sym2_1(sym2_1):
    lam = extract_lambda(sym2_1)
    assert len(lam.domain) == 2
    assert lam.rank() == 2
    assert not lam.is_zero()


@pytest.mark.parametrize("family,params", GAUSS_SUITE[:4] + (("tensor", (1, 1)),))
def test_lambda_domain_and_nonzero(family, params):
    q = build_realization(family, params)
    lam = extract_lambda(q)
    assert len(lam.domain) == 2 * q.blocks[1]
    assert not lam.is_zero()
    # lambda takes values in the V1<->V2 blocks
    for img in lam.images:
        assert all({q.grades[i], q.grades[j]} == {1, 2} for i, j in img.entries)


def test_gauss_equations(sym2_1, sym2_2):
    for q in (sym2_1, sym2_2):
        recs = gauss_equation_check(q, extract_lambda(q))
        assert [r.status for r in recs] == [PASS, PASS]


def test_gauss_negative_control(sym2_2):
    lam = extract_lambda(sym2_2)
    doubled = LambdaMap(lam.dim, lam.domain, [img.scale(2) for img in lam.images])
    recs = gauss_equation_check(sym2_2, doubled)
    assert FAIL in [r.status for r in recs]


def test_parity(sym2_2):
    assert parity_check(sym2_2, decompose(sym2_2)).status == PASS
    # a generator with an entry of the wrong parity is caught
    n = sym2_2.dim
    bad = replace(sym2_2, h=(sym2_2.h[0] + SparseMatrix.unit(n, 0, 1),) + sym2_2.h[1:])
    assert parity_check(bad).status == FAIL


def test_parity_diagonal_csa(sym2_2):
    assert all(h.is_diagonal() for h in sym2_2.h)
    assert common_csa_check(sym2_2).status == PASS


def test_central_element():
    z = central_element(4, 3)
    d = [z.entries.get((i, i), 0) for i in range(4)]
    assert d[0] - d[1] == 3 and d[1] == d[2] == d[3] and sum(d) == 0


def test_symplectic_form(sym2_1):
    recs = symplectic_form_check(sym2_1, extract_lambda(sym2_1), decompose(sym2_1))
    assert all(r.status == PASS for r in recs), recs


def test_omega_pairs_blocks(sym2_1):
    # Hom(V0, V1) pairs with Hom(V1, V0)
    n = sym2_1.dim
    x, y = SparseMatrix.unit(n, 1, 0), SparseMatrix.unit(n, 0, 1)
    assert omega(sym2_1, x, y) != 0
    assert omega(sym2_1, x, x) == 0


def test_omega_scales_with_r(sym2_2):
    pb = p_basis(sym2_2)
    m1 = omega_matrix(sym2_2, pb, r=1)
    m2 = omega_matrix(sym2_2, pb, r=2)
    assert all(b == 2 * a for ra, rb in zip(m1, m2) for a, b in zip(ra, rb))
    q2 = build_realization("sym2", (2,), r=2)
    assert all(r.status == PASS for r in symplectic_form_check(q2))


def test_omega_vanishes_on_h(sym2_2):
    n = sym2_2.dim
    h = SparseMatrix.unit(n, 1, 2)  # inside gl(V1 + V2)
    for x in p_basis(sym2_2):
        assert omega(sym2_2, h, x) == 0


def test_full_check_statuses():
    recs = check_realization(build_realization("tensor", (1, 1)))
    statuses = {r.id.split(":", 1)[1]: r.status for r in recs}
    assert statuses["theta-literal"] == FINDING
    assert statuses["sigma-stable"] == FINDING
    assert all(s == PASS for k, s in statuses.items() if k not in ("theta-literal", "sigma-stable"))


def test_literal_theta_is_unstable(sym2_1):
    dec = decompose(sym2_1)
    lit = sym2_1.literal_theta_signs
    assert any(not dec.algebra.contains(x.conjugate_by_signs(lit)) for x in dec.algebra.basis)
