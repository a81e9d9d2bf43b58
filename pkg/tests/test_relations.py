from itertools import product

import pytest

from gwblowup.models.curve import CurveClass, Key
from gwblowup.services.engine import EngineConfig, InvariantEngine
from gwblowup.services.lattice import canonical_keys, expected_dim
from gwblowup.services.relations import Basis, Monomial, RelationVerifier
from gwblowup.store import MemoStore


@pytest.fixture
def verifier(engine: InvariantEngine) -> RelationVerifier:
    return RelationVerifier(engine)


def test_basis_pairing_and_signs():
    """Test the intersection pairing and signs."""
    basis = Basis(2)
    assert basis.m == 4
    assert basis.pairing(1, 1) == 1
    assert basis.pairing(2, 2) == -1
    assert basis.pairing(3, 3) == -1
    assert basis.pairing(2, 3) == 0
    assert basis.pairing(0, 4) == basis.pairing(4, 0) == 1
    assert basis.pairing(4, 4) == 0
    assert [basis.eps(s) for s in (1, 2, 3)] == [1, -1, -1]
    with pytest.raises(ValueError):
        basis.eps(4)


def test_gamma_coefficients(verifier: RelationVerifier):
    """Test coefficients of the potential's third derivatives."""
    assert verifier.gamma_coeff(1, 1, 2, Monomial(CurveClass(1, ()), 1)) == 1
    assert verifier.gamma_coeff(2, 2, 2, Monomial(CurveClass(3, ()), 5)) == 12
    assert verifier.gamma_coeff(2, 2, 2, Monomial(CurveClass(0, (-1,)), 0)) == -1
    # wrong power of the point variable
    assert verifier.gamma_coeff(2, 2, 2, Monomial(CurveClass(3, ()), 4)) == 0


def test_gamma_rejects_out_of_range_indices(verifier: RelationVerifier):
    """Test basis indices outside [1, m] are rejected."""
    with pytest.raises(ValueError):
        verifier.gamma_coeff(0, 1, 1, Monomial(CurveClass(1, ()), 1))
    with pytest.raises(ValueError):
        verifier.gamma_coeff(1, 1, 3, Monomial(CurveClass(1, ()), 1))


@pytest.mark.parametrize(
    "quad, mono",
    [
        ((1, 1, 2, 2), Monomial(CurveClass(2, ()), 2)),
        ((1, 1, 2, 2), Monomial(CurveClass(3, (2,)), 4)),
        ((1, 1, 3, 3), Monomial(CurveClass(3, (2,)), 3)),
        ((2, 3, 2, 3), Monomial(CurveClass(2, (1, 1)), 1)),
        ((1, 2, 3, 4), Monomial(CurveClass(3, (1, 1)), 4)),
    ],
)
def test_residual_examples(verifier: RelationVerifier, quad, mono):
    """Test residuals vanish on sample monomials."""
    assert verifier.relation_residual(*quad, mono) == 0


def test_residual_is_antisymmetric_in_the_first_and_third_index():
    """Test swapping i and k negates the residual."""
    store = MemoStore({Key(3, ()): 13})
    verifier = RelationVerifier(InvariantEngine(store, EngineConfig()))
    cls = CurveClass(3, (1,))
    for i, j, k, l in product(range(1, 4), repeat=4):
        n = expected_dim(cls) - 1 - (i, j, k, l).count(3)
        if n < 0:
            continue
        mono = Monomial(cls, n)
        assert verifier.relation_residual(i, j, k, l, mono) == -verifier.relation_residual(
            k, j, i, l, mono
        )
        assert verifier.relation_residual(i, j, i, l, mono) == 0


def test_point_relation_reproduces_the_recursion(verifier: RelationVerifier):
    """Test the (1, 1, m, m) relation holds."""
    for d in range(1, 5):
        for key in canonical_keys(d, max_length=3):
            cls = key.as_class()
            n = expected_dim(cls) - 3
            if n < 0:
                continue
            m = cls.r + 2
            assert verifier.relation_residual(1, 1, m, m, Monomial(cls, n)) == 0


def test_intermediate_relation_holds(verifier: RelationVerifier):
    """Test R(i)* on small classes."""
    for d in range(1, 5):
        for key in canonical_keys(d, max_length=3):
            cls = key.as_class()
            if expected_dim(cls) < 1 or any(a > d for a in cls.alpha):
                continue
            for i in range(cls.r):
                assert verifier.relation_i_star_residual(cls, i) == 0, (cls, i)


def test_intermediate_relation_with_a_zero_entry(verifier: RelationVerifier):
    """Test R(i)* at a zero entry."""
    assert verifier.relation_i_star_residual(CurveClass(3, (2, 0)), 1) == 0
    assert verifier.relation_i_star_residual(CurveClass(2, (0,)), 0) == 0


@pytest.mark.parametrize(
    "r, d_max, n_max",
    [(0, 3, 8), (1, 3, 8), (2, 3, 6), (1, 1, 0)],
)
def test_verify_relations(verifier: RelationVerifier, r, d_max, n_max):
    """Test all relations hold in small ranges."""
    report = verifier.verify_relations(r, d_max, n_max)
    assert report.ok
    assert report.failures == []
    assert report.instances > 0
    assert report.nontrivial >= 1


def test_instance_count():
    """Only quadruples whose homogeneous y-degree is in range are counted."""
    verifier = RelationVerifier(InvariantEngine())
    report = verifier.verify_relations(1, 1, 0)
    # (1, (0,)) needs exactly one point index, (1, (1,)) none; m = 3
    assert report.instances == 4 * 2**3 + 2**4


def test_instance_count_ignores_a_large_nmax():
    """Raising n_max past the top degree adds no instances."""
    verifier = RelationVerifier(InvariantEngine())
    # (1, ()) on the plane: n = 1 - t, so t is 0 or 1
    assert verifier.verify_relations(0, 1, 8).instances == 1 + 4
    assert verifier.verify_relations(0, 1, 1).instances == 1 + 4


@pytest.mark.slow
@pytest.mark.parametrize("r, n_max", [(2, 8), (3, 8)])
def test_verify_relations_with_more_points(verifier: RelationVerifier, r, n_max):
    """Test relations with two and three points."""
    assert verifier.verify_relations(r, 3, n_max, workers=4).ok


def test_perturbed_invariant_is_detected():
    """Test a wrong cubic count is caught at degree 3."""
    store = MemoStore({Key(3, ()): 13})
    verifier = RelationVerifier(InvariantEngine(store, EngineConfig()))
    report = verifier.verify_relations(0, 3, 8)
    assert not report.ok
    assert all(failure.d == 3 for failure in report.failures)
