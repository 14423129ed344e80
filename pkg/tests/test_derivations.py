from fractions import Fraction

import pytest

from qlca import (DerivationAnsatz, HypothesisNotDetected, QuadraticLCA,
                  catalog_build, detect_unit_like, inner_derivation,
                  outer_dimension, solve_derivations_direct,
                  solve_derivations_theorem, spaces_agree, span_coordinates,
                  verify_derivation)


def lca(name, **params):
    return QuadraticLCA(catalog_build(name, **params))


class TestUnitDetection:
    def test_vir_left_unit(self):
        side, vec, k = detect_unit_like(catalog_build("vir"))
        assert side == "left" and vec == (Fraction(1),) and k == 1

    def test_r_alpha_beta_right_unit(self):
        side, vec, _ = detect_unit_like(catalog_build("r_alpha_beta", alpha=3, beta=1))
        assert side == "right" and vec == (Fraction(1), Fraction(0))

    def test_alpha2_is_also_left_unit_like(self):
        side, vec, _ = detect_unit_like(catalog_build("r_alpha_beta", alpha=2, beta=0))
        assert side == "left" and vec == (Fraction(1), Fraction(0))

    def test_loop_vir_scaled_left_unit(self):
        side, vec, k = detect_unit_like(catalog_build("loop_vir_cyclic", m=3))
        assert side == "left" and k == 1
        assert vec[0] == Fraction(-1)  # -L0 acts as the identity

    def test_trivial_novikov_has_none(self):
        assert detect_unit_like(catalog_build("current", g="sl2")) is None


class TestInnerDerivations:
    def test_inner_passes_verifier(self, catalog_algebra):
        R = QuadraticLCA(catalog_algebra)
        for v in range(R.dim):
            for k in (0, 1, 2):
                assert verify_derivation(R, inner_derivation(R, v, k)) == []

    def test_inner_image_matches_bracket(self):
        R = lca("vir")
        d = inner_derivation(R, 0, 0)
        (img,) = d.image(R, 0)
        from qlca import DEL, LAM, FormalPoly

        assert img == FormalPoly.sym(DEL) + 2 * FormalPoly.sym(LAM)

    def test_negative_partial_power_rejected(self):
        with pytest.raises(ValueError):
            inner_derivation(lca("vir"), 0, -1)


EXPECTED_OUTER = {
    ("vir", ()): 0,
    ("r_alpha_beta", (3, 1)): 0,
    ("r_alpha_beta", (1, 0)): 1,
    ("r_alpha_beta", (1, 1)): 1,
    ("r_alpha_beta", (2, 0)): 0,
    ("loop_vir_cyclic", (3,)): 0,
}


class TestOuterDimensions:
    @pytest.mark.parametrize("key", sorted(EXPECTED_OUTER), ids=str)
    def test_matches_classification(self, key):
        name, params = key
        if name == "r_alpha_beta":
            R = lca(name, alpha=params[0], beta=params[1])
        elif params:
            R = lca(name, m=params[0])
        else:
            R = lca(name)
        assert outer_dimension(R, 3, 3) == EXPECTED_OUTER[key]

    def test_alpha1_outer_generator_form(self):
        """The one outer direction at α=1 is spanned by Q with
        Q(L) ∝ W, Q(W) = 0 (no ∂, no λ)."""
        R = lca("r_alpha_beta", alpha=1, beta=0)
        Q = DerivationAnsatz.from_dict(
            1, 3, {(0, 0, 0): (Fraction(0), Fraction(1))}
        )
        assert verify_derivation(R, Q) == []
        space = solve_derivations_direct(R, 3, 3)
        from qlca.derivations import _inner_vectors

        inner = _inner_vectors(R, 3, 3)
        basis = [d.as_vector(2, 3, 3) for d in space.basis]
        assert span_coordinates(basis, Q.as_vector(2, 3, 3)) is not None
        assert span_coordinates(inner, Q.as_vector(2, 3, 3)) is None
        # the whole solution space is inner ⊕ <Q>
        pool = inner + [Q.as_vector(2, 3, 3)]
        for v in basis:
            assert span_coordinates(pool, v) is not None

    def test_current_family_does_not_stabilize(self):
        out = outer_dimension(lca("current", g="sl2"), 3, 3)
        assert isinstance(out, tuple) and out[0] == "not stabilized"
        assert out[1:] == (3, 5)


class TestSolverAgreement:
    def test_direct_and_theorem_agree(self, catalog_entry):
        A = catalog_entry.build()
        if detect_unit_like(A) is None:
            return
        R = QuadraticLCA(A)
        direct = solve_derivations_direct(R, 3, 3)
        theorem = solve_derivations_theorem(R, 3)
        assert spaces_agree(R, direct, theorem)

    def test_hypothesis_not_detected_raises(self):
        with pytest.raises(HypothesisNotDetected):
            solve_derivations_theorem(lca("current", g="sl2"), 3)

    def test_every_direct_solution_verifies(self, catalog_entry):
        R = QuadraticLCA(catalog_entry.build())
        for d in solve_derivations_direct(R, 2, 2).basis:
            assert verify_derivation(R, d) == []

    def test_verifier_rejects_non_derivation(self):
        R = lca("vir")
        bogus = DerivationAnsatz.from_dict(1, 2, {(0, 0, 2): (Fraction(1),)})
        assert verify_derivation(R, bogus)


class TestCurrentShape:
    def test_scaling_family_spans_outer_part(self):
        """d(a) = λ^k (∂ + λ) a solves the Leibniz identity for the
        current algebra and, with the inner span, exhausts all solutions."""
        R = lca("current", g="sl2")
        P, D = 1, 3
        n = R.dim
        from qlca.derivations import _inner_vectors

        scalers = []
        for k in range(D):
            coeffs = {}
            for j in range(n):
                vec = tuple(Fraction(1 if r == j else 0) for r in range(n))
                coeffs[(j, 1, k)] = vec      # ∂ λ^k a_j
                coeffs[(j, 0, k + 1)] = vec  # λ^{k+1} a_j
            d = DerivationAnsatz.from_dict(P, D, coeffs)
            assert verify_derivation(R, d) == []
            scalers.append(d.as_vector(n, P, D))
        space = solve_derivations_direct(R, P, D)
        pool = _inner_vectors(R, P, D) + scalers
        for d in space.basis:
            assert span_coordinates(pool, d.as_vector(n, P, D)) is not None
