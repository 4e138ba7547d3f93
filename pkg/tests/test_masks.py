"""Mask construction: seed rules, displacement recurrence, family builders.

Expected values are the published closed forms, transcribed once here and
compared as exact rational polynomials.
"""

from fractions import Fraction as F

import pytest

from subdivkit import (
    ALPHA,
    BETA,
    BivarPoly,
    DomainError,
    Family,
    ParameterError,
    build_extended_mask,
    build_interpolatory_mask,
    build_relaxed_mask,
    displacement_vectors,
    extension_weights,
    initial_displacement_vectors,
    initial_rules,
    specialize,
)
from subdivkit.symbol import LaurentSymbol

from closed_forms import (
    EXTENDED_TABLE,
    RELAXED_TABLE,
    extended_row_polys,
    poly,
    relaxed_row_polys,
)

ONE = BivarPoly.constant(1)


class TestSeeds:
    def test_initial_rules(self):
        even, odd = initial_rules()
        assert even == {-1: ALPHA, 0: ONE - 2 * ALPHA, 1: ALPHA}
        assert odd == {0: poly(F(1, 2)), 1: poly(F(1, 2))}

    def test_initial_rules_alpha_zero_is_identity(self):
        even, _ = initial_rules()
        values = {j: p.evaluate(0, 0) for j, p in even.items()}
        assert {j: v for j, v in values.items() if v != 0} == {0: 1}

    def test_initial_odd_rule_sums_to_one(self):
        _, odd = initial_rules()
        assert sum(p.constant_value() for p in odd.values()) == 1

    def test_initial_displacements(self):
        even, odd = initial_displacement_vectors()
        assert even.rational_entries() == {-1: 1, 0: -1, 1: 1}
        assert odd.rational_entries() == {0: F(1, 2), 1: F(1, 2)}
        assert sum(even.rational_entries().values()) == 1


class TestDisplacementRecurrence:
    def test_level_two_matches_worked_example(self):
        even, odd = displacement_vectors(1)
        assert even.rational_entries() == {-2: -1, -1: 3, 0: -4, 1: 3, 2: -1}
        assert odd.rational_entries() == {
            -1: F(-1, 16),
            0: F(1, 16),
            1: F(1, 16),
            2: F(-1, 16),
        }
        assert even.level == 2 and odd.level == 2

    def test_rejects_level_zero(self):
        with pytest.raises(DomainError):
            displacement_vectors(0)

    @pytest.mark.parametrize("N", [1, 2, 3, 4, 5])
    def test_even_entries_sum_to_zero(self, N):
        even, _ = displacement_vectors(N)
        assert sum(even.rational_entries().values()) == 0

    @pytest.mark.parametrize("N", [1, 2, 3, 4, 5])
    def test_supports(self, N):
        even, odd = displacement_vectors(N)
        assert even.support() == (-(N + 1), N + 1)
        assert odd.support() == (-N, N + 1)


class TestRelaxedFamily:
    @pytest.mark.parametrize("N", sorted(RELAXED_TABLE))
    def test_matches_closed_form(self, N):
        mask = build_relaxed_mask(N)
        expected = relaxed_row_polys(N)
        got = [mask.entry(p) for p in mask.offsets()]
        assert got == expected

    def test_worked_example_rows(self):
        mask = build_relaxed_mask(1)
        assert mask.even_row() == {
            -2: -ALPHA,
            -1: 4 * ALPHA,
            0: ONE - 6 * ALPHA,
            1: 4 * ALPHA,
            2: -ALPHA,
        }
        assert mask.odd_row() == {
            -1: poly(F(-1, 16)),
            0: poly(F(9, 16)),
            1: poly(F(9, 16)),
            2: poly(F(-1, 16)),
        }

    @pytest.mark.parametrize("N", range(6))
    def test_symmetry_and_partition_of_unity(self, N):
        mask = build_relaxed_mask(N)
        for p in mask.offsets():
            assert mask.entry(p) == mask.entry(-p)
        assert mask.even_sum() == 1
        assert mask.odd_sum() == 1

    def test_alpha_zero_gives_interpolatory_rows(self):
        mask = build_relaxed_mask(1)
        odd = {m: p.evaluate(0, 0) for m, p in mask.odd_row().items()}
        even = {m: p.evaluate(0, 0) for m, p in mask.even_row().items() if p.evaluate(0, 0) != 0}
        assert odd == {-1: F(-1, 16), 0: F(9, 16), 1: F(9, 16), 2: F(-1, 16)}
        assert even == {0: 1}


class TestExtensionWeights:
    def test_level_one_weights(self):
        seq = extension_weights(1)
        factor = BETA * (ONE - ALPHA)
        assert dict(seq.entries) == {
            -2: factor,
            -1: -3 * factor,
            0: 2 * factor,
            1: 2 * factor,
            2: -3 * factor,
            3: factor,
        }

    @pytest.mark.parametrize("N", range(6))
    def test_weights_sum_to_zero(self, N):
        assert extension_weights(N).total() == 0

    @pytest.mark.parametrize("N", range(6))
    def test_weights_support(self, N):
        assert extension_weights(N).support() == (-(N + 1), N + 2)


class TestExtendedFamily:
    @pytest.mark.parametrize("N", sorted(EXTENDED_TABLE))
    def test_matches_closed_form(self, N):
        mask = build_extended_mask(N)
        assert [mask.entry(p) for p in mask.offsets()] == extended_row_polys(N)

    @pytest.mark.parametrize("N", range(5))
    def test_beta_zero_collapses_to_relaxed(self, N):
        import random

        rng = random.Random(2024 + N)
        extended = build_extended_mask(N)
        relaxed = build_relaxed_mask(N)
        for _ in range(20):
            alpha = F(rng.randint(-50, 50), rng.randint(1, 64))
            assert specialize(extended, alpha, 0) == specialize(relaxed, alpha)

    @pytest.mark.parametrize("N", range(4))
    def test_symmetry_and_partition_of_unity(self, N):
        mask = build_extended_mask(N)
        for p in mask.offsets():
            assert mask.entry(p) == mask.entry(-p)
        assert mask.even_sum() == 1
        assert mask.odd_sum() == 1

    @pytest.mark.parametrize("N", range(4))
    def test_entries_affine_in_each_parameter(self, N):
        # every entry is c0 + c1*alpha + c2*beta(1-alpha): beta only enters
        # through that factor, so the alpha-beta coefficient negates the
        # beta coefficient and the total degree stays at most 2
        for entry in build_extended_mask(N).entries.values():
            assert entry.total_degree() <= 2
            assert set(entry.terms) <= {(0, 0), (1, 0), (0, 1), (1, 1)}
            assert entry.coefficient(1, 1) == -entry.coefficient(0, 1)


class TestInterpolatoryFamily:
    def test_smallest_member(self):
        mask = build_interpolatory_mask(0)
        expected = [
            BETA,
            BivarPoly(),
            poly(F(1, 2)) - BETA,
            poly(1),
            poly(F(1, 2)) - BETA,
            BivarPoly(),
            BETA,
        ]
        assert [mask.entry(p) for p in mask.offsets()] == expected

    def test_even_rule_is_identity(self):
        for N in range(4):
            mask = build_interpolatory_mask(N)
            row = mask.even_row()
            assert row == {0: poly(1)}

    def test_beta_zero_gives_four_point_mask(self):
        symbol = specialize(build_interpolatory_mask(1), 0, 0)
        assert symbol == LaurentSymbol.from_list(
            -3, [F(-1, 16), 0, F(9, 16), 1, F(9, 16), 0, F(-1, 16)]
        )


class TestSpecialize:
    def test_relaxed_at_one_eighth(self):
        symbol = specialize(build_relaxed_mask(0), F(1, 8))
        assert symbol.coefficient_list() == [F(1, 8), F(1, 2), F(3, 4), F(1, 2), F(1, 8)]

    def test_relaxed_at_zero_keeps_interior_zeros(self):
        symbol = specialize(build_relaxed_mask(1), 0)
        assert symbol.coefficient_list(-4, 4) == [
            0,
            F(-1, 16),
            0,
            F(9, 16),
            1,
            F(9, 16),
            0,
            F(-1, 16),
            0,
        ]
        # trimmed support drops the vanished outermost alpha entries
        assert (symbol.lowest, symbol.highest) == (-3, 3)

    def test_constant_terms_at_origin(self):
        mask = build_extended_mask(1)
        symbol = specialize(mask, 0, 0)
        for p in mask.offsets():
            assert symbol.coeff(p) == mask.entry(p).coefficient(0, 0)

    def test_beta_rejected_for_relaxed_family(self):
        with pytest.raises(ParameterError):
            specialize(build_relaxed_mask(1), F(1, 8), F(1, 16))

    def test_width_tags(self):
        assert build_relaxed_mask(2).half_width == 6
        assert build_extended_mask(2).half_width == 7
        assert build_interpolatory_mask(2).half_width == 7
        assert build_relaxed_mask(3).family is Family.RELAXED_2N2
