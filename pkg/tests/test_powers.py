import pytest
from hypothesis import given, settings, strategies as st

from idealkit.core import (
    IdealArgumentError,
    MonomialIdeal,
    Ring,
    colon,
    ideal_power,
    monomials_of_degree_at_most,
    principal,
)
from idealkit.decomposition import associated_primes, minimal_primes
from idealkit.powers import (
    regular_witness,
    regular_witness_candidates,
    saturated_power,
    saturator_ass,
    saturator_min,
    saturator_min_global,
    symbolic_ass,
    symbolic_min,
    symbolic_power,
)

A = Ring.of("a", "b")
XY = Ring.of("x", "y")
R3 = Ring.of("x", "y", "z")
R4 = Ring.of("x", "y", "z", "t")


def ideal(ring, text):
    return MonomialIdeal.parse(ring, text)


exponent_vectors = st.tuples(
    st.integers(0, 3), st.integers(0, 3), st.integers(0, 3)
)
monomials3 = exponent_vectors.map(lambda e: R3.monomial(e))
proper3 = (
    st.lists(monomials3, min_size=1, max_size=4)
    .map(lambda gens: MonomialIdeal(R3, tuple(gens)))
    .filter(lambda i: not i.is_zero and not i.is_unit)
)


class TestSaturatedPower:
    def test_example_with_maximal_saturator(self):
        assert saturated_power(ideal(A, "a^2, a*b"), ideal(A, "a, b"), 2) == ideal(
            A, "a^2"
        )

    def test_example_with_witness_saturator(self):
        assert saturated_power(ideal(A, "a^2, a*b"), ideal(A, "b"), 3) == ideal(
            A, "a^3"
        )

    def test_unit_saturator_gives_ordinary_power(self):
        i = ideal(A, "a^2, a*b")
        assert saturated_power(i, MonomialIdeal.unit(A), 2) == ideal_power(i, 2)

    def test_zeroth_power_is_unit(self):
        assert saturated_power(ideal(A, "a^2, a*b"), ideal(A, "a, b"), 0).is_unit

    def test_zero_arguments_rejected(self):
        with pytest.raises(IdealArgumentError):
            saturated_power(MonomialIdeal.zero(A), ideal(A, "a"), 1)
        with pytest.raises(IdealArgumentError):
            saturated_power(ideal(A, "a"), MonomialIdeal.zero(A), 1)


class TestSaturators:
    def test_example_ideal_min_saturator(self):
        i = ideal(A, "a^2, a*b")
        for s in (1, 2, 3):
            assert saturator_min(i, s) == ideal(A, "a, b")

    def test_prime_has_unit_saturators(self):
        p = ideal(XY, "x, y")
        assert saturator_min(p, 2).is_unit
        assert saturator_ass(p, 2).is_unit

    def test_example_ideal_ass_saturator_is_unit(self):
        i = ideal(A, "a^2, a*b")
        for s in (1, 2, 3):
            assert saturator_ass(i, s).is_unit

    def test_sum_example_min_saturator_is_embedded_intersection(self):
        i = ideal(R4, "x^2, x*y, z^2, z*t")
        mins = minimal_primes(i)
        expected = MonomialIdeal.unit(R4)
        from idealkit.core import intersect

        for p in associated_primes(i):
            if p not in mins:
                expected = intersect(expected, p.as_ideal())
        assert saturator_min(i, 1) == expected

    def test_global_form_matches_per_power_for_stable_example(self):
        i = ideal(A, "a^2, a*b")
        assert saturator_min_global(i, 4) == saturator_min(i, 2)

    def test_sum_example_ass_saturator_is_unit(self):
        # every associated prime sits inside the maximal associated prime,
        # so nothing has positive grade and the a-symbolic power is ordinary
        i = ideal(R4, "x^2, x*y, z^2, z*t")
        assert saturator_ass(i, 1).is_unit
        assert symbolic_ass(i, 1) == i


class TestSymbolicPowers:
    def test_example_ideal_min(self):
        i = ideal(A, "a^2, a*b")
        for s in (1, 2, 3):
            assert symbolic_min(i, s) == MonomialIdeal(A, (A.monomial((s, 0)),))

    def test_example_ideal_ass_equals_ordinary(self):
        i = ideal(A, "a^2, a*b")
        for s in (1, 2, 3):
            assert symbolic_ass(i, s) == ideal_power(i, s)

    def test_prime_power_case(self):
        p = ideal(XY, "x, y")
        assert symbolic_min(p, 2) == ideal_power(p, 2)
        assert symbolic_ass(ideal(XY, "x"), 3) == ideal(XY, "x^3")

    def test_squarefree_two_routes_agree(self):
        i = ideal(R3, "x*y, x*z, y*z")
        via_decomposition = symbolic_min(i, 2)
        via_saturation = saturated_power(i, saturator_min(i, 2), 2)
        assert via_decomposition == via_saturation

    def test_sum_example_rename(self):
        i = ideal(XY, "x^2, x*y")
        assert symbolic_ass(i, 1) == i

    def test_notion_dispatch(self):
        i = ideal(A, "a^2, a*b")
        assert symbolic_power(i, 2, "min") == symbolic_min(i, 2)
        assert symbolic_power(i, 2, "ass") == symbolic_ass(i, 2)
        with pytest.raises(ValueError):
            symbolic_power(i, 2, "maximal")

    @given(proper3, st.integers(1, 3))
    @settings(max_examples=40, deadline=None)
    def test_sandwich(self, i, s):
        ordinary = ideal_power(i, s)
        via_ass = symbolic_ass(i, s)
        via_min = symbolic_min(i, s)
        assert via_ass.contains_ideal(ordinary)
        assert via_min.contains_ideal(via_ass)

    @given(proper3, st.integers(1, 3))
    @settings(max_examples=40, deadline=None)
    def test_saturation_route_agrees(self, i, s):
        assert symbolic_min(i, s) == saturated_power(i, saturator_min(i, s), s)
        assert symbolic_ass(i, s) == saturated_power(i, saturator_ass(i, s), s)

    @given(proper3, st.integers(1, 3))
    @settings(max_examples=30, deadline=None)
    def test_colon_bounds(self, i, s):
        # any monomial avoiding the minimal primes bounds the min notion,
        # and one avoiding all associated primes bounds the ass notion
        minimal_support = {v for p in minimal_primes(i) for v in p.support}
        ass_support = {v for p in associated_primes(i) for v in p.support}
        power = ideal_power(i, s)
        for m in monomials_of_degree_at_most(R3, 2):
            if m.is_one():
                continue
            if not any(m.exponents[v] > 0 for v in minimal_support):
                assert symbolic_min(i, s).contains_ideal(colon(power, principal(m)))
            if not any(m.exponents[v] > 0 for v in ass_support):
                assert symbolic_ass(i, s).contains_ideal(colon(power, principal(m)))


class TestSaturationViaDecomposition:
    @staticmethod
    def _contains_prime(k, p):
        # k sits inside the monomial prime p iff every generator meets p
        return all(
            any(g.exponents[v] > 0 for v in p.support) for g in k.generators
        )

    @given(proper3, proper3.filter(lambda k: not k.is_unit), st.integers(1, 2))
    @settings(max_examples=40, deadline=None)
    def test_saturation_keeps_components_missing_the_saturator(self, i, k, s):
        from idealkit.core import intersect_all
        from idealkit.decomposition import primary_decomposition

        power = ideal_power(i, s)
        expected = intersect_all(
            R3,
            (
                q
                for p, q in primary_decomposition(power)
                if not self._contains_prime(k, p)
            ),
        )
        assert saturated_power(i, k, s) == expected

    @given(proper3, proper3)
    @settings(max_examples=40, deadline=None)
    def test_saturation_sees_only_the_radical_of_the_saturator(self, i, k):
        from idealkit.core import radical, saturate

        assert saturate(i, k) == saturate(i, radical(k))


class TestRegularWitness:
    def test_example_ideal_witness_is_b(self):
        i = ideal(A, "a^2, a*b")
        witness = regular_witness(i, "min")
        assert witness == A.monomial((0, 1))
        assert A.monomial((0, 1)) in regular_witness_candidates(i, "min", max_degree=1)

    def test_prime_with_no_embedded_part_gives_unit(self):
        witness = regular_witness(ideal(XY, "x, y"), "min")
        assert witness is not None and witness.is_one()

    def test_squarefree_witness_avoids_all_primes_or_is_missing(self):
        i = ideal(R3, "x*y, x*z, y*z")
        witness = regular_witness(i, "ass")
        if witness is not None and not witness.is_one():
            for p in associated_primes(i):
                assert not p.contains_monomial(witness)

    @given(proper3, st.sampled_from(["min", "ass"]))
    @settings(max_examples=40, deadline=None)
    def test_witness_validity(self, i, notion):
        witness = regular_witness(i, notion, n_max=4)
        if witness is None or witness.is_one():
            return
        primes = minimal_primes(i) if notion == "min" else associated_primes(i)
        for p in primes:
            assert not p.contains_monomial(witness)
        via_witness = saturated_power(i, principal(witness), 2)
        assert via_witness == symbolic_power(i, 2, notion)
