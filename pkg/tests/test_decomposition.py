import pytest
from hypothesis import given, settings, strategies as st

from idealkit.core import (
    IdealArgumentError,
    MonomialIdeal,
    MonomialPrime,
    Ring,
    colon_monomial,
    ideal_power,
    intersect_all,
    monomials_below,
    radical,
)
from idealkit.decomposition import (
    ass_module_quotient,
    ass_module_quotient_exhaustive,
    ass_star_bounded,
    associated_primes,
    default_power_bound,
    grade_zero,
    irreducible_decomposition,
    minimal_primes,
    primary_decomposition,
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


def ass_by_colon_oracle(i):
    """Associated primes are exactly the prime colons I : m with m | lcm(G(I))."""
    primes = set()
    for m in monomials_below(i.lcm_of_generators()):
        if i.contains(m):
            continue
        quotient = colon_monomial(i, m)
        if quotient.is_zero or quotient.is_unit:
            continue
        if all(g.degree() == 1 for g in quotient.generators):
            primes.add(
                MonomialPrime(i.ring, tuple(g.support()[0] for g in quotient.generators))
            )
    return frozenset(primes)


class TestIrreducibleDecomposition:
    def test_example_ideal(self):
        comps = {c.as_ideal() for c in irreducible_decomposition(ideal(A, "a^2, a*b"))}
        assert comps == {ideal(A, "a"), ideal(A, "a^2, b")}
        assert intersect_all(A, comps) == ideal(A, "a^2, a*b")
        for c in comps:
            others = [d for d in comps if d != c]
            assert not c.contains_ideal(intersect_all(A, others)) or not others

    def test_sum_example(self):
        comps = {
            c.as_ideal()
            for c in irreducible_decomposition(ideal(R4, "x^2, x*y, z^2, z*t"))
        }
        assert comps == {
            ideal(R4, "x, z"),
            ideal(R4, "x, z^2, t"),
            ideal(R4, "x^2, y, z"),
            ideal(R4, "x^2, y, z^2, t"),
        }

    def test_pure_power_is_already_irreducible(self):
        comps = irreducible_decomposition(ideal(XY, "x^3"))
        assert [c.as_ideal() for c in comps] == [ideal(XY, "x^3")]

    def test_rejects_zero_and_unit(self):
        with pytest.raises(IdealArgumentError):
            irreducible_decomposition(MonomialIdeal.zero(A))
        with pytest.raises(IdealArgumentError):
            irreducible_decomposition(MonomialIdeal.unit(A))

    @given(proper3)
    @settings(max_examples=60, deadline=None)
    def test_reconstruction_and_irredundancy(self, i):
        comps = [c.as_ideal() for c in irreducible_decomposition(i)]
        assert intersect_all(R3, comps) == i
        for dropped in range(len(comps)):
            rest = [c for k, c in enumerate(comps) if k != dropped]
            if rest:
                assert intersect_all(R3, rest) != i

    @given(proper3, st.randoms())
    @settings(max_examples=40, deadline=None)
    def test_independent_of_generator_order(self, i, rnd):
        gens = list(i.generators)
        rnd.shuffle(gens)
        again = MonomialIdeal(R3, tuple(gens))
        assert irreducible_decomposition(i) == irreducible_decomposition(again)


class TestPrimaryDecomposition:
    def test_example_ideal_grouping(self):
        decomposition = primary_decomposition(ideal(A, "a^2, a*b"))
        as_dict = {p: q for p, q in decomposition}
        assert as_dict == {
            MonomialPrime.of_names(A, "a"): ideal(A, "a"),
            MonomialPrime.of_names(A, "a", "b"): ideal(A, "a^2, b"),
        }

    def test_sum_example_keys(self):
        decomposition = primary_decomposition(ideal(R4, "x^2, x*y, z^2, z*t"))
        assert decomposition.primes() == {
            MonomialPrime.of_names(R4, "x", "z"),
            MonomialPrime.of_names(R4, "x", "z", "t"),
            MonomialPrime.of_names(R4, "x", "y", "z"),
            MonomialPrime.of_names(R4, "x", "y", "z", "t"),
        }

    def test_primary_ideal_is_its_own_decomposition(self):
        square = ideal_power(ideal(A, "a, b"), 2)
        decomposition = primary_decomposition(square)
        assert len(decomposition) == 1
        assert decomposition.component(MonomialPrime.of_names(A, "a", "b")) == square

    @given(proper3)
    @settings(max_examples=40, deadline=None)
    def test_components_reconstruct_and_radicals_match_keys(self, i):
        decomposition = primary_decomposition(i)
        assert intersect_all(R3, (q for _, q in decomposition)) == i
        for p, q in decomposition:
            assert radical(q) == p.as_ideal()


class TestAssociatedPrimes:
    def test_example_ideal(self):
        i = ideal(A, "a^2, a*b")
        assert associated_primes(i) == {
            MonomialPrime.of_names(A, "a"),
            MonomialPrime.of_names(A, "a", "b"),
        }
        assert minimal_primes(i) == {MonomialPrime.of_names(A, "a")}

    def test_sum_example_minimal(self):
        assert minimal_primes(ideal(R4, "x^2, x*y, z^2, z*t")) == {
            MonomialPrime.of_names(R4, "x", "z")
        }

    def test_prime_is_its_own_ass_and_min(self):
        p = ideal(XY, "x, y")
        assert associated_primes(p) == minimal_primes(p) == {
            MonomialPrime.of_names(XY, "x", "y")
        }

    @given(proper3)
    @settings(max_examples=50, deadline=None)
    def test_colon_oracle_agreement(self, i):
        assert associated_primes(i) == ass_by_colon_oracle(i)

    @given(proper3)
    @settings(max_examples=50, deadline=None)
    def test_min_inside_ass_and_radical_identity(self, i):
        mins = minimal_primes(i)
        assert mins <= associated_primes(i)
        assert intersect_all(R3, (p.as_ideal() for p in mins)) == radical(i)


class TestAssStar:
    def test_example_ideal(self):
        star, stabilized = ass_star_bounded(ideal(A, "a^2, a*b"), 3)
        assert star == {
            MonomialPrime.of_names(A, "a"),
            MonomialPrime.of_names(A, "a", "b"),
        }
        assert stabilized

    def test_prime_powers_are_primary(self):
        star, stabilized = ass_star_bounded(ideal(XY, "x, y"), 2)
        assert star == {MonomialPrime.of_names(XY, "x", "y")}
        assert stabilized

    def test_embedded_prime_appears_in_some_power(self):
        star, _ = ass_star_bounded(ideal(XY, "x^2*y, x*y^2"), 4)
        assert star >= {
            MonomialPrime.of_names(XY, "x"),
            MonomialPrime.of_names(XY, "y"),
            MonomialPrime.of_names(XY, "x", "y"),
        }

    def test_default_bound_and_validation(self):
        i = ideal(A, "a^2, a*b")
        assert default_power_bound(i) == 4
        with pytest.raises(ValueError):
            ass_star_bounded(i, 1)


class TestGradeZero:
    def test_spec_examples(self):
        assert grade_zero(MonomialPrime.of_names(A, "a", "b"), ideal(A, "a^2, a*b"))
        assert not grade_zero(MonomialPrime.of_names(A, "b"), ideal(A, "a"))
        assert grade_zero(MonomialPrime.of_names(XY, "x"), ideal(XY, "x"))

    def test_rejects_empty_prime(self):
        with pytest.raises(IdealArgumentError):
            grade_zero(MonomialPrime(A, ()), ideal(A, "a"))


class TestQuotientAss:
    def test_quotient_by_first_power_is_ass_of_quotient_ring(self):
        assert ass_module_quotient(ideal(A, "a^2, a*b"), 1) == {
            MonomialPrime.of_names(A, "a"),
            MonomialPrime.of_names(A, "a", "b"),
        }

    def test_cyclic_quotient(self):
        assert ass_module_quotient(ideal(XY, "x"), 2) == {
            MonomialPrime.of_names(XY, "x")
        }

    def test_derived_example_against_exhaustive(self):
        i = ideal(XY, "x^2, x*y")
        result = ass_module_quotient(i, 1)
        assert result == ass_module_quotient_exhaustive(i, 1)
        assert result == {
            MonomialPrime.of_names(XY, "x"),
            MonomialPrime.of_names(XY, "x", "y"),
        }

    def test_index_validation(self):
        with pytest.raises(ValueError):
            ass_module_quotient(ideal(A, "a"), 0)

    @given(proper3, st.integers(1, 3))
    @settings(max_examples=30, deadline=None)
    def test_witness_bound_matches_exhaustive_box(self, i, index):
        assert ass_module_quotient(i, index) == ass_module_quotient_exhaustive(
            i, index
        )

    @given(proper3, st.integers(1, 3))
    @settings(max_examples=30, deadline=None)
    def test_contained_in_ass_of_power(self, i, index):
        assert ass_module_quotient(i, index) <= associated_primes(
            ideal_power(i, index)
        )

    @given(proper3, st.integers(1, 3))
    @settings(max_examples=30, deadline=None)
    def test_filtration_covers_ass_of_power_quotient(self, i, index):
        union = set()
        for j in range(1, index + 1):
            union |= ass_module_quotient(i, j)
        assert associated_primes(ideal_power(i, index)) <= union
