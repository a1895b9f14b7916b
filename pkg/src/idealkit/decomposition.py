"""Primary structure of monomial ideals.

Irreducible decomposition by generator splitting, canonical primary
decomposition with distinct radical primes, associated and minimal primes,
a bounded approximation of the union of associated primes over all powers,
the grade-zero test against a monomial prime, and associated primes of the
consecutive power quotients I^(i-1)/I^i.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import (
    IdealArgumentError,
    Monomial,
    MonomialIdeal,
    MonomialPrime,
    Ring,
    colon_monomial,
    ideal_power,
    intersect_all,
    monomials_below,
)


@dataclass(frozen=True)
class IrreducibleComponent:
    """An ideal generated by pure variable powers, as (variable index, exponent) pairs."""

    ring: Ring
    powers: tuple[tuple[int, int], ...]

    def __post_init__(self):
        powers = tuple(sorted((int(i), int(e)) for i, e in self.powers))
        if not powers:
            raise ValueError("irreducible component must be nonempty")
        if any(e < 1 for _, e in powers):
            raise ValueError(f"exponents must be positive: {powers!r}")
        if len({i for i, _ in powers}) != len(powers):
            raise ValueError(f"repeated variable in {powers!r}")
        object.__setattr__(self, "powers", powers)

    def as_ideal(self) -> MonomialIdeal:
        gens = []
        for i, e in self.powers:
            exps = [0] * self.ring.nvars
            exps[i] = e
            gens.append(Monomial(self.ring, tuple(exps)))
        return MonomialIdeal(self.ring, tuple(gens))

    def radical(self) -> MonomialPrime:
        return MonomialPrime(self.ring, tuple(i for i, _ in self.powers))

    def sort_key(self):
        return (len(self.powers), self.powers)

    def __str__(self):
        return str(self.as_ideal())


@dataclass(frozen=True)
class PrimaryDecomposition:
    """Irredundant primary decomposition keyed by distinct radical primes."""

    components: tuple[tuple[MonomialPrime, MonomialIdeal], ...]

    def primes(self) -> frozenset[MonomialPrime]:
        return frozenset(p for p, _ in self.components)

    def component(self, p: MonomialPrime) -> MonomialIdeal:
        for q, ideal in self.components:
            if q == p:
                return ideal
        raise KeyError(str(p))

    def __iter__(self):
        return iter(self.components)

    def __len__(self):
        return len(self.components)

    def __str__(self):
        return (
            "{"
            + ", ".join(f"{p}: {q}" for p, q in self.components)
            + "}"
        )


def _require_nonzero_proper(ideal: MonomialIdeal):
    if ideal.is_zero:
        raise IdealArgumentError("the zero ideal has no primary decomposition here")
    if ideal.is_unit:
        raise IdealArgumentError("the unit ideal has no primary decomposition")


# Memoized across calls; results depend only on the ideal value.
_SPLIT_CACHE: dict[MonomialIdeal, frozenset[IrreducibleComponent]] = {}


def _component_of_pure_powers(ideal: MonomialIdeal) -> IrreducibleComponent:
    powers = []
    for g in ideal.generators:
        (v,) = g.support()
        powers.append((v, g.exponents[v]))
    return IrreducibleComponent(ideal.ring, tuple(powers))


def _split(ideal: MonomialIdeal) -> frozenset[IrreducibleComponent]:
    cached = _SPLIT_CACHE.get(ideal)
    if cached is not None:
        return cached
    pivot = None
    for g in ideal.generators:
        if len(g.support()) >= 2:
            pivot = g
            break
    if pivot is None:
        result = frozenset({_component_of_pure_powers(ideal)})
    else:
        v = pivot.support()[0]
        exps = [0] * ideal.ring.nvars
        exps[v] = pivot.exponents[v]
        head = Monomial(ideal.ring, tuple(exps))
        tail = pivot.divide_exact(head)
        left = MonomialIdeal(ideal.ring, ideal.generators + (head,))
        right = MonomialIdeal(ideal.ring, ideal.generators + (tail,))
        result = _split(left) | _split(right)
    _SPLIT_CACHE[ideal] = result
    return result


def irreducible_decomposition(ideal: MonomialIdeal) -> tuple[IrreducibleComponent, ...]:
    """The unique irredundant set of irreducible components, canonically sorted.

    Splits a generator m = x^e * rest into (I + (x^e)) cap (I + (rest))
    until all generators are pure powers.  An irreducible component is
    redundant iff it contains another one, so pruning to the
    containment-minimal components yields the irredundant set.
    """
    _require_nonzero_proper(ideal)
    raw = sorted(_split(ideal), key=IrreducibleComponent.sort_key)
    ideals = {c: c.as_ideal() for c in raw}
    kept = [
        c
        for c in raw
        if not any(
            d is not c and ideals[c].contains_ideal(ideals[d]) for d in raw
        )
    ]
    return tuple(kept)


def primary_decomposition(ideal: MonomialIdeal) -> PrimaryDecomposition:
    """Group irreducible components by radical and intersect each group.

    Grouping an irredundant irreducible decomposition can introduce no
    redundancy: a redundant group would force one of its irreducible
    members to contain a member of another group.
    """
    components = irreducible_decomposition(ideal)
    by_prime: dict[MonomialPrime, list[MonomialIdeal]] = {}
    for c in components:
        by_prime.setdefault(c.radical(), []).append(c.as_ideal())
    pairs = []
    for prime in sorted(by_prime, key=MonomialPrime.sort_key):
        pairs.append((prime, intersect_all(ideal.ring, by_prime[prime])))
    return PrimaryDecomposition(tuple(pairs))


def associated_primes(ideal: MonomialIdeal) -> frozenset[MonomialPrime]:
    return frozenset(c.radical() for c in irreducible_decomposition(ideal))


def minimal_primes(ideal: MonomialIdeal) -> frozenset[MonomialPrime]:
    primes = associated_primes(ideal)
    return frozenset(
        p
        for p in primes
        if not any(
            q != p and set(q.support) < set(p.support) for q in primes
        )
    )


def default_power_bound(ideal: MonomialIdeal) -> int:
    """Default power cutoff for the bounded union of associated primes."""
    maxdeg = max((g.degree() for g in ideal.generators), default=1)
    return max(2, ideal.ring.nvars + maxdeg)


def ass_star_bounded(
    ideal: MonomialIdeal, n_max: int | None = None
) -> tuple[frozenset[MonomialPrime], bool]:
    """Union of Ass(I^n) for n <= n_max, plus a heuristic stabilization flag.

    The flag is true iff Ass(I^(n_max - 1)) == Ass(I^n_max); it is
    evidence, not proof, that the union has stabilized.
    """
    _require_nonzero_proper(ideal)
    if n_max is None:
        n_max = default_power_bound(ideal)
    if n_max < 2:
        raise ValueError("n_max must be at least 2")
    union: set[MonomialPrime] = set()
    previous: frozenset[MonomialPrime] = frozenset()
    current: frozenset[MonomialPrime] = frozenset()
    for n in range(1, n_max + 1):
        previous = current
        current = associated_primes(ideal_power(ideal, n))
        union |= current
    return frozenset(union), previous == current


def grade_zero(p: MonomialPrime, ideal: MonomialIdeal) -> bool:
    """True iff p is contained in some associated prime of the ideal.

    For variable-generated primes this is equivalent to grade(p, A/I) = 0
    by prime avoidance.
    """
    if not p.support:
        raise IdealArgumentError("prime with empty support")
    _require_nonzero_proper(ideal)
    target = set(p.support)
    return any(target <= set(q.support) for q in associated_primes(ideal))


def _prime_from_variable_ideal(ideal: MonomialIdeal) -> MonomialPrime | None:
    if ideal.is_zero or ideal.is_unit:
        return None
    support = []
    for g in ideal.generators:
        if g.degree() != 1:
            return None
        support.append(g.support()[0])
    return MonomialPrime(ideal.ring, tuple(support))


def ass_module_quotient(ideal: MonomialIdeal, i: int) -> frozenset[MonomialPrime]:
    """Associated primes of I^(i-1)/I^i.

    A prime p is associated iff p = (I^i : m) for a monomial
    m in I^(i-1) \\ I^i.  Witnesses are searched over products g*d with
    g a generator of I^(i-1) and d dividing the lcm of the generators of
    I^i; ``ass_module_quotient_exhaustive`` cross-checks this bound.
    """
    _require_nonzero_proper(ideal)
    if i < 1:
        raise ValueError("quotient index must be positive")
    high = ideal_power(ideal, i)
    low = ideal_power(ideal, i - 1)
    bound = high.lcm_of_generators()
    primes: set[MonomialPrime] = set()
    for g in low.generators:
        for d in monomials_below(bound):
            m = g * d
            if high.contains(m):
                continue
            prime = _prime_from_variable_ideal(colon_monomial(high, m))
            if prime is not None:
                primes.add(prime)
    return frozenset(primes)


def ass_module_quotient_exhaustive(
    ideal: MonomialIdeal, i: int
) -> frozenset[MonomialPrime]:
    """Independent oracle for ``ass_module_quotient``.

    Membership in I^(i-1) and I^i and the colon I^i : m only depend on the
    exponentwise minimum of m with the generator lcms, so scanning the box
    below max(lcm(G(I^(i-1))), lcm(G(I^i))) sees a representative of every
    possible witness.
    """
    _require_nonzero_proper(ideal)
    if i < 1:
        raise ValueError("quotient index must be positive")
    high = ideal_power(ideal, i)
    low = ideal_power(ideal, i - 1)
    box = high.lcm_of_generators().lcm(low.lcm_of_generators())
    primes: set[MonomialPrime] = set()
    for m in monomials_below(box):
        if not low.contains(m) or high.contains(m):
            continue
        prime = _prime_from_variable_ideal(colon_monomial(high, m))
        if prime is not None:
            primes.add(prime)
    return frozenset(primes)
