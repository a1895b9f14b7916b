"""Sums of ideals living in disjoint sets of variables.

Builds the joined ring, extends ideals and primes into it, evaluates the
binomial expansions for saturated and symbolic powers, and packages the
identity / structure checks that the fuzz driver and the test suite run.
The ``direct_*`` functions compute the left-hand sides from first
principles (power, then saturate or decompose, in the joined ring) so the
expansions are always compared against an independent route.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import (
    IdealArgumentError,
    Monomial,
    MonomialIdeal,
    MonomialPrime,
    Ring,
    colon,
    ideal_power,
    ideal_product,
    ideal_sum,
    intersect,
    saturate,
)
from .decomposition import (
    ass_module_quotient,
    ass_module_quotient_exhaustive,
    ass_star_bounded,
    associated_primes,
    grade_zero,
)
from .powers import (
    saturated_power,
    saturator_ass_global,
    saturator_min_global,
    symbolic_power,
)


@dataclass(frozen=True)
class RingEmbedding:
    """Injective, degree-preserving relabeling of one ring's variables into another."""

    source: Ring
    target: Ring
    index_map: tuple[int, ...]

    def __post_init__(self):
        index_map = tuple(int(i) for i in self.index_map)
        if len(index_map) != self.source.nvars:
            raise ValueError("index map must cover every source variable")
        if len(set(index_map)) != len(index_map):
            raise ValueError("index map must be injective")
        if any(i < 0 or i >= self.target.nvars for i in index_map):
            raise ValueError("index map out of range")
        object.__setattr__(self, "index_map", index_map)


def join_rings(a: Ring, b: Ring) -> tuple[Ring, RingEmbedding, RingEmbedding]:
    """Concatenate two rings; colliding names get the smallest free _k suffix."""
    names = list(a.variables)
    used = set(names)
    for name in b.variables:
        candidate = name
        k = 1
        while candidate in used:
            candidate = f"{name}_{k}"
            k += 1
        names.append(candidate)
        used.add(candidate)
    joined = Ring(tuple(names))
    emb_a = RingEmbedding(a, joined, tuple(range(a.nvars)))
    emb_b = RingEmbedding(b, joined, tuple(range(a.nvars, a.nvars + b.nvars)))
    return joined, emb_a, emb_b


def extend_monomial(m: Monomial, emb: RingEmbedding) -> Monomial:
    if m.ring != emb.source:
        raise IdealArgumentError("monomial does not live in the embedding source")
    exps = [0] * emb.target.nvars
    for i, e in enumerate(m.exponents):
        exps[emb.index_map[i]] = e
    return Monomial(emb.target, tuple(exps))


def extend(ideal: MonomialIdeal, emb: RingEmbedding) -> MonomialIdeal:
    if ideal.ring != emb.source:
        raise IdealArgumentError("ideal does not live in the embedding source")
    return MonomialIdeal(
        emb.target, tuple(extend_monomial(g, emb) for g in ideal.generators)
    )


def extend_prime(p: MonomialPrime, emb: RingEmbedding) -> MonomialPrime:
    return MonomialPrime(emb.target, tuple(emb.index_map[i] for i in p.support))


def prime_sum(
    p: MonomialPrime, q: MonomialPrime, emb_a: RingEmbedding, emb_b: RingEmbedding
) -> MonomialPrime:
    return MonomialPrime(
        emb_a.target,
        tuple(emb_a.index_map[i] for i in p.support)
        + tuple(emb_b.index_map[j] for j in q.support),
    )


def joined_sum(
    ideal_a: MonomialIdeal, ideal_b: MonomialIdeal
) -> tuple[Ring, RingEmbedding, RingEmbedding, MonomialIdeal]:
    joined, emb_a, emb_b = join_rings(ideal_a.ring, ideal_b.ring)
    total = ideal_sum(extend(ideal_a, emb_a), extend(ideal_b, emb_b))
    return joined, emb_a, emb_b, total


def binomial_saturated(
    i: MonomialIdeal, k: MonomialIdeal, j: MonomialIdeal, l: MonomialIdeal, s: int
) -> MonomialIdeal:
    """Sum over i of (I^(i) wrt K) * (J^(s-i) wrt L), extended to the joined ring."""
    if s < 1:
        raise ValueError("power must be positive")
    joined, emb_a, emb_b, _ = joined_sum(i, j)
    total = MonomialIdeal.zero(joined)
    for t in range(s + 1):
        part_a = extend(saturated_power(i, k, t), emb_a)
        part_b = extend(saturated_power(j, l, s - t), emb_b)
        total = ideal_sum(total, ideal_product(part_a, part_b))
    return total


def direct_saturated_sum(
    i: MonomialIdeal, k: MonomialIdeal, j: MonomialIdeal, l: MonomialIdeal, s: int
) -> MonomialIdeal:
    """(I+J)^s : (KL)^infinity computed head-on in the joined ring."""
    _, emb_a, emb_b, total = joined_sum(i, j)
    kl = ideal_product(extend(k, emb_a), extend(l, emb_b))
    return saturate(ideal_power(total, s), kl)


def binomial_symbolic(
    i: MonomialIdeal, j: MonomialIdeal, s: int, notion: str
) -> MonomialIdeal:
    """Sum over i of symbolic(I, i) * symbolic(J, s-i) in the joined ring."""
    if s < 1:
        raise ValueError("power must be positive")
    if i.is_unit or j.is_unit:
        raise IdealArgumentError("binomial symbolic expansion needs proper ideals")
    joined, emb_a, emb_b, _ = joined_sum(i, j)
    total = MonomialIdeal.zero(joined)
    for t in range(s + 1):
        part_a = extend(symbolic_power(i, t, notion), emb_a)
        part_b = extend(symbolic_power(j, s - t, notion), emb_b)
        total = ideal_sum(total, ideal_product(part_a, part_b))
    return total


def symbolic_of_sum(
    i: MonomialIdeal, j: MonomialIdeal, s: int, notion: str
) -> MonomialIdeal:
    """Symbolic power of I+J computed directly in the joined ring."""
    _, _, _, total = joined_sum(i, j)
    return symbolic_power(total, s, notion)


@dataclass(frozen=True)
class TermInclusionReport:
    """Each term of the expansion is contained in the direct saturation."""

    term_included: tuple[bool, ...]

    @property
    def passed(self) -> bool:
        return all(self.term_included)


def check_term_inclusions(
    i: MonomialIdeal, k: MonomialIdeal, j: MonomialIdeal, l: MonomialIdeal, s: int
) -> TermInclusionReport:
    direct = direct_saturated_sum(i, k, j, l, s)
    _, emb_a, emb_b, _ = joined_sum(i, j)
    flags = []
    for t in range(s + 1):
        term = ideal_product(
            extend(saturated_power(i, k, t), emb_a),
            extend(saturated_power(j, l, s - t), emb_b),
        )
        flags.append(direct.contains_ideal(term))
    return TermInclusionReport(tuple(flags))


@dataclass(frozen=True)
class EqualityCriteriaReport:
    """Joint equality of saturated and ordinary powers versus the componentwise ones."""

    i_equal: tuple[bool, ...]
    j_equal: tuple[bool, ...]
    joint_equal: bool

    @property
    def componentwise(self) -> bool:
        return all(self.i_equal) and all(self.j_equal)

    @property
    def passed(self) -> bool:
        return self.joint_equal == self.componentwise

    def __str__(self):
        return (
            f"joint={'yes' if self.joint_equal else 'no'} "
            f"componentwise={'yes' if self.componentwise else 'no'} "
            f"biconditional={'pass' if self.passed else 'FAIL'}"
        )


def check_equality_criteria(
    i: MonomialIdeal, k: MonomialIdeal, j: MonomialIdeal, l: MonomialIdeal, s: int
) -> EqualityCriteriaReport:
    """Joint equality holds iff every componentwise equality holds, for i <= s.

    Powers of a nonzero proper monomial ideal never repeat, so the
    hypothesis of the converse direction holds automatically.
    """
    if i.is_zero or i.is_unit or j.is_zero or j.is_unit:
        raise IdealArgumentError("equality criteria need nonzero proper ideals")
    i_eq = tuple(
        saturated_power(i, k, t) == ideal_power(i, t) for t in range(1, s + 1)
    )
    j_eq = tuple(
        saturated_power(j, l, t) == ideal_power(j, t) for t in range(1, s + 1)
    )
    _, _, _, total = joined_sum(i, j)
    joint = direct_saturated_sum(i, k, j, l, s) == ideal_power(total, s)
    return EqualityCriteriaReport(i_eq, j_eq, joint)


@dataclass(frozen=True)
class SymbolicEqualityReport:
    """If the symbolic power of the sum is ordinary, both sides' must be too."""

    joint_equal: bool
    i_equal: tuple[bool, ...]
    j_equal: tuple[bool, ...]

    @property
    def passed(self) -> bool:
        if not self.joint_equal:
            return True
        return all(self.i_equal) and all(self.j_equal)

    def __str__(self):
        status = "pass" if self.passed else "FAIL"
        return f"joint={'yes' if self.joint_equal else 'no'} implication={status}"


def check_symbolic_equality_implication(
    i: MonomialIdeal, j: MonomialIdeal, s: int
) -> SymbolicEqualityReport:
    if i.is_zero or i.is_unit or j.is_zero or j.is_unit:
        raise IdealArgumentError("implication check needs nonzero proper ideals")
    _, _, _, total = joined_sum(i, j)
    joint = symbolic_power(total, s, "ass") == ideal_power(total, s)
    i_eq = tuple(
        symbolic_power(i, t, "ass") == ideal_power(i, t) for t in range(1, s + 1)
    )
    j_eq = tuple(
        symbolic_power(j, t, "ass") == ideal_power(j, t) for t in range(1, s + 1)
    )
    return SymbolicEqualityReport(joint, i_eq, j_eq)


@dataclass(frozen=True)
class AssStructureReport:
    """Associated-prime structure of powers of a sum in disjoint variables."""

    tensor_ass_equal: bool
    lower_bound_holds: bool
    upper_bound_holds: bool
    quotient_ass_agrees: bool
    grade_dichotomy_holds: bool
    saturator_min_equal: bool | None
    saturator_ass_equal: bool | None
    stabilized: bool

    @property
    def inconclusive(self) -> bool:
        return not self.stabilized

    @property
    def passed(self) -> bool:
        checks = [
            self.tensor_ass_equal,
            self.lower_bound_holds,
            self.upper_bound_holds,
            self.quotient_ass_agrees,
            self.grade_dichotomy_holds,
        ]
        if self.saturator_min_equal is not None:
            checks.append(self.saturator_min_equal)
        if self.saturator_ass_equal is not None:
            checks.append(self.saturator_ass_equal)
        return all(checks)

    def __str__(self):
        bits = [
            f"tensor={self.tensor_ass_equal}",
            f"lower={self.lower_bound_holds}",
            f"upper={self.upper_bound_holds}",
            f"quotients={self.quotient_ass_agrees}",
            f"grade={self.grade_dichotomy_holds}",
            f"global_min={self.saturator_min_equal}",
            f"global_ass={self.saturator_ass_equal}",
        ]
        if self.inconclusive:
            bits.append("inconclusive")
        return " ".join(bits)


def check_ass_structure(
    i: MonomialIdeal, j: MonomialIdeal, s: int, n_max: int | None = None
) -> AssStructureReport:
    """Tensor Ass equality, power-quotient bounds, grade additivity, and the
    global-saturator identities, all in the joined ring.

    The witness-bounded quotient Ass computation is compared against the
    box-complete oracle on every power it touches; a disagreement means the
    witness bound missed a prime and fails the report.
    """
    if i.is_zero or i.is_unit or j.is_zero or j.is_unit:
        raise IdealArgumentError("structure check needs nonzero proper ideals")
    if n_max is None:
        n_max = max(2, s + 2)
    joined, emb_a, emb_b, total = joined_sum(i, j)

    ass_i = associated_primes(i)
    ass_j = associated_primes(j)
    ass_total = associated_primes(total)
    expected = {
        prime_sum(p, q, emb_a, emb_b) for p in ass_i for q in ass_j
    }
    tensor_equal = expected == set(ass_total)

    quotient_agrees = True

    def quotient_ass(ideal, index):
        nonlocal quotient_agrees
        bounded = ass_module_quotient(ideal, index)
        oracle = ass_module_quotient_exhaustive(ideal, index)
        if bounded != oracle:
            quotient_agrees = False
        return oracle

    ass_power_total = associated_primes(ideal_power(total, s))
    lower: set[MonomialPrime] = set()
    upper: set[MonomialPrime] = set()
    for t in range(1, s + 1):
        q_i = quotient_ass(i, t)
        q_j = quotient_ass(j, s - t + 1)
        lower |= {prime_sum(p, q, emb_a, emb_b) for p in q_i for q in q_j}
        ass_power_i = associated_primes(ideal_power(i, t))
        upper |= {prime_sum(p, q, emb_a, emb_b) for p in ass_power_i for q in q_j}
    lower_holds = lower <= set(ass_power_total)
    upper_holds = set(ass_power_total) <= upper

    grade_holds = all(
        grade_zero(prime_sum(p, q, emb_a, emb_b), total)
        == (grade_zero(p, i) and grade_zero(q, j))
        for p in ass_i
        for q in ass_j
    )

    _, stab_i = ass_star_bounded(i, n_max)
    _, stab_j = ass_star_bounded(j, n_max)
    stabilized = stab_i and stab_j
    sat_min_equal = None
    sat_ass_equal = None
    if stabilized:
        k_min = extend(saturator_min_global(i, n_max), emb_a)
        l_min = extend(saturator_min_global(j, n_max), emb_b)
        sat_min_equal = saturate(
            ideal_power(total, s), ideal_product(k_min, l_min)
        ) == symbolic_power(total, s, "min")
        k_ass = extend(saturator_ass_global(i, n_max), emb_a)
        l_ass = extend(saturator_ass_global(j, n_max), emb_b)
        sat_ass_equal = saturate(
            ideal_power(total, s), ideal_product(k_ass, l_ass)
        ) == symbolic_power(total, s, "ass")

    return AssStructureReport(
        tensor_ass_equal=tensor_equal,
        lower_bound_holds=lower_holds,
        upper_bound_holds=upper_holds,
        quotient_ass_agrees=quotient_agrees,
        grade_dichotomy_holds=grade_holds,
        saturator_min_equal=sat_min_equal,
        saturator_ass_equal=sat_ass_equal,
        stabilized=stabilized,
    )


@dataclass(frozen=True)
class FiltrationReport:
    """Exact intersection and colon identities for binomial-type sums."""

    premises_ok: bool
    disjoint_product_equal: bool
    sum_intersection_equal: bool
    single_step_equal: bool
    long_intersection_equal: bool
    colon_distributes: bool

    @property
    def passed(self) -> bool:
        return (
            self.premises_ok
            and self.disjoint_product_equal
            and self.sum_intersection_equal
            and self.single_step_equal
            and self.long_intersection_equal
            and self.colon_distributes
        )

    def __str__(self):
        return (
            f"premises={self.premises_ok} disjoint={self.disjoint_product_equal} "
            f"sum={self.sum_intersection_equal} step={self.single_step_equal} "
            f"long={self.long_intersection_equal} colon={self.colon_distributes}"
        )


def _validate_filtration(terms: list[MonomialIdeal], s: int) -> bool:
    """Index 0 is the unit ideal; descending; closed under term products."""
    if len(terms) < s + 1 or not terms[0].is_unit:
        return False
    for t in range(s):
        if not terms[t].contains_ideal(terms[t + 1]):
            return False
    for a in range(s + 1):
        for b in range(s + 1 - a):
            if not terms[a + b].contains_ideal(ideal_product(terms[a], terms[b])):
                return False
    return True


def check_filtration_identities(
    i_filtration,
    k_filtration,
    j_filtration,
    colon_ideal: MonomialIdeal,
    s: int,
) -> FiltrationReport:
    """Intersection and colon identities for sums of filtration products.

    The filtration arguments list the terms of index 1..s (or more); the
    unit ideal is prepended as index 0.  ``colon_ideal`` must be a nonzero
    ideal on the same side as the first two filtrations.
    """
    if s < 1:
        raise ValueError("power must be positive")
    i_terms = list(i_filtration)
    k_terms = list(k_filtration)
    j_terms = list(j_filtration)
    if not i_terms or not j_terms or not k_terms:
        raise IdealArgumentError("empty filtration")
    ring_a = i_terms[0].ring
    ring_b = j_terms[0].ring
    i_terms = [MonomialIdeal.unit(ring_a)] + i_terms
    k_terms = [MonomialIdeal.unit(ring_a)] + k_terms
    j_terms = [MonomialIdeal.unit(ring_b)] + j_terms
    premises = (
        _validate_filtration(i_terms, s)
        and _validate_filtration(k_terms, s)
        and _validate_filtration(j_terms, s)
        and not colon_ideal.is_zero
        and colon_ideal.ring == ring_a
    )
    if not premises:
        return FiltrationReport(False, False, False, False, False, False)

    joined, emb_a, emb_b = join_rings(ring_a, ring_b)
    ext_i = [extend(t, emb_a) for t in i_terms[: s + 1]]
    ext_k = [extend(t, emb_a) for t in k_terms[: s + 1]]
    ext_j = [extend(t, emb_b) for t in j_terms[: s + 1]]

    def cross_sum(a_terms, b_terms, top):
        total = MonomialIdeal.zero(joined)
        for t in range(top + 1):
            total = ideal_sum(total, ideal_product(a_terms[t], b_terms[top - t]))
        return total

    disjoint = ideal_product(ext_i[1], ext_j[1]) == intersect(ext_i[1], ext_j[1])

    lhs_sum = intersect(
        ideal_sum(ext_i[1], ext_j[1]), ideal_sum(ext_k[1], ext_j[1])
    )
    rhs_sum = ideal_sum(intersect(ext_i[1], ext_k[1]), ext_j[1])
    sum_equal = lhs_sum == rhs_sum

    partial = MonomialIdeal.zero(joined)
    for t in range(max(0, s - 1)):
        partial = ideal_sum(partial, ideal_product(ext_i[t], ext_j[s - t]))
    partial = ideal_sum(partial, ext_i[s - 1])
    rhs_step = MonomialIdeal.zero(joined)
    for t in range(s):
        rhs_step = ideal_sum(rhs_step, ideal_product(ext_i[t], ext_j[s - t]))
    step_equal = intersect(ext_j[1], partial) == rhs_step

    lhs_long = intersect(cross_sum(ext_i, ext_j, s), cross_sum(ext_k, ext_j, s))
    rhs_long = MonomialIdeal.zero(joined)
    for t in range(s + 1):
        rhs_long = ideal_sum(
            rhs_long, ideal_product(intersect(ext_i[t], ext_k[t]), ext_j[s - t])
        )
    long_equal = lhs_long == rhs_long

    ext_c = extend(colon_ideal, emb_a)
    lhs_colon = colon(cross_sum(ext_i, ext_j, s), ext_c)
    rhs_colon = MonomialIdeal.zero(joined)
    for t in range(s + 1):
        rhs_colon = ideal_sum(
            rhs_colon,
            ideal_product(extend(colon(i_terms[t], colon_ideal), emb_a), ext_j[s - t]),
        )
    colon_equal = lhs_colon == rhs_colon

    return FiltrationReport(
        premises_ok=True,
        disjoint_product_equal=disjoint,
        sum_intersection_equal=sum_equal,
        single_step_equal=step_equal,
        long_intersection_equal=long_equal,
        colon_distributes=colon_equal,
    )
