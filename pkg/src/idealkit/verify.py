"""Golden verification suite.

Reproduces every worked monomial computation the kernel is pinned to:
the two-variable ideal (a^2, a*b) with its symbolic powers, saturators and
witness, the four-variable sum (x^2, x*y) + (z^2, z*t) with its
decomposition and saturation, the tensor structure of associated primes,
the depth/regularity conventions for the zero module, and the script
front-end renderings.  Expected values are compared as canonical ideals,
not as strings, so generator order in the sources does not matter.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import binomial as _binomial
from . import core as _core
from . import decomposition as _decomposition
from . import dsl as _dsl
from . import homology as _homology
from . import powers as _powers
from .core import MonomialIdeal, MonomialPrime, Ring

REPORT_SCHEMA = "idealkit-report/1"


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    expected: str
    actual: str
    script: str


def _result(name, passed, expected, actual, script=""):
    return CheckResult(name, bool(passed), str(expected), str(actual), script)


def _ring_ab():
    ring = Ring.of("a", "b")
    return ring, MonomialIdeal.parse(ring, "a^2, a*b")


def _ring_xyzt():
    ring = Ring.of("x", "y", "z", "t")
    ideal = MonomialIdeal.parse(ring, "x^2, x*y, z^2, z*t")
    return ring, ideal, MonomialIdeal.parse(ring, "x, y, z, t")


def _check_power_product_form():
    ring, ideal = _ring_ab()
    actual = _core.ideal_power(ideal, 2)
    expected = MonomialIdeal.parse(ring, "a^4, a^3*b, a^2*b^2")
    return _result(
        "power_of_example_ideal",
        actual == expected,
        expected,
        actual,
        "ring A = [a, b]; ideal I = (a^2, a*b) in A; print I^2;",
    )


def _check_disjoint_product_is_intersection():
    ring = Ring.of("x", "y")
    left = MonomialIdeal.parse(ring, "x")
    right = MonomialIdeal.parse(ring, "y")
    actual = _core.intersect(left, right)
    expected = MonomialIdeal.parse(ring, "x*y")
    passed = actual == expected and _core.ideal_product(left, right) == expected
    return _result(
        "disjoint_product_equals_intersection",
        passed,
        expected,
        actual,
        "ring A = [x, y]; print intersect((x), (y));",
    )


def _check_example_irreducible_intersection():
    ring, ideal = _ring_ab()
    actual = _core.intersect(
        MonomialIdeal.parse(ring, "a"), MonomialIdeal.parse(ring, "a^2, b")
    )
    return _result(
        "example_ideal_component_intersection",
        actual == ideal,
        ideal,
        actual,
        "ring A = [a, b]; print intersect((a), (a^2, b));",
    )


def _check_sum_saturation():
    ring, ideal, maximal = _ring_xyzt()
    actual = _core.saturate(ideal, maximal)
    expected = MonomialIdeal.parse(ring, "x*z, x^2, x*y, z^2, z*t")
    return _result(
        "sum_example_saturation",
        actual == expected,
        expected,
        actual,
        "ring R = [x, y, z, t]; print saturate((x^2, x*y, z^2, z*t), (x, y, z, t));",
    )


def _check_example_saturation():
    ring, ideal = _ring_ab()
    actual = _core.saturate(ideal, MonomialIdeal.parse(ring, "a, b"))
    expected = MonomialIdeal.parse(ring, "a")
    return _result(
        "example_ideal_saturation",
        actual == expected,
        expected,
        actual,
        "ring A = [a, b]; print saturate((a^2, a*b), (a, b));",
    )


def _check_sum_irreducible_decomposition():
    ring, ideal, _ = _ring_xyzt()
    actual = {c.as_ideal() for c in _decomposition.irreducible_decomposition(ideal)}
    expected = {
        MonomialIdeal.parse(ring, "x, z"),
        MonomialIdeal.parse(ring, "x, z^2, t"),
        MonomialIdeal.parse(ring, "x^2, y, z"),
        MonomialIdeal.parse(ring, "x^2, y, z^2, t"),
    }
    return _result(
        "sum_example_irreducible_decomposition",
        actual == expected,
        "{" + ", ".join(sorted(str(e) for e in expected)) + "}",
        "{" + ", ".join(sorted(str(a) for a in actual)) + "}",
        "ring R = [x, y, z, t]; print irrdecomp((x^2, x*y, z^2, z*t));",
    )


def _check_sum_primary_keys():
    ring, ideal, _ = _ring_xyzt()
    actual = _decomposition.primary_decomposition(ideal).primes()
    expected = frozenset(
        {
            MonomialPrime.of_names(ring, "x", "z"),
            MonomialPrime.of_names(ring, "x", "z", "t"),
            MonomialPrime.of_names(ring, "x", "y", "z"),
            MonomialPrime.of_names(ring, "x", "y", "z", "t"),
        }
    )
    return _result(
        "sum_example_primary_keys",
        actual == expected,
        _dsl.render_value(expected),
        _dsl.render_value(actual),
        "ring R = [x, y, z, t]; print decompose((x^2, x*y, z^2, z*t));",
    )


def _check_example_ass_min():
    ring, ideal = _ring_ab()
    ass = _decomposition.associated_primes(ideal)
    mins = _decomposition.minimal_primes(ideal)
    expected_ass = frozenset(
        {MonomialPrime.of_names(ring, "a"), MonomialPrime.of_names(ring, "a", "b")}
    )
    expected_min = frozenset({MonomialPrime.of_names(ring, "a")})
    passed = ass == expected_ass and mins == expected_min
    return _result(
        "example_ideal_ass_and_min",
        passed,
        f"ass={_dsl.render_value(expected_ass)} min={_dsl.render_value(expected_min)}",
        f"ass={_dsl.render_value(ass)} min={_dsl.render_value(mins)}",
        "ring A = [a, b]; print ass((a^2, a*b)); print min((a^2, a*b));",
    )


def _check_example_ass_star():
    ring, ideal = _ring_ab()
    star, stabilized = _decomposition.ass_star_bounded(ideal, 3)
    expected = frozenset(
        {MonomialPrime.of_names(ring, "a"), MonomialPrime.of_names(ring, "a", "b")}
    )
    return _result(
        "example_ideal_ass_star",
        star == expected and stabilized,
        f"{_dsl.render_value(expected)} stabilized=true",
        f"{_dsl.render_value(star)} stabilized={_dsl.render_value(stabilized)}",
        "ring A = [a, b]; print assstar((a^2, a*b), 3);",
    )


def _check_example_grade_zero():
    ring, ideal = _ring_ab()
    actual = _decomposition.grade_zero(MonomialPrime.of_names(ring, "a", "b"), ideal)
    return _result(
        "example_ideal_grade_zero",
        actual is True,
        "true",
        _dsl.render_value(actual),
        "ring A = [a, b]; print gradezero((a, b), (a^2, a*b));",
    )


def _check_example_quotient_ass():
    ring, ideal = _ring_ab()
    actual = _decomposition.ass_module_quotient(ideal, 1)
    expected = frozenset(
        {MonomialPrime.of_names(ring, "a"), MonomialPrime.of_names(ring, "a", "b")}
    )
    return _result(
        "example_ideal_quotient_ass",
        actual == expected,
        _dsl.render_value(expected),
        _dsl.render_value(actual),
        "ring A = [a, b]; print assquot((a^2, a*b), 1);",
    )


def _check_example_saturated_powers():
    ring, ideal = _ring_ab()
    by_maximal = _powers.saturated_power(ideal, MonomialIdeal.parse(ring, "a, b"), 2)
    by_witness = _powers.saturated_power(ideal, MonomialIdeal.parse(ring, "b"), 3)
    passed = by_maximal == MonomialIdeal.parse(ring, "a^2") and by_witness == (
        MonomialIdeal.parse(ring, "a^3")
    )
    return _result(
        "example_ideal_saturated_powers",
        passed,
        "(a^2) and (a^3)",
        f"{by_maximal} and {by_witness}",
        "ring A = [a, b]; print satpow((a^2, a*b), (a, b), 2); print satpow((a^2, a*b), (b), 3);",
    )


def _check_example_saturators():
    ring, ideal = _ring_ab()
    expected_min = MonomialIdeal.parse(ring, "a, b")
    unit = MonomialIdeal.unit(ring)
    min_ok = all(
        _powers.saturator_min(ideal, s) == expected_min for s in range(1, 5)
    )
    ass_ok = all(_powers.saturator_ass(ideal, s) == unit for s in range(1, 5))
    return _result(
        "example_ideal_saturators",
        min_ok and ass_ok,
        f"min saturator {expected_min}, ass saturator {unit}",
        f"min saturator {_powers.saturator_min(ideal, 2)}, "
        f"ass saturator {_powers.saturator_ass(ideal, 2)}",
        "ring A = [a, b]; print satk_min((a^2, a*b), 2); print satk_ass((a^2, a*b), 2);",
    )


def _check_example_symbolic_powers():
    ring, ideal = _ring_ab()
    ok = True
    for s in range(1, 6):
        expected = MonomialIdeal(ring, (ring.monomial((s, 0)),))
        ok = ok and _powers.symbolic_min(ideal, s) == expected
        ok = ok and _powers.symbolic_ass(ideal, s) == _core.ideal_power(ideal, s)
    return _result(
        "example_ideal_symbolic_powers",
        ok,
        "symb_min = (a^s), symb_ass = I^s for s = 1..5",
        f"s=2: {_powers.symbolic_min(ideal, 2)} and {_powers.symbolic_ass(ideal, 2)}",
        "ring A = [a, b]; print symb_min((a^2, a*b), 2); print symb_ass((a^2, a*b), 2);",
    )


def _check_example_witness():
    ring, ideal = _ring_ab()
    witness = _powers.regular_witness(ideal, "min")
    b = ring.monomial((0, 1))
    candidates = _powers.regular_witness_candidates(ideal, "min", max_degree=1)
    passed = witness is not None and b in candidates and witness == b
    return _result(
        "example_ideal_regular_witness",
        passed,
        "b",
        _dsl.render_value(witness),
        "ring A = [a, b]; print witness((a^2, a*b), min);",
    )


def _check_binomial_symbolic_ass():
    ring_a = Ring.of("a", "b")
    ring_b = Ring.of("c", "d")
    i = MonomialIdeal.parse(ring_a, "a^2, a*b")
    j = MonomialIdeal.parse(ring_b, "c^2, c*d")
    actual = _binomial.binomial_symbolic(i, j, 2, "ass")
    _, _, _, total = _binomial.joined_sum(i, j)
    expected = _core.ideal_power(total, 2)
    return _result(
        "binomial_symbolic_ass_is_ordinary_square",
        actual == expected,
        expected,
        actual,
        "ring A = [a, b]; ideal I = (a^2, a*b) in A; ring B = [c, d]; "
        "ideal J = (c^2, c*d) in B; print binom_symb(I, J, 2, ass);",
    )


def _check_join_rings():
    joined, _, _ = _binomial.join_rings(Ring.of("x", "y"), Ring.of("z", "t"))
    expected = Ring.of("x", "y", "z", "t")
    return _result(
        "join_of_disjoint_rings",
        joined == expected,
        expected,
        joined,
        "ring A = [x, y]; ring B = [z, t]; print join(A, B);",
    )


def _check_zero_module_conventions():
    ring = Ring.of("x", "y")
    unit = MonomialIdeal.unit(ring)
    depth = _homology.depth_quotient(unit)
    reg = _homology.reg_quotient(unit)
    passed = depth == _homology.POS_INF and reg == _homology.NEG_INF
    return _result(
        "zero_module_depth_reg_conventions",
        passed,
        "depth +inf, reg -inf",
        f"depth {depth}, reg {reg}",
        "ring A = [x, y]; print depth((1)); print reg((1));",
    )


def _check_sum_ass_structure():
    ring_a = Ring.of("x", "y")
    ring_b = Ring.of("z", "t")
    i = MonomialIdeal.parse(ring_a, "x^2, x*y")
    j = MonomialIdeal.parse(ring_b, "z^2, z*t")
    _, _, _, total = _binomial.joined_sum(i, j)
    actual = _decomposition.associated_primes(total)
    joined = total.ring
    expected = frozenset(
        {
            MonomialPrime.of_names(joined, "x", "z"),
            MonomialPrime.of_names(joined, "x", "z", "t"),
            MonomialPrime.of_names(joined, "x", "y", "z"),
            MonomialPrime.of_names(joined, "x", "y", "z", "t"),
        }
    )
    return _result(
        "sum_example_ass_structure",
        actual == expected,
        _dsl.render_value(expected),
        _dsl.render_value(actual),
        "ring R = [x, y, z, t]; print ass((x^2, x*y, z^2, z*t));",
    )


def _check_dsl_symbolic_script():
    script = "ring A = [a, b];\nideal I = (a^2, a*b) in A;\nprint symb_min(I, 2);"
    output = _dsl.run_script(script)
    return _result(
        "script_symbolic_power_render",
        output == ["(a^2)"],
        "(a^2)",
        "; ".join(output),
        script,
    )


def _check_dsl_saturation_script():
    script = (
        "ring R = [x, y, z, t];\n"
        "print saturate((x^2, x*y, z^2, z*t), (x, y, z, t));"
    )
    ring, ideal, maximal = _ring_xyzt()
    expected = str(_core.saturate(ideal, maximal))
    output = _dsl.run_script(script)
    return _result(
        "script_saturation_render",
        output == [expected],
        expected,
        "; ".join(output),
        script,
    )


_CHECKS = (
    _check_power_product_form,
    _check_disjoint_product_is_intersection,
    _check_example_irreducible_intersection,
    _check_sum_saturation,
    _check_example_saturation,
    _check_sum_irreducible_decomposition,
    _check_sum_primary_keys,
    _check_example_ass_min,
    _check_example_ass_star,
    _check_example_grade_zero,
    _check_example_quotient_ass,
    _check_example_saturated_powers,
    _check_example_saturators,
    _check_example_symbolic_powers,
    _check_example_witness,
    _check_binomial_symbolic_ass,
    _check_join_rings,
    _check_zero_module_conventions,
    _check_sum_ass_structure,
    _check_dsl_symbolic_script,
    _check_dsl_saturation_script,
)


def run_verify() -> dict:
    """Run every golden check and return a JSON-ready report.

    A check that raises counts as a failure; a broken kernel must produce
    a report, not a traceback.
    """
    results = []
    for check in _CHECKS:
        try:
            results.append(check())
        except Exception as exc:  # noqa: BLE001 - deliberate fault barrier
            results.append(
                _result(check.__name__.lstrip("_"), False, "no exception", repr(exc))
            )
    failures = [
        {
            "name": r.name,
            "instance_script": r.script,
            "expected": r.expected,
            "actual": r.actual,
        }
        for r in results
        if not r.passed
    ]
    return {
        "schema": REPORT_SCHEMA,
        "suite": "verify",
        "cases": len(results),
        "passes": sum(1 for r in results if r.passed),
        "failures": failures,
        "checks": [{"name": r.name, "passed": r.passed} for r in results],
    }
