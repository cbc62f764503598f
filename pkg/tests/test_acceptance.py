"""Acceptance suite: one test per published criterion, exact tolerances.

Run with  pytest tests/test_acceptance.py -v -s  to see one pass/fail line
per criterion.  Everything here is decided by exact integer or rational
arithmetic except the single wall-clock bound on the fast n-th pair.
"""

import io
import json
import math
import time
from fractions import Fraction

from sidediameter.approx import (
    babylonian_preimage,
    babylonian_step,
    cf_convergent_sqrt2,
    correct_digits,
    decimal_digit_count,
    ratio,
    run_method,
)
from sidediameter.cli import run
from sidediameter.identities import (
    catalog_by_name,
    identity_catalog,
    trace_elegant,
    verify_identity,
)
from sidediameter.pairs import (
    DescentBelowSeedError,
    SideDiameterPair,
    descend,
    encouraging_identity_check,
    generate,
    nth,
    nth_iterative,
    plato_check,
    seed,
)
from sidediameter.polynomials import Poly


def _check(number: int, description: str, ok: bool):
    print(f"[{'PASS' if ok else 'FAIL'}] criterion {number:2d}: {description}")
    assert ok, f"criterion {number}: {description}"


def test_criterion_01_pair_table():
    table = generate(4)
    ok = [(p.a, p.d, p.sign) for p in table] == [
        (1, 1, -1), (2, 3, 1), (5, 7, -1), (12, 17, 1),
    ]
    _check(1, "generate(4) yields (1,1),(2,3),(5,7),(12,17) with signs -1,+1,-1,+1", ok)


def test_criterion_02_squares():
    second, third = nth(2), nth(3)
    ok = (second.a**2, second.d**2) == (4, 9) and (third.a**2, third.d**2) == (25, 49)
    _check(2, "pairs n=2,3 have squares (4,9) and (25,49)", ok)


def test_criterion_03_platos_48():
    report = plato_check(5, 7)
    ok = report.number == 48 and report.below_rational_square == 1 and report.below_irrational_square == 2
    _check(3, "for (5,7): N=48 falls short of 49 by one and of 50 by two", ok)


def test_criterion_04_encouraging_identities():
    expected = {1: 10, 2: 58, 3: 338}
    ok = True
    for n, value in expected.items():
        result = encouraging_identity_check(nth(n))
        ok = ok and result.holds and result.lhs == value
    for p in generate(200):
        result = encouraging_identity_check(p)
        ok = ok and result.holds
    _check(4, "d^2 + d'^2 = 2(a^2 + a'^2) gives 10, 58, 338 and holds for n <= 200", ok)


def _mutations(p: Poly):
    for mono, coeff in p.terms.items():
        for delta in (1, -1):
            terms = p.terms
            terms[mono] = coeff + delta
            yield Poly(p.variables, terms)


def test_criterion_05_symbolic_suite():
    ok = True
    for ident in identity_catalog():
        ok = ok and verify_identity(ident.lhs, ident.rhs)
        for mutated in _mutations(ident.lhs):
            ok = ok and not verify_identity(mutated, ident.rhs)
        for mutated in _mutations(ident.rhs):
            ok = ok and not verify_identity(ident.lhs, mutated)
    _check(5, "all five catalog identities verify; every single-coefficient mutation fails", ok)


def test_criterion_06_trace_replay():
    expected = {
        (1, 1): (9, 2 * 4 + 1),
        (2, 3): (49, 2 * 25 - 1),
        (12, 17): (1681, 2 * 841 - 1),
    }
    ok = True
    for (a, d), conclusion in expected.items():
        trace = trace_elegant(SideDiameterPair(a, d))
        ok = ok and all(s.lhs_value == s.rhs_value for s in trace.steps)
        final = trace.conclusion()
        ok = ok and (final.lhs_value, final.rhs_value) == conclusion
    _check(6, "traces for (1,1),(2,3),(12,17) balance and conclude 9=2*4+1, 49=2*25-1, 1681=2*841-1", ok)


def test_criterion_07_fast_nth_oracle_and_speed():
    ok = all(nth(n) == nth_iterative(n) for n in range(1, 257))
    begin = time.perf_counter()
    big = nth(10**5)
    elapsed = time.perf_counter() - begin
    ok = ok and elapsed < 1.0
    digits = decimal_digit_count(big.a)
    predicted = 10**5 * math.log10(1 + math.sqrt(2))  # ~38277.57
    ok = ok and abs(digits - round(predicted)) <= 2
    ok = ok and digits == 38278  # frozen from the iterative oracle
    _check(7, f"nth == iterative for n <= 256; nth(1e5) in {elapsed:.3f}s with {digits} digits", ok)


def test_criterion_08_babylonian_trajectory():
    values = [Fraction(1)]
    for _ in range(3):
        values.append(babylonian_step(values[-1]))
    ok = values == [Fraction(1), Fraction(3, 2), Fraction(17, 12), Fraction(577, 408)]
    for value in values[1:]:
        ok = ok and value * value > 2
    _check(8, "1 -> 3/2 -> 17/12 -> 577/408, every iterate after the first has square > 2", ok)


def test_criterion_09_reachability():
    ok = babylonian_preimage(Fraction(7, 5)) == set()
    roots = babylonian_preimage(Fraction(17, 12))
    ok = ok and roots == {Fraction(3, 2), Fraction(4, 3)}
    for x in roots:
        ok = ok and babylonian_step(x) == Fraction(17, 12)
    _check(9, "7/5 has no rational preimage; 17/12 has exactly {3/2, 4/3}, round-trip verified", ok)


def test_criterion_10_convergence_rates():
    babylonian = run_method("babylonian", Fraction(3, 2), 5, cap=60)
    digits = [row.correct_digits for row in babylonian.rows]
    ok = digits == [2, 5, 11, 24, 48]  # frozen from the exact comparison oracle
    for earlier, later in zip(digits, digits[1:]):
        if earlier >= 2:
            ok = ok and later >= 2 * earlier
    side = run_method("side_diameter", Fraction(3, 2), 55, cap=60)
    side_digits = [correct_digits(Fraction(3, 2))] + [r.correct_digits for r in side.rows]
    gains = [side_digits[k] - side_digits[k - 1] for k in range(6, 56)]
    ok = ok and all(g in (0, 1) for g in gains)
    mean = sum(gains) / len(gains)
    ok = ok and 0.70 <= mean <= 0.85
    _check(10, f"babylonian digits double each step ({digits}); side-diameter mean gain {mean:.2f} in [0.70, 0.85]", ok)


def test_criterion_11_convergent_identity():
    ok = all(ratio(nth(n)) == cf_convergent_sqrt2(n) for n in range(1, 51))
    _check(11, "ratio(nth(n)) equals the n-th convergent of [1; 2, 2, ...] for n <= 50", ok)


def test_criterion_12_descent():
    ok = True
    for k in range(1, 65):
        p = nth(k)
        steps = 0
        while p != seed():
            p = descend(p)
            steps += 1
        ok = ok and steps == k - 1
    try:
        descend(seed())
        ok = False
    except DescentBelowSeedError:
        pass
    _check(12, "descend reaches (1,1) from nth(k) in exactly k-1 steps for k <= 64; seed descent errors", ok)


def test_criterion_13_error_bound():
    # |d/a - sqrt(2)| < 1/(2a^2)  <=>  2ad - 1 < sqrt(8a^4) < 2ad + 1, decided by squaring
    ok = True
    for p in generate(100):
        a, d = p.a, p.d
        lower, upper = 2 * a * d - 1, 2 * a * d + 1
        target = 8 * a**4
        ok = ok and lower * lower < target < upper * upper
    _check(13, "|d/a - sqrt(2)| < 1/(2a^2) verified exactly for all n <= 100", ok)


def test_criterion_14_cli_contract():
    def invoke(argv):
        out, err = io.StringIO(), io.StringIO()
        code = run(argv, out, err)
        return code, out.getvalue()

    ok = True

    code, out = invoke(["gen", "--count", "4", "--format", "csv"])
    rows = [line.split(",") for line in out.splitlines()[1:]]
    ok = ok and code == 0 and [(int(r[1]), int(r[2]), int(r[3])) for r in rows] == [
        (1, 1, -1), (2, 3, 1), (5, 7, -1), (12, 17, 1),
    ]

    code, out = invoke(["verify", "--identity", "euclid_II_10"])
    ok = ok and code == 0 and "OK" in out

    code, out = invoke(["approx", "preimage", "7/5"])
    ok = ok and code == 0 and "none" in out

    code, out = invoke(["nth", "5", "--check-oracle"])
    ok = ok and code == 0 and "29" in out and "41" in out and "match" in out

    code, out = invoke(["gen", "--count", "100", "--format", "json"])
    parsed = json.loads(out)
    rebuilt = [
        SideDiameterPair(int(row["a"]), int(row["d"]), index=int(row["n"]))
        for row in parsed
    ]
    ok = ok and code == 0 and rebuilt == generate(100)

    _check(14, "the four CLI examples produce their payloads and exit codes; gen JSON round-trips for N <= 100", ok)
