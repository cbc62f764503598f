"""Exact-rational algorithms approximating the square root of 2.

Two historical iterations are implemented over `fractions.Fraction`:

* the fast averaging step t -> (t + 2/t) / 2, which converges quadratically
  from above (Heron's 17/12 arises this way from 3/2), and
* the slow ratio step t -> (2 + t) / (1 + t) induced by the side/diameter
  recurrence, which converges linearly and alternates sides (Aristarchus'
  7/5 lies on this path but is unreachable by the averaging step).

Digit accuracy is measured exactly: whether |t - sqrt(2)| < 10**-k is
decided by integer comparisons against floor(sqrt(2) * 10**k * den), so no
floating point appears anywhere in this module.
"""

import math
from dataclasses import dataclass
from fractions import Fraction

from sidediameter.pairs import SideDiameterPair

DEFAULT_DIGIT_CAP = 50
DEFAULT_DECIMAL_DIGITS = 30


def ratio(p: SideDiameterPair) -> Fraction:
    """The diameter-to-side ratio d/a, already in lowest terms."""
    return Fraction(p.d, p.a)


def babylonian_step(t) -> Fraction:
    """One averaging step (t + 2/t) / 2; the result always overshoots sqrt(2).

    For rational t the output r satisfies r**2 > 2 strictly, which is why
    values below sqrt(2), such as 7/5, have no rational preimage.
    """
    t = _positive_fraction(t)
    return (t + 2 / t) / 2


def babylonian_preimage(t) -> set[Fraction]:
    """All positive rationals x with (x + 2/x) / 2 = t (zero, one, or two).

    Solving x**2 - 2*t*x + 2 = 0 exactly: rational roots exist iff
    t**2 - 2 is the square of a rational, decided by perfect-square tests
    on the numerator and denominator of the discriminant.
    """
    t = _positive_fraction(t)
    disc = t * t - 2
    if disc < 0:
        return set()
    root = _rational_sqrt(disc)
    if root is None:
        return set()
    return {x for x in (t - root, t + root) if x > 0}


def sd_ratio_step(t) -> Fraction:
    """One ratio step (2 + t) / (1 + t); alternates sides of sqrt(2).

    Chains with the pair recurrence: feeding d/a yields exactly the next
    pair's ratio (2a + d) / (a + d).
    """
    t = _positive_fraction(t)
    return (2 + t) / (1 + t)


def isqrt(n: int) -> int:
    """Floor of the square root of a nonnegative integer, exact."""
    if n < 0:
        raise ValueError(f"isqrt requires n >= 0, got {n}")
    return math.isqrt(n)


def decimal_digit_count(n: int) -> int:
    """Number of decimal digits of |n|, without building a decimal string.

    Works above the interpreter's int-to-str conversion limit: a bit-length
    estimate is corrected by at most a couple of power-of-ten comparisons.
    """
    n = abs(n)
    if n < 10:
        return 1
    k = n.bit_length() * 30103 // 100000
    while 10**k > n:
        k -= 1
    while 10 ** (k + 1) <= n:
        k += 1
    return k + 1


def correct_digits(t, cap: int = DEFAULT_DIGIT_CAP) -> int:
    """The largest k <= cap with |t - sqrt(2)| < 10**-k, decided exactly.

    Scaling by q = den * 10**k reduces the question to locating the integer
    num * 10**k within one `den` of floor(sqrt(2 * q**2)); both bounds are
    strict because sqrt(2) is irrational.  Returns 0 when not even
    |t - sqrt(2)| < 1 holds.
    """
    t = _positive_fraction(t)
    if cap < 1:
        raise ValueError(f"cap must be >= 1, got {cap}")
    num, den = t.numerator, t.denominator
    digits = 0
    for k in range(1, cap + 1):
        scaled_num = num * 10**k
        scaled_den = den * 10**k
        floor_sqrt2 = isqrt(2 * scaled_den * scaled_den)
        if scaled_num - den <= floor_sqrt2 and scaled_num + den >= floor_sqrt2 + 1:
            digits = k
        else:
            break
    return digits


def side_of_sqrt2(t) -> str:
    """'under' or 'over', by the exact sign of num**2 - 2*den**2."""
    t = _positive_fraction(t)
    return "under" if t * t < 2 else "over"


def cf_convergent_sqrt2(n: int) -> Fraction:
    """The n-th convergent of the continued fraction [1; 2, 2, 2, ...].

    These are exactly the diameter-to-side ratios of the pair sequence,
    which makes the convergent recurrence an independent oracle for it.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    num, num_prev = 1, 1
    den, den_prev = 1, 0
    for _ in range(n - 1):
        num, num_prev = 2 * num + num_prev, num
        den, den_prev = 2 * den + den_prev, den
    return Fraction(num, den)


@dataclass(frozen=True)
class ReportRow:
    step: int
    value: Fraction
    correct_digits: int
    side_of_sqrt2: str


@dataclass(frozen=True)
class ConvergenceReport:
    """Per-step record of one approximation run: value, digits, side."""

    method: str
    start: Fraction
    rows: tuple[ReportRow, ...]

    def to_csv(self, digits: int = DEFAULT_DECIMAL_DIGITS) -> str:
        lines = ["step,value_num,value_den,decimal_value,correct_digits,side"]
        for row in self.rows:
            lines.append(
                f"{row.step},{row.value.numerator},{row.value.denominator},"
                f"{decimal_string(row.value, digits)},{row.correct_digits},"
                f"{row.side_of_sqrt2}"
            )
        return "\n".join(lines) + "\n"

    def to_json_dict(self, digits: int = DEFAULT_DECIMAL_DIGITS) -> dict:
        return {
            "method": self.method,
            "start": str(self.start),
            "rows": [
                {
                    "step": str(row.step),
                    "value_num": str(row.value.numerator),
                    "value_den": str(row.value.denominator),
                    "decimal_value": decimal_string(row.value, digits),
                    "correct_digits": str(row.correct_digits),
                    "side": row.side_of_sqrt2,
                }
                for row in self.rows
            ],
        }


_METHOD_STEPS = {
    "babylonian": babylonian_step,
    "side_diameter": sd_ratio_step,
}


def run_method(method: str, start, steps: int, cap: int = DEFAULT_DIGIT_CAP) -> ConvergenceReport:
    """Iterate one method `steps` times from `start`, recording each iterate."""
    if method not in _METHOD_STEPS:
        raise ValueError(f"unknown method {method!r}")
    start = _positive_fraction(start)
    if steps < 0:
        raise ValueError(f"steps must be >= 0, got {steps}")
    advance = _METHOD_STEPS[method]
    rows = []
    value = start
    for i in range(1, steps + 1):
        value = advance(value)
        rows.append(ReportRow(i, value, correct_digits(value, cap), side_of_sqrt2(value)))
    return ConvergenceReport(method, start, tuple(rows))


def compare_methods(start, steps: int, cap: int = DEFAULT_DIGIT_CAP) -> tuple[ConvergenceReport, ConvergenceReport]:
    """Run both iterations from the same start; (babylonian, side_diameter)."""
    return (
        run_method("babylonian", start, steps, cap),
        run_method("side_diameter", start, steps, cap),
    )


def decimal_string(t, digits: int = DEFAULT_DECIMAL_DIGITS) -> str:
    """Decimal rendering with `digits` places, exact, truncated toward zero."""
    t = Fraction(t)
    if digits < 0:
        raise ValueError(f"digits must be >= 0, got {digits}")
    sign = "-" if t < 0 else ""
    whole, rem = divmod(abs(t.numerator), t.denominator)
    if digits == 0:
        return f"{sign}{whole}"
    frac = rem * 10**digits // t.denominator
    return f"{sign}{whole}.{frac:0{digits}d}"


def _positive_fraction(t) -> Fraction:
    t = Fraction(t)
    if t <= 0:
        raise ValueError(f"value must be positive, got {t}")
    return t


def _rational_sqrt(q: Fraction) -> Fraction | None:
    root_num = isqrt(q.numerator)
    root_den = isqrt(q.denominator)
    if root_num * root_num == q.numerator and root_den * root_den == q.denominator:
        return Fraction(root_num, root_den)
    return None
