"""Side-and-diameter pairs: exact integer pairs (a, d) with d**2 - 2*a**2 = ±1.

The side number a and diameter number d of such a pair are the integer
stand-ins for the side and diagonal of a square, since no integer pair
satisfies d**2 = 2*a**2 exactly.  Starting from the seed (1, 1), the step

    (a, d)  ->  (a + d, 2*a + d)

produces the whole sequence (1, 1), (2, 3), (5, 7), (12, 17), (29, 41), ...
with the sign of d**2 - 2*a**2 alternating between -1 and +1.  Every
operation in this module is pure and exact; there is no floating point.

The degenerate pair (0, 1) also satisfies 1 = 2*0**2 + 1 but is excluded
here: sides are at least 1, which keeps the inverse (descent) step
well-founded and matches the classical presentation that starts at (1, 1).
"""

from dataclasses import dataclass
from typing import NamedTuple


class InvalidPairError(ValueError):
    """Raised when integers (a, d) do not form a valid side/diameter pair."""


class DescentBelowSeedError(ValueError):
    """Raised when the descent step is applied to the seed pair (1, 1)."""


@dataclass(frozen=True)
class SideDiameterPair:
    """A side number, a diameter number, and optionally their 1-based index.

    Invariants, checked on construction: a >= 1, d >= 1, d**2 - 2*a**2 is
    -1 or +1, and when the index n is known the sign equals (-1)**n.
    Coprimality of a and d follows from the sign condition, since any
    common divisor would divide d**2 - 2*a**2 = ±1.
    """

    a: int
    d: int
    index: int | None = None

    def __post_init__(self):
        if self.a < 1 or self.d < 1:
            raise InvalidPairError(
                f"side and diameter must be >= 1, got ({self.a}, {self.d})"
            )
        e = self.d * self.d - 2 * self.a * self.a
        if e not in (-1, 1):
            raise InvalidPairError(
                f"({self.a}, {self.d}) is not a side/diameter pair: "
                f"d^2 - 2a^2 = {e}, expected -1 or +1"
            )
        if self.index is not None:
            if self.index < 1:
                raise InvalidPairError(f"index must be >= 1, got {self.index}")
            if e != (-1 if self.index % 2 else 1):
                raise InvalidPairError(
                    f"index {self.index} inconsistent with sign {e:+d}"
                )

    @property
    def sign(self) -> int:
        """The value d**2 - 2*a**2, always -1 or +1."""
        return self.d * self.d - 2 * self.a * self.a


class PlatoReport(NamedTuple):
    """Gaps between N = d**2 - 1 and the two squares sitting just above it."""

    number: int
    below_rational_square: int
    below_irrational_square: int
    sign: int


class IdentityCheck(NamedTuple):
    lhs: int
    rhs: int
    holds: bool


def seed() -> SideDiameterPair:
    """The first pair (1, 1), with index 1 and sign -1."""
    return SideDiameterPair(1, 1, index=1)


def step(p: SideDiameterPair) -> SideDiameterPair:
    """Advance one pair to the next: (a, d) -> (a + d, 2*a + d).

    The diameter added to the side becomes the next side; the side taken
    twice plus the diameter becomes the next diameter.  The sign of
    d**2 - 2*a**2 is negated, and the index (when known) increments.
    """
    return SideDiameterPair(
        p.a + p.d,
        2 * p.a + p.d,
        index=None if p.index is None else p.index + 1,
    )


def descend(p: SideDiameterPair) -> SideDiameterPair:
    """Invert `step`: (a, d) -> (d - a, 2*a - d).

    Repeated descent from any pair reaches the seed; descending the seed
    itself would produce a zero side and raises DescentBelowSeedError.
    The same map sends a hypothetical solution of d**2 = 2*a**2 to a
    strictly smaller one, which is the classical descent argument for the
    irrationality of the square root of 2.
    """
    if p.d <= p.a:
        raise DescentBelowSeedError("cannot descend below the seed pair (1, 1)")
    return SideDiameterPair(
        p.d - p.a,
        2 * p.a - p.d,
        index=None if p.index is None else p.index - 1,
    )


def nth_iterative(n: int) -> SideDiameterPair:
    """The n-th pair by applying `step` n - 1 times to the seed.

    Linear in n; serves as the independent oracle for the fast `nth`.
    """
    _require_positive(n, "n")
    a, d = 1, 1
    for _ in range(n - 1):
        a, d = a + d, 2 * a + d
    return SideDiameterPair(a, d, index=n)


def nth(n: int) -> SideDiameterPair:
    """The n-th pair in O(log n) big-integer operations.

    Uses the doubling identities

        a(2n) = 2 * a(n) * d(n)        d(2n) = d(n)**2 + 2 * a(n)**2

    which are the m = n case of the addition law a(m+n) = a(m)d(n) + d(m)a(n),
    d(m+n) = d(m)d(n) + 2 a(m)a(n).  Agrees with `nth_iterative` everywhere.
    """
    _require_positive(n, "n")
    a, d = _nth_components(n)
    return SideDiameterPair(a, d, index=n)


def _nth_components(n: int) -> tuple[int, int]:
    if n == 1:
        return 1, 1
    a, d = _nth_components(n >> 1)
    a, d = 2 * a * d, d * d + 2 * a * a
    if n & 1:
        a, d = a + d, 2 * a + d
    return a, d


def generate(count: int) -> list[SideDiameterPair]:
    """The first `count` pairs, each carrying its index."""
    _require_positive(count, "count")
    out = []
    a, d = 1, 1
    for i in range(1, count + 1):
        out.append(SideDiameterPair(a, d, index=i))
        a, d = a + d, 2 * a + d
    return out


def adjacent_rational_diameter(a: int) -> int | None:
    """The integer d with |d**2 - 2*a**2| = 1, or None if a is not a side number.

    Such a d is the rational diameter adjacent to the irrational diameter
    a*sqrt(2); it exists exactly when a appears as a side in the sequence,
    and is then unique.  Implemented by walking the sequence until the side
    reaches a, so no second numeric code path is involved.
    """
    _require_positive(a, "a")
    side, diam = 1, 1
    while side < a:
        side, diam = side + diam, 2 * side + diam
    return diam if side == a else None


def plato_check(a: int, d: int) -> PlatoReport:
    """Gaps from N = d**2 - 1 up to the rational and irrational diameter squares.

    For a valid pair, N falls short of d**2 by exactly one and of 2*a**2 by
    two when the sign is -1 (the classical a = 5, d = 7, N = 48 case) but by
    zero when the sign is +1, so the sign is reported alongside the gaps.
    """
    e = d * d - 2 * a * a
    if a < 1 or d < 1 or e not in (-1, 1):
        raise InvalidPairError(
            f"({a}, {d}) is not a side/diameter pair: d^2 - 2a^2 = {e}"
        )
    n = d * d - 1
    return PlatoReport(n, d * d - n, 2 * a * a - n, e)


def encouraging_identity_check(p: SideDiameterPair) -> IdentityCheck:
    """Evaluate d**2 + d'**2 against 2*(a**2 + a'**2) for p and its successor.

    The two sides agree for every pair (the sum of two consecutive diameter
    squares is double the sum of the side squares); both values are returned
    for display along with the comparison.
    """
    nxt = step(p)
    lhs = p.d * p.d + nxt.d * nxt.d
    rhs = 2 * (p.a * p.a + nxt.a * nxt.a)
    return IdentityCheck(lhs, rhs, lhs == rhs)


def _require_positive(n: int, name: str):
    if not isinstance(n, int) or isinstance(n, bool):
        raise ValueError(f"{name} must be an integer, got {n!r}")
    if n < 1:
        raise ValueError(f"{name} must be >= 1, got {n}")
