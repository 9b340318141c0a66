"""Predicate combinatorics over {0,1}^n and the activation function built
from them.

A compound predicate of rank r is a choice of r of the 2^n vertices.  The
number related to (touching) a fixed set of p vertices, divided by the
total count of rank-r predicates, defines a vertex-dependent activation
function that is linear for p = 1 and sigmoid-like for larger p.

All counts use exact big-integer arithmetic; binomial(a, b) follows the
falling-factorial convention (zero whenever b > a).
"""

import math
from fractions import Fraction


def n_shared(n: int, r: int, p: int) -> int:
    """Rank-r predicates containing all of a fixed set of p vertices.

    Independent of which vertices are picked (any two distinguishable
    objects are equally similar).
    """
    if p > r:
        raise ValueError(f"p={p} exceeds r={r}")
    if not 0 <= p <= r <= 2**n:
        raise ValueError(f"need 0 <= p <= r <= 2^{n}")
    return math.comb(2**n - p, r - p)


def n_related(n: int, r: int, p: int) -> int:
    """Rank-r predicates touching at least one of a fixed set of p vertices."""
    if not (1 <= r <= 2**n and 1 <= p <= 2**n):
        raise ValueError(f"need 1 <= r, p <= 2^{n}")
    return sum(math.comb(2**n - l, r - 1) for l in range(1, p + 1))


def caf(n: int, r: int, p: int) -> Fraction:
    """Activation level: fraction of rank-r predicates related to p active
    vertices.  Undefined at r = 0 (no vertex active); equals 1 at p = 2^n."""
    if r == 0:
        raise ValueError("activation is undefined if no vertex is active (r = 0)")
    if not (1 <= r <= 2**n and 1 <= p <= 2**n):
        raise ValueError(f"need 1 <= r, p <= 2^{n}")
    return Fraction(n_related(n, r, p), math.comb(2**n, r))


def ict_count(n: int, c: int) -> int:
    """Atomic predicates remaining after c independent implicational
    constraints: (3/4)^c * 2^n, integral only while 2c <= n."""
    if c < 0:
        raise ValueError("constraint count must be nonnegative")
    if 2 * c > n:
        raise ValueError(f"(3/4)^{c} * 2^{n} is not an integer")
    return 3**c * 2 ** (n - 2 * c)


def logistic(x: float, mu: float = 1.0) -> float:
    """Logistic activation 1 / (exp(-mu x) + 1), the comparison curve."""
    return 1.0 / (math.exp(-mu * x) + 1.0)


def caf_table(n: int, p_values=None, mu: float = 1.0, scale: float = 1.0):
    """Rows (r, p, numerator, denominator, value, logistic(r*scale, mu))
    for every rank r and requested p."""
    if p_values is None:
        p_values = range(1, 2**n + 1)
    rows = []
    for p in p_values:
        for r in range(1, 2**n + 1):
            f = caf(n, r, p)
            rows.append((r, p, f.numerator, f.denominator, float(f), logistic(r * scale, mu)))
    return rows
