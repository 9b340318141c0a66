"""Closed-form generators for the integer sequences and scalar formulas
attached to the cube families.

Triangle tags return row lists; scalar tags return flat integer (or
Fraction) lists starting at the tag's natural index (START_INDEX).  The
Pell-type pairs A075848/A072221 are computed by integer recurrence rather
than floating powers of 3 +- 2*sqrt(2), so they stay exact at large k.
"""

import math
from dataclasses import dataclass
from fractions import Fraction

TRINOMIAL = "trinomial"
POW_TRI_MULT = "powtrimult"
A013609 = "A013609"
A038220 = "A038220"
A080956_NEG = "A080956neg"
A075848 = "A075848"
A072221 = "A072221"
A120908 = "A120908"
PROD_SEQ = "prodseq"
A003946_NEG = "A003946neg"
A060188 = "A060188"
A279019 = "A279019"
BALL_COEFF = "ballcoeff"

TRIANGLE_TAGS = (TRINOMIAL, POW_TRI_MULT, A013609, A038220)

# first index generated per scalar tag
START_INDEX = {
    A080956_NEG: 0,
    A075848: 0,
    A072221: 0,
    A120908: 2,
    PROD_SEQ: 1,
    A003946_NEG: 2,
    A060188: 0,
    A279019: 0,
    BALL_COEFF: 0,
}


def _poly_power_rows(coeffs: dict, count: int) -> list[list[int]]:
    """Rows of coefficients of p(x)^n for n = 0..count-1, where p is given
    as {exponent: coefficient}."""
    rows = [[1]]
    for _ in range(count - 1):
        prev = rows[-1]
        deg = len(prev) - 1 + max(coeffs)
        row = [0] * (deg + 1)
        for i, c in enumerate(prev):
            for e, k in coeffs.items():
                row[i + e] += c * k
        rows.append(row)
    return rows[:count]


def trinomial_row(n: int) -> list[int]:
    """Coefficients of (1 + x + x^2)^n."""
    return _poly_power_rows({0: 1, 1: 1, 2: 1}, n + 1)[n]


def powtri_mult_row(n: int) -> list[int]:
    """Multiplicities of the glued-cube Laplacian eigenvalues 0..3n:
    coefficients of (1 + x + x^3)^n, i.e. counts of n-tuples over {0,1,3}
    with a given sum.  The coefficient of 3n-1 is always zero."""
    return _poly_power_rows({0: 1, 1: 1, 3: 1}, n + 1)[n]


def _a075848(count: int) -> list[int]:
    seq = [0, 6]
    while len(seq) < count:
        seq.append(6 * seq[-1] - seq[-2])
    return seq[:count]


def _a072221(count: int) -> list[int]:
    seq = [1, 4]
    while len(seq) < count:
        seq.append(6 * seq[-1] - seq[-2] + 2)
    return seq[:count]


def ball_coefficient(n: int) -> Fraction:
    """Radius-free n-ball coefficient: f_0 = 1, f_1 = 2, f_n = 2 f_{n-2} / n."""
    if n < 0:
        raise ValueError("dimension must be nonnegative")
    f = Fraction(1) if n % 2 == 0 else Fraction(2)
    for m in range(2 + n % 2, n + 1, 2):
        f = 2 * f / m
    return f


_SCALAR_FORMULAS = {
    A080956_NEG: lambda k: (k + 1) * (k - 2) // 2,
    A120908: lambda n: 4 * (n - 1) * 3 ** (n - 2),
    PROD_SEQ: lambda n: -2 * n * 3 ** (2 * n - 2),
    A003946_NEG: lambda n: -4 * 3 ** (n - 2),
    A060188: lambda n: 3**n - n - 1,
    A279019: lambda n: n * (n + 1),
    BALL_COEFF: ball_coefficient,
}


def generate(tag: str, count: int):
    """First `count` rows (triangle tags) or terms (scalar tags)."""
    if count < 1:
        raise ValueError("count must be >= 1")
    if tag == TRINOMIAL:
        return _poly_power_rows({0: 1, 1: 1, 2: 1}, count)
    if tag == POW_TRI_MULT:
        return _poly_power_rows({0: 1, 1: 1, 3: 1}, count)
    if tag == A013609:
        return [[math.comb(n, k) * 2**k for k in range(n + 1)] for n in range(count)]
    if tag == A038220:
        return [
            [math.comb(n, k) * 3 ** (n - k) * 2**k for k in range(n + 1)]
            for n in range(count)
        ]
    if tag == A075848:
        return _a075848(count)
    if tag == A072221:
        return _a072221(count)
    if tag in _SCALAR_FORMULAS:
        start = START_INDEX[tag]
        return [_SCALAR_FORMULAS[tag](i) for i in range(start, start + count)]
    raise ValueError(f"unknown sequence tag {tag!r}")


@dataclass(frozen=True)
class ExtremesResult:
    n: int
    lambda_min: float
    lambda_max: float
    sum: int
    product: int


def pow_hamming_extremes(n: int) -> ExtremesResult:
    """Closed-form extreme eigenvalues of the 3^n-vertex Hamming distance
    matrix: [2(n-1) -+ sqrt(2(2n+1)(n+2))] * 3^(n-2), with integer sum
    4(n-1)*3^(n-2) and product -2n*3^(2n-2)."""
    if n < 2:
        raise ValueError(f"closed forms need n >= 2, got {n}")
    root = math.sqrt(2.0 * (2 * n + 1) * (n + 2))
    scale = 3.0 ** (n - 2)
    return ExtremesResult(
        n=n,
        lambda_min=(2 * (n - 1) - root) * scale,
        lambda_max=(2 * (n - 1) + root) * scale,
        sum=4 * (n - 1) * 3 ** (n - 2),
        product=-2 * n * 3 ** (2 * n - 2),
    )


@dataclass(frozen=True)
class BallMeasures:
    volume: float
    surface: float


def ball_measures(n: int, radius: float) -> BallMeasures:
    """Volume and surface of the n-ball: V = pi^floor(n/2) f_n R^n and
    S = n V / R, satisfying S_n = 2 pi R V_{n-2}."""
    if n < 0:
        raise ValueError("dimension must be nonnegative")
    if radius <= 0:
        raise ValueError("radius must be positive")
    f = float(ball_coefficient(n))
    volume = math.pi ** (n // 2) * f * radius**n
    surface = n * math.pi ** (n // 2) * f * radius ** (n - 1)
    return BallMeasures(volume=volume, surface=surface)


_KISSING_KNOWN = {1: 2, 2: 6, 3: 12, 4: 24, 8: 240, 24: 196560}


@dataclass(frozen=True)
class VectorEquilibrium:
    n: int
    v_count: int
    kissing_known: int | None
    cartesian_embeddable: bool


def vector_equilibrium(n: int) -> VectorEquilibrium:
    """External vertex count n(n+1) of the radially equilateral polytope
    family, the known kissing number where one exists, and whether the
    leftover vertices n^2 - n + 2 match the 2^n a Cartesian frame needs."""
    if n < -1:
        raise ValueError("dimension must be >= -1")
    v_count = n * (n + 1)
    recurrence = 0
    for m in range(0, n + 1):
        recurrence += 2 * m
    if n >= 0 and recurrence != v_count:
        raise RuntimeError("vertex-count recurrence disagrees with n(n+1)")
    return VectorEquilibrium(
        n=n,
        v_count=v_count,
        kissing_known=_KISSING_KNOWN.get(n),
        cartesian_embeddable=(n * n - n + 2 == 2**n),
    )


def fine_structure(x: float) -> float:
    """Cubic evaluation 4x^3 + x^2 + x; at pi it lands near the inverse
    fine-structure constant."""
    return 4.0 * x**3 + x**2 + x
