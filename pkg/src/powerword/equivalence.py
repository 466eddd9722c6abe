"""Deciding when two power generating sets give comparable word metrics.

For a dependent pair (some a**m == b**n) the metrics are within a constant
factor of each other, and ``equivalence_certificate`` computes explicit
constants: every power of a costs at most H_A as a word over powers of b,
every power of b at most H_B over powers of a, K = max of the two.  For an
independent pair no constant works; ``distortion_table`` tabulates the
growth that rules one out, row by row, with the block count as the certified
lower bound on each word length.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .digits import block_count, check_base
from .errors import HypothesisViolation, SearchBudgetExceeded
from .powersearch import multiplicative_dependence
from .wordlen import distance, minimal_length

__all__ = [
    "DistortionTable",
    "EquivalenceCertificate",
    "decide_equivalence",
    "distortion_table",
    "equivalence_certificate",
    "sampled_bilipschitz_check",
]


@dataclass(frozen=True)
class EquivalenceCertificate:
    """Explicit constants comparing the word metrics of bases a and b.

    m, n give the exact identity a**m == b**n.  H_A bounds the base-b word
    length of every power of a, H_B the base-a word length of every power of
    b; K = max(H_A, H_B) works in both directions of the two-sided distance
    comparison.
    """

    a: int
    b: int
    m: int
    n: int
    H_A: int
    H_B: int
    K: int


def decide_equivalence(a: int, b: int) -> bool:
    """True iff the word metrics for bases a and b are within a constant
    factor of each other, i.e. iff a**m == b**n for some positive m, n."""
    return multiplicative_dependence(a, b).dependent


def equivalence_certificate(a: int, b: int, check_range: int = 60) -> EquivalenceCertificate:
    """Equivalence constants for a dependent pair, verified up to check_range.

    H_A is one more than the largest base-b word length among the powers
    a**0 .. a**(m-1): every higher power splits off a**(q*m) = b**(q*n)
    costing a single generator.  H_B is built symmetrically.  Both bounds
    are then re-checked for every exponent up to ``check_range``; a failure
    raises AssertionError since it cannot happen if the construction is
    sound.
    """
    check_base(a)
    check_base(b)
    dep = multiplicative_dependence(a, b)
    if not dep.dependent:
        raise HypothesisViolation(
            f"bases {a} and {b} are multiplicatively independent; "
            "no equivalence constants exist"
        )
    m, n = dep.witness
    h_a = 1 + max(minimal_length(a**r, b).length for r in range(m))
    h_b = 1 + max(minimal_length(b**s, a).length for s in range(n))
    for i in range(check_range + 1):
        if minimal_length(a**i, b).length > h_a:
            raise AssertionError(f"bound {h_a} fails at {a}**{i}")
        if minimal_length(b**i, a).length > h_b:
            raise AssertionError(f"bound {h_b} fails at {b}**{i}")
    return EquivalenceCertificate(a=a, b=b, m=m, n=n, H_A=h_a, H_B=h_b, K=max(h_a, h_b))


@dataclass(frozen=True)
class DistortionTable:
    """Rows (j, base-a word length of b**j, block count of b**j).

    Boundedness of the length column characterizes equivalence of the two
    metrics; the block column is the certified lower bound per row.
    """

    a: int
    b: int
    rows: tuple[tuple[int, int, int], ...]

    @property
    def sup_so_far(self) -> int:
        return max((length for _, length, _ in self.rows), default=0)


def distortion_table(
    a: int, b: int, j_max: int, max_digits: int = 2_000_000
) -> DistortionTable:
    """Exact length and block count of b**j in base a for j = 1..j_max.

    Refuses (SearchBudgetExceeded) when the top row would need more than
    ``max_digits`` digits.  Rows are emitted in ascending j regardless of
    how the computation is scheduled.
    """
    check_base(a)
    check_base(b)
    if j_max < 1:
        raise ValueError("j_max must be positive")
    est_digits = int(j_max * math.log(b) / math.log(a)) + 1
    if est_digits > max_digits:
        raise SearchBudgetExceeded(
            f"distortion rows would need about {est_digits} digits "
            f"(budget {max_digits})"
        )
    rows = []
    power = 1
    for j in range(1, j_max + 1):
        power *= b
        length = minimal_length(power, a).length
        blocks = block_count(power, a)
        if blocks > length:
            raise AssertionError(f"row {j}: block count {blocks} exceeds length {length}")
        rows.append((j, length, blocks))
    return DistortionTable(a, b, tuple(rows))


def sampled_bilipschitz_check(a: int, b: int, K: int, samples) -> bool:
    """True iff every sampled pair (x, y) satisfies the two-sided comparison
    d_b <= K * d_a and d_a <= K * d_b between the two word distances."""
    check_base(a)
    check_base(b)
    if isinstance(K, bool) or not isinstance(K, int) or K < 1:
        raise ValueError(f"K must be an integer >= 1, got {K!r}")
    for x, y in samples:
        d_a = distance(x, y, a)
        d_b = distance(x, y, b)
        if d_b > K * d_a or d_a > K * d_b:
            return False
    return True
