"""Powers of one base read through the digits of another.

Multiplicative dependence is decided exactly by perfect-power extraction.
The scans walk b**n incrementally, tracking the top digit position and the
leading digit window with integer divisions only; no digit condition is ever
decided in floating point.  Scans can be partitioned into chunks and spread
over worker threads -- the merged result is identical to a sequential scan.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

from .digits import LeadingString, block_count, check_base, order
from .errors import HypothesisViolation, ScanLimitReached

__all__ = [
    "DensityReport",
    "DependenceResult",
    "block_growth_search",
    "find_aligned_exponents",
    "find_leading_exponents",
    "integer_root",
    "multiplicative_dependence",
    "perfect_power_root",
]


def integer_root(n: int, k: int) -> int:
    """Largest x with x**k <= n, for n >= 0 and k >= 1 (exact, Newton)."""
    if n < 0 or k < 1:
        raise ValueError("integer_root requires n >= 0 and k >= 1")
    if n < 2 or k == 1:
        return n
    # start strictly above the root, descend monotonically
    x = 1 << ((n.bit_length() + k - 1) // k)
    while True:
        y = ((k - 1) * x + n // x ** (k - 1)) // k
        if y >= x:
            return x
        x = y


def perfect_power_root(n: int) -> tuple[int, int]:
    """Minimal c and maximal p with n == c**p (p = 1 unless n is a perfect power)."""
    if n < 2:
        raise ValueError("perfect_power_root requires n >= 2")
    for p in range(n.bit_length() - 1, 1, -1):
        r = integer_root(n, p)
        if r**p == n:
            return r, p
    return n, 1


@dataclass(frozen=True)
class DependenceResult:
    """Outcome of the a**m == b**n decision.

    When dependent, ``witness`` is the componentwise least positive pair
    (m, n) with a**m == b**n, and ``common_root`` is (c, p, q) with
    a == c**p and b == c**q for the minimal common root c.
    """

    a: int
    b: int
    dependent: bool
    witness: tuple[int, int] | None
    common_root: tuple[int, int, int] | None


def multiplicative_dependence(a: int, b: int) -> DependenceResult:
    """Decide exactly whether a**m == b**n has positive integer solutions."""
    check_base(a)
    check_base(b)
    root_a, p = perfect_power_root(a)
    root_b, q = perfect_power_root(b)
    if root_a != root_b:
        return DependenceResult(a, b, False, None, None)
    g = math.gcd(p, q)
    m, n = q // g, p // g
    if a**m != b**n:
        raise AssertionError("dependence witness failed exact verification")
    return DependenceResult(a, b, True, (m, n), (root_a, p, q))


def _require_independent(a: int, b: int) -> None:
    dep = multiplicative_dependence(a, b)
    if dep.dependent:
        m, n = dep.witness
        raise HypothesisViolation(
            f"bases {a} and {b} are multiplicatively dependent "
            f"({a}**{m} == {b}**{n}); leading-digit scans need independent bases"
        )


def _scan_leading(
    a: int,
    b: int,
    target: LeadingString,
    lo: int,
    hi: int,
    count: int | None,
    aligned_only: bool,
) -> list[int]:
    """Exponents n in [lo, hi] whose power b**n opens with the target window.

    Walks b**n incrementally; the top digit position r is maintained by
    comparison with a running power of a, and the window is the integer
    quotient by a**(r-k+1).  ``aligned_only`` further requires r-k+1 to be a
    multiple of k.
    """
    k, t = target.k, target.value_t
    a_to_k = a**k
    hits: list[int] = []
    power = b**lo
    r = order(power, a)
    top = a ** (r + 1)
    for n in range(lo, hi + 1):
        if n > lo:
            power *= b
            while top <= power:
                top *= a
                r += 1
        if r >= k - 1 and (not aligned_only or (r - k + 1) % k == 0):
            if power // (top // a_to_k) == t:
                hits.append(n)
                if count is not None and len(hits) >= count:
                    break
    return hits


def _partitioned_scan(
    a: int,
    b: int,
    target: LeadingString,
    n_limit: int,
    aligned_only: bool,
    chunk_size: int | None,
    workers: int,
) -> list[int]:
    """Full scan of [1, n_limit], optionally chunked and threaded.

    Chunks are disjoint n-ranges; the merge sorts and deduplicates, so the
    output never depends on the partitioning.
    """
    if chunk_size is None and workers <= 1:
        return _scan_leading(a, b, target, 1, n_limit, None, aligned_only)
    size = chunk_size if chunk_size else max(1, -(-n_limit // (2 * workers)))
    spans = [(lo, min(lo + size - 1, n_limit)) for lo in range(1, n_limit + 1, size)]

    def run(span: tuple[int, int]) -> list[int]:
        return _scan_leading(a, b, target, span[0], span[1], None, aligned_only)

    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(run, spans))
    else:
        parts = [run(s) for s in spans]
    merged: set[int] = set()
    for part in parts:
        merged.update(part)
    return sorted(merged)


def find_leading_exponents(
    a: int,
    b: int,
    target: LeadingString,
    count: int,
    n_limit: int,
    chunk_size: int | None = None,
    workers: int = 1,
) -> list[int]:
    """Up to ``count`` exponents n <= n_limit, ascending, with b**n opening
    on the target digit window in base a.

    Requires multiplicatively independent bases (otherwise most windows are
    never hit and the scan would be meaningless); raises HypothesisViolation
    for dependent pairs.  Reaching n_limit early simply returns the shorter
    list.
    """
    check_base(a)
    check_base(b)
    if target.base != a:
        raise ValueError(f"target window is written in base {target.base}, not {a}")
    if count < 1:
        raise ValueError("count must be positive")
    if n_limit < 1:
        raise ValueError("n_limit must be positive")
    _require_independent(a, b)
    if chunk_size is None and workers <= 1:
        return _scan_leading(a, b, target, 1, n_limit, count, False)
    return _partitioned_scan(a, b, target, n_limit, False, chunk_size, workers)[:count]


@dataclass(frozen=True)
class DensityReport:
    """Aligned-hit census for one target window.

    An exponent n is an aligned hit when t*a**(k*m) <= b**n < (t+1)*a**(k*m)
    for some m >= 0, t being the window value; every reported hit has been
    re-verified by exact arithmetic.  The theoretical density
    log((t+1)/t) / (k*log a) is a float for reporting only.
    """

    a: int
    b: int
    target: LeadingString
    scan_limit: int
    aligned_hits: tuple[int, ...]
    empirical_density: Fraction
    theoretical_density: float


def find_aligned_exponents(
    a: int,
    b: int,
    target: LeadingString,
    n_limit: int,
    chunk_size: int | None = None,
    workers: int = 1,
) -> DensityReport:
    """Census of aligned hits among n <= n_limit, with empirical vs.
    predicted density.  Same precondition as ``find_leading_exponents``."""
    check_base(a)
    check_base(b)
    if target.base != a:
        raise ValueError(f"target window is written in base {target.base}, not {a}")
    if n_limit < 1:
        raise ValueError("n_limit must be positive")
    _require_independent(a, b)
    hits = _partitioned_scan(a, b, target, n_limit, True, chunk_size, workers)
    k, t = target.k, target.value_t
    for n in hits:
        power = b**n
        m, rem = divmod(order(power, a) - k + 1, k)
        if rem or not t * a ** (k * m) <= power < (t + 1) * a ** (k * m):
            raise AssertionError(f"aligned hit n={n} failed exact verification")
    return DensityReport(
        a=a,
        b=b,
        target=target,
        scan_limit=n_limit,
        aligned_hits=tuple(hits),
        empirical_density=Fraction(len(hits), n_limit),
        theoretical_density=math.log((t + 1) / t) / (k * math.log(a)),
    )


def block_growth_search(a: int, b: int, ell: int, n_limit: int) -> tuple[int, int]:
    """Least n <= n_limit whose power b**n has at least ``ell`` maximal
    blocks in base a, returned with that block count.

    Independent bases guarantee such n exist for every ell; for dependent
    pairs the count is bounded and the request is refused.  Raises
    ScanLimitReached when the scan exhausts n_limit.
    """
    check_base(a)
    check_base(b)
    if ell < 1:
        raise ValueError("ell must be positive")
    if n_limit < 1:
        raise ValueError("n_limit must be positive")
    _require_independent(a, b)
    power = 1
    for n in range(1, n_limit + 1):
        power *= b
        m = block_count(power, a)
        if m >= ell:
            return n, m
    raise ScanLimitReached(
        f"no exponent n <= {n_limit} gives {b}**n at least {ell} blocks in base {a}"
    )
