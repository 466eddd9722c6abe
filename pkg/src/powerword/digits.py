"""Exact radix machinery: base-a expansions, leading digit windows, block runs.

Everything here is arbitrary-precision integer arithmetic; floats appear only
as seeds that are corrected exactly.  Digit vectors are little-endian
(index = exponent of the base); the most-significant-first rendering used for
display lives in the CLI, not here.

Leading digit strings follow the same ascending convention: ``gammas[k-1]``
is the most significant digit of the window, ``gammas[0]`` the least.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

__all__ = [
    "AdicExpansion",
    "BlockDecomposition",
    "LeadingString",
    "block_count",
    "block_decomposition",
    "check_base",
    "expand",
    "leading_string",
    "order",
]

# digit values must stay machine-small even though n itself is unbounded
_MAX_BASE = 1 << 62


def check_base(a: int) -> int:
    """Validate a radix argument: an integer with 2 <= a < 2**62."""
    if isinstance(a, bool) or not isinstance(a, int):
        raise ValueError(f"base must be an integer >= 2, got {a!r}")
    if a < 2 or a >= _MAX_BASE:
        raise ValueError(f"base must satisfy 2 <= a < 2**62, got {a}")
    return a


@dataclass(frozen=True)
class AdicExpansion:
    """Little-endian digit vector of a nonnegative integer in base ``base``.

    ``digits[i]`` is the coefficient of ``base**i``.  The highest stored
    digit is nonzero; zero is represented by an empty digit tuple.
    """

    base: int
    digits: tuple[int, ...]

    def __post_init__(self) -> None:
        check_base(self.base)
        if self.digits:
            if self.digits[-1] == 0:
                raise ValueError("top stored digit must be nonzero")
            for d in self.digits:
                if not 0 <= d < self.base:
                    raise ValueError(f"digit {d} out of range for base {self.base}")

    def value(self) -> int:
        """The integer this expansion represents."""
        n = 0
        for d in reversed(self.digits):
            n = n * self.base + d
        return n

    @property
    def order(self) -> int:
        """Exponent of the highest nonzero digit (undefined for zero)."""
        if not self.digits:
            raise ValueError("order of zero is undefined")
        return len(self.digits) - 1

    def digit(self, i: int) -> int:
        """Digit at exponent ``i`` (zero beyond the stored range)."""
        if i < 0:
            raise ValueError("negative exponent")
        return self.digits[i] if i < len(self.digits) else 0

    def block_runs(self) -> tuple[tuple[int, int], ...]:
        """Maximal runs ``[u, v)`` of consecutive nonzero digits, ascending."""
        runs = []
        u = None
        for i, d in enumerate(self.digits):
            if d != 0:
                if u is None:
                    u = i
            elif u is not None:
                runs.append((u, i))
                u = None
        if u is not None:
            runs.append((u, len(self.digits)))
        return tuple(runs)


@dataclass(frozen=True)
class LeadingString:
    """Top-k digit window of an expansion; ``gammas[-1]`` is most significant."""

    base: int
    gammas: tuple[int, ...]

    def __post_init__(self) -> None:
        check_base(self.base)
        if not self.gammas:
            raise ValueError("a leading string needs at least one digit")
        if not 1 <= self.gammas[-1] < self.base:
            raise ValueError("the most significant digit must be in [1, base-1]")
        for g in self.gammas:
            if not 0 <= g < self.base:
                raise ValueError(f"digit {g} out of range for base {self.base}")

    @property
    def k(self) -> int:
        return len(self.gammas)

    @property
    def value_t(self) -> int:
        """The window read as an integer, in ``[base**(k-1), base**k)``."""
        t = 0
        for g in reversed(self.gammas):
            t = t * self.base + g
        return t


@dataclass(frozen=True)
class BlockDecomposition:
    """Ascending, pairwise non-adjacent maximal nonzero-digit runs ``[u, v)``."""

    base: int
    blocks: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        check_base(self.base)
        prev_v = None
        for u, v in self.blocks:
            if not 0 <= u < v:
                raise ValueError(f"bad block [{u}, {v})")
            if prev_v is not None and u <= prev_v:
                raise ValueError("consecutive blocks must be separated by a zero digit")
            prev_v = v

    @property
    def count(self) -> int:
        return len(self.blocks)


def expand(n: int, a: int) -> AdicExpansion:
    """Base-a expansion of n >= 0 (an empty digit tuple for n = 0)."""
    check_base(a)
    if not isinstance(n, int) or isinstance(n, bool):
        raise ValueError(f"n must be an integer, got {n!r}")
    if n < 0:
        raise ValueError(f"expand requires n >= 0, got {n}")
    digits = []
    while n:
        n, d = divmod(n, a)
        digits.append(d)
    return AdicExpansion(a, tuple(digits))


def order(n: int, a: int) -> int:
    """Largest exponent i with a**i <= n, i.e. the top digit position of n >= 1."""
    check_base(a)
    if not isinstance(n, int) or isinstance(n, bool):
        raise ValueError(f"n must be an integer, got {n!r}")
    if n <= 0:
        raise ValueError(f"order requires n >= 1, got {n}")
    if a == 2:
        return n.bit_length() - 1
    # float-seeded estimate, corrected exactly
    r = max(0, int((n.bit_length() - 1) * 0.6931471805599453 / math.log(a)) - 1)
    p = a**r
    while p > n:
        p //= a
        r -= 1
    while p * a <= n:
        p *= a
        r += 1
    return r


def leading_string(n: int, a: int, k: int) -> LeadingString:
    """The top k digits of n in base a, ascending positions, most significant last.

    Defined for 1 <= k <= order(n, a) + 1 only.
    """
    check_base(a)
    if n <= 0:
        raise ValueError(f"leading_string requires n >= 1, got {n}")
    r = order(n, a)
    if not 1 <= k <= r + 1:
        raise ValueError(f"k must satisfy 1 <= k <= {r + 1} for this n, got {k}")
    t = n // a ** (r - k + 1)
    window = []
    for _ in range(k):
        t, d = divmod(t, a)
        window.append(d)
    return LeadingString(a, tuple(window))


def block_decomposition(n: int, a: int) -> BlockDecomposition:
    """Maximal-block decomposition of the base-a expansion of n >= 0."""
    return BlockDecomposition(a, expand(n, a).block_runs())


def block_count(n: int, a: int) -> int:
    """Number of maximal nonzero-digit blocks of n in base a (0 iff n = 0)."""
    return len(expand(n, a).block_runs())
