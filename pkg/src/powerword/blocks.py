"""Constructive block-count bounds for signed sums of powers.

Three constructions, each verified on the spot so callers can trust the
returned objects:

* ``normalize_dominant`` expands a dominant power minus strictly smaller
  terms and checks the resulting digit layout (top coefficient dropped by
  one, nothing below the smallest exponent, one run per subtracted term at
  most).
* ``perturbation_bound`` adds fresh powers at zero-digit positions and
  checks the block count moves by at most the number of added powers.
* ``block_certificate`` decomposes an arbitrary k-term signed sum into
  sign-flip exponents U, governed negative groups V_j and untouched
  positive exponents W, witnessing that the value has at most k maximal
  blocks.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .digits import AdicExpansion, block_count, check_base, expand
from .wordlen import SignedRepresentation

__all__ = [
    "BlockCertificate",
    "block_certificate",
    "certificate_from_representation",
    "normalize_dominant",
    "normalized_coefficients",
    "perturbation_bound",
]


def normalize_dominant(
    j_exponents: Sequence[int], digits: Sequence[int], a: int
) -> AdicExpansion:
    """Expansion of ``d0*a**j0 - sum(d_i * a**j_i for i >= 1)``.

    Exponents must be strictly decreasing and digits in [1, a-1]; the value
    is then automatically positive.  The expansion is checked against the
    closed form before returning: digit ``d0 - 1`` at the dominant exponent,
    a nonzero digit exactly at the smallest exponent, nothing below it, and
    at most ``len(j_exponents) - 1`` maximal blocks.
    """
    check_base(a)
    exps = list(j_exponents)
    digs = list(digits)
    if len(exps) != len(digs):
        raise ValueError("exponents and digits must have equal length")
    if len(exps) < 2:
        raise ValueError("need a dominant exponent and at least one subtracted term")
    if exps[-1] < 0:
        raise ValueError("exponents must be nonnegative")
    for hi, lo in zip(exps, exps[1:]):
        if hi <= lo:
            raise ValueError("exponents must be strictly decreasing")
    for d in digs:
        if not 1 <= d <= a - 1:
            raise ValueError(f"digit {d} out of range [1, {a - 1}]")

    r = len(exps) - 1
    n = digs[0] * a ** exps[0] - sum(d * a**e for d, e in zip(digs[1:], exps[1:]))
    if n <= 0:
        raise AssertionError("a dominant term cannot be outweighed by smaller exponents")
    result = expand(n, a)
    j0, jr = exps[0], exps[-1]
    if result.order > j0 or result.digit(j0) != digs[0] - 1:
        raise AssertionError("top of the expansion does not match the closed form")
    if result.digit(jr) == 0 or any(result.digit(i) for i in range(jr)):
        raise AssertionError("lowest nonzero digit must sit exactly at the smallest exponent")
    if len(result.block_runs()) > r:
        raise AssertionError("block count exceeds the number of subtracted terms")
    return result


def perturbation_bound(
    n_expansion: AdicExpansion, additions: Iterable[tuple[int, int]]
) -> tuple[int, int]:
    """Block counts (before, after) when fresh powers are added to a value.

    ``additions`` holds (position, digit) pairs; every position must carry a
    zero digit in the expansion and appear once.  The two counts always
    satisfy |after - before| <= len(additions).
    """
    if not n_expansion.digits:
        raise ValueError("the perturbed integer must be positive")
    a = n_expansion.base
    adds = list(additions)
    seen: set[int] = set()
    for w, d in adds:
        if w < 0:
            raise ValueError("positions must be nonnegative")
        if w in seen:
            raise ValueError(f"duplicate position {w}")
        seen.add(w)
        if not 1 <= d <= a - 1:
            raise ValueError(f"digit {d} out of range [1, {a - 1}]")
        if n_expansion.digit(w) != 0:
            raise ValueError(f"position {w} already carries a nonzero digit")
    before = len(n_expansion.block_runs())
    after_value = n_expansion.value() + sum(d * a**w for w, d in adds)
    after = block_count(after_value, a)
    if abs(after - before) > len(adds):
        raise AssertionError("block count moved by more than the number of added powers")
    return before, after


# (exponent, sign, digit) with sign in {+1, -1} and digit in [1, base-1]
SignedTerm = tuple[int, int, int]


@dataclass(frozen=True)
class BlockCertificate:
    """Verified decomposition showing a k-term signed power sum has at most
    k maximal blocks.

    ``U`` holds the sign-flip exponents (a positive term whose predecessor
    term is negative), ``V_parts[j]`` the negative exponents governed by
    U[j], ``W`` the remaining (all positive) exponents; ``n_parts[j]`` is
    the value of the U[j] term minus its V_parts[j] terms.  All structural
    inequalities are checked at construction time.
    """

    base: int
    terms: tuple[SignedTerm, ...]  # ascending by exponent
    n: int
    k: int
    U: tuple[int, ...]
    V_parts: tuple[tuple[int, ...], ...]
    W: tuple[int, ...]
    n_parts: tuple[int, ...]
    claimed_bound: int
    block_count: int


def block_certificate(terms: Iterable[SignedTerm], a: int) -> BlockCertificate:
    """Certificate that the signed sum of ``terms`` has at most k blocks.

    Terms are (exponent, sign, digit) with distinct exponents; the sum must
    be positive.  When every sign is positive the certificate is trivial
    (the terms are already the expansion); otherwise the decomposition is
    constructed and each of its inequalities verified, aborting loudly on
    any failure.
    """
    check_base(a)
    cleaned: list[SignedTerm] = []
    seen: set[int] = set()
    for t, sign, d in terms:
        if t < 0:
            raise ValueError("exponents must be nonnegative")
        if t in seen:
            raise ValueError(f"duplicate exponent {t}")
        seen.add(t)
        if sign not in (1, -1):
            raise ValueError(f"sign must be +1 or -1, got {sign}")
        if not 1 <= d <= a - 1:
            raise ValueError(f"digit {d} out of range [1, {a - 1}]")
        cleaned.append((t, sign, d))
    if not cleaned:
        raise ValueError("at least one term is required")
    cleaned.sort()
    n = sum(sign * d * a**t for t, sign, d in cleaned)
    if n <= 0:
        raise ValueError(f"the signed sum must be positive, got {n}")
    k = len(cleaned)
    if cleaned[-1][1] != 1:
        raise AssertionError("a positive sum must have a positive top term")

    exps = [t for t, _, _ in cleaned]
    signs = {t: s for t, s, _ in cleaned}
    digs = {t: d for t, _, d in cleaned}

    if all(s == 1 for s in signs.values()):
        u_list: list[int] = []
        v_parts: list[tuple[int, ...]] = []
        w_list = exps
        n_parts: list[int] = []
    else:
        u_list = [
            exps[i]
            for i in range(1, k)
            if signs[exps[i]] == 1 and signs[exps[i - 1]] == -1
        ]
        if not u_list:
            raise AssertionError("a mixed-sign positive sum must contain a sign flip")
        v_parts = []
        n_parts = []
        prev_u = -1
        for u in u_list:
            v_j = tuple(t for t in exps if prev_u < t < u and signs[t] == -1)
            if not v_j:
                raise AssertionError("every flip exponent must govern a negative term")
            part = digs[u] * a**u - sum(digs[v] * a**v for v in v_j)
            v_min = v_j[0]
            if not prev_u < v_min < u:
                raise AssertionError("governed exponents must sit strictly between flips")
            if not a ** (prev_u + 1) <= a**v_min <= part < a ** (u + 1):
                raise AssertionError("a governed group's value escaped its power window")
            if block_count(part, a) > len(v_j):
                raise AssertionError("a governed group produced too many blocks")
            v_parts.append(v_j)
            n_parts.append(part)
            prev_u = u
        covered = set(u_list)
        for v_j in v_parts:
            covered.update(v_j)
        stray = [t for t in exps if signs[t] == -1 and t not in covered]
        if stray:
            raise AssertionError(f"negative exponents {stray} escaped every group")
        w_list = [t for t in exps if t not in covered]
        if any(signs[w] != 1 for w in w_list):
            raise AssertionError("leftover exponents must all be positive")
        n_prime = sum(n_parts)
        if block_count(n_prime, a) > sum(len(v) for v in v_parts):
            raise AssertionError("grouped value produced more blocks than negative terms")
        if n != n_prime + sum(digs[w] * a**w for w in w_list):
            raise AssertionError("decomposition does not reassemble the value")

    blocks = block_count(n, a)
    if blocks > k:
        raise AssertionError(f"{blocks} blocks exceed the {k}-term bound")
    return BlockCertificate(
        base=a,
        terms=tuple(cleaned),
        n=n,
        k=k,
        U=tuple(u_list),
        V_parts=tuple(v_parts),
        W=tuple(w_list),
        n_parts=tuple(n_parts),
        claimed_bound=k,
        block_count=blocks,
    )


def normalized_coefficients(terms: dict[int, int], a: int) -> dict[int, int]:
    """Carry-rewrite coefficients into (-a, a) without increasing total weight.

    Each coefficient c with |c| >= a is split as c = q*a + r with q truncated
    toward zero, so |q| + |r| <= |c|; the q part carries one exponent up.
    """
    check_base(a)
    pending: dict[int, int] = {}
    for e, c in terms.items():
        if e < 0:
            raise ValueError("exponents must be nonnegative")
        if c:
            pending[e] = pending.get(e, 0) + c
    out: dict[int, int] = {}
    while pending:
        e = min(pending)
        c = pending.pop(e)
        if c == 0:
            continue
        q, r = divmod(abs(c), a)
        if c < 0:
            q, r = -q, -r
        if r:
            out[e] = r
        if q:
            pending[e + 1] = pending.get(e + 1, 0) + q
    return out


def certificate_from_representation(rep: SignedRepresentation) -> BlockCertificate:
    """Block certificate for the value of a signed representation.

    Coefficients are first carry-normalized into (-a, a) -- a rewrite that
    never increases the weight -- then split into one term per exponent, so
    the certified bound is at most the representation's weight.
    """
    norm = normalized_coefficients(rep.terms, rep.base)
    terms = [(e, 1 if c > 0 else -1, abs(c)) for e, c in norm.items()]
    cert = block_certificate(terms, rep.base)
    if cert.k > rep.weight:
        raise AssertionError("normalization increased the term count past the weight")
    return cert
