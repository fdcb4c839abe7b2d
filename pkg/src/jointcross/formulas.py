"""Closed-form crossing counts for the canonical gadget drawings.

The double-anchored gadget pair is parameterized by a ladder length k >= 2 and
a big weight T. Its ladder carries rung weights

    t_0 = k^3,   t_j = t_{j-1} + j   (so t_j = k^3 + j(j+1)/2),

and the canonical drawing of the pair has total crossing weight

    (4k^3 + k^2 + k) * T^3 + beta(k, T)

with beta(k, T) = k(k+1) T^2 + gamma(k) T and

    gamma(k) = (12k^5 - 11k^4 + 2k^3 - k^2 - 2k) / 12.

Every closed form here has an independent "sum form" companion that evaluates
the defining summation term by term; the test suite and the `verify counts`
command insist the two routes agree. That is the point of this module: the
polynomial identities are easy to get silently wrong, the sums are not.

Derivation sketch of the sum forms (matching the drawing, not trusted from the
closed forms): the two ladder end rungs cross anchor-frame edges of weight T^3
each end twice, giving (2 t_0 + 2 t_k) T^3; each of the k ladder verticals of
weight k+1 crosses one row edge of weight T^2, giving k(k+1) T^2; interior
rung j crosses a column edge of weight j*T on the way out and the mirror
image contributes the (k-j) column, giving gamma(k) = sum_j 2 (k-j) t_j.
"""

from __future__ import annotations

from typing import Sequence


class FormulaError(ValueError):
    pass


def _check_k(k: int) -> None:
    if k < 2:
        raise FormulaError(f"ladder parameter k must be >= 2, got {k}")


def _check_t(big_t: int) -> None:
    if big_t < 1:
        raise FormulaError(f"weight parameter T must be >= 1, got {big_t}")


def ladder_weight_start(k: int) -> int:
    """t_0 = k^3."""
    _check_k(k)
    return k**3


def ladder_weight_seq(k: int) -> tuple[int, ...]:
    """(t_0, ..., t_k) with t_j = t_{j-1} + j."""
    _check_k(k)
    seq = [k**3]
    for j in range(1, k + 1):
        seq.append(seq[-1] + j)
    return tuple(seq)


def gamma(k: int) -> int:
    """Closed form of the T-linear crossing term."""
    _check_k(k)
    num = 12 * k**5 - 11 * k**4 + 2 * k**3 - k**2 - 2 * k
    if num % 12 != 0:
        raise FormulaError(f"gamma numerator not divisible by 12 at k={k}")
    return num // 12


def gamma_sum(k: int) -> int:
    """gamma(k) evaluated as its defining sum: 2 * sum_{j=1}^{k-1} (k-j) t_j."""
    _check_k(k)
    t = ladder_weight_seq(k)
    return 2 * sum((k - j) * t[j] for j in range(1, k))


def beta(k: int, big_t: int) -> int:
    """k(k+1) T^2 + gamma(k) T."""
    _check_k(k)
    _check_t(big_t)
    return k * (k + 1) * big_t**2 + gamma(k) * big_t


def beta_sum(k: int, big_t: int) -> int:
    """beta via per-crossing summation instead of the closed gamma form."""
    _check_k(k)
    _check_t(big_t)
    t = ladder_weight_seq(k)
    rung_x_row = sum((k + 1) * big_t**2 for _ in range(k))
    out = rung_x_row
    for j in range(1, k):
        # top path edge (weight t_{k-j}) crosses the column of weight j*T,
        # bottom path edge (weight t_j) crosses the column of weight (k-j)*T
        out += t[k - j] * (j * big_t) + t[j] * ((k - j) * big_t)
    return out


def canonical_fa_count(k: int, big_t: int) -> int:
    """Crossing weight of the canonical drawing of the anchored gadget pair."""
    _check_k(k)
    _check_t(big_t)
    return (4 * k**3 + k**2 + k) * big_t**3 + beta(k, big_t)


def canonical_fa_count_sum(k: int, big_t: int) -> int:
    """Same number, assembled crossing by crossing from the ladder weights."""
    t = ladder_weight_seq(k)
    lead = (2 * t[0] + 2 * t[k]) * big_t**3
    return lead + beta_sum(k, big_t)


def canonical_fplus_count(k: int, big_t: int) -> int:
    """The mirror-joined gadget: two copies of the drawing, no new crossings."""
    return 2 * canonical_fa_count(k, big_t)


def canonical_fplus_count_sum(k: int, big_t: int) -> int:
    return 2 * canonical_fa_count_sum(k, big_t)


# ---------------------------------------------------------------------------
# the ordering lemma


def ordering_gap(a: Sequence[int], b: Sequence[int], perm: Sequence[int]) -> int:
    """sum_i a_i * b_{perm(i)}  -  sum_i a_i * b_i.

    For strictly increasing a and strictly decreasing b the identity pairing
    is the unique minimum, and any other pairing loses by at least the
    smallest difference between two a-values (equivalently b-values); the
    tests exercise exactly that lower bound.
    """
    n = len(a)
    if len(b) != n or sorted(perm) != list(range(n)):
        raise FormulaError("ordering_gap needs |a| = |b| and a permutation of 0..n-1")
    return sum(a[i] * b[perm[i]] for i in range(n)) - sum(a[i] * b[i] for i in range(n))


def min_pair_gap(values: Sequence[int]) -> int:
    """min_{i != j} |v_i - v_j|; the lemma's lower bound for non-identity."""
    if len(values) < 2:
        raise FormulaError("need at least two values")
    s = sorted(values)
    return min(s[i + 1] - s[i] for i in range(len(s) - 1))
