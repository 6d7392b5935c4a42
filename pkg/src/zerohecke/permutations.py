"""
Permutations of {1, ..., n} in one-line notation, and the monoid of
anti-sorting operators acting on them.

Conventions used throughout the package:

- A permutation is a tuple ``(s(1), ..., s(n))`` of the integers 1..n
  (one-line notation, 1-based values).  Most functions accept any sequence
  and return tuples.
- Generators are indexed 1..n-1.  The operator ``pi_i`` acts on the right
  on *positions*: it swaps positions i, i+1 when that creates a descent,
  and fixes the permutation otherwise.  On the left it acts on *values*.
- Products of permutations are function compositions:
  ``compose(x, y)(j) == x[y[j]]``, i.e. y is applied first.
- A word is a tuple of generator indices.  ``reduced_word`` returns the
  lexicographically minimal reduced word, obtained by repeatedly peeling
  the smallest left descent.  Words are derived data; permutations are the
  canonical keys everywhere.
"""

from __future__ import annotations

import itertools
from typing import Iterable, Iterator, Sequence

Perm = tuple[int, ...]
Word = tuple[int, ...]


def check_one_line(perm: Sequence[int]) -> Perm:
    """
    Validate one-line notation and return it as a tuple.

    >>> check_one_line([2, 1, 3])
    (2, 1, 3)
    >>> check_one_line([1, 1, 3])
    Traceback (most recent call last):
        ...
    ValueError: not a permutation of 1..3: (1, 1, 3)
    """
    p = tuple(perm)
    if sorted(p) != list(range(1, len(p) + 1)):
        raise ValueError(f"not a permutation of 1..{len(p)}: {p}")
    return p


def identity_perm(n: int) -> Perm:
    """
    >>> identity_perm(3)
    (1, 2, 3)
    """
    return tuple(range(1, n + 1))


def all_perms(n: int) -> Iterator[Perm]:
    """All permutations of {1..n} in lexicographic order."""
    return itertools.permutations(range(1, n + 1))


def inversions(perm: Sequence[int]) -> int:
    """
    Number of inversions, which equals the length of any reduced word.

    >>> inversions((3, 2, 1))
    3
    """
    return sum(
        1
        for i in range(len(perm))
        for j in range(i + 1, len(perm))
        if perm[i] > perm[j]
    )


def inverse(perm: Sequence[int]) -> Perm:
    """
    >>> inverse((2, 3, 1))
    (3, 1, 2)
    """
    inv = [0] * len(perm)
    for pos, value in enumerate(perm):
        inv[value - 1] = pos + 1
    return tuple(inv)


def compose(x: Sequence[int], y: Sequence[int]) -> Perm:
    """
    Function composition x after y: ``compose(x, y)[j] = x[y[j]]``.

    >>> compose((2, 1, 3), (1, 3, 2))
    (2, 3, 1)
    """
    if len(x) != len(y):
        raise ValueError(f"size mismatch: {len(x)} vs {len(y)}")
    return tuple(x[v - 1] for v in y)


def swap_values(perm: Sequence[int], i: int) -> Perm:
    """Exchange the values i and i+1 in one-line notation (left s_i action)."""
    repl = {i: i + 1, i + 1: i}
    return tuple(repl.get(v, v) for v in perm)


def _check_generator(i: int, n: int) -> None:
    if not 1 <= i <= n - 1:
        raise ValueError(f"generator index {i} out of range 1..{n - 1}")


def apply_pi_right(perm: Sequence[int], i: int) -> Perm:
    """
    Right action of pi_i on positions: sort positions i, i+1 into descending
    order.

    >>> apply_pi_right((1, 2, 3), 1)
    (2, 1, 3)
    >>> apply_pi_right((2, 1, 3), 1)
    (2, 1, 3)
    >>> apply_pi_right((2, 1, 3), 2)
    (2, 3, 1)
    """
    _check_generator(i, len(perm))
    if perm[i - 1] < perm[i]:
        p = list(perm)
        p[i - 1], p[i] = p[i], p[i - 1]
        return tuple(p)
    return tuple(perm)


def apply_pi_left(i: int, perm: Sequence[int]) -> Perm:
    """
    Left action of pi_i on values: fixes perm when i+1 already precedes i.

    >>> apply_pi_left(1, (1, 2, 3))
    (2, 1, 3)
    >>> apply_pi_left(1, (2, 1, 3))
    (2, 1, 3)
    >>> apply_pi_left(2, (1, 3, 2))
    (1, 3, 2)
    """
    _check_generator(i, len(perm))
    inv = inverse(perm)
    if inv[i] < inv[i - 1]:  # i+1 comes before i
        return tuple(perm)
    return swap_values(perm, i)


def right_descents(perm: Sequence[int]) -> set[int]:
    """
    >>> sorted(right_descents((2, 3, 1)))
    [2]
    """
    return {i for i in range(1, len(perm)) if perm[i - 1] > perm[i]}


def left_descents(perm: Sequence[int]) -> set[int]:
    """
    i is a left descent when the value i appears after the value i+1.

    >>> sorted(left_descents((2, 3, 1)))
    [1]
    >>> sorted(left_descents((3, 2, 1)))
    [1, 2]
    """
    inv = inverse(perm)
    return {i for i in range(1, len(perm)) if inv[i - 1] > inv[i]}


def reduced_word(perm: Sequence[int]) -> Word:
    """
    The lexicographically minimal reduced word, by repeatedly peeling the
    smallest left descent.

    >>> reduced_word((1, 2, 3))
    ()
    >>> reduced_word((3, 2, 1))
    (1, 2, 1)
    >>> reduced_word((2, 3, 1))
    (1, 2)
    """
    current = tuple(perm)
    inv = list(inverse(current))
    word = []
    while True:
        for i in range(1, len(current)):
            if inv[i - 1] > inv[i]:
                word.append(i)
                current = swap_values(current, i)
                inv[i - 1], inv[i] = inv[i], inv[i - 1]
                break
        else:
            return tuple(word)


def word_to_permutation(word: Iterable[int], n: int) -> Perm:
    """
    The monoid element pi_w as a permutation: replay the letters through the
    right action starting from the identity.

    >>> word_to_permutation((1, 2, 1), 3)
    (3, 2, 1)
    >>> word_to_permutation((2, 1, 2), 3)
    (3, 2, 1)
    """
    perm = identity_perm(n)
    for i in word:
        perm = apply_pi_right(perm, i)
    return perm


def is_reduced(word: Sequence[int], n: int) -> bool:
    """
    A word is reduced when its length equals the length of its permutation.

    >>> is_reduced((1, 2, 1), 3)
    True
    >>> is_reduced((1, 1), 3)
    False
    """
    return inversions(word_to_permutation(word, n)) == len(word)


def monoid_product(sigma: Sequence[int], tau: Sequence[int]) -> Perm:
    """
    Product pi_sigma * pi_tau in the anti-sorting monoid.

    >>> monoid_product((2, 1, 3), (2, 1, 3))
    (2, 1, 3)
    >>> monoid_product((2, 1, 3), (1, 3, 2))
    (2, 3, 1)
    """
    if len(sigma) != len(tau):
        raise ValueError(f"size mismatch: {len(sigma)} vs {len(tau)}")
    perm = tuple(sigma)
    for i in reduced_word(tau):
        perm = apply_pi_right(perm, i)
    return perm


def longest_element(J: Iterable[int], n: int) -> Perm:
    """
    Longest element of the parabolic submonoid on generator set J: reverse
    each interval of positions spanned by a run of consecutive indices in J.

    >>> longest_element(set(), 3)
    (1, 2, 3)
    >>> longest_element({1, 2}, 3)
    (3, 2, 1)
    >>> reduced_word(longest_element({1, 2, 6}, 8))
    (1, 2, 1, 6)
    """
    J = sorted(set(J))
    if J and not 1 <= J[0] <= J[-1] <= n - 1:
        raise ValueError(f"generator set {J} out of range 1..{n - 1}")
    perm = list(range(1, n + 1))
    k = 0
    while k < len(J):
        end = k
        while end + 1 < len(J) and J[end + 1] == J[end] + 1:
            end += 1
        lo, hi = J[k], J[end] + 1  # positions lo..hi get reversed
        perm[lo - 1 : hi] = perm[lo - 1 : hi][::-1]
        k = end + 1
    return tuple(perm)


def content(perm: Sequence[int]) -> set[int]:
    """
    The set of letters appearing in any reduced word (well defined).

    >>> sorted(content((2, 3, 1)))
    [1, 2]
    """
    return set(reduced_word(perm))


def monoid_omega(perm: Sequence[int]) -> Perm:
    """
    The idempotent power of pi_perm: the longest element on its content.

    >>> monoid_omega((2, 3, 1))
    (3, 2, 1)
    >>> monoid_omega((2, 1, 3))
    (2, 1, 3)
    """
    return longest_element(content(perm), len(perm))


def leq_left_weak(sigma: Sequence[int], tau: Sequence[int]) -> bool:
    """
    Left weak order: sigma <= tau when lengths add along tau * sigma^-1.

    >>> leq_left_weak((2, 1, 3), (3, 2, 1))
    True
    >>> leq_left_weak((2, 1, 3), (1, 3, 2))
    False
    """
    if len(sigma) != len(tau):
        raise ValueError(f"size mismatch: {len(sigma)} vs {len(tau)}")
    quotient = compose(tau, inverse(sigma))
    return inversions(quotient) + inversions(sigma) == inversions(tau)


if __name__ == "__main__":
    import doctest

    doctest.testmod()
