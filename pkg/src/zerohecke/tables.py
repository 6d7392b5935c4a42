"""
Precomputed index tables for the anti-sorting monoid on n letters.

Permutations are indexed by their position in lexicographic order of the
one-line tuples (so index 0 is the identity).  The tables hold the right
and left generator actions as numpy arrays, the lex-minimal reduced words,
descent sets and contents as bitmasks, and a few derived index maps.  All
arrays are built once per size and shared read-only afterwards; everything
downstream treats them as immutable.

The full monoid multiplication table (``cayley``) is only materialised on
demand: it costs size**2 entries and pays off when many large products are
taken at the same size (n >= 6).
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass, field

import numpy as np

from .permutations import Perm, inverse, longest_element

# uint16 indexing caps the monoid size; 8! = 40320 still fits but the full
# multiplication table would not fit in memory anyway.
CAYLEY_MAX_N = 7


@dataclass
class MonoidTables:
    """Read-only bundle of per-size lookup tables."""

    n: int
    size: int
    perms: list[Perm]
    index: dict[Perm, int]
    right: np.ndarray  # (size, n-1), right[s, i-1] = index of perm_s * pi_i
    left: np.ndarray  # (size, n-1), left[s, i-1] = index of pi_i * perm_s
    length: np.ndarray  # (size,)
    word: list[tuple[int, ...]]  # lex-minimal reduced words
    peel_letter: np.ndarray  # first letter of word (0 for the identity)
    peel_parent: np.ndarray  # index of s_i * perm with i = peel_letter
    left_desc: list[int]  # bitmask, bit i-1 set when i is a left descent
    right_desc: list[int]
    content_mask: list[int]  # bitmask of letters in any reduced word
    omega: np.ndarray  # index of the idempotent power
    inv: np.ndarray  # index of the inverse permutation
    flip: np.ndarray  # index of w0 . perm . w0 (Dynkin reversal)
    w0: int
    _cayley: np.ndarray | None = field(default=None, repr=False)

    @property
    def identity(self) -> int:
        return 0

    def has_cayley(self) -> bool:
        return self._cayley is not None

    def cayley(self) -> np.ndarray:
        """
        Full multiplication table: cayley[t, s] = index of perm_t * perm_s.

        Built by one vectorised gather per element, walking up the left
        weak order (each row extends its peel parent by one left action).
        """
        if self._cayley is None:
            if self.n > CAYLEY_MAX_N:
                raise ValueError(
                    f"full multiplication table disabled for n={self.n} "
                    f"(needs {self.size}**2 entries)"
                )
            table = np.empty((self.size, self.size), dtype=np.uint16)
            table[0] = np.arange(self.size, dtype=np.uint16)
            for t in np.argsort(self.length, kind="stable")[1:]:
                i = self.peel_letter[t]
                table[t] = self.left[:, i - 1][table[self.peel_parent[t]]]
            self._cayley = table
        return self._cayley

    def product_index(self, t: int, s: int) -> int:
        """Index of perm_t * perm_s without the full table."""
        if self._cayley is not None:
            return int(self._cayley[t, s])
        cur = t
        for i in self.word[s]:
            cur = int(self.right[cur, i - 1])
        return cur


@functools.lru_cache(maxsize=None)
def monoid_tables(n: int) -> MonoidTables:
    """Build (once per size) the lookup tables for the monoid on n letters."""
    if n < 1:
        raise ValueError("n must be at least 1")
    perms = list(itertools.permutations(range(1, n + 1)))
    size = len(perms)
    index = {p: s for s, p in enumerate(perms)}

    idx_dtype = np.int32
    right = np.zeros((size, n - 1), dtype=idx_dtype)
    left = np.zeros((size, n - 1), dtype=idx_dtype)
    length = np.empty(size, dtype=np.int32)
    left_desc = [0] * size
    right_desc = [0] * size
    inv_arr = np.empty(size, dtype=idx_dtype)
    flip = np.empty(size, dtype=idx_dtype)

    for s, p in enumerate(perms):
        inv = inverse(p)
        inv_arr[s] = index[inv]
        flip[s] = index[tuple(n + 1 - v for v in reversed(p))]
        length[s] = sum(1 for i in range(n) for j in range(i + 1, n) if p[i] > p[j])
        ld = rd = 0
        for i in range(1, n):
            if p[i - 1] > p[i]:
                rd |= 1 << (i - 1)
                right[s, i - 1] = s
            else:
                q = list(p)
                q[i - 1], q[i] = q[i], q[i - 1]
                right[s, i - 1] = index[tuple(q)]
            if inv[i - 1] > inv[i]:
                ld |= 1 << (i - 1)
                left[s, i - 1] = s
            else:
                left[s, i - 1] = index[
                    tuple(i + 1 if v == i else i if v == i + 1 else v for v in p)
                ]
        left_desc[s] = ld
        right_desc[s] = rd

    # Lex-minimal words by peeling the smallest left descent, walking up in
    # length so each parent word already exists.
    word: list[tuple[int, ...]] = [()] * size
    peel_letter = np.zeros(size, dtype=idx_dtype)
    peel_parent = np.zeros(size, dtype=idx_dtype)
    content_mask = [0] * size
    by_length = sorted(range(size), key=lambda s: (int(length[s]), s))
    for s in by_length:
        ld = left_desc[s]
        if ld == 0:
            continue
        i = (ld & -ld).bit_length()  # smallest set bit, 1-based letter
        p = perms[s]
        parent = index[tuple(i + 1 if v == i else i if v == i + 1 else v for v in p)]
        peel_letter[s] = i
        peel_parent[s] = parent
        word[s] = (i,) + word[parent]
        content_mask[s] = content_mask[parent] | (1 << (i - 1))

    omega = np.empty(size, dtype=idx_dtype)
    longest_by_mask: dict[int, int] = {}
    for s in range(size):
        mask = content_mask[s]
        if mask not in longest_by_mask:
            J = {i + 1 for i in range(n - 1) if mask >> i & 1}
            longest_by_mask[mask] = index[longest_element(J, n)]
        omega[s] = longest_by_mask[mask]

    return MonoidTables(
        n=n,
        size=size,
        perms=perms,
        index=index,
        right=right,
        left=left,
        length=length,
        word=word,
        peel_letter=peel_letter,
        peel_parent=peel_parent,
        left_desc=left_desc,
        right_desc=right_desc,
        content_mask=content_mask,
        omega=omega,
        inv=inv_arr,
        flip=flip,
        w0=index[tuple(range(n, 0, -1))],
    )


def mask_of(J, n: int) -> int:
    """Bitmask of a generator subset."""
    mask = 0
    for i in J:
        if not 1 <= i <= n - 1:
            raise ValueError(f"generator index {i} out of range 1..{n - 1}")
        mask |= 1 << (i - 1)
    return mask


def set_of(mask: int) -> set[int]:
    return {i + 1 for i in range(mask.bit_length()) if mask >> i & 1}
