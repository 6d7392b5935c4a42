"""
Non-decreasing parking functions: the quotient of the anti-sorting monoid
by the extra relation pi_i pi_{i+1} pi_i = pi_i pi_{i+1}.

An element is an order-preserving, regressive self-map of {1..n}, stored as
the tuple of its images.  The monoid operation is function composition with
the right factor applied first; that orientation is the one under which the
assignment pi_i -> e_i respects all defining relations plus the quotient
relation, and it is locked in by ``check_quotient_relations`` (run once per
size before any generator is handed out).

The algebra of this monoid carries the masked-word check: masked versions
of the up-down word are idempotent here outright, not merely demipotent.
"""

from __future__ import annotations

import functools
import math
from collections import defaultdict
from dataclasses import dataclass
from typing import Iterable, Sequence

from .diagrams import all_diagrams, check_diagram, universal_word
from .permutations import longest_element, reduced_word

NdpfMap = tuple[int, ...]


def is_ndpf(images: Sequence[int]) -> bool:
    """
    Regressive (f(i) <= i) and order-preserving (f(i) <= f(j) for i <= j).

    >>> is_ndpf((1, 1, 3))
    True
    >>> is_ndpf((1, 2, 1))
    False
    """
    n = len(images)
    return (
        all(1 <= images[i] <= i + 1 for i in range(n))
        and all(images[i] <= images[i + 1] for i in range(n - 1))
    )


def check_ndpf(images: Sequence[int]) -> NdpfMap:
    f = tuple(images)
    if not is_ndpf(f):
        raise ValueError(f"not a non-decreasing parking function: {f}")
    return f


def ndpf_identity(n: int) -> NdpfMap:
    return tuple(range(1, n + 1))


def ndpf_compose(f: Sequence[int], g: Sequence[int]) -> NdpfMap:
    """
    Composition f after g (g applied first): the monoid product matching the
    quotient map from the anti-sorting monoid.

    >>> ndpf_compose((1, 1, 3), (1, 2, 2))
    (1, 1, 1)
    >>> ndpf_compose((1, 2, 2), (1, 1, 3))
    (1, 1, 2)
    """
    if len(f) != len(g):
        raise ValueError(f"size mismatch: {len(f)} vs {len(g)}")
    return tuple(f[v - 1] for v in g)


def ndpf_generator(i: int, n: int) -> NdpfMap:
    """
    The image of pi_i: sends i+1 down to i and fixes everything else.

    >>> ndpf_generator(1, 3)
    (1, 1, 3)
    """
    if not 1 <= i <= n - 1:
        raise ValueError(f"generator index {i} out of range 1..{n - 1}")
    check_quotient_relations(n)
    return tuple(i if v == i + 1 else v for v in range(1, n + 1))


def _raw_generator(i: int, n: int) -> NdpfMap:
    return tuple(i if v == i + 1 else v for v in range(1, n + 1))


@functools.lru_cache(maxsize=None)
def check_quotient_relations(n: int) -> bool:
    """
    Verify that pi_i -> e_i under the chosen composition order satisfies
    idempotence, commutation, the braid relation, and the extra quotient
    relation.  A failure here means the composition convention is wrong.
    """
    gens = {i: _raw_generator(i, n) for i in range(1, n)}
    for i in range(1, n):
        e = gens[i]
        if ndpf_compose(e, e) != e:
            raise AssertionError(f"e_{i} not idempotent at n={n}")
        for j in range(1, n):
            if abs(i - j) > 1 and ndpf_compose(gens[i], gens[j]) != ndpf_compose(
                gens[j], gens[i]
            ):
                raise AssertionError(f"e_{i}, e_{j} do not commute at n={n}")
        if i + 1 < n:
            a, b = gens[i], gens[i + 1]
            aba = ndpf_compose(ndpf_compose(a, b), a)
            bab = ndpf_compose(ndpf_compose(b, a), b)
            ab = ndpf_compose(a, b)
            if aba != bab:
                raise AssertionError(f"braid relation fails at i={i}, n={n}")
            if aba != ab:
                raise AssertionError(f"quotient relation fails at i={i}, n={n}")
    return True


def ndpf_from_word(word: Iterable[int], n: int) -> NdpfMap:
    """Image of pi_w: compose the generators along the word."""
    result = ndpf_identity(n)
    for i in word:
        result = ndpf_compose(result, ndpf_generator(i, n))
    return result


def catalan(n: int) -> int:
    """
    >>> [catalan(k) for k in range(1, 6)]
    [1, 2, 5, 14, 42]
    """
    return math.comb(2 * n, n) // (n + 1)


@functools.lru_cache(maxsize=None)
def ndpf_enumerate(n: int) -> tuple[NdpfMap, ...]:
    """
    All order-preserving regressive self-maps, in lexicographic order.
    Their number is the n-th Catalan number.

    >>> ndpf_enumerate(3)
    ((1, 1, 1), (1, 1, 2), (1, 1, 3), (1, 2, 2), (1, 2, 3))
    """
    out: list[NdpfMap] = []

    def extend(prefix: list[int]) -> None:
        if len(prefix) == n:
            out.append(tuple(prefix))
            return
        lo = prefix[-1] if prefix else 1
        for v in range(lo, len(prefix) + 2):
            prefix.append(v)
            extend(prefix)
            prefix.pop()

    extend([])
    return tuple(out)


def generated_submonoid(n: int) -> set[NdpfMap]:
    """Closure of the generators under composition (plus the identity)."""
    check_quotient_relations(n)
    gens = [_raw_generator(i, n) for i in range(1, n)]
    elements = {ndpf_identity(n)}
    frontier = list(elements)
    while frontier:
        fresh = []
        for f in frontier:
            for g in gens:
                h = ndpf_compose(f, g)
                if h not in elements:
                    elements.add(h)
                    fresh.append(h)
        frontier = fresh
    return elements


def ndpf_idempotents(n: int) -> list[NdpfMap]:
    return [f for f in ndpf_enumerate(n) if ndpf_compose(f, f) == f]


def idempotent_images_of_longest_elements(n: int) -> dict[frozenset, NdpfMap]:
    """The quotient images of the parabolic longest elements, keyed by J."""
    out = {}
    for mask in range(1 << (n - 1)):
        J = frozenset(i + 1 for i in range(n - 1) if mask >> i & 1)
        out[J] = ndpf_from_word(reduced_word(longest_element(J, n)), n)
    return out


# -- the monoid algebra -------------------------------------------------------------


def ndpf_algebra_multiply(
    a: dict[NdpfMap, int], b: dict[NdpfMap, int]
) -> dict[NdpfMap, int]:
    """Bilinear extension of composition; same sparse-dict shape as the
    main algebra, keyed by image tuples."""
    acc: dict[NdpfMap, int] = defaultdict(int)
    for f, cf in a.items():
        for g, cg in b.items():
            acc[ndpf_compose(f, g)] += cf * cg
    return {f: c for f, c in acc.items() if c != 0}


def masked_ndpf_element(word: Sequence[int], diagram: str) -> dict[NdpfMap, int]:
    """Masked product of e_i and (1 - e_i) in the monoid algebra."""
    check_diagram(diagram)
    n = len(diagram) + 1
    ident = ndpf_identity(n)
    result: dict[NdpfMap, int] = {ident: 1}
    for i in word:
        e = ndpf_generator(i, n)
        factor = {e: 1} if diagram[i - 1] == "+" else {ident: 1, e: -1}
        result = ndpf_algebra_multiply(result, factor)
    return result


@dataclass
class NdpfMaskedWordReport:
    n: int
    word: tuple[int, ...]
    monoid_size: int
    catalan_number: int
    idempotent_count: int
    all_idempotent: bool
    failures: list[str]

    @property
    def passed(self) -> bool:
        return (
            self.all_idempotent
            and self.monoid_size == self.catalan_number
            and self.idempotent_count == 2 ** (self.n - 1)
        )

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "word": list(self.word),
            "monoid_size": self.monoid_size,
            "catalan_number": self.catalan_number,
            "idempotent_count": self.idempotent_count,
            "all_idempotent": self.all_idempotent,
            "failures": self.failures,
            "passed": self.passed,
        }


def ndpf_masked_word_check(n: int) -> NdpfMaskedWordReport:
    """
    For every diagram, form the masked version of the up-down word in the
    parking-function algebra and check it is idempotent on the nose.
    """
    word = universal_word(n)
    failures = []
    for diagram in all_diagrams(n):
        x = masked_ndpf_element(word, diagram)
        if ndpf_algebra_multiply(x, x) != x:
            failures.append(diagram)
    return NdpfMaskedWordReport(
        n=n,
        word=word,
        monoid_size=len(ndpf_enumerate(n)),
        catalan_number=catalan(n),
        idempotent_count=len(ndpf_idempotents(n)),
        all_idempotent=not failures,
        failures=failures,
    )


if __name__ == "__main__":
    import doctest

    doctest.testmod()
