"""
Signed diagrams and their demipotents.

A signed diagram is a string of '+' and '-' signs, one per generator node,
read from node 1 upward (so ``"+-"`` lives at size n = 3).  Grouping the
nodes into maximal runs of constant sign and taking the parabolic longest
element of each run (in the pi generators for '+', in the (1 - pi)
generators for '-') gives the left factor L; the product in reversed block
order gives R; the demipotent for the diagram is L * R.

Raising a demipotent to successive powers stabilises at an idempotent; the
minimal exponent is the diagram's nilpotence degree.  The same idempotent
is the product of the demipotents of all prefixes of the diagram, which is
kept here as a cross-check rather than as the production path.

The ``opposite`` orientation is the same construction run along the
reversed diagram, i.e. the image of the standard demipotent under the
Dynkin flip; it yields the second, equally valid family of idempotents.
"""

from __future__ import annotations

import functools
import itertools
from typing import Sequence

from .algebra import (
    AlgebraElement,
    dynkin_reverse,
    embed,
    gen_pi,
    gen_pibar,
    multiply,
    one,
    power_to_fixpoint,
    w_minus,
    w_plus,
)
from .tables import monoid_tables

ORIENTATIONS = ("standard", "opposite")


class BranchSumViolationError(RuntimeError):
    """The two children of a diagram fail to sum back to their parent."""


def check_diagram(diagram: str) -> str:
    if not isinstance(diagram, str) or any(c not in "+-" for c in diagram):
        raise ValueError(f"diagram must be a string of '+'/'-': {diagram!r}")
    return diagram


def check_orientation(orientation: str) -> str:
    if orientation not in ORIENTATIONS:
        raise ValueError(f"orientation must be one of {ORIENTATIONS}: {orientation!r}")
    return orientation


def diagram_size(diagram: str) -> int:
    """Ambient size n for a diagram with n - 1 nodes."""
    return len(diagram) + 1


def all_diagrams(n: int) -> list[str]:
    """All 2**(n-1) diagrams at size n, ordered by binary value with '+' = 0."""
    return ["".join(signs) for signs in itertools.product("+-", repeat=n - 1)]


def plus_set(diagram: str) -> set[int]:
    return {i + 1 for i, sign in enumerate(diagram) if sign == "+"}


def flip_signs(diagram: str) -> str:
    """Exchange '+' and '-' everywhere (the Psi-image diagram)."""
    return "".join("-" if c == "+" else "+" for c in diagram)


def reverse_diagram(diagram: str) -> str:
    return diagram[::-1]


def sibling(diagram: str) -> str:
    if not diagram:
        raise ValueError("the empty diagram has no sibling")
    return diagram[:-1] + ("-" if diagram[-1] == "+" else "+")


def sign_changes(diagram: str) -> int:
    return sum(1 for a, b in zip(diagram, diagram[1:]) if a != b)


def blocks(diagram: str) -> list[tuple[tuple[int, ...], str]]:
    """
    Maximal runs of constant sign, as (node interval, sign) pairs.

    >>> blocks("++---+-")
    [((1, 2), '+'), ((3, 4, 5), '-'), ((6,), '+'), ((7,), '-')]
    """
    check_diagram(diagram)
    result = []
    start = 0
    for pos in range(1, len(diagram) + 1):
        if pos == len(diagram) or diagram[pos] != diagram[start]:
            result.append((tuple(range(start + 1, pos + 1)), diagram[start]))
            start = pos
    return result


def _block_factors(diagram: str) -> list[AlgebraElement]:
    n = diagram_size(diagram)
    factors = []
    for interval, sign in blocks(diagram):
        if sign == "+":
            factors.append(w_plus(interval, n))
        else:
            factors.append(w_minus(interval, n))
    return factors


@functools.lru_cache(maxsize=None)
def demipotent(diagram: str, orientation: str = "standard") -> AlgebraElement:
    """
    The demipotent L * R for a signed diagram (or its Dynkin flip for the
    opposite orientation).

    >>> demipotent("++").terms
    {(3, 2, 1): 1}
    """
    check_diagram(diagram)
    check_orientation(orientation)
    if orientation == "opposite":
        return dynkin_reverse(demipotent(diagram, "standard"))
    n = diagram_size(diagram)
    factors = _block_factors(diagram)
    result = one(n)
    for f in factors:
        result = multiply(result, f)
    for f in reversed(factors):
        result = multiply(result, f)
    return result


def opposite_demipotent(diagram: str) -> AlgebraElement:
    """The demipotent the construction yields on the reversed diagram."""
    return demipotent(diagram, "opposite")


def branch_children(diagram: str) -> tuple[str, str]:
    """
    The two children of a diagram, verified to satisfy the branching
    identity C(D+) + C(D-) == C(D) (after embedding the parent).
    """
    check_diagram(diagram)
    plus, minus = diagram + "+", diagram + "-"
    parent = embed(demipotent(diagram), diagram_size(diagram) + 1)
    if demipotent(plus) + demipotent(minus) != parent:
        raise BranchSumViolationError(
            f"C({plus!r}) + C({minus!r}) != C({diagram!r})"
        )
    return plus, minus


@functools.lru_cache(maxsize=None)
def _idempotent_with_degree(
    diagram: str, orientation: str
) -> tuple[AlgebraElement, int]:
    check_diagram(diagram)
    check_orientation(orientation)
    n = diagram_size(diagram)
    if 6 <= n <= 7:
        monoid_tables(n).cayley()  # large products ahead; pay for the table once
    c = demipotent(diagram, orientation)
    return power_to_fixpoint(c, max(n, 1), diagram=diagram)


def idempotent(diagram: str, orientation: str = "standard") -> AlgebraElement:
    """The idempotent that the diagram demipotent powers to."""
    return _idempotent_with_degree(diagram, orientation)[0]


def nilpotence_degree(diagram: str, orientation: str = "standard") -> int:
    """Minimal k with C**k == C**(k+1)."""
    return _idempotent_with_degree(diagram, orientation)[1]


def prefix_product_idempotent(diagram: str) -> AlgebraElement:
    """
    The product C(D_1) C(D_2) ... C(D) over all prefixes, embedded at the
    final size.  Equals the powering fixpoint; used as a cross-check.
    """
    check_diagram(diagram)
    n = diagram_size(diagram)
    result = one(n)
    for k in range(1, len(diagram) + 1):
        result = multiply(result, embed(demipotent(diagram[:k]), n))
    return result


def is_degree_one_seed(diagram: str) -> bool:
    """Single sign change, or the sibling of a diagram with one."""
    if not diagram:
        return False
    return sign_changes(diagram) == 1 or sign_changes(sibling(diagram)) == 1


def degree_bound(diagram: str) -> int:
    """
    Upper bound on the nilpotence degree: a prefix with a single sign change
    (or the sibling of one) is idempotent, and each further branching can
    raise the degree by at most one.
    """
    check_diagram(diagram)
    if len(diagram) <= 1:
        return 1
    k = max(
        (m for m in range(1, len(diagram) + 1) if is_degree_one_seed(diagram[:m])),
        default=1,
    )
    return 1 + len(diagram) - k


# -- masked words ----------------------------------------------------------------


def universal_word(n: int) -> tuple[int, ...]:
    """
    The up-down word (1, 2, ..., n-2, n-1, n-2, ..., 2, 1).

    >>> universal_word(4)
    (1, 2, 3, 2, 1)
    """
    if n < 2:
        return ()
    return tuple(range(1, n)) + tuple(range(n - 2, 0, -1))


def masked_element(word: Sequence[int], diagram: str) -> AlgebraElement:
    """
    Product over the word of pi_i or (1 - pi_i), each letter taking the sign
    its node carries in the diagram.
    """
    check_diagram(diagram)
    n = diagram_size(diagram)
    result = one(n)
    for i in word:
        if not 1 <= i <= n - 1:
            raise ValueError(f"letter {i} out of range 1..{n - 1}")
        factor = gen_pi(i, n) if diagram[i - 1] == "+" else gen_pibar(i, n)
        result = multiply(result, factor)
    return result


def masked_word_idempotents(
    word: Sequence[int], n: int, cap: int | None = None
) -> dict[str, tuple[AlgebraElement, int]]:
    """Fixpoint and degree of the masked word, per diagram."""
    cap = n if cap is None else cap
    out = {}
    for diagram in all_diagrams(n):
        out[diagram] = power_to_fixpoint(
            masked_element(word, diagram), cap, diagram=diagram
        )
    return out


def is_universal(word: Sequence[int], n: int, cap: int | None = None) -> bool:
    """
    True when the word uses every letter and all its masked versions are
    demipotent.  A masked version that fails to stabilise raises
    NotDemipotentError carrying the offending diagram.
    """
    if set(word) != set(range(1, n)):
        return False
    masked_word_idempotents(word, n, cap)
    return True


if __name__ == "__main__":
    import doctest

    doctest.testmod()
