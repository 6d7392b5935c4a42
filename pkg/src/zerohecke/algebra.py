"""
The monoid algebra of the anti-sorting operators with exact integer
coefficients.

Elements are sparse integer combinations of monoid basis elements, keyed by
permutations in one-line notation.  Every construction in this package stays
inside the integral form generated by pi_i and (1 - pi_i), so coefficients
are plain Python ints and nothing ever rounds.

Products route the right factor through its reduced word (or through the
full multiplication table when a caller has materialised it); the numpy
fast path is only taken when an l1-norm bound proves that every partial sum
fits in int64, otherwise the same accumulation runs on Python bignums.
"""

from __future__ import annotations

import functools
from collections import defaultdict
from typing import Iterable, Mapping, Sequence

import numpy as np

from .permutations import (
    Perm,
    check_one_line,
    identity_perm,
    longest_element,
    reduced_word,
)
from .tables import MonoidTables, mask_of, monoid_tables

_INT64_SAFE = 2**62


class NotDemipotentError(RuntimeError):
    """Raised when powers of an element fail to stabilise within the cap."""

    def __init__(self, cap: int, diagram: str | None = None):
        self.cap = cap
        self.diagram = diagram
        where = f" (diagram {diagram!r})" if diagram is not None else ""
        super().__init__(f"no fixpoint power within cap={cap}{where}")


class AlgebraElement:
    """
    Immutable sparse element of the algebra on n letters.

    ``terms`` maps one-line permutation tuples to nonzero integers.  Do not
    mutate it; all operations return fresh elements.
    """

    __slots__ = ("n", "terms", "_hash", "_idx", "_val")

    def __init__(self, n: int, terms: Mapping[Perm, int]):
        self.n = n
        self.terms = {p: c for p, c in terms.items() if c != 0}
        self._hash = None
        self._idx = None
        self._val = None

    # -- value semantics ---------------------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return self.n == other.n and self.terms == other.terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.n, frozenset(self.terms.items())))
        return self._hash

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __repr__(self) -> str:
        if len(self.terms) <= 4:
            return f"AlgebraElement(n={self.n}, {self.terms!r})"
        return f"AlgebraElement(n={self.n}, <{len(self.terms)} terms>)"

    # -- ring operations ---------------------------------------------------

    def __add__(self, other: "AlgebraElement") -> "AlgebraElement":
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        if self.n != other.n:
            raise ValueError(f"size mismatch: {self.n} vs {other.n}")
        terms = dict(self.terms)
        for p, c in other.terms.items():
            terms[p] = terms.get(p, 0) + c
        return AlgebraElement(self.n, terms)

    def __neg__(self) -> "AlgebraElement":
        return AlgebraElement(self.n, {p: -c for p, c in self.terms.items()})

    def __sub__(self, other: "AlgebraElement") -> "AlgebraElement":
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return self + (-other)

    def __rmul__(self, c: int) -> "AlgebraElement":
        if not isinstance(c, int):
            return NotImplemented
        return AlgebraElement(self.n, {p: c * v for p, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, AlgebraElement):
            return multiply(self, other)
        if isinstance(other, int):
            return self.__rmul__(other)
        return NotImplemented

    # -- inspection ----------------------------------------------------------

    def support(self) -> list[Perm]:
        return sorted(self.terms)

    def coefficient(self, perm: Sequence[int]) -> int:
        return self.terms.get(tuple(perm), 0)

    def l1(self) -> int:
        return sum(abs(c) for c in self.terms.values())

    def coefficient_range(self) -> tuple[int, int]:
        """(min, max) over stored coefficients; (0, 0) for the zero element."""
        if not self.terms:
            return (0, 0)
        values = self.terms.values()
        return (min(values), max(values))

    # -- internals -----------------------------------------------------------

    def _arrays(self, t: MonoidTables):
        """Cached (index, coeff) arrays; coeff array is None for huge ints."""
        if self._idx is None:
            items = sorted((t.index[p], c) for p, c in self.terms.items())
            self._idx = np.array([i for i, _ in items], dtype=np.int64)
            if all(-_INT64_SAFE < c < _INT64_SAFE for _, c in items):
                self._val = np.array([c for _, c in items], dtype=np.int64)
            else:
                self._val = None
        return self._idx, self._val

    def _items_by_index(self, t: MonoidTables) -> list[tuple[int, int]]:
        return sorted((t.index[p], c) for p, c in self.terms.items())


# -- constructors -------------------------------------------------------------


def zero(n: int) -> AlgebraElement:
    return AlgebraElement(n, {})


def one(n: int) -> AlgebraElement:
    return AlgebraElement(n, {identity_perm(n): 1})


def basis_element(perm: Sequence[int]) -> AlgebraElement:
    p = check_one_line(perm)
    return AlgebraElement(len(p), {p: 1})


def element(n: int, terms: Mapping[Sequence[int], int]) -> AlgebraElement:
    """Validating constructor for externally supplied term mappings."""
    cleaned: dict[Perm, int] = {}
    for perm, coeff in terms.items():
        p = check_one_line(perm)
        if len(p) != n:
            raise ValueError(f"permutation {p} does not have size {n}")
        if not isinstance(coeff, int):
            raise ValueError(f"coefficient {coeff!r} is not an integer")
        cleaned[p] = cleaned.get(p, 0) + coeff
    return AlgebraElement(n, cleaned)


def gen_pi(i: int, n: int) -> AlgebraElement:
    """The generator pi_i as a basis element."""
    if not 1 <= i <= n - 1:
        raise ValueError(f"generator index {i} out of range 1..{n - 1}")
    p = list(range(1, n + 1))
    p[i - 1], p[i] = p[i], p[i - 1]
    return AlgebraElement(n, {tuple(p): 1})


def gen_pibar(i: int, n: int) -> AlgebraElement:
    """The complementary generator 1 - pi_i."""
    return one(n) - gen_pi(i, n)


def from_word(word: Iterable[int], n: int) -> AlgebraElement:
    """The basis element pi_w for a word in the generators."""
    t = monoid_tables(n)
    cur = t.identity
    for i in word:
        if not 1 <= i <= n - 1:
            raise ValueError(f"generator index {i} out of range 1..{n - 1}")
        cur = int(t.right[cur, i - 1])
    return AlgebraElement(n, {t.perms[cur]: 1})


def w_plus(J: Iterable[int], n: int) -> AlgebraElement:
    """Longest element of the parabolic submonoid on J, in the pi generators."""
    return basis_element(longest_element(J, n))


def w_minus(J: Iterable[int], n: int) -> AlgebraElement:
    """
    Longest element on J in the (1 - pi) generators: the product of
    gen_pibar along a reduced word of the parabolic longest element.
    """
    result = one(n)
    for i in reduced_word(longest_element(J, n)):
        result = multiply(result, gen_pibar(i, n))
    return result


# -- the product ---------------------------------------------------------------


def add(a: AlgebraElement, b: AlgebraElement) -> AlgebraElement:
    return a + b


def scale(c: int, a: AlgebraElement) -> AlgebraElement:
    return c * a


def multiply(a: AlgebraElement, b: AlgebraElement) -> AlgebraElement:
    """
    The algebra product, extending the monoid product bilinearly.

    Exactness: the int64 path is taken only when l1(a) * l1(b) < 2**62,
    which bounds every intermediate partial sum; otherwise the identical
    accumulation runs on Python integers.
    """
    if not isinstance(a, AlgebraElement) or not isinstance(b, AlgebraElement):
        raise TypeError("multiply expects two AlgebraElements")
    if a.n != b.n:
        raise ValueError(f"size mismatch: {a.n} vs {b.n}")
    if not a.terms or not b.terms:
        return zero(a.n)
    t = monoid_tables(a.n)
    ia, va = a._arrays(t)
    ib, vb = b._arrays(t)
    if va is None or vb is None or a.l1() * b.l1() >= _INT64_SAFE:
        return _multiply_bigint(a, b, t)
    if t.has_cayley() and min(len(ia), len(ib)) > 4:
        acc = _cayley_accumulate(t, ia, va, ib, vb)
    else:
        acc = _replay_accumulate(t, ia, va, ib, vb)
    nz = np.nonzero(acc)[0]
    perms = t.perms
    return AlgebraElement(a.n, {perms[i]: int(acc[i]) for i in nz.tolist()})


def _replay_accumulate(t, ia, va, ib, vb) -> np.ndarray:
    """Translate the smaller-word side through the generator tables."""
    acc = np.zeros(t.size, dtype=np.int64)
    len_a = int(t.length[ia].sum())
    len_b = int(t.length[ib].sum())
    if len_b * len(ia) <= len_a * len(ib):
        right = t.right
        for k in range(len(ib)):
            cur = ia
            for i in t.word[int(ib[k])]:
                cur = right[cur, i - 1]
            np.add.at(acc, cur, va * int(vb[k]))
    else:
        left = t.left
        for k in range(len(ia)):
            cur = ib
            for i in reversed(t.word[int(ia[k])]):
                cur = left[cur, i - 1]
            np.add.at(acc, cur, vb * int(va[k]))
    return acc


def _cayley_accumulate(t, ia, va, ib, vb) -> np.ndarray:
    acc = np.zeros(t.size, dtype=np.int64)
    cay = t.cayley()
    chunk = max(1, 4_000_000 // len(ib))
    for start in range(0, len(ia), chunk):
        rows = cay[np.ix_(ia[start : start + chunk], ib)]
        prods = np.multiply.outer(va[start : start + chunk], vb)
        np.add.at(acc, rows.ravel(), prods.ravel())
    return acc


def _multiply_bigint(a, b, t) -> AlgebraElement:
    """Exact fallback for coefficients beyond the int64 guard."""
    acc: dict[int, int] = defaultdict(int)
    items_a = a._items_by_index(t)
    ia = np.array([i for i, _ in items_a], dtype=np.int64)
    coeffs_a = [c for _, c in items_a]
    right = t.right
    for s, cb in b._items_by_index(t):
        cur = ia
        for i in t.word[s]:
            cur = right[cur, i - 1]
        for j, ca in zip(cur.tolist(), coeffs_a):
            acc[j] += ca * cb
    perms = t.perms
    return AlgebraElement(a.n, {perms[j]: c for j, c in acc.items() if c != 0})


def is_idempotent(x: AlgebraElement) -> bool:
    return multiply(x, x) == x


def power_to_fixpoint(
    x: AlgebraElement, cap: int, diagram: str | None = None
) -> tuple[AlgebraElement, int]:
    """
    First power x**k with x**k == x**(k+1), together with the minimal such k
    (the nilpotence degree).  Raises NotDemipotentError past the cap.
    """
    if cap < 1:
        raise ValueError("cap must be at least 1")
    power = x
    for k in range(1, cap + 1):
        nxt = multiply(power, x)
        if nxt == power:
            return power, k
        power = nxt
    raise NotDemipotentError(cap, diagram)


# -- morphisms ------------------------------------------------------------------


def psi(x: AlgebraElement) -> AlgebraElement:
    """The involution sending pi_i to (1 - pi_i), extended as an algebra map."""
    t = monoid_tables(x.n)
    acc: dict[Perm, int] = defaultdict(int)
    for p, c in x.terms.items():
        for q, d in _psi_basis(x.n, t.index[p]).terms.items():
            acc[q] += c * d
    return AlgebraElement(x.n, acc)


@functools.lru_cache(maxsize=4096)
def _psi_basis(n: int, s: int) -> AlgebraElement:
    t = monoid_tables(n)
    if s == t.identity:
        return one(n)
    i = int(t.peel_letter[s])
    tail = _psi_basis(n, int(t.peel_parent[s]))
    # (1 - pi_i) * tail via one left translation
    left_col = t.left[:, i - 1]
    acc: dict[int, int] = defaultdict(int)
    for p, c in tail.terms.items():
        j = t.index[p]
        acc[j] += c
        acc[int(left_col[j])] -= c
    return AlgebraElement(n, {t.perms[j]: c for j, c in acc.items() if c != 0})


def dynkin_reverse(x: AlgebraElement) -> AlgebraElement:
    """The automorphism induced by the diagram flip i -> n - i."""
    t = monoid_tables(x.n)
    flip = t.flip
    return AlgebraElement(
        x.n, {t.perms[int(flip[t.index[p]])]: c for p, c in x.terms.items()}
    )


def phi_plus(x: AlgebraElement) -> AlgebraElement:
    """
    Evaluation map to size n-1 sending the top generator pi_{n-1} to 1:
    drop every letter n-1 from a reduced word and multiply the rest.
    """
    n = x.n
    if n < 2:
        raise ValueError("phi maps need n >= 2")
    t = monoid_tables(n)
    t2 = monoid_tables(n - 1)
    acc: dict[Perm, int] = defaultdict(int)
    for p, c in x.terms.items():
        cur = t2.identity
        for i in t.word[t.index[p]]:
            if i != n - 1:
                cur = int(t2.right[cur, i - 1])
        acc[t2.perms[cur]] += c
    return AlgebraElement(n - 1, acc)


def phi_minus(x: AlgebraElement) -> AlgebraElement:
    """
    Evaluation map to size n-1 sending the top generator pi_{n-1} to 0:
    kill basis elements whose content contains n-1, restrict the rest.
    """
    n = x.n
    if n < 2:
        raise ValueError("phi maps need n >= 2")
    t = monoid_tables(n)
    top = 1 << (n - 2)
    acc: dict[Perm, int] = defaultdict(int)
    for p, c in x.terms.items():
        if t.content_mask[t.index[p]] & top:
            continue
        acc[p[:-1]] += c
    return AlgebraElement(n - 1, acc)


def lambda_eval(J: Iterable[int], x: AlgebraElement) -> int:
    """
    The one-dimensional representation sending pi_i to 0 for i in J and to
    1 otherwise, evaluated on x.
    """
    t = monoid_tables(x.n)
    mask = mask_of(J, x.n)
    total = 0
    for p, c in x.terms.items():
        if t.content_mask[t.index[p]] & mask == 0:
            total += c
    return total


def embed(x: AlgebraElement, n: int) -> AlgebraElement:
    """Inclusion into the algebra on n letters fixing the new top points
    (generator i stays generator i)."""
    if n < x.n:
        raise ValueError(f"cannot embed size {x.n} into smaller size {n}")
    if n == x.n:
        return x
    tail = tuple(range(x.n + 1, n + 1))
    return AlgebraElement(n, {p + tail: c for p, c in x.terms.items()})


def embed_top(x: AlgebraElement, n: int) -> AlgebraElement:
    """Inclusion fixing the new bottom points instead (generator i becomes
    generator i + n - x.n); this is how the opposite-orientation family
    branches, since its diagrams grow at node 1."""
    if n < x.n:
        raise ValueError(f"cannot embed size {x.n} into smaller size {n}")
    shift = n - x.n
    if shift == 0:
        return x
    head = tuple(range(1, shift + 1))
    return AlgebraElement(
        n, {head + tuple(v + shift for v in p): c for p, c in x.terms.items()}
    )


# -- serialization ----------------------------------------------------------------


def to_json_dict(x: AlgebraElement) -> dict:
    """Schema: terms sorted by one-line key, coefficients as decimal strings."""
    return {
        "n": x.n,
        "terms": [
            {"perm": list(p), "coeff": str(x.terms[p])} for p in sorted(x.terms)
        ],
    }


def from_json_dict(data: Mapping) -> AlgebraElement:
    n = int(data["n"])
    terms: dict[Perm, int] = {}
    for entry in data["terms"]:
        p = check_one_line(entry["perm"])
        if len(p) != n:
            raise ValueError(f"permutation {p} does not have size {n}")
        if p in terms:
            raise ValueError(f"duplicate key {p} in serialized element")
        terms[p] = int(entry["coeff"])
    return AlgebraElement(n, terms)
