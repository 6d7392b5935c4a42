"""
Global verification of the idempotent decomposition and the representation
bookkeeping around it: orthogonality and partition of unity, ranks of the
idempotents against descent-class sizes, dimensions of the classical left
ideals, the radical, the character table of the one-dimensional
representations, and the coefficient scan.

Everything is exact: ranks of integer matrices come from fraction-free
(Bareiss) row reduction, never from floating point.
"""

from __future__ import annotations

import functools
import multiprocessing
import time
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from .algebra import (
    AlgebraElement,
    is_idempotent,
    lambda_eval,
    multiply,
    one,
    w_minus,
    w_plus,
    zero,
)
from .diagrams import all_diagrams, idempotent, nilpotence_degree, plus_set
from .permutations import Perm
from .tables import mask_of, monoid_tables


# -- ranks and traces ------------------------------------------------------------


@functools.lru_cache(maxsize=None)
def _descent_superset_counts(n: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """For each generator mask m: how many elements have D_L (resp D_R) >= m."""
    t = monoid_tables(n)
    full = 1 << (n - 1)
    count_l = [0] * full
    count_r = [0] * full
    for s in range(t.size):
        count_l[t.left_desc[s]] += 1
        count_r[t.right_desc[s]] += 1
    for bit in range(n - 1):
        b = 1 << bit
        for m in range(full):
            if not m & b:
                count_l[m] += count_l[m | b]
                count_r[m] += count_r[m | b]
    return tuple(count_l), tuple(count_r)


def trace_left(x: AlgebraElement) -> int:
    """Trace of v -> x*v on the algebra: pi_tau fixes sigma iff the content
    of tau sits inside the left descent set of sigma."""
    t = monoid_tables(x.n)
    counts = _descent_superset_counts(x.n)[0]
    return sum(c * counts[t.content_mask[t.index[p]]] for p, c in x.terms.items())


def trace_right(x: AlgebraElement) -> int:
    """Trace of v -> v*x on the algebra."""
    t = monoid_tables(x.n)
    counts = _descent_superset_counts(x.n)[1]
    return sum(c * counts[t.content_mask[t.index[p]]] for p, c in x.terms.items())


def rank_of_idempotent(e: AlgebraElement) -> int:
    """
    Rank of the regular-representation projection given by an idempotent,
    i.e. its trace.  Left and right multiplication give the same number;
    both are computed and compared.
    """
    if not is_idempotent(e):
        raise ValueError("rank_of_idempotent needs an idempotent input")
    tl, tr = trace_left(e), trace_right(e)
    if tl != tr:  # cannot happen: descent-set distributions coincide
        raise AssertionError(f"left/right traces disagree: {tl} vs {tr}")
    return tl


def descent_class(J: Iterable[int], n: int) -> list[Perm]:
    """All permutations whose left descent set is exactly J."""
    t = monoid_tables(n)
    mask = mask_of(J, n)
    return [t.perms[s] for s in range(t.size) if t.left_desc[s] == mask]


# -- exact linear algebra ----------------------------------------------------------


def matrix_rank(rows: Sequence[Sequence[int]]) -> int:
    """
    Rank of an integer matrix by fraction-free (Bareiss) elimination.
    All arithmetic stays in exact integers; divisions are exact by
    construction.
    """
    m = [list(row) for row in rows]
    if not m:
        return 0
    n_rows, n_cols = len(m), len(m[0])
    rank = 0
    prev = 1
    for col in range(n_cols):
        piv = next((r for r in range(rank, n_rows) if m[r][col] != 0), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        pivot = m[rank][col]
        for r in range(rank + 1, n_rows):
            factor = m[r][col]
            row = m[r]
            top = m[rank]
            for c in range(col, n_cols):
                row[c] = (pivot * row[c] - factor * top[c]) // prev
        prev = pivot
        rank += 1
        if rank == n_rows:
            break
    return rank


def _left_translate_rows(x: AlgebraElement) -> list[list[int]]:
    """Rows pi_sigma * x over the monoid basis, as dense integer vectors."""
    t = monoid_tables(x.n)
    cay = t.cayley()
    items = x._items_by_index(t)
    cols = np.array([i for i, _ in items], dtype=np.int64)
    vals = [c for _, c in items]
    rows = []
    for s in range(t.size):
        row = [0] * t.size
        for j, c in zip(cay[s, cols].tolist(), vals):
            row[j] += c
        rows.append(row)
    return rows


def norton_ideal_dimension(J: Iterable[int], n: int) -> int:
    """
    Dimension of the left ideal generated by w_J^- * w_Jhat^+, via the exact
    rank of all its left translates.
    """
    J = set(J)
    complement = set(range(1, n)) - J
    generator = multiply(w_minus(J, n), w_plus(complement, n))
    return matrix_rank(_left_translate_rows(generator))


def radical_dimension(n: int) -> int:
    """
    Dimension of the nilpotent radical: the span of pi_sigma - pi_omega(sigma)
    over non-idempotent sigma.  Verifies linear independence by exact row
    reduction before returning n! - 2**(n-1).
    """
    t = monoid_tables(n)
    rows = []
    for s in range(t.size):
        w = int(t.omega[s])
        if w != s:
            row = [0] * t.size
            row[s] = 1
            row[w] = -1
            rows.append(row)
    expected = t.size - 2 ** (n - 1)
    if len(rows) != expected:
        raise AssertionError(
            f"non-idempotent count {len(rows)} != {expected} at n={n}"
        )
    if matrix_rank(rows) != expected:
        raise AssertionError(f"radical basis candidates are dependent at n={n}")
    return expected


def lambda_character_table(n: int) -> list[list[int]]:
    """
    Matrix of lambda_J(I_D) with rows J = plus_set(diagram) and columns D,
    both in canonical diagram order.

    Each row and column carries a single 1: lambda_J picks out the
    idempotent whose diagram has its *minus* nodes exactly at J (the plus
    leading term pi_{plus_set}^+ is the only term whose content avoids the
    minus nodes).  So the matrix is the sign-flip permutation matrix, the
    anti-diagonal in the canonical binary order.
    """
    diagrams = all_diagrams(n)
    return [
        [lambda_eval(plus_set(row_diagram), idempotent(col_diagram))
         for col_diagram in diagrams]
        for row_diagram in diagrams
    ]


# -- decomposition report ------------------------------------------------------------


@dataclass
class DiagramRecord:
    diagram: str
    degree: int
    support_size: int
    min_coeff: int
    max_coeff: int
    rank: int
    idempotent_ok: bool

    def to_dict(self) -> dict:
        return {
            "diagram": self.diagram,
            "degree": self.degree,
            "support_size": self.support_size,
            "min_coeff": self.min_coeff,
            "max_coeff": self.max_coeff,
            "rank": self.rank,
            "idempotent_ok": self.idempotent_ok,
        }


CSV_HEADER = ["diagram", "degree", "rank", "support_size", "min_coeff", "max_coeff"]


@dataclass
class VerificationReport:
    n: int
    orientation: str
    records: list[DiagramRecord]
    sum_to_identity: bool
    pairwise_orthogonal: bool
    pairs_checked: int
    pairs_total: int
    failures: list[str] = field(default_factory=list)
    elapsed_seconds: float = 0.0
    jobs: int = 1

    @property
    def passed(self) -> bool:
        return (
            self.sum_to_identity
            and self.pairwise_orthogonal
            and all(r.idempotent_ok for r in self.records)
            and not self.failures
        )

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "orientation": self.orientation,
            "passed": self.passed,
            "sum_to_identity": self.sum_to_identity,
            "pairwise_orthogonal": self.pairwise_orthogonal,
            "pairs_checked": self.pairs_checked,
            "pairs_total": self.pairs_total,
            "failures": self.failures,
            "elapsed_seconds": round(self.elapsed_seconds, 3),
            "records": [r.to_dict() for r in self.records],
        }

    def csv_rows(self) -> list[list]:
        return [
            [r.diagram, r.degree, r.rank, r.support_size, r.min_coeff, r.max_coeff]
            for r in self.records
        ]


_WORKER_STATE: dict = {}


def _pair_chunk_worker(chunk: list[tuple[str, str]]) -> list[str]:
    n = _WORKER_STATE["n"]
    orientation = _WORKER_STATE["orientation"]
    failures = []
    for d, e in chunk:
        prod = multiply(idempotent(d, orientation), idempotent(e, orientation))
        if prod.terms:
            failures.append(f"I({d}) * I({e}) != 0 at n={n}")
    return failures


def verify_orthogonal_decomposition(
    n: int,
    orientation: str = "standard",
    jobs: int = 1,
    fail_fast: bool = False,
) -> VerificationReport:
    """
    Check that the per-diagram idempotents are idempotent, pairwise
    orthogonal in both orders, and sum to the identity.  Failures are
    recorded in the report, never raised.
    """
    start = time.perf_counter()
    diagrams = all_diagrams(n)
    if 6 <= n <= 7:
        monoid_tables(n).cayley()

    records = []
    failures: list[str] = []
    total = zero(n)
    for d in diagrams:
        e = idempotent(d, orientation)
        lo, hi = e.coefficient_range()
        ok = is_idempotent(e)
        if not ok:
            failures.append(f"I({d})^2 != I({d}) at n={n}")
        records.append(
            DiagramRecord(
                diagram=d,
                degree=nilpotence_degree(d, orientation),
                support_size=len(e.terms),
                min_coeff=lo,
                max_coeff=hi,
                rank=trace_right(e),
                idempotent_ok=ok,
            )
        )
        total = total + e

    sum_ok = total == one(n)
    if not sum_ok:
        failures.append(f"sum of idempotents != 1 at n={n}")

    pairs = [(d, e) for d in diagrams for e in diagrams if d != e]
    checked = 0
    orthogonal = True
    if jobs > 1 and len(pairs) > 1:
        _WORKER_STATE.update(n=n, orientation=orientation)
        chunk_size = max(1, len(pairs) // (jobs * 8))
        chunks = [pairs[i : i + chunk_size] for i in range(0, len(pairs), chunk_size)]
        ctx = multiprocessing.get_context("fork")
        with ctx.Pool(jobs) as pool:
            for i, chunk_failures in enumerate(pool.imap(_pair_chunk_worker, chunks)):
                checked += len(chunks[i])
                if chunk_failures:
                    orthogonal = False
                    failures.extend(chunk_failures)
                    if fail_fast:
                        pool.terminate()
                        break
    else:
        for d, e in pairs:
            prod = multiply(idempotent(d, orientation), idempotent(e, orientation))
            checked += 1
            if prod.terms:
                orthogonal = False
                failures.append(f"I({d}) * I({e}) != 0 at n={n}")
                if fail_fast:
                    break

    return VerificationReport(
        n=n,
        orientation=orientation,
        records=records,
        sum_to_identity=sum_ok,
        pairwise_orthogonal=orthogonal,
        pairs_checked=checked,
        pairs_total=len(pairs),
        failures=sorted(failures),
        elapsed_seconds=time.perf_counter() - start,
        jobs=jobs,
    )


# -- coefficient scan -----------------------------------------------------------------


@dataclass
class CoefficientScan:
    n: int
    orientation: str
    all_unit: bool
    violations: list[tuple[str, Perm, int]]
    ranges: dict[str, tuple[int, int]]

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "orientation": self.orientation,
            "all_unit": self.all_unit,
            "violations": [
                {"diagram": d, "perm": list(p), "coeff": c}
                for d, p, c in self.violations
            ],
            "ranges": {d: list(r) for d, r in self.ranges.items()},
        }


def coefficient_scan(n: int, orientation: str = "standard") -> CoefficientScan:
    """Assert every idempotent coefficient lies in {-1, 0, 1}; collect any
    violation with its witness."""
    violations = []
    ranges = {}
    for d in all_diagrams(n):
        e = idempotent(d, orientation)
        ranges[d] = e.coefficient_range()
        for p, c in sorted(e.terms.items()):
            if c not in (-1, 1):
                violations.append((d, p, c))
    return CoefficientScan(
        n=n,
        orientation=orientation,
        all_unit=not violations,
        violations=violations,
        ranges=ranges,
    )
