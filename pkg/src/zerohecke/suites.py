"""
Named verification suites behind the ``verify`` command.

Each suite runs a batch of exact checks at one size and returns a result
with one detail line per check group; nothing raises on a mathematical
failure, so a harness can collect everything and exit nonzero at the end.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field

from .algebra import (
    basis_element,
    dynkin_reverse,
    embed,
    embed_top,
    multiply,
    one,
    phi_minus,
    phi_plus,
    psi,
    zero,
)
from .analysis import (
    CSV_HEADER,
    coefficient_scan,
    descent_class,
    lambda_character_table,
    norton_ideal_dimension,
    radical_dimension,
    rank_of_idempotent,
    verify_orthogonal_decomposition,
)
from .diagrams import (
    all_diagrams,
    demipotent,
    flip_signs,
    idempotent,
    masked_word_idempotents,
    nilpotence_degree,
    plus_set,
    reverse_diagram,
    universal_word,
)
from .ndpf import ndpf_masked_word_check
from .permutations import leq_left_weak
from .tables import mask_of, monoid_tables

SUITE_NAMES = (
    "orthogonality",
    "branching",
    "sibling",
    "coeffs",
    "ranks",
    "triangularity",
    "symmetries",
    "ndpf",
    "universal",
)

# Exact-rank checks row-reduce n! x n! integer matrices; past this size they
# are skipped with a note rather than stalling the suite.
RANKS_EXACT_MAX_N = 5


@dataclass
class SuiteResult:
    name: str
    n: int
    orientation: str
    passed: bool
    details: list[str] = field(default_factory=list)
    elapsed_seconds: float = 0.0
    report: dict | None = None  # full decomposition report (orthogonality)
    report_csv: tuple[list, list[list]] | None = None  # (header, rows)

    def to_dict(self) -> dict:
        payload = {
            "suite": self.name,
            "n": self.n,
            "orientation": self.orientation,
            "passed": self.passed,
            "elapsed_seconds": round(self.elapsed_seconds, 3),
            "details": self.details,
        }
        if self.report is not None:
            payload["report"] = self.report
        return payload


class _Collector:
    def __init__(self):
        self.details: list[str] = []
        self.passed = True
        self.report: dict | None = None
        self.report_csv: tuple[list, list[list]] | None = None

    def check(self, ok: bool, label: str) -> bool:
        self.details.append(f"{'ok' if ok else 'FAIL'} - {label}")
        if not ok:
            self.passed = False
        return ok

    def note(self, label: str) -> None:
        self.details.append(f"note - {label}")


def _suite_orthogonality(n, orientation, jobs, fail_fast, col: _Collector):
    report = verify_orthogonal_decomposition(n, orientation, jobs, fail_fast)
    col.report = report.to_dict()
    col.report_csv = (list(CSV_HEADER), report.csv_rows())
    col.check(
        all(r.idempotent_ok for r in report.records),
        f"all {len(report.records)} fixpoints are idempotent",
    )
    col.check(report.sum_to_identity, "idempotents sum to the identity")
    col.check(
        report.pairwise_orthogonal,
        f"pairwise products vanish ({report.pairs_checked}/{report.pairs_total} ordered pairs)",
    )
    for line in report.failures:
        col.details.append(f"FAIL - {line}")


def _suite_branching(n, orientation, jobs, fail_fast, col: _Collector):
    # The opposite family grows its diagrams at node 1, so its parent embeds
    # with the generators shifted up rather than fixed.
    parent_embed = embed if orientation == "standard" else embed_top
    ok_children = True
    for m in range(1, n):
        for diagram in all_diagrams(m):
            plus, minus = diagram + "+", diagram + "-"
            parent = parent_embed(demipotent(diagram, orientation), m + 1)
            lhs = demipotent(plus, orientation) + demipotent(minus, orientation)
            if lhs != parent:
                ok_children = False
                col.details.append(f"FAIL - C({plus}) + C({minus}) != C({diagram})")
    col.check(ok_children, f"child demipotents sum to their parent up to n={n}")

    total = zero(n)
    for diagram in all_diagrams(n):
        total = total + demipotent(diagram, orientation)
    col.check(total == one(n), "all demipotents at this size sum to the identity")

    if orientation == "standard":
        ok_phi = True
        for diagram in all_diagrams(n):
            parent = demipotent(diagram[:-1])
            image = (
                phi_plus(demipotent(diagram))
                if diagram.endswith("+")
                else phi_minus(demipotent(diagram))
            )
            if image != parent:
                ok_phi = False
                col.details.append(f"FAIL - evaluation map does not branch at {diagram}")
        col.check(ok_phi, "evaluation maps send each child back to its parent")
    else:
        col.note("evaluation-map branching is stated for the standard orientation")


def _suite_sibling(n, orientation, jobs, fail_fast, col: _Collector):
    parent_embed = embed if orientation == "standard" else embed_top
    ok_orth = ok_absorb = True
    for parent in all_diagrams(n - 1):
        x = demipotent(parent + "+", orientation)
        y = demipotent(parent + "-", orientation)
        if multiply(x, y).terms or multiply(y, x).terms:
            ok_orth = False
            col.details.append(f"FAIL - siblings of {parent} are not orthogonal")
        p = parent_embed(demipotent(parent, orientation), n)
        if multiply(p, x) != multiply(x, x) or multiply(x, p) != multiply(x, x):
            ok_absorb = False
            col.details.append(f"FAIL - parent product != square at {parent}+")
        if multiply(p, y) != multiply(y, y) or multiply(y, p) != multiply(y, y):
            ok_absorb = False
            col.details.append(f"FAIL - parent product != square at {parent}-")
    col.check(ok_orth, "sibling demipotents multiply to zero in both orders")
    col.check(ok_absorb, "parent times child equals the child squared")


def _suite_coeffs(n, orientation, jobs, fail_fast, col: _Collector):
    scan = coefficient_scan(n, orientation)
    col.check(
        scan.all_unit,
        f"all idempotent coefficients lie in -1..1 ({len(scan.ranges)} diagrams)",
    )
    for diagram, perm, coeff in scan.violations:
        col.details.append(f"FAIL - I({diagram}) has coefficient {coeff} at {perm}")


def _suite_ranks(n, orientation, jobs, fail_fast, col: _Collector):
    diagrams = all_diagrams(n)
    ranks = {d: rank_of_idempotent(idempotent(d, orientation)) for d in diagrams}
    class_sizes = {d: len(descent_class(_expected_plus_set(d, orientation), n))
                   for d in diagrams}
    total = sum(ranks.values())
    col.check(total == monoid_tables(n).size, f"ranks sum to n! (= {total})")
    col.check(
        sorted(ranks.values()) == sorted(class_sizes.values()),
        "rank multiset equals descent-class size multiset",
    )
    col.check(
        all(ranks[d] == class_sizes[d] for d in diagrams),
        "each rank matches its own descent class",
    )
    if n <= RANKS_EXACT_MAX_N:
        dims = {}
        for d in diagrams:
            J = plus_set(d)
            dims[d] = norton_ideal_dimension(J, n)
        col.check(
            sum(dims.values()) == monoid_tables(n).size,
            "classical left-ideal dimensions sum to n!",
        )
        if orientation == "standard":
            col.check(
                all(dims[d] == ranks[d] for d in diagrams),
                "left-ideal dimension matches the idempotent rank per subset",
            )
        col.check(
            radical_dimension(n) == monoid_tables(n).size - 2 ** (n - 1),
            "radical dimension is n! - 2^(n-1) with independent spanning set",
        )
    else:
        col.note(f"exact ideal/radical ranks skipped for n > {RANKS_EXACT_MAX_N}")


def _expected_plus_set(diagram: str, orientation: str) -> set[int]:
    if orientation == "standard":
        return plus_set(diagram)
    return plus_set(reverse_diagram(diagram))


def _suite_triangularity(n, orientation, jobs, fail_fast, col: _Collector):
    t = monoid_tables(n)
    ok_lambda = ok_order = True
    for diagram in all_diagrams(n):
        c = demipotent(diagram, orientation)
        expected_mask = mask_of(_expected_plus_set(diagram, orientation), n)
        for s, m in enumerate(t.perms):
            image = multiply(c, basis_element(m))
            lam = image.terms.get(m, 0)
            want = 1 if t.left_desc[s] == expected_mask else 0
            if lam != want:
                ok_lambda = False
                col.details.append(
                    f"FAIL - diagonal coefficient {lam} != {want} at C({diagram}), m={m}"
                )
            for p in image.terms:
                if p != m and not leq_left_weak(m, p):
                    ok_order = False
                    col.details.append(
                        f"FAIL - off-diagonal term {p} not above {m} for C({diagram})"
                    )
            if fail_fast and not (ok_lambda and ok_order):
                break
        if fail_fast and not (ok_lambda and ok_order):
            break
    col.check(ok_lambda, "diagonal coefficient is 1 exactly on the matching descent class")
    col.check(ok_order, "off-diagonal terms lie strictly above in left weak order")


def _suite_symmetries(n, orientation, jobs, fail_fast, col: _Collector):
    ok_psi_c = all(
        psi(demipotent(d)) == demipotent(flip_signs(d)) for d in all_diagrams(n)
    )
    col.check(ok_psi_c, "sign-flip involution permutes the demipotents")
    ok_psi_i = all(
        psi(idempotent(d)) == idempotent(flip_signs(d)) for d in all_diagrams(n)
    )
    col.check(ok_psi_i, "sign-flip involution permutes the idempotents")
    ok_deg = all(
        nilpotence_degree(d) == nilpotence_degree(flip_signs(d))
        for d in all_diagrams(n)
    )
    col.check(ok_deg, "nilpotence degree is sign-flip invariant")
    std = {idempotent(d) for d in all_diagrams(n)}
    opp = {idempotent(d, "opposite") for d in all_diagrams(n)}
    col.check(
        {dynkin_reverse(x) for x in std} == opp,
        "diagram reversal swaps the two idempotent families",
    )
    table = lambda_character_table(n)
    size = len(table)
    flip_matrix = [
        [1 if j == size - 1 - i else 0 for j in range(size)] for i in range(size)
    ]
    col.check(
        table == flip_matrix,
        "one-dimensional characters pair each idempotent with its sign-flipped subset",
    )


def _suite_ndpf(n, orientation, jobs, fail_fast, col: _Collector):
    report = ndpf_masked_word_check(n)
    col.check(
        report.monoid_size == report.catalan_number,
        f"parking-function monoid has Catalan size {report.catalan_number}",
    )
    col.check(
        report.idempotent_count == 2 ** (n - 1),
        f"it has 2^(n-1) = {2 ** (n - 1)} idempotents",
    )
    col.check(
        report.all_idempotent,
        "every masked up-down word is idempotent in the quotient algebra",
    )
    for diagram in report.failures:
        col.details.append(f"FAIL - masked word not idempotent at {diagram}")


def _suite_universal(n, orientation, jobs, fail_fast, col: _Collector):
    if orientation != "standard":
        col.note("masked words are compared against the standard family")
    word = universal_word(n)
    masked = masked_word_idempotents(word, n)
    col.check(
        set(word) == set(range(1, n)),
        f"the up-down word {word} uses every letter",
    )
    col.check(
        all(masked[d][0] == idempotent(d) for d in all_diagrams(n)),
        "masked-word fixpoints equal the diagram idempotents",
    )


_SUITES = {
    "orthogonality": _suite_orthogonality,
    "branching": _suite_branching,
    "sibling": _suite_sibling,
    "coeffs": _suite_coeffs,
    "ranks": _suite_ranks,
    "triangularity": _suite_triangularity,
    "symmetries": _suite_symmetries,
    "ndpf": _suite_ndpf,
    "universal": _suite_universal,
}


def run_suite(
    name: str,
    n: int,
    orientation: str = "standard",
    jobs: int = 1,
    fail_fast: bool = False,
) -> SuiteResult:
    if name not in _SUITES:
        raise ValueError(f"unknown suite {name!r}; choose from {SUITE_NAMES}")
    start = time.perf_counter()
    col = _Collector()
    _SUITES[name](n, orientation, jobs, fail_fast, col)
    return SuiteResult(
        name=name,
        n=n,
        orientation=orientation,
        passed=col.passed,
        details=col.details,
        elapsed_seconds=time.perf_counter() - start,
        report=col.report,
        report_csv=col.report_csv,
    )


def run_suites(
    names,
    n: int,
    orientation: str = "standard",
    jobs: int = 1,
    fail_fast: bool = False,
) -> list[SuiteResult]:
    results = []
    for name in names:
        result = run_suite(name, n, orientation, jobs, fail_fast)
        results.append(result)
        if fail_fast and not result.passed:
            break
    return results
