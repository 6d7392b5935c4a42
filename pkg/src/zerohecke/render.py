"""
Text rendering of algebra elements in the pi-subscript style used for the
expansion tables (terms sorted by word length, then lexicographically), and
row assembly for the nilpotence-degree table.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import AlgebraElement
from .diagrams import all_diagrams, degree_bound, nilpotence_degree
from .permutations import reduced_word


def pi_term(word: tuple[int, ...]) -> str:
    """
    >>> pi_term(())
    '1'
    >>> pi_term((1,))
    'π_1'
    >>> pi_term((1, 2, 1))
    'π_{121}'
    """
    if not word:
        return "1"
    letters = "".join(str(i) for i in word)
    return f"π_{letters}" if len(word) == 1 else f"π_{{{letters}}}"


def sorted_terms(x: AlgebraElement) -> list[tuple[tuple[int, ...], int]]:
    """(word, coeff) pairs sorted by word length then lexicographic word."""
    pairs = [(reduced_word(p), c) for p, c in x.terms.items()]
    pairs.sort(key=lambda wc: (len(wc[0]), wc[0]))
    return pairs


def element_text(x: AlgebraElement) -> str:
    """
    Render in the table style: ``π_1 - π_{121}``.

    >>> from .diagrams import demipotent
    >>> element_text(demipotent("+-"))
    'π_1 - π_{121}'
    >>> element_text(demipotent("--"))
    '1 - π_1 - π_2 + π_{12} + π_{21} - π_{121}'
    """
    pairs = sorted_terms(x)
    if not pairs:
        return "0"
    pieces = []
    for k, (word, coeff) in enumerate(pairs):
        magnitude = abs(coeff)
        term = pi_term(word)
        if magnitude != 1:
            term = str(magnitude) if term == "1" else f"{magnitude}·{term}"
        if k == 0:
            pieces.append(term if coeff > 0 else f"-{term}")
        else:
            pieces.append(f"{'+' if coeff > 0 else '-'} {term}")
    return " ".join(pieces)


def element_csv_rows(x: AlgebraElement) -> list[list]:
    return [["".join(map(str, w)), c] for w, c in sorted_terms(x)]


# -- nilpotence table ------------------------------------------------------------


@dataclass
class DegreeRow:
    n: int
    diagram: str
    degree: int
    bound: int


def degree_rows(max_n: int, orientation: str = "standard") -> list[DegreeRow]:
    rows = []
    for n in range(2, max_n + 1):
        for diagram in all_diagrams(n):
            rows.append(
                DegreeRow(
                    n=n,
                    diagram=diagram,
                    degree=nilpotence_degree(diagram, orientation),
                    bound=degree_bound(diagram),
                )
            )
    return rows


def degree_summary(rows: list[DegreeRow], n: int) -> tuple[dict, dict]:
    """Degree histogram at one size: over all diagrams, and over the
    half-tree whose first node is '+' (the published counts are per half)."""
    full: dict[int, int] = {}
    half: dict[int, int] = {}
    for r in rows:
        if r.n != n:
            continue
        full[r.degree] = full.get(r.degree, 0) + 1
        if r.diagram.startswith("+"):
            half[r.degree] = half.get(r.degree, 0) + 1
    return dict(sorted(full.items())), dict(sorted(half.items()))


def degree_table_text(rows: list[DegreeRow]) -> str:
    lines = []
    for n in sorted({r.n for r in rows}):
        lines.append(f"N={n}")
        for r in rows:
            if r.n == n:
                lines.append(f"  {r.diagram}  degree {r.degree}  (bound {r.bound})")
        full, half = degree_summary(rows, n)
        lines.append(f"  counts by degree: all {full}; first-node-plus half {half}")
    return "\n".join(lines)


if __name__ == "__main__":
    import doctest

    doctest.testmod()
