"""Exact integer matrix kernels: Smith elementary divisors, prime-field
ranks, and canonical integer row-space bases.

The Smith routine works destructively on a sparse copy, choosing pivots
of minimal absolute value (ties broken toward sparser rows and columns)
and reducing with nearest-integer quotients so entries stay small.  It
returns only the rank and the divisor chain; no transform matrices are
accumulated, which is all the torsion certificates need.  Everything is
arbitrary-precision, no modular shortcuts.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd


def _sparse_rows(rows) -> list[dict[int, int]]:
    out = []
    for row in rows:
        if isinstance(row, dict):
            out.append({int(c): int(v) for c, v in row.items() if v})
        else:
            out.append({c: int(v) for c, v in enumerate(row) if v})
    return out


def _rounded_quotient(a: int, b: int) -> int:
    """Nearest-integer quotient for b > 0; remainder lands in (-b/2, b/2]."""
    return (a + (b >> 1)) // b


def _divisor_chain(values: list[int]) -> tuple[int, ...]:
    """Normalize a diagonal to the divisibility chain via gcd/lcm passes."""
    vals = [abs(v) for v in values]
    changed = True
    while changed:
        changed = False
        for i in range(len(vals)):
            for j in range(i + 1, len(vals)):
                if vals[j] % vals[i]:
                    g = gcd(vals[i], vals[j])
                    vals[i], vals[j] = g, vals[i] * vals[j] // g
                    changed = True
    return tuple(sorted(vals))


@dataclass(frozen=True)
class SmithResult:
    rank: int
    divisors: tuple[int, ...]

    @property
    def nontrivial(self) -> tuple[int, ...]:
        return tuple(d for d in self.divisors if d != 1)


def smith_normal_form(rows, ncols: int | None = None) -> SmithResult:
    """Rank and elementary divisors of an integer matrix.

    ``rows`` is an iterable of dense sequences or sparse {col: value}
    dicts.  ``ncols`` is only used for validation when given.
    """
    mat = _sparse_rows(rows)
    if ncols is not None:
        for row in mat:
            if row and max(row) >= ncols:
                raise ValueError("column index beyond the declared width")

    col_rows: dict[int, set[int]] = {}
    for i, row in enumerate(mat):
        for c in row:
            col_rows.setdefault(c, set()).add(i)
    live = {i for i, row in enumerate(mat) if row}
    row_min: dict[int, int] = {i: min(abs(v) for v in mat[i].values()) for i in live}

    def add_multiple(target: int, source: int, factor: int):
        """row[target] += factor * row[source], keeping indexes in sync."""
        trow = mat[target]
        for c, v in mat[source].items():
            value = trow.get(c, 0) + factor * v
            if value:
                if c not in trow:
                    col_rows.setdefault(c, set()).add(target)
                trow[c] = value
            elif c in trow:
                del trow[c]
                col_rows[c].discard(target)
        if trow:
            row_min[target] = min(abs(v) for v in trow.values())
        else:
            live.discard(target)
            row_min.pop(target, None)

    diagonal: list[int] = []
    while live:
        # global pivot hunt: smallest |entry|, then fewer row entries
        pivot_row = min(live, key=lambda i: (row_min[i], len(mat[i])))
        target = row_min[pivot_row]
        candidates = [c for c, v in mat[pivot_row].items() if abs(v) == target]
        pivot_col = min(candidates, key=lambda c: (len(col_rows[c]), c))

        while True:
            piv = mat[pivot_row][pivot_col]
            if piv < 0:
                for c in list(mat[pivot_row]):
                    mat[pivot_row][c] = -mat[pivot_row][c]
                piv = -piv

            # clear the pivot column with row operations
            smaller: int | None = None
            for r in list(col_rows.get(pivot_col, ())):
                if r == pivot_row or r not in live:
                    continue
                q = _rounded_quotient(mat[r][pivot_col], piv)
                if q:
                    add_multiple(r, pivot_row, -q)
                if r in live and mat[r].get(pivot_col):
                    smaller = r
            if smaller is not None:
                pivot_row = smaller
                continue

            # clear the pivot row with column operations; the pivot column
            # holds only the pivot now, so each update touches one entry
            leftover = False
            prow = mat[pivot_row]
            for c in [c for c in prow if c != pivot_col]:
                q = _rounded_quotient(prow[c], piv)
                if q:
                    value = prow[c] - q * piv
                    if value:
                        prow[c] = value
                    else:
                        del prow[c]
                        col_rows[c].discard(pivot_row)
                if prow.get(c):
                    leftover = True
            if not leftover:
                break
            # a remainder smaller than the pivot appeared in this row
            row_min[pivot_row] = min(abs(v) for v in prow.values())
            target = row_min[pivot_row]
            candidates = [c for c, v in prow.items() if abs(v) == target]
            pivot_col = min(candidates,
                            key=lambda c: (len(col_rows.get(c, ())), c))

        diagonal.append(piv)
        live.discard(pivot_row)
        row_min.pop(pivot_row, None)
        col_rows.get(pivot_col, set()).discard(pivot_row)
        del mat[pivot_row][pivot_col]

    return SmithResult(rank=len(diagonal), divisors=_divisor_chain(diagonal))


def fp_rank(rows, p: int) -> int:
    """Rank over the field with p elements, by Gaussian elimination."""
    if p < 2:
        raise ValueError("modulus must be at least 2")
    pivots: dict[int, dict[int, int]] = {}
    for row in _sparse_rows(rows):
        current = {c: v % p for c, v in row.items() if v % p}
        while current:
            lead = min(current)
            pivot = pivots.get(lead)
            if pivot is None:
                inv = pow(current[lead], -1, p)
                pivots[lead] = {c: (v * inv) % p for c, v in current.items()}
                break
            factor = current[lead]
            for c, v in pivot.items():
                value = (current.get(c, 0) - factor * v) % p
                if value:
                    current[c] = value
                else:
                    current.pop(c, None)
    return len(pivots)


def integer_row_space(rows, ncols: int) -> tuple[tuple[int, ...], ...]:
    """Canonical basis of the integer span of the rows (Hermite form).

    Two generating sets span the same subgroup of Z^ncols exactly when
    this function returns identical tuples for both.
    """
    pivots: dict[int, dict[int, int]] = {}
    for row in _sparse_rows(rows):
        current = dict(row)
        while current:
            lead = min(current)
            pivot = pivots.get(lead)
            if pivot is None:
                pivots[lead] = current
                break
            a, b = pivot[lead], current[lead]
            g = gcd(a, b)
            # unimodular 2x2 combination: new pivot has entry g at lead
            x, y = _bezout(a, b)
            combo: dict[int, int] = {}
            for c in set(pivot) | set(current):
                value = x * pivot.get(c, 0) + y * current.get(c, 0)
                if value:
                    combo[c] = value
            reduced: dict[int, int] = {}
            fa, fb = a // g, b // g
            for c in set(pivot) | set(current):
                value = fa * current.get(c, 0) - fb * pivot.get(c, 0)
                if value:
                    reduced[c] = value
            pivots[lead] = combo
            current = reduced
    # normalize: positive pivots, entries above each pivot reduced into [0, pivot)
    for lead in sorted(pivots):
        row = pivots[lead]
        if row[lead] < 0:
            pivots[lead] = row = {c: -v for c, v in row.items()}
        for other_lead, other in pivots.items():
            if other_lead == lead or lead not in other:
                continue
            q = other[lead] // row[lead]
            if q:
                for c, v in row.items():
                    value = other.get(c, 0) - q * v
                    if value:
                        other[c] = value
                    else:
                        other.pop(c, None)
    out = []
    for lead in sorted(pivots):
        row = pivots[lead]
        if row and max(row) >= ncols:
            raise ValueError("column index beyond the declared width")
        out.append(tuple(row.get(c, 0) for c in range(ncols)))
    return tuple(out)


def _bezout(a: int, b: int) -> tuple[int, int]:
    """x, y with x*a + y*b = gcd(a, b)."""
    old_r, r = a, b
    old_x, x = 1, 0
    old_y, y = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_x, x = x, old_x - q * x
        old_y, y = y, old_y - q * y
    if old_r < 0:
        return -old_x, -old_y
    return old_x, old_y
