"""Smith normal form over the integers with unimodular transform witnesses"""

from typing import List, NamedTuple, Sequence, Tuple

IntMatrix = List[List[int]]


class SmithForm(NamedTuple):
    """left @ matrix @ right == diag(diagonal), with d_1 | d_2 | ..."""

    diagonal: Tuple[int, ...]
    left: IntMatrix
    right: IntMatrix

    @property
    def rank(self) -> int:
        return sum(1 for d in self.diagonal if d)

    @property
    def transforms(self) -> Tuple[IntMatrix, IntMatrix]:
        return self.left, self.right


def _eye(n: int) -> IntMatrix:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def _add_row(m: IntMatrix, target: int, source: int, factor: int) -> None:
    # m[target, :] += factor * m[source, :]
    m[target] = [a + factor * b for a, b in zip(m[target], m[source])]


def _add_column(m: IntMatrix, target: int, source: int, factor: int) -> None:
    for row in m:
        row[target] += factor * row[source]


def _swap_columns(m: IntMatrix, i: int, j: int) -> None:
    for row in m:
        row[i], row[j] = row[j], row[i]


def smith_normal_form(matrix: Sequence[Sequence[int]]) -> SmithForm:
    a = [[int(v) for v in row] for row in matrix]
    rows = len(a)
    cols = len(a[0]) if rows else 0
    left, right = _eye(rows), _eye(cols)

    def swap_rows(i: int, j: int) -> None:
        a[i], a[j] = a[j], a[i]
        left[i], left[j] = left[j], left[i]

    def swap_cols(i: int, j: int) -> None:
        _swap_columns(a, i, j)
        _swap_columns(right, i, j)

    for t in range(min(rows, cols)):
        # smallest nonzero entry of the trailing block, ties broken by (row, col)
        candidates = [
            (abs(a[i][j]), i, j) for i in range(t, rows) for j in range(t, cols) if a[i][j]
        ]
        if not candidates:
            break
        _, i, j = min(candidates)
        swap_rows(t, i)
        swap_cols(t, j)
        while True:
            pivot = a[t][t]
            for i in range(t + 1, rows):
                q = a[i][t] // pivot
                if q:
                    _add_row(a, i, t, -q)
                    _add_row(left, i, t, -q)
            for j in range(t + 1, cols):
                q = a[t][j] // pivot
                if q:
                    _add_column(a, j, t, -q)
                    _add_column(right, j, t, -q)
            leftovers = [(abs(a[i][t]), i, t) for i in range(t + 1, rows) if a[i][t]]
            leftovers += [(abs(a[t][j]), t, j) for j in range(t + 1, cols) if a[t][j]]
            if leftovers:
                _, i, j = min(leftovers)
                if i != t:
                    swap_rows(t, i)
                else:
                    swap_cols(t, j)
                continue
            stray = next(
                (i for i in range(t + 1, rows) for j in range(t + 1, cols) if a[i][j] % pivot),
                None,
            )
            if stray is None:
                break
            _add_row(a, t, stray, 1)
            _add_row(left, t, stray, 1)
        if a[t][t] < 0:
            a[t] = [-v for v in a[t]]
            left[t] = [-v for v in left[t]]

    diagonal = tuple(a[k][k] for k in range(min(rows, cols)))
    return SmithForm(diagonal, left, right)


def smith_rank(vectors: Sequence[Sequence[int]]) -> Tuple[int, Tuple[int, ...]]:
    """Rank over Z of the lattice spanned by `vectors`, with its nonzero invariant factors"""
    vectors = [list(v) for v in vectors]
    if not vectors:
        return 0, ()
    form = smith_normal_form(vectors)
    factors = tuple(d for d in form.diagonal if d)
    return len(factors), factors
