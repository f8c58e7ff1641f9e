"""
Grid classes: matrices of cell classes, gridding search, gridded counting,
matrix graphs with their components, and griddability of a class against a
target cell alphabet.

A t x u matrix M of classes has cells indexed (k, l) with k counting
columns from the left and l counting rows from the bottom.  An M-gridding
of a permutation chops positions into t vertical strips and values into u
horizontal bands so that every cell's restriction belongs to that cell's
class.
"""
from __future__ import annotations

import dataclasses
import functools
import itertools
import math
import re
from collections.abc import Iterable, Iterator

from .classes import AvClass, enumerate_class, normalize_basis, sum_closure_counts, sum_closure_members
from .perm import (
    Perm,
    contains,
    direct_sum,
    format_perm,
    parse_perm,
    restrict,
    skew_sum,
    standardize,
    sum_decomposition,
)

CELL_KINDS = ("empty", "inc", "dec", "pt", "av", "sumcl")


@dataclasses.dataclass(frozen=True)
class CellClass:
    """
    One cell of a grid matrix: the empty class, a monotone class, the
    point class (only the empty and singleton permutations), a finitely
    based class, or the sum closure of a finite generator set.
    """

    kind: str
    basis: tuple[Perm, ...] = ()
    generators: tuple[Perm, ...] = ()

    def __post_init__(self) -> None:
        if self.kind not in CELL_KINDS:
            raise ValueError(f"unknown cell kind {self.kind!r}")
        if (self.kind == "av") != bool(self.basis):
            raise ValueError("exactly the av kind carries a basis")
        if (self.kind == "sumcl") != bool(self.generators):
            raise ValueError("exactly the sumcl kind carries generators")

    def member(self, p: Perm) -> bool:
        """
        >>> parse_cell("inc").member((1, 2, 3))
        True
        >>> parse_cell("pt").member((1, 2))
        False
        >>> parse_cell("sumcl(21)").member((2, 1, 3))
        True
        >>> parse_cell("sumcl(21)").member((2, 3, 1))
        False
        """
        n = len(p)
        if self.kind == "empty":
            return n == 0
        if self.kind == "pt":
            return n <= 1
        if self.kind == "inc":
            return p == tuple(range(1, n + 1))
        if self.kind == "dec":
            return p == tuple(range(n, 0, -1))
        if self.kind == "av":
            return not any(contains(b, p) for b in self.basis)
        # Sum closure of a downward-closed generator hull: a permutation
        # belongs iff each of its finest sum blocks fits under a generator
        # (any coarser grouping refines to this, the hull being closed
        # under patterns).
        return all(
            any(contains(block, g) for g in self.generators)
            for block in sum_decomposition(p)
        )

    def counts(self, nmax: int) -> list[int]:
        """
        Members by length, 0 through nmax.

        >>> parse_cell("dec").counts(3)
        [1, 1, 1, 1]
        >>> parse_cell("sumcl(21)").counts(6)
        [1, 1, 2, 3, 5, 8, 13]
        """
        if nmax < 0:
            raise ValueError("need nmax >= 0")
        if self.kind == "empty":
            return [1] + [0] * nmax
        if self.kind == "pt":
            return [1] * min(nmax + 1, 2) + [0] * (nmax - 1)
        if self.kind in ("inc", "dec"):
            return [1] * (nmax + 1)
        if self.kind == "av":
            return enumerate_class(AvClass(self.basis), nmax)[0]
        return sum_closure_counts(self.generators, nmax)

    def token(self) -> str:
        if self.kind == "av":
            return "av(" + ";".join(format_perm(b) for b in self.basis) + ")"
        if self.kind == "sumcl":
            return "sumcl(" + ";".join(format_perm(g) for g in self.generators) + ")"
        return {"empty": "0", "inc": "inc", "dec": "dec", "pt": "pt"}[self.kind]

    def __str__(self) -> str:
        return self.token()


EMPTY_CELL = CellClass("empty")
INC_CELL = CellClass("inc")
DEC_CELL = CellClass("dec")
POINT_CELL = CellClass("pt")


def _as_perm(item: str | Perm) -> Perm:
    return parse_perm(item) if isinstance(item, str) else standardize(item)


def av_cell(*items: str | Perm) -> CellClass:
    """Finitely based cell from permutations or their text forms."""
    return CellClass("av", basis=normalize_basis([_as_perm(x) for x in items]).basis)


def sumcl_cell(*items: str | Perm) -> CellClass:
    gens = sorted(set(_as_perm(x) for x in items), key=lambda p: (len(p), p))
    if any(not g for g in gens):
        raise ValueError("empty permutation cannot generate")
    return CellClass("sumcl", generators=tuple(gens))


_CELL_RE = re.compile(r"(av|sumcl)\((.*)\)\Z", re.DOTALL)


def parse_cell(text: str) -> CellClass:
    """
    Cell tokens: `0`, `inc`, `dec`, `pt`, `av(...;...)`, `sumcl(...;...)`.

    >>> parse_cell("0").kind
    'empty'
    >>> parse_cell("av(321;2341)").basis
    ((3, 2, 1), (2, 3, 4, 1))
    """
    t = text.strip()
    plain = {"0": EMPTY_CELL, "inc": INC_CELL, "dec": DEC_CELL, "pt": POINT_CELL}
    if t in plain:
        return plain[t]
    m = _CELL_RE.match(t)
    if m is None:
        raise ValueError(f"bad cell token {text!r}")
    parts = [s for s in (s.strip() for s in m.group(2).split(";")) if s]
    if not parts:
        raise ValueError(f"no permutations in {text!r}")
    build = av_cell if m.group(1) == "av" else sumcl_cell
    return build(*parts)


@dataclasses.dataclass(frozen=True)
class GridMatrix:
    """Cell classes stored per column, each column listed bottom to top."""

    columns: tuple[tuple[CellClass, ...], ...]

    def __post_init__(self) -> None:
        if not self.columns or not self.columns[0]:
            raise ValueError("matrix needs at least one cell")
        if len(set(len(col) for col in self.columns)) != 1:
            raise ValueError("ragged matrix")

    @property
    def width(self) -> int:
        return len(self.columns)

    @property
    def height(self) -> int:
        return len(self.columns[0])

    def cell(self, k: int, l: int) -> CellClass:
        """Cell in column k from the left, row l from the bottom, 1-based."""
        if not (1 <= k <= self.width and 1 <= l <= self.height):
            raise IndexError(f"no cell ({k}, {l})")
        return self.columns[k - 1][l - 1]

    def nonempty_cells(self) -> tuple[tuple[int, int], ...]:
        return tuple(
            (k, l)
            for k in range(1, self.width + 1)
            for l in range(1, self.height + 1)
            if self.cell(k, l).kind != "empty"
        )

    def __str__(self) -> str:
        return format_matrix(self)


def grid_matrix(rows: Iterable[Iterable[CellClass]]) -> GridMatrix:
    """
    Build a matrix from rows listed top to bottom, converting to the
    bottom-left cell indexing.

    >>> m = grid_matrix([[INC_CELL, EMPTY_CELL], [DEC_CELL, POINT_CELL]])
    >>> m.cell(1, 1).kind, m.cell(1, 2).kind
    ('dec', 'inc')
    """
    grid = [list(r) for r in rows]
    if not grid or not grid[0]:
        raise ValueError("matrix needs at least one cell")
    if len(set(len(r) for r in grid)) != 1:
        raise ValueError("ragged matrix")
    u = len(grid)
    width = len(grid[0])
    return GridMatrix(
        tuple(
            tuple(grid[u - l][k - 1] for l in range(1, u + 1))
            for k in range(1, width + 1)
        )
    )


def _split_cells(line: str) -> list[str]:
    parts: list[str] = []
    depth = 0
    cur: list[str] = []
    for ch in line:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth < 0:
                raise ValueError(f"unbalanced parentheses in {line!r}")
        if ch == "," and depth == 0:
            parts.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    if depth != 0:
        raise ValueError(f"unbalanced parentheses in {line!r}")
    parts.append("".join(cur))
    return parts


def parse_matrix(text: str) -> GridMatrix:
    """
    Matrix file format: one row per line, top to bottom, cells separated
    by commas; blank lines and `#` comments ignored.

    >>> parse_matrix("av(12), av(321), 0\\nav(12), 0, pt").cell(3, 1).kind
    'pt'
    """
    rows = []
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if line:
            rows.append([parse_cell(tok) for tok in _split_cells(line)])
    if not rows:
        raise ValueError("no rows")
    return grid_matrix(rows)


def format_matrix(m: GridMatrix) -> str:
    """Inverse of parse_matrix, rows top to bottom."""
    return "\n".join(
        ", ".join(m.cell(k, l).token() for k in range(1, m.width + 1))
        for l in range(m.height, 0, -1)
    )


@dataclasses.dataclass(frozen=True)
class Gridding:
    """
    Column divisions 1 = c_1 <= ... <= c_{t+1} = n+1 and row divisions
    1 = r_1 <= ... <= r_{u+1} = n+1; strip k holds positions c_k..c_{k+1}-1,
    band l holds values r_l..r_{l+1}-1.
    """

    cols: tuple[int, ...]
    rows: tuple[int, ...]


def _divisions_ok(div: tuple[int, ...], parts: int, n: int) -> bool:
    return (
        len(div) == parts + 1
        and div[0] == 1
        and div[-1] == n + 1
        and all(a <= b for a, b in zip(div, div[1:]))
    )


def gridding_valid(p: Perm, m: GridMatrix, g: Gridding) -> bool:
    """
    Check a gridding cell by cell: every restriction of p to a strip-band
    intersection must belong to that cell's class.
    """
    n = len(p)
    if not _divisions_ok(g.cols, m.width, n) or not _divisions_ok(g.rows, m.height, n):
        return False
    for k in range(1, m.width + 1):
        for l in range(1, m.height + 1):
            window = restrict(
                p,
                (g.cols[k - 1], g.cols[k] - 1),
                (g.rows[l - 1], g.rows[l] - 1),
            )
            if not m.cell(k, l).member(window):
                return False
    return True


def _divisions(n: int, parts: int) -> Iterator[tuple[int, ...]]:
    for mid in itertools.combinations_with_replacement(range(1, n + 2), parts - 1):
        yield (1,) + mid + (n + 1,)


def _line_capacity(cells: list[CellClass]) -> int | None:
    # None means unbounded; point cells hold one element, empty cells none
    cap = 0
    for cell in cells:
        if cell.kind == "pt":
            cap += 1
        elif cell.kind != "empty":
            return None
    return cap


def find_gridding(p: Perm, m: GridMatrix) -> Gridding | None:
    """
    The lexicographically least valid gridding, or None.  Column divisions
    run in the outer loop, row divisions inner, both ascending, so the
    result is deterministic.

    >>> find_gridding((2, 1), grid_matrix([[INC_CELL]])) is None
    True
    >>> find_gridding((), grid_matrix([[INC_CELL, DEC_CELL]])).cols
    (1, 1, 1)
    """
    n = len(p)
    col_caps = [
        _line_capacity([m.cell(k, l) for l in range(1, m.height + 1)])
        for k in range(1, m.width + 1)
    ]
    row_caps = [
        _line_capacity([m.cell(k, l) for k in range(1, m.width + 1)])
        for l in range(1, m.height + 1)
    ]
    row_choices = [
        rows
        for rows in _divisions(n, m.height)
        if not any(
            cap is not None and rows[l + 1] - rows[l] > cap
            for l, cap in enumerate(row_caps)
        )
    ]
    for cols in _divisions(n, m.width):
        if any(
            cap is not None and cols[k + 1] - cols[k] > cap
            for k, cap in enumerate(col_caps)
        ):
            continue
        for rows in row_choices:
            g = Gridding(cols, rows)
            if gridding_valid(p, m, g):
                return g
    return None


def grid_member(p: Perm, m: GridMatrix) -> bool:
    return find_gridding(p, m) is not None


def _multinomial(parts: Iterable[int]) -> int:
    out = 1
    total = 0
    for s in parts:
        total += s
        out *= math.comb(total, s)
    return out


def _size_assignments(
    per_cell_sizes: list[list[int]], n: int
) -> Iterator[tuple[int, ...]]:
    # all ways to spend n across the cells, each drawing from its own
    # allowed size list
    def rec(i: int, left: int, acc: list[int]) -> Iterator[tuple[int, ...]]:
        if i == len(per_cell_sizes):
            if left == 0:
                yield tuple(acc)
            return
        for s in per_cell_sizes[i]:
            if s <= left:
                acc.append(s)
                yield from rec(i + 1, left - s, acc)
                acc.pop()

    yield from rec(0, n, [])


def enumerate_gridded(m: GridMatrix, nmax: int) -> list[int]:
    """
    Count (permutation, gridding) pairs by length.  For each way of
    spending n points across the nonempty cells, the cells choose members
    independently and each column and row interleaves its cells freely.

    >>> enumerate_gridded(parse_matrix("inc, inc"), 4)
    [1, 2, 4, 8, 16]
    >>> enumerate_gridded(parse_matrix("inc"), 3)
    [1, 1, 1, 1]
    """
    cells = m.nonempty_cells()
    counts = {c: m.cell(*c).counts(nmax) for c in cells}
    out = []
    for n in range(nmax + 1):
        allowed = [
            [s for s in range(n + 1) if counts[c][s] > 0] for c in cells
        ]
        total = 0
        for sizes in _size_assignments(allowed, n):
            by_cell = dict(zip(cells, sizes))
            weight = 1
            for c, s in zip(cells, sizes):
                weight *= counts[c][s]
            for k in range(1, m.width + 1):
                weight *= _multinomial(
                    by_cell[c] for c in cells if c[0] == k
                )
            for l in range(1, m.height + 1):
                weight *= _multinomial(
                    by_cell[c] for c in cells if c[1] == l
                )
            total += weight
        out.append(total)
    return out


@functools.lru_cache(maxsize=None)
def _cell_members(cell: CellClass, nmax: int) -> tuple[tuple[Perm, ...], ...]:
    if cell.kind == "empty":
        return ((),) + tuple(() for _ in range(nmax))
    if cell.kind == "pt":
        out = [((),)] + [((1,),)] + [()] * (nmax - 1)
        return tuple(out[: nmax + 1])
    if cell.kind == "inc":
        return tuple((tuple(range(1, n + 1)),) for n in range(nmax + 1))
    if cell.kind == "dec":
        return tuple((tuple(range(n, 0, -1)),) for n in range(nmax + 1))
    if cell.kind == "av":
        _, members = enumerate_class(AvClass(cell.basis), nmax)
        return tuple(tuple(sorted(layer)) for layer in members)
    layers = sum_closure_members(cell.generators, nmax)
    return tuple(tuple(sorted(layer)) for layer in layers)


def _multiset_words(counts: dict[int, int]) -> Iterator[tuple[int, ...]]:
    total = sum(counts.values())
    work = dict(counts)

    def rec(acc: list[int]) -> Iterator[tuple[int, ...]]:
        if len(acc) == total:
            yield tuple(acc)
            return
        for key in sorted(work):
            if work[key]:
                work[key] -= 1
                acc.append(key)
                yield from rec(acc)
                acc.pop()
                work[key] += 1

    yield from rec([])


def gridded_perms(m: GridMatrix, n: int) -> Iterator[Perm]:
    """
    Generate every gridded permutation of length n, one yield per
    (permutation, gridding) pair; the multiset of yields therefore has
    size enumerate_gridded(m, n)[n].
    """
    cells = m.nonempty_cells()
    members = {c: _cell_members(m.cell(*c), n) for c in cells}
    allowed = [[s for s in range(n + 1) if members[c][s]] for c in cells]
    for sizes in _size_assignments(allowed, n):
        by_cell = dict(zip(cells, sizes))
        col_sizes = [
            sum(by_cell[c] for c in cells if c[0] == k)
            for k in range(1, m.width + 1)
        ]
        row_sizes = [
            sum(by_cell[c] for c in cells if c[1] == l)
            for l in range(1, m.height + 1)
        ]
        col_offset = [0] + list(itertools.accumulate(col_sizes))
        row_offset = [0] + list(itertools.accumulate(row_sizes))
        col_words = [
            list(_multiset_words({c[1]: by_cell[c] for c in cells if c[0] == k}))
            for k in range(1, m.width + 1)
        ]
        row_words = [
            list(_multiset_words({c[0]: by_cell[c] for c in cells if c[1] == l}))
            for l in range(1, m.height + 1)
        ]
        patterns = [members[c][by_cell[c]] for c in cells]
        for choice in itertools.product(*col_words, *row_words, *patterns):
            ws = choice[: m.width]
            vs = choice[m.width : m.width + m.height]
            sigmas = dict(zip(cells, choice[m.width + m.height :]))
            out = [0] * n
            for (k, l), sigma in sigmas.items():
                positions = [j for j, lab in enumerate(ws[k - 1]) if lab == l]
                slots = [i for i, lab in enumerate(vs[l - 1]) if lab == k]
                for r, j in enumerate(positions):
                    out[col_offset[k - 1] + j] = row_offset[l - 1] + slots[sigma[r] - 1] + 1
            yield tuple(out)


def grid_members(m: GridMatrix, nmax: int) -> list[set[Perm]]:
    """Distinct members of the grid class by length, 0 through nmax."""
    return [set(gridded_perms(m, n)) for n in range(nmax + 1)]


@dataclasses.dataclass(frozen=True)
class MatrixGraph:
    """Nonempty cells, adjacent when aligned with nothing between them."""

    vertices: tuple[tuple[int, int], ...]
    edges: frozenset[tuple[tuple[int, int], tuple[int, int]]]

    def degree(self, v: tuple[int, int]) -> int:
        return sum(1 for e in self.edges if v in e)


def graph_of_matrix(m: GridMatrix) -> MatrixGraph:
    """
    Vertices are the nonempty cells; two cells sharing a column or row are
    adjacent iff no nonempty cell lies strictly between them.

    >>> g = graph_of_matrix(parse_matrix("0, inc\\ndec, 0"))
    >>> g.vertices, sorted(g.edges)
    (((1, 1), (2, 2)), [])
    """
    verts = m.nonempty_cells()
    edges = set()
    for k in range(1, m.width + 1):
        occupied = sorted(l for (kk, l) in verts if kk == k)
        for a, b in zip(occupied, occupied[1:]):
            edges.add(((k, a), (k, b)))
    for l in range(1, m.height + 1):
        occupied = sorted(k for (k, ll) in verts if ll == l)
        for a, b in zip(occupied, occupied[1:]):
            edges.add(((a, l), (b, l)))
    return MatrixGraph(verts, frozenset(edges))


def component_cells(m: GridMatrix) -> list[frozenset[tuple[int, int]]]:
    """Vertex sets of the connected components, ordered by least cell."""
    g = graph_of_matrix(m)
    neighbors: dict[tuple[int, int], set[tuple[int, int]]] = {
        v: set() for v in g.vertices
    }
    for a, b in g.edges:
        neighbors[a].add(b)
        neighbors[b].add(a)
    seen: set[tuple[int, int]] = set()
    out = []
    for v in g.vertices:
        if v in seen:
            continue
        comp: set[tuple[int, int]] = set()
        stack = [v]
        while stack:
            x = stack.pop()
            if x in comp:
                continue
            comp.add(x)
            stack.extend(neighbors[x] - comp)
        seen |= comp
        out.append(frozenset(comp))
    return sorted(out, key=min)


def components(m: GridMatrix) -> list[GridMatrix]:
    """
    The components as compacted submatrices: keep the occupied columns and
    rows of each component, blank every cell outside it.
    """
    out = []
    for comp in component_cells(m):
        cols = sorted(set(k for k, _ in comp))
        rows = sorted(set(l for _, l in comp))
        out.append(
            GridMatrix(
                tuple(
                    tuple(
                        m.cell(k, l) if (k, l) in comp else EMPTY_CELL
                        for l in rows
                    )
                    for k in cols
                )
            )
        )
    return out


def is_forest(m: GridMatrix) -> bool:
    """
    True iff the matrix graph is acyclic.

    >>> is_forest(parse_matrix("inc"))
    True
    >>> is_forest(parse_matrix("inc, dec\\ndec, inc"))
    False
    """
    g = graph_of_matrix(m)
    return len(g.edges) == len(g.vertices) - len(component_cells(m))


def sum_power(beta: Perm, k: int) -> Perm:
    """k copies of beta stacked by direct sum; k = 0 gives the empty one."""
    return functools.reduce(direct_sum, itertools.repeat(beta, k), ())


def skew_power(beta: Perm, k: int) -> Perm:
    return functools.reduce(skew_sum, itertools.repeat(beta, k), ())


def _cell_of(target: AvClass | CellClass) -> CellClass | None:
    # None stands for the class of all permutations
    if isinstance(target, CellClass):
        return target
    if isinstance(target, AvClass):
        return None if target.is_all else CellClass("av", basis=target.basis)
    raise TypeError(f"cannot interpret {target!r} as a class")


_KIND_BASES = {
    "empty": ((1,),),
    "pt": ((1, 2), (2, 1)),
    "inc": ((2, 1),),
    "dec": ((1, 2),),
}


def sum_closure_contained(beta: Perm, target: AvClass | CellClass) -> bool:
    """
    Whether every finite direct sum of copies of beta lies in the target
    class.  Against a finite basis the check is finite: a basis element b
    embeds into some sum power iff it embeds into the power with |b|
    summands, an embedding meeting at most |b| of them.

    >>> sum_closure_contained((1,), av_cell("21"))
    True
    >>> sum_closure_contained((2, 1), av_cell("321"))
    True
    >>> sum_closure_contained((2, 5, 3, 1, 4), av_cell("21"))
    False
    """
    cell = _cell_of(target)
    if cell is None:
        return True
    if cell.kind == "sumcl":
        # the target is itself sum closed, so membership of beta decides
        return cell.member(beta)
    basis = cell.basis if cell.kind == "av" else _KIND_BASES[cell.kind]
    return all(not contains(b, sum_power(beta, len(b))) for b in basis)


def skew_closure_contained(beta: Perm, target: AvClass | CellClass) -> bool:
    """
    Skew mirror of sum_closure_contained.

    >>> skew_closure_contained((1, 2), av_cell("123"))
    True
    >>> skew_closure_contained((1,), av_cell("12"))
    True
    """
    cell = _cell_of(target)
    if cell is None:
        return True
    if cell.kind == "sumcl":
        if not beta:
            return True
        # skew powers of a nonempty pattern are sum indecomposable, so one
        # power longer than every generator settles all of them
        k = max(len(g) for g in cell.generators) + 1
        return cell.member(skew_power(beta, k))
    basis = cell.basis if cell.kind == "av" else _KIND_BASES[cell.kind]
    return all(not contains(b, skew_power(beta, len(b))) for b in basis)


@dataclasses.dataclass(frozen=True)
class GriddabilityReport:
    """Outcome of the griddability test, with the blocking pattern if any."""

    griddable: bool
    witness: Perm | None = None
    direction: str | None = None

    def __bool__(self) -> bool:
        return self.griddable


def is_D_griddable(
    target: AvClass | CellClass, d_basis: Iterable[Perm]
) -> GriddabilityReport:
    """
    Decide whether the target class can be gridded with cells from the
    class with the given basis: it can iff it contains neither the sum
    closure nor the skew closure of any basis element.

    >>> is_D_griddable(av_cell("123"), [(1, 2), (2, 1)])
    GriddabilityReport(griddable=False, witness=(1, 2), direction='skew')
    """
    for beta in sorted(set(d_basis), key=lambda p: (len(p), p)):
        if sum_closure_contained(beta, target):
            return GriddabilityReport(False, beta, "sum")
        if skew_closure_contained(beta, target):
            return GriddabilityReport(False, beta, "skew")
    return GriddabilityReport(True)
