"""Type-A grids: the quantum-matrices word, Le-diagrams, and pipe dreams.

A p x m grid sits over the type A_{p+m-1} word made of m descending runs,
run c being (p+c-1, p+c-2, ..., c).  Box (r, c), row 1 at the top, carries
the linear position (c-1)p + r (column-major) and the letter p + c - r.

Wiring model.  Folding the braid diagram of that word into the grid puts
the two braid levels (p+c-r, p+c-r+1) into box (r, c): the upper level
enters through the north side and leaves east, the lower level enters west
and leaves south.  A filled box keeps its crossing (west-east and
north-south pass straight through); an empty box turns both wires (the
north wire exits east, the west wire exits south).  That forces the
boundary labels

    left edge, row r:     p + 1 - r        (wire entries)
    top edge, column c:   p + c
    right edge, row r:    p + m + 1 - r    (wire exits)
    bottom edge, column c: c

and makes the traced permutation of any filled subset equal to the product
of its letters' transpositions taken from the highest position down, which
is exactly zeta' of the linearized diagram.  The empty grid traces to the
identity and the full grid to the inverse of the word's element.

Rendering: each box is a 3x3 character tile, '+' at the center for a
crossing, '.' for the double turn, with '|' and '-' stubs on all four
sides (every box carries two wires either way); labels are printed along
all four edges.  trace_rendered_wiring parses that text back and walks
the wires, using only the characters.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DomainError, UsageError
from .roots import RootSystem, WeylElement, root_system
from .words import Word
from .diagrams import Diagram


@dataclass(frozen=True)
class GridShape:
    p: int
    m: int

    def __post_init__(self):
        if self.p < 1 or self.m < 1:
            raise DomainError(f"grid shape needs p >= 1 and m >= 1, got {self.p}x{self.m}")

    @property
    def n(self) -> int:
        return self.p + self.m - 1

    @property
    def size(self) -> int:
        return self.p * self.m

    @property
    def degenerate(self) -> bool:
        # Single row or column: the word formula still gives a reduced word,
        # but the shape lies outside the usual quantum-matrices range.
        return self.p == 1 or self.m == 1

    def system(self) -> RootSystem:
        return root_system("A", self.n)


@dataclass(frozen=True)
class GridDiagram:
    shape: GridShape
    boxes: frozenset[tuple[int, int]]

    def __post_init__(self):
        boxes = frozenset((int(r), int(c)) for r, c in self.boxes)
        for r, c in boxes:
            if not (1 <= r <= self.shape.p and 1 <= c <= self.shape.m):
                raise DomainError(
                    f"box ({r},{c}) outside the {self.shape.p}x{self.shape.m} grid"
                )
        object.__setattr__(self, "boxes", boxes)

    def __str__(self) -> str:
        return format_grid(self)


def box_position(shape: GridShape, r: int, c: int) -> int:
    """Column-major linear position of box (r, c), 1-based."""
    if not (1 <= r <= shape.p and 1 <= c <= shape.m):
        raise DomainError(f"box ({r},{c}) outside the {shape.p}x{shape.m} grid")
    return (c - 1) * shape.p + r


def position_box(shape: GridShape, k: int) -> tuple[int, int]:
    if not 1 <= k <= shape.size:
        raise DomainError(f"position {k} outside 1..{shape.size}")
    c, r = divmod(k - 1, shape.p)
    return r + 1, c + 1


def quantum_matrices_word(shape: GridShape) -> Word:
    """The m-run word (p+c-1, ..., c for c = 1..m) over A_{p+m-1}."""
    letters = []
    for c in range(1, shape.m + 1):
        letters.extend(range(shape.p + c - 1, c - 1, -1))
    word = Word(shape.system(), tuple(letters))
    assert word.reduced
    return word


def linearize(grid: GridDiagram) -> Diagram:
    word = quantum_matrices_word(grid.shape)
    positions = sorted(box_position(grid.shape, r, c) for r, c in grid.boxes)
    return Diagram(word, tuple(positions))


def grid_from_mask(shape: GridShape, mask: int) -> GridDiagram:
    boxes = []
    for k in range(1, shape.size + 1):
        if mask >> (k - 1) & 1:
            boxes.append(position_box(shape, k))
    return GridDiagram(shape, frozenset(boxes))


def is_le_diagram(grid: GridDiagram) -> bool:
    """Every filled box must have its column filled above it or its row
    filled to its left."""
    boxes = grid.boxes
    for u, v in boxes:
        misses_above = any((i, v) not in boxes for i in range(1, u))
        misses_left = any((u, j) not in boxes for j in range(1, v))
        if misses_above and misses_left:
            return False
    return True


def pipe_dream_permutation(grid: GridDiagram) -> tuple[int, ...]:
    """One-line permutation of 1..n+1 built from the filled positions.

    The letters of the filled positions, taken in increasing position
    order, are applied as transpositions (i, i+1) from the right; the
    result is zeta' of the linearized diagram.
    """
    shape = grid.shape
    size = shape.n + 1
    sigma = list(range(1, size + 1))
    filled = sorted(box_position(shape, r, c) for r, c in grid.boxes)
    for k in filled:
        r, c = position_box(shape, k)
        e = shape.p + c - r
        for idx in range(size):
            if sigma[idx] == e:
                sigma[idx] = e + 1
            elif sigma[idx] == e + 1:
                sigma[idx] = e
    return tuple(sigma)


def one_line(system: RootSystem, w: WeylElement) -> tuple[int, ...]:
    """One-line notation of a type-A element acting on 1..n+1.

    Row i of the matrix is w(alpha_i) = e_{sigma(i)} - e_{sigma(i+1)} in
    the standard basis, recovered by differencing the coefficients.
    """
    if system.ctype.family != "A":
        raise DomainError("one-line notation needs a type A system")
    n = system.rank
    sigma = [0] * (n + 1)
    prev_minus = None
    for i in range(n):
        row = w.matrix[i]
        diffs = [row[0]] + [row[k] - row[k - 1] for k in range(1, n)] + [-row[n - 1]]
        plus = diffs.index(1)
        minus = diffs.index(-1)
        assert sorted(diffs) == [-1] + [0] * (n - 1) + [1]
        if prev_minus is not None:
            assert plus == prev_minus
        sigma[i] = plus + 1
        prev_minus = minus
    sigma[n] = prev_minus + 1
    return tuple(sigma)


# -- text formats -------------------------------------------------------------


def format_grid(grid: GridDiagram) -> str:
    return " ".join(f"{r},{c}" for r, c in sorted(grid.boxes))


def parse_grid(shape: GridShape, text: str) -> GridDiagram:
    boxes = []
    for token in text.split():
        parts = token.split(",")
        if len(parts) != 2:
            raise UsageError(f"bad grid box {token!r}, expected 'row,col'")
        try:
            r, c = int(parts[0]), int(parts[1])
        except ValueError:
            raise UsageError(f"bad grid box {token!r}, expected integers") from None
        boxes.append((r, c))
    seen = set()
    for b in boxes:
        if b in seen:
            raise DomainError(f"box {b[0]},{b[1]} repeated")
        seen.add(b)
    return GridDiagram(shape, frozenset(boxes))


# -- rendering and wire tracing ----------------------------------------------


def render_wiring(grid: GridDiagram) -> str:
    shape = grid.shape
    p, m = shape.p, shape.m
    gut = len(str(shape.n + 1)) + 1
    width = gut + 3 * m + 1 + gut

    def blank() -> list[str]:
        return [" "] * width

    def put(line: list[str], col: int, text: str) -> None:
        for k, ch in enumerate(text):
            line[col + k] = ch

    lines: list[list[str]] = []
    top = blank()
    for c in range(1, m + 1):
        put(top, gut + 3 * (c - 1) + 1, str(p + c))
    lines.append(top)

    for r in range(1, p + 1):
        stub = blank()
        for c in range(1, m + 1):
            put(stub, gut + 3 * (c - 1) + 1, "|")
        mid = blank()
        put(mid, 0, str(p + 1 - r).rjust(gut - 1))
        for c in range(1, m + 1):
            core = "+" if (r, c) in grid.boxes else "."
            put(mid, gut + 3 * (c - 1), f"-{core}-")
        put(mid, gut + 3 * m + 1, str(p + m + 1 - r))
        lines.append(stub)
        lines.append(mid)
        lines.append([ch for ch in stub])

    bottom = blank()
    for c in range(1, m + 1):
        put(bottom, gut + 3 * (c - 1) + 1, str(c))
    lines.append(bottom)

    return "\n".join("".join(line).rstrip() for line in lines) + "\n"


def trace_rendered_wiring(text: str) -> tuple[int, ...]:
    """Walk the wires of a rendering and return the entry-to-exit permutation.

    Uses only the text: '+' passes both wires straight through, '.' turns
    the north wire east and the west wire south.
    """
    lines = text.splitlines()
    if len(lines) < 5 or (len(lines) - 2) % 3:
        raise UsageError("not a wiring rendering")
    p = (len(lines) - 2) // 3
    first_mid = lines[2]
    gut = first_mid.index("-")
    centers = []
    col = gut + 1
    while col < len(first_mid) and first_mid[col] in "+.":
        centers.append(col)
        col += 3
    m = len(centers)

    def tile(r: int, c: int) -> str:
        return lines[2 + 3 * r][centers[c]]

    top_labels = [int(tok) for tok in lines[0].split()]
    bottom_labels = [int(tok) for tok in lines[-1].split()]
    left_labels = [int(lines[2 + 3 * r][:gut]) for r in range(p)]
    right_labels = [int(lines[2 + 3 * r][gut + 3 * m + 1 :]) for r in range(p)]
    if len(top_labels) != m or len(bottom_labels) != m:
        raise UsageError("label rows do not match the tile columns")

    def walk(r: int, c: int, side: str) -> int:
        while True:
            cross = tile(r, c) == "+"
            out = ("E" if cross else "S") if side == "W" else ("S" if cross else "E")
            if out == "E":
                if c == m - 1:
                    return right_labels[r]
                c, side = c + 1, "W"
            else:
                if r == p - 1:
                    return bottom_labels[c]
                r, side = r + 1, "N"

    size = p + m
    sigma = [0] * size
    for r in range(p):
        sigma[left_labels[r] - 1] = walk(r, 0, "W")
    for c in range(m):
        sigma[top_labels[c] - 1] = walk(0, c, "N")
    assert sorted(sigma) == list(range(1, size + 1))
    return tuple(sigma)


__all__ = [
    "GridShape",
    "GridDiagram",
    "box_position",
    "position_box",
    "quantum_matrices_word",
    "linearize",
    "grid_from_mask",
    "is_le_diagram",
    "pipe_dream_permutation",
    "one_line",
    "format_grid",
    "parse_grid",
    "render_wiring",
    "trace_rendered_wiring",
]
