"""Dual graphs of modifications of (C^2, 0) by point blow-ups.

A modification is described by the ordered list of blow-up centers.  The
first center is always the origin; each later center is either a free point
on one existing exceptional line or a satellite point, the intersection of
two existing lines.  Replaying the list yields the dual tree together with
the self-intersection numbers, from which the intersection matrix ``D``
(``d_i^j = -(E_i . E_j)``) and its integral inverse ``M`` follow.

Line indices are 1-based everywhere in the public API, so line ``1`` is the
line created by blowing up the origin.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Iterator, Sequence, Union

MAX_LINES = 20


class InvalidCenter(ValueError):
    """A blow-up center does not make sense at its position in the sequence."""


class SingularMatrix(ArithmeticError):
    pass


class NonIntegralInverse(ArithmeticError):
    pass


@dataclass(frozen=True)
class Origin:
    def to_json(self) -> dict:
        return {"type": "origin"}


@dataclass(frozen=True)
class Free:
    """Free point on line ``on``."""

    on: int

    def to_json(self) -> dict:
        return {"type": "free", "on": self.on}


@dataclass(frozen=True)
class Satellite:
    """Intersection point of two lines; the pair is unordered."""

    between: tuple[int, int]

    def __post_init__(self):
        i, j = self.between
        object.__setattr__(self, "between", (min(i, j), max(i, j)))

    def to_json(self) -> dict:
        return {"type": "satellite", "between": list(self.between)}


BlowupCenter = Union[Origin, Free, Satellite]
BlowupSequence = Sequence[BlowupCenter]


def center_from_json(obj) -> BlowupCenter:
    """Decode ``{"type": ...}`` into a center.  Raises InvalidCenter naming the field."""
    if not isinstance(obj, dict):
        raise InvalidCenter(f"blow-up entry must be an object, got {obj!r}")
    kind = obj.get("type")
    if kind == "origin":
        return Origin()
    if kind == "free":
        on = obj.get("on")
        if not isinstance(on, int) or isinstance(on, bool):
            raise InvalidCenter(f"'on' must be an integer line index, got {on!r}")
        return Free(on)
    if kind == "satellite":
        pair = obj.get("between")
        if (
            not isinstance(pair, list)
            or len(pair) != 2
            or not all(isinstance(x, int) and not isinstance(x, bool) for x in pair)
        ):
            raise InvalidCenter(f"'between' must be a pair of line indices, got {pair!r}")
        if pair[0] == pair[1]:
            raise InvalidCenter(f"'between' needs two distinct lines, got {pair!r}")
        return Satellite((pair[0], pair[1]))
    raise InvalidCenter(f"'type' must be origin, free or satellite, got {kind!r}")


@dataclass(frozen=True)
class ResolutionGraph:
    """Immutable dual graph with all derived intersection data.

    ``D`` and ``M`` are tuples of row tuples; ``edges`` holds 1-based pairs
    ``(i, j)`` with ``i < j``.
    """

    self_int: tuple[int, ...]
    edges: frozenset
    D: tuple[tuple[int, ...], ...] = field(repr=False)
    M: tuple[tuple[int, ...], ...] = field(repr=False)
    chi_smooth: tuple[int, ...]
    zeta: tuple[int, ...]
    sequence: tuple = field(default=(), compare=False, repr=False)

    @property
    def s(self) -> int:
        return len(self.self_int)

    def neighbors(self, i: int) -> list[int]:
        return sorted(b if a == i else a for a, b in self.edges if i in (a, b))

    def degree(self, i: int) -> int:
        return len(self.neighbors(i))

    def row(self, i: int) -> tuple[int, ...]:
        """Row ``d^i`` of D (1-based i)."""
        return self.D[i - 1]

    def multiplicities(self, i: int) -> tuple[int, ...]:
        """Row ``m^i`` of M, the exponent vector of ``t^{m^i}``."""
        return self.M[i - 1]


def _replay(seq: BlowupSequence) -> tuple[list[int], set]:
    if len(seq) == 0:
        raise InvalidCenter("blow-up sequence is empty")
    if len(seq) > MAX_LINES:
        raise InvalidCenter(f"at most {MAX_LINES} blow-ups are supported, got {len(seq)}")
    self_int: list[int] = []
    edges: set = set()
    for pos, c in enumerate(seq):
        new = pos + 1
        if pos == 0:
            if not isinstance(c, Origin):
                raise InvalidCenter("the first blow-up must be the origin")
        elif isinstance(c, Origin):
            raise InvalidCenter(f"blow-up {new}: the origin can only be blown up first")
        elif isinstance(c, Free):
            if not 1 <= c.on < new:
                raise InvalidCenter(f"blow-up {new}: 'on' refers to nonexistent line {c.on}")
            self_int[c.on - 1] -= 1
            edges.add((c.on, new))
        elif isinstance(c, Satellite):
            i, j = c.between
            if i == j or not (1 <= i < new and 1 <= j < new):
                raise InvalidCenter(f"blow-up {new}: 'between' refers to invalid lines {c.between}")
            if (i, j) not in edges:
                raise InvalidCenter(f"blow-up {new}: 'between' lines {i} and {j} do not intersect")
            self_int[i - 1] -= 1
            self_int[j - 1] -= 1
            edges.discard((i, j))
            edges.add((i, new))
            edges.add((j, new))
        else:
            raise InvalidCenter(f"blow-up {new}: unknown center {c!r}")
        self_int.append(-1)
    return self_int, edges


def intersection_matrix(self_int: Sequence[int], edges: Iterable[tuple[int, int]]) -> list[list[int]]:
    s = len(self_int)
    D = [[0] * s for _ in range(s)]
    for i, e in enumerate(self_int):
        D[i][i] = -e
    for a, b in edges:
        D[a - 1][b - 1] = D[b - 1][a - 1] = -1
    return D


def exact_inverse(D: Sequence[Sequence[int]]) -> list[list[Fraction]]:
    """Gauss-Jordan inverse over the rationals."""
    n = len(D)
    A = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(D)]
    for col in range(n):
        piv = next((r for r in range(col, n) if A[r][col] != 0), None)
        if piv is None:
            raise SingularMatrix("intersection matrix is singular")
        A[col], A[piv] = A[piv], A[col]
        p = A[col][col]
        A[col] = [x / p for x in A[col]]
        for r in range(n):
            if r != col and A[r][col] != 0:
                f = A[r][col]
                A[r] = [x - f * y for x, y in zip(A[r], A[col])]
    return [row[n:] for row in A]


def multiplicity_matrix(g_or_D) -> list[list[int]]:
    """``M = D^{-1}`` as positive integers, checked against ``D M = I``.

    Accepts a ResolutionGraph or a bare square integer matrix.
    """
    D = g_or_D.D if isinstance(g_or_D, ResolutionGraph) else g_or_D
    inv = exact_inverse(D)
    M = []
    for row in inv:
        if any(x.denominator != 1 for x in row):
            raise NonIntegralInverse(f"inverse has non-integral entries: {row}")
        M.append([int(x) for x in row])
    if any(x <= 0 for row in M for x in row):
        raise NonIntegralInverse("inverse has non-positive entries")
    n = len(D)
    for i in range(n):
        for j in range(n):
            if sum(D[i][k] * M[k][j] for k in range(n)) != int(i == j):
                raise NonIntegralInverse("D M is not the identity")
    return M


def build_graph(seq: BlowupSequence) -> ResolutionGraph:
    self_int, edges = _replay(seq)
    s = len(self_int)
    D = intersection_matrix(self_int, edges)
    M = multiplicity_matrix(D)
    deg = [0] * s
    for a, b in edges:
        deg[a - 1] += 1
        deg[b - 1] += 1
    return ResolutionGraph(
        self_int=tuple(self_int),
        edges=frozenset(edges),
        D=tuple(map(tuple, D)),
        M=tuple(map(tuple, M)),
        chi_smooth=tuple(2 - d for d in deg),
        zeta=tuple(int(d == s - 1) for d in deg),
        sequence=tuple(seq),
    )


def _mask(g: ResolutionGraph, I) -> int:
    if isinstance(I, int):
        return I
    m = 0
    for i in I:
        if not 1 <= i <= g.s:
            raise ValueError(f"line {i} is not in 1..{g.s}")
        m |= 1 << (i - 1)
    return m


def mu_of_subset(g: ResolutionGraph, I) -> int:
    """Number of intersection points between distinct lines of ``I``.

    ``I`` is an iterable of 1-based line indices or a bitmask (bit ``i-1``
    for line ``i``).
    """
    m = _mask(g, I)
    return sum(1 for a, b in g.edges if (m >> (a - 1)) & 1 and (m >> (b - 1)) & 1)


def contacts_m(g: ResolutionGraph, i: int, I) -> int:
    """Neighbours of line ``i`` inside ``I`` minus ``{i}``."""
    m = _mask(g, I) & ~(1 << (i - 1))
    row = g.row(i)
    return -sum(row[j] for j in range(g.s) if (m >> j) & 1)


def extensions(seq: Sequence[BlowupCenter]) -> Iterator[tuple]:
    """One-step extensions in canonical order: Free targets ascending, then
    Satellite over current edges in lexicographic order."""
    n = len(seq)
    for i in range(1, n + 1):
        yield tuple(seq) + (Free(i),)
    _, edges = _replay(seq)
    for e in sorted(edges):
        yield tuple(seq) + (Satellite(e),)


def enumerate_sequences(max_lines: int) -> Iterator[tuple]:
    """All blow-up sequences of length 1..max_lines, by length then canonical order."""
    if max_lines > MAX_LINES:
        raise ValueError(f"max_lines must be at most {MAX_LINES}")
    layer = [(Origin(),)] if max_lines >= 1 else []
    while layer:
        yield from layer
        if len(layer[0]) >= max_lines:
            break
        layer = [ext for seq in layer for ext in extensions(seq)]


def sequence_to_json(seq: Iterable[BlowupCenter]) -> list[dict]:
    return [c.to_json() for c in seq]
