"""Brauer r-diagrams: perfect matchings on two rows of r vertices.

Vertices are numbered from 0. The top row is ``0 .. r-1`` left to right and
the bottom row is ``r .. 2r-1`` left to right. A diagram is stored as the
fixed-point-free involution ``partner`` on ``range(2r)``.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from functools import cached_property
from typing import Iterator, Sequence

from .errors import DiagramError, EnumerationCapError

DEFAULT_ENUM_CAP = 10**7
ENUM_CAP_ENV = "BRAUER_ENUM_CAP"


def enumeration_cap() -> int:
    raw = os.environ.get(ENUM_CAP_ENV)
    if raw is None:
        return DEFAULT_ENUM_CAP
    try:
        return int(raw)
    except ValueError as exc:
        raise EnumerationCapError(f"{ENUM_CAP_ENV}={raw!r} is not an integer") from exc


def double_factorial(m: int) -> int:
    out = 1
    while m > 1:
        out *= m
        m -= 2
    return out


@dataclass(frozen=True)
class BrauerDiagram:
    r: int
    partner: tuple[int, ...]

    def __post_init__(self):
        if self.r < 1:
            raise DiagramError(f"r must be positive, got {self.r}")
        p = tuple(self.partner)
        object.__setattr__(self, "partner", p)
        if len(p) != 2 * self.r:
            raise DiagramError(f"expected {2 * self.r} vertices, got {len(p)}")
        for v, w in enumerate(p):
            if not 0 <= w < 2 * self.r:
                raise DiagramError(f"vertex {w} out of range for r={self.r}")
            if w == v:
                raise DiagramError(f"vertex {v} is matched to itself")
            if p[w] != v:
                raise DiagramError(f"partner map is not an involution at {v}")

    @classmethod
    def from_edges(cls, r: int, edges) -> BrauerDiagram:
        partner = [-1] * (2 * r)
        for a, b in edges:
            for v in (a, b):
                if not 0 <= v < 2 * r:
                    raise DiagramError(f"vertex {v} out of range for r={r}")
                if partner[v] != -1:
                    raise DiagramError(f"vertex {v} lies on more than one edge")
            if a == b:
                raise DiagramError(f"loop at vertex {a}")
            partner[a], partner[b] = b, a
        missing = [v for v, w in enumerate(partner) if w == -1]
        if missing:
            raise DiagramError(f"vertices {missing} are not covered by an edge")
        return cls(r, tuple(partner))

    @classmethod
    def identity(cls, r: int) -> BrauerDiagram:
        return cls.from_edges(r, [(a, r + a) for a in range(r)])

    def edges(self) -> list[tuple[int, int]]:
        """Canonical edge list: ``(min, max)`` pairs in lexicographic order."""
        return [(v, w) for v, w in enumerate(self.partner) if v < w]

    def is_top(self, v: int) -> bool:
        return v < self.r

    @cached_property
    def horizontal_count(self) -> int:
        """Number of horizontal edges in the top row (equal to the bottom)."""
        return sum(1 for a, b in self.edges() if b < self.r)

    @property
    def is_permutation(self) -> bool:
        return self.horizontal_count == 0

    def to_permutation(self) -> tuple[int, ...]:
        """One-line notation ``(1)pi, ..., (r)pi`` of a permutation diagram."""
        if not self.is_permutation:
            raise DiagramError(f"{self} is not a permutation diagram")
        return tuple(self.partner[a] - self.r + 1 for a in range(self.r))

    @cached_property
    def crossing_parity(self) -> int:
        """Parity of the number of edge crossings in any generic drawing.

        Walking the rectangle boundary (top row left to right, then bottom row
        right to left), two edges cross an odd number of times exactly when
        their endpoints interleave.
        """
        r = self.r

        def pos(v):
            return v if v < r else 3 * r - 1 - v

        chords = [tuple(sorted((pos(a), pos(b)))) for a, b in self.edges()]
        odd = 0
        for i, (a, b) in enumerate(chords):
            for c, d in chords[i + 1:]:
                if (a < c < b) != (a < d < b):
                    odd ^= 1
        return odd

    def __str__(self):
        return format_diagram(self)


def format_diagram(d: BrauerDiagram) -> str:
    return ",".join(f"{a}-{b}" for a, b in d.edges())


def parse_diagram(text: str, r: int | None = None) -> BrauerDiagram:
    """Parse the ``"a-b,c-d,..."`` edge-list encoding."""
    edges = []
    for chunk in text.replace(" ", "").split(","):
        if not chunk:
            continue
        try:
            a, b = (int(x) for x in chunk.split("-"))
        except ValueError as exc:
            raise DiagramError(f"bad edge {chunk!r} in {text!r}") from exc
        edges.append((a, b))
    if not edges:
        raise DiagramError("empty diagram")
    size = 2 * len(edges)
    if r is None:
        r = len(edges)
    elif size != 2 * r:
        raise DiagramError(f"{text!r} has {len(edges)} edges, expected r={r}")
    return BrauerDiagram.from_edges(r, edges)


def from_permutation(perm: Sequence[int]) -> BrauerDiagram:
    """Diagram of a permutation given in one-line notation on ``1..r``.

    Top vertex ``b`` is joined to bottom vertex ``(b)perm``, so the diagram
    moves the tensor factor in place ``b`` to place ``(b)perm``.
    """
    r = len(perm)
    if sorted(perm) != list(range(1, r + 1)):
        raise DiagramError(f"{tuple(perm)} is not a permutation of 1..{r}")
    return BrauerDiagram.from_edges(r, [(b, r + perm[b] - 1) for b in range(r)])


def compose_permutations(first: Sequence[int], then: Sequence[int]) -> tuple[int, ...]:
    """Right-action product: apply ``first`` and then ``then``."""
    return tuple(then[first[b] - 1] for b in range(len(first)))


def c0_diagram(r: int) -> BrauerDiagram:
    """Caps on the first two top vertices and the first two bottom vertices."""
    if r < 2:
        raise DiagramError("c0 needs r >= 2")
    return BrauerDiagram.from_edges(r, [(0, 1), (r, r + 1)] + [(a, r + a) for a in range(2, r)])


def simple_transposition(r: int, i: int) -> BrauerDiagram:
    """``s_i`` swapping strands ``i`` and ``i+1`` (1-based)."""
    perm = list(range(1, r + 1))
    perm[i - 1], perm[i] = perm[i], perm[i - 1]
    return from_permutation(perm)


def generator_diagrams(r: int) -> list[BrauerDiagram]:
    """``[s_1, ..., s_{r-1}, c0]``; these generate the Brauer algebra."""
    if r < 2:
        raise DiagramError("generator_diagrams needs r >= 2; B_1 is spanned by the identity")
    return [simple_transposition(r, i) for i in range(1, r)] + [c0_diagram(r)]


def algebra_generators(r: int) -> list[BrauerDiagram]:
    """Generators for any r >= 1; degenerates to the identity when r == 1."""
    if r == 1:
        return [BrauerDiagram.identity(1)]
    return generator_diagrams(r)


def _matchings(free: list[int]) -> Iterator[list[tuple[int, int]]]:
    if not free:
        yield []
        return
    first, rest = free[0], free[1:]
    for k, other in enumerate(rest):
        for tail in _matchings(rest[:k] + rest[k + 1:]):
            yield [(first, other)] + tail


def iter_diagrams(r: int) -> Iterator[BrauerDiagram]:
    for edges in _matchings(list(range(2 * r))):
        yield BrauerDiagram.from_edges(r, edges)


def enumerate_diagrams(r: int, cap: int | None = None) -> list[BrauerDiagram]:
    """All ``(2r-1)!!`` r-diagrams, ordered by canonical edge list."""
    if r < 1:
        raise DiagramError(f"r must be positive, got {r}")
    cap = enumeration_cap() if cap is None else cap
    count = double_factorial(2 * r - 1)
    if count > cap:
        raise EnumerationCapError(
            f"r={r} has {count} diagrams, above the enumeration cap {cap} "
            f"(raise it with {ENUM_CAP_ENV})"
        )
    return list(iter_diagrams(r))


@dataclass(frozen=True)
class DiagramProduct:
    cycles: int
    diagram: BrauerDiagram


def diagram_multiply(d1: BrauerDiagram, d2: BrauerDiagram) -> DiagramProduct:
    """Stack ``d1`` above ``d2`` and trace paths through the middle row.

    Returns the resulting diagram and the number ``s`` of closed loops left
    in the middle row, so that ``d1 d2 = delta**s * d``.
    """
    if d1.r != d2.r:
        raise DiagramError(f"cannot multiply an {d1.r}-diagram by an {d2.r}-diagram")
    r = d1.r
    p1, p2 = d1.partner, d2.partner
    seen = [False] * r

    def walk(upper: bool, v: int) -> int:
        # upper: currently at vertex v of d1, else at vertex v of d2
        while True:
            if upper:
                w = p1[v]
                if w < r:
                    return w
                seen[w - r] = True
                upper, v = False, w - r
            else:
                w = p2[v]
                if w >= r:
                    return w
                seen[w] = True
                upper, v = True, r + w

    partner = [0] * (2 * r)
    for a in range(r):
        partner[a] = walk(True, a)
    for b in range(r, 2 * r):
        partner[b] = walk(False, b)

    cycles = 0
    for m in range(r):
        if seen[m]:
            continue
        cycles += 1
        cur = m
        while True:
            seen[cur] = True
            nxt = p1[r + cur] - r
            seen[nxt] = True
            cur = p2[nxt]
            if cur == m:
                break
    return DiagramProduct(cycles, BrauerDiagram(r, tuple(partner)))


def closure(generators: Sequence[BrauerDiagram]) -> set[BrauerDiagram]:
    """All diagrams reachable as products of the generators (fixpoint)."""
    found = set(generators)
    frontier = list(found)
    while frontier:
        new = []
        for d in frontier:
            for g in generators:
                for prod in (diagram_multiply(d, g).diagram, diagram_multiply(g, d).diagram):
                    if prod not in found:
                        found.add(prod)
                        new.append(prod)
        frontier = new
    return found
