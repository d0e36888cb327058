"""The right action of Brauer diagrams on tensor space (k^n)^{(x) r}.

Simple tensors ``e_{i_1} (x) ... (x) e_{i_r}`` are indexed by tuples of
1-based indices. Vectors are sparse dicts ``{index: Scalar}`` with no zero
values. An operator acts on row vectors, so ``v . d1 . d2`` is computed by
applying ``phi(d1)`` and then ``phi(d2)``.

Skew case sign convention
-------------------------
Evaluating the edge-product procedure verbatim with the skew form gives
``phi(s1) phi(c0) = -phi(c0)``, so it cannot represent ``B_r(-n)`` (where
``s1 c0 = c0``). The skew action here multiplies the verbatim matrix of a
diagram ``d`` by ``(-1)**(cr(d) + h(d))``, with ``cr`` the crossing parity and
``h`` the number of top horizontal edges. Permutations then act by
``sign(pi)`` times place permutation, and on simple tensors

    (e_{i_1} (x) ... ) . c0 = -eps_{i_1} * [i_1 = i_2'] * sum_j eps_j e_j (x) e_{j'} (x) ...

which is ``-eps_{i_1}`` times the closed c0 formula of :func:`apply_c0`. This
is the convention under which ``phi`` is a representation with loop value
``-n`` (verified exhaustively in the tests). In characteristic 2 every sign
is 1 and the two conventions coincide.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from typing import Dict, Iterable, Iterator, Mapping, Sequence

from .diagrams import BrauerDiagram
from .errors import BrauerError
from .scalars import SKEW, SYMMETRIC, FieldSpec, Scalar, check_form, parse_scalar, reduce_int
from .weights import prime

Index = tuple  # tuple[int, ...], entries in 1..n
Vector = Dict[Index, Scalar]

DENSE_CAP = 10**6


@dataclass(frozen=True)
class FormSpec:
    kind: str
    n: int
    field: FieldSpec

    def __post_init__(self):
        check_form(self.kind, self.n, self.field)

    @property
    def delta(self) -> Scalar:
        return reduce_int(self.n if self.kind == SYMMETRIC else -self.n, self.field)


def epsilon(j: int, n: int) -> int:
    """+1 when ``j < j'``, else -1."""
    return 1 if j < prime(j, n) else -1


def form_value(i: int, m: int, form: FormSpec) -> Scalar:
    """``(e_i, e_m)``; nonzero only when ``m == i'``."""
    n = form.n
    if not (1 <= i <= n and 1 <= m <= n):
        raise BrauerError(f"basis index out of range 1..{n}: {(i, m)}")
    if m != prime(i, n):
        return form.field.zero()
    if form.kind == SYMMETRIC:
        return form.field.one()
    return reduce_int(epsilon(i, n), form.field)


def dual_vector(j: int, form: FormSpec) -> tuple[int, Scalar]:
    """``e*_j = c * e_m`` with ``(e_i, e*_j) = delta_ij``; returns ``(m, c)``."""
    n = form.n
    if not 1 <= j <= n:
        raise BrauerError(f"basis index {j} out of range 1..{n}")
    m = prime(j, n)
    if form.kind == SYMMETRIC:
        return m, form.field.one()
    return m, reduce_int(epsilon(j, n), form.field)


# --- simple tensors -------------------------------------------------------

def all_indices(n: int, r: int) -> Iterator[Index]:
    return product(range(1, n + 1), repeat=r)


def encode_index(t: Sequence[int], n: int) -> int:
    """Base-n code of a multi-index; ``t[0]`` is the most significant digit."""
    code = 0
    for i in t:
        if not 1 <= i <= n:
            raise BrauerError(f"index {i} out of range 1..{n}")
        code = code * n + (i - 1)
    return code


def decode_index(code: int, n: int, r: int) -> Index:
    if not 0 <= code < n**r:
        raise BrauerError(f"code {code} out of range for n={n}, r={r}")
    digits = []
    for _ in range(r):
        code, d = divmod(code, n)
        digits.append(d + 1)
    return tuple(reversed(digits))


def apply_permutation(t: Sequence[int], perm: Sequence[int]) -> Index:
    """Place permutation on the right: the factor in place b moves to ``(b)perm``."""
    if len(t) != len(perm):
        raise BrauerError(f"permutation of {len(perm)} places cannot act on {tuple(t)}")
    out = [0] * len(t)
    for b, i in enumerate(t):
        out[perm[b] - 1] = i
    return tuple(out)


def apply_c0(t: Sequence[int], form: FormSpec) -> list[tuple[Index, Scalar]]:
    """Closed formula for c0 on a simple tensor, as printed for each form.

    ``[i_1 = i_2'] * sum_j c_j e_j (x) e_{j'} (x) e_{i_3} ...`` with ``c_j = 1``
    (symmetric) or ``eps_j`` (skew). For the skew form this differs from
    ``phi_operator(c0)`` by the factor ``-eps_{i_1}``; see the module notes.
    """
    n = form.n
    if len(t) < 2:
        raise BrauerError("c0 needs r >= 2")
    if t[0] != prime(t[1], n):
        return []
    tail = tuple(t[2:])
    out = []
    for j in range(1, n + 1):
        c = 1 if form.kind == SYMMETRIC else epsilon(j, n)
        out.append(((j, prime(j, n)) + tail, reduce_int(c, form.field)))
    return out


# --- operators -----------------------------------------------------------

@dataclass(frozen=True)
class SparseOperator:
    """Row-sparse matrix on the simple-tensor basis (row = input index)."""

    n: int
    r: int
    field: FieldSpec
    rows: Mapping[Index, tuple[tuple[Index, Scalar], ...]]

    def row(self, t: Index) -> tuple[tuple[Index, Scalar], ...]:
        return self.rows.get(tuple(t), ())

    def apply(self, v: Mapping[Index, Scalar]) -> Vector:
        out: Vector = {}
        for t, a in v.items():
            for u, c in self.rows.get(t, ()):
                out[u] = out[u] + a * c if u in out else a * c
        return {u: c for u, c in out.items() if c}

    def then(self, other: SparseOperator) -> SparseOperator:
        """Operator of applying ``self`` and then ``other``."""
        return SparseOperator(
            self.n, self.r, self.field,
            {t: tuple(other.apply(dict(row)).items()) for t, row in self.rows.items()},
        )

    def scaled(self, c: Scalar) -> SparseOperator:
        rows = {}
        for t, row in self.rows.items():
            rows[t] = tuple((u, c * a) for u, a in row if c * a)
        return SparseOperator(self.n, self.r, self.field, rows)

    def nnz(self) -> int:
        return sum(len(row) for row in self.rows.values())

    def as_dict(self) -> dict[Index, dict[Index, Scalar]]:
        return {t: dict(row) for t, row in self.rows.items() if row}

    def __eq__(self, other):
        if not isinstance(other, SparseOperator):
            return NotImplemented
        return (self.n, self.r, self.field) == (other.n, other.r, other.field) and \
            self.as_dict() == other.as_dict()

    __hash__ = None

    def to_json(self) -> str:
        rows = {
            format_index(t): {format_index(u): str(c) for u, c in row}
            for t, row in sorted(self.rows.items()) if row
        }
        return json.dumps({"n": self.n, "r": self.r, "char": self.field.p, "rows": rows}, indent=2)


def action_sign(d: BrauerDiagram, form: FormSpec) -> int:
    if form.kind == SKEW:
        return -1 if (d.crossing_parity + d.horizontal_count) % 2 else 1
    return 1


def _expand(label: tuple[str, int], form: FormSpec) -> tuple[int, Scalar]:
    kind, j = label
    if kind == "e":
        return j, form.field.one()
    return dual_vector(j, form)


def edge_value(u: tuple[str, int], v: tuple[str, int], form: FormSpec) -> Scalar:
    """``(u, v)`` for labels ``("e", i)`` = e_i or ``("d", j)`` = e*_j."""
    mu, cu = _expand(u, form)
    mv, cv = _expand(v, form)
    return cu * cv * form_value(mu, mv, form)


def phi_entry(d: BrauerDiagram, i: Sequence[int], j: Sequence[int], form: FormSpec) -> Scalar:
    """One matrix entry by the edge-product procedure, without any sign twist.

    Top vertices carry ``e_{i_a}`` and bottom vertices ``e*_{j_c}``; each edge
    contributes ``(u, v)`` with the top label first, then left to right.
    """
    r = d.r
    labels = [("e", x) for x in i] + [("d", y) for y in j]
    out = form.field.one()
    for a, b in d.edges():
        out = out * edge_value(labels[a], labels[b], form)
        if not out:
            break
    return out


@lru_cache(maxsize=4096)
def phi_operator(d: BrauerDiagram, form: FormSpec) -> SparseOperator:
    """The matrix of ``d`` acting on the right of (k^n)^{(x) r}.

    Rows are generated from their admissible output indices, so the cost is
    proportional to the number of nonzeros.
    """
    n, r, field = form.n, d.r, form.field
    sign = reduce_int(action_sign(d, form), field)
    edges = d.edges()
    top_caps = [(a, b) for a, b in edges if b < r]
    bottom_caps = [(a - r, b - r) for a, b in edges if a >= r]
    verticals = [(a, b - r) for a, b in edges if a < r <= b]
    # dual index -> j with e*_j proportional to e_m
    dual_of = {dual_vector(j, form)[0]: j for j in range(1, n + 1)}

    rows = {}
    for t in all_indices(n, r):
        coeff = sign
        for a, b in top_caps:
            coeff = coeff * edge_value(("e", t[a]), ("e", t[b]), form)
            if not coeff:
                break
        if not coeff:
            rows[t] = ()
            continue
        out = [0] * r
        for a, c in verticals:
            out[c] = t[a]  # the only j with (e_i, e*_j) != 0 is j = i
            coeff = coeff * edge_value(("e", t[a]), ("d", t[a]), form)
        partial = [(out, coeff)]
        for c, e in bottom_caps:
            grown = []
            for jc in range(1, n + 1):
                m, _ = dual_vector(jc, form)
                je = dual_of[prime(m, n)]
                val = edge_value(("d", jc), ("d", je), form)
                if not val:
                    continue
                for o, cf in partial:
                    o2 = list(o)
                    o2[c], o2[e] = jc, je
                    grown.append((o2, cf * val))
            partial = grown
        rows[t] = tuple((tuple(o), cf) for o, cf in partial if cf)
    return SparseOperator(n, r, field, rows)


def act(vector: Mapping[Index, Scalar], element: Iterable[tuple[BrauerDiagram, Scalar]],
        form: FormSpec) -> Vector:
    """Right action of an algebra element ``sum c_d d`` on a vector."""
    out: Vector = {}
    for t in vector:
        if len(t) and any(not 1 <= x <= form.n for x in t):
            raise BrauerError(f"index {t} out of range for n={form.n}")
    for d, c in element:
        for t in vector:
            if len(t) != d.r:
                raise BrauerError(f"vector of degree {len(t)} cannot be acted on by an {d.r}-diagram")
        part = phi_operator(d, form).apply(vector)
        for u, a in part.items():
            out[u] = out[u] + c * a if u in out else c * a
    return {u: a for u, a in out.items() if a}


def basis_vector(t: Sequence[int], field: FieldSpec) -> Vector:
    return {tuple(t): field.one()}


def apply_monomial(vector: Mapping[Index, Scalar], images: Sequence[int],
                   coeffs: Sequence[Scalar]) -> Vector:
    """Diagonal action of ``g e_i = coeffs[i] e_{images[i]}`` (1-based lists)."""
    out: Vector = {}
    for t, a in vector.items():
        c = a
        for i in t:
            c = c * coeffs[i - 1]
        u = tuple(images[i - 1] for i in t)
        out[u] = out[u] + c if u in out else c
    return {u: a for u, a in out.items() if a}


def apply_torus(vector: Mapping[Index, Scalar], diag: Sequence[Scalar]) -> Vector:
    n = len(diag)
    return apply_monomial(vector, range(1, n + 1), diag)


def to_dense(vector: Mapping[Index, Scalar], n: int, r: int, field: FieldSpec) -> list[Scalar]:
    if n**r > DENSE_CAP:
        raise BrauerError(f"dense vector of size {n}**{r} exceeds the cap {DENSE_CAP}")
    out = [field.zero()] * n**r
    for t, a in vector.items():
        out[encode_index(t, n)] = a
    return out


def from_dense(values: Sequence[Scalar], n: int, r: int) -> Vector:
    return {decode_index(k, n, r): a for k, a in enumerate(values) if a}


# --- text encodings ------------------------------------------------------

def format_index(t: Sequence[int]) -> str:
    return ",".join(map(str, t))


def format_vector(v: Mapping[Index, Scalar]) -> str:
    if not v:
        return "0"
    return " ".join(f"{format_index(t)}:{c}" for t, c in sorted(v.items()))


def parse_vector(text: str, field: FieldSpec) -> Vector:
    """Parse terms ``"i1,...,ir:coeff"`` separated by whitespace or ``;``."""
    out: Vector = {}
    for term in text.replace(";", " ").split():
        if term == "0":
            continue
        idx, sep, coeff = term.partition(":")
        try:
            t = tuple(int(x) for x in idx.split(","))
        except ValueError as exc:
            raise BrauerError(f"bad tensor index in {term!r}") from exc
        c = parse_scalar(coeff, field) if sep else field.one()
        out[t] = out[t] + c if t in out else c
    return {t: c for t, c in out.items() if c}
