"""The summands N^xi of tensor space and exact checks of their properties.

``N^xi`` is spanned by the simple tensors whose weight lies in the fiber of
``xi``. Stability under the Brauer algebra is decided on supports: a
generator maps ``N^xi`` into itself iff every output term of every basis
tensor has its weight in that fiber.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field as dc_field
from typing import Iterator, Optional, Sequence

from .diagrams import (
    BrauerDiagram,
    algebra_generators,
    diagram_multiply,
    enumerate_diagrams,
    format_diagram,
)
from .errors import BrauerError
from .scalars import SKEW, SYMMETRIC, FieldSpec, Scalar, reduce_int
from .tensor_action import (
    FormSpec,
    Index,
    all_indices,
    apply_monomial,
    apply_permutation,
    epsilon,
    form_value,
    phi_operator,
)
from .weights import (
    Composition,
    OrthWeight,
    SignedPermutation,
    dominant_representative,
    fiber,
    image_weights,
    in_image,
    permute_composition,
    prime,
    signed_perm_apply,
    weight_of,
)

ALL_DIAGRAMS_MAX_R = 3


@dataclass(frozen=True)
class Context:
    n: int
    r: int
    form: str = SYMMETRIC

    def form_spec(self, field: FieldSpec) -> FormSpec:
        return FormSpec(self.form, self.n, field)


def multi_indices(lam: Composition) -> list[Index]:
    """Simple tensors of weight ``lam`` in lexicographic order."""
    counts = list(lam.parts)
    r = sum(counts)
    out: list[Index] = []
    cur: list[int] = []

    def rec():
        if len(cur) == r:
            out.append(tuple(cur))
            return
        for i, c in enumerate(counts):
            if c:
                counts[i] -= 1
                cur.append(i + 1)
                rec()
                cur.pop()
                counts[i] += 1

    rec()
    return out


@dataclass(frozen=True)
class ModuleBasis:
    label: object  # Composition for M^lam, OrthWeight for N^xi
    basis: tuple[Index, ...]
    context: Context
    weights: tuple[Composition, ...] = ()

    @property
    def dim(self) -> int:
        return len(self.basis)


def _normalize(xi: OrthWeight, ctx: Context) -> OrthWeight:
    if not in_image(xi, ctx.n, ctx.r):
        raise BrauerError(f"xi={xi} is not a weight of (k^{ctx.n})^(x){ctx.r}")
    if ctx.n % 2 and xi.parity is None:
        return OrthWeight(xi.entries, (ctx.r - sum(xi.entries)) % 2)
    return xi


def build_permutation_module(lam: Composition, ctx: Context) -> ModuleBasis:
    if lam.n != ctx.n or lam.r != ctx.r:
        raise BrauerError(f"{lam} is not in Lambda({ctx.n},{ctx.r})")
    return ModuleBasis(lam, tuple(multi_indices(lam)), ctx, (lam,))


def build_module(xi: OrthWeight, ctx: Context) -> ModuleBasis:
    xi = _normalize(xi, ctx)
    lams = fiber(xi, ctx.n, ctx.r)
    basis = sorted(t for lam in lams for t in multi_indices(lam))
    return ModuleBasis(xi, tuple(basis), ctx, tuple(lams))


def _require_field(ctx: Context, field: FieldSpec) -> FormSpec:
    # FormSpec rejects symmetric forms in characteristic 2 and skew forms with odd n
    return ctx.form_spec(field)


@dataclass(frozen=True)
class Certificate:
    generator: BrauerDiagram
    basis_tensor: Index
    output: Index
    coefficient: Scalar
    output_weight: Composition

    def __str__(self):
        return (f"{self.basis_tensor} . [{format_diagram(self.generator)}] has term "
                f"{self.coefficient}*{self.output} of weight {self.output_weight}")


@dataclass(frozen=True)
class InvarianceResult:
    ok: bool
    certificate: Optional[Certificate] = None

    def __bool__(self):
        return self.ok


def checking_diagrams(r: int, all_diagrams: bool = False) -> list[BrauerDiagram]:
    if all_diagrams:
        if r > ALL_DIAGRAMS_MAX_R:
            raise BrauerError(f"all-diagram mode is limited to r <= {ALL_DIAGRAMS_MAX_R}")
        return enumerate_diagrams(r)
    return algebra_generators(r)


def verify_invariance(xi: OrthWeight, ctx: Context, field: FieldSpec,
                      all_diagrams: bool = False, module: Optional[ModuleBasis] = None) -> InvarianceResult:
    form = _require_field(ctx, field)
    module = build_module(xi, ctx) if module is None else module
    allowed = set(module.weights)
    for g in checking_diagrams(ctx.r, all_diagrams):
        op = phi_operator(g, form)
        for t in module.basis:
            for u, c in op.row(t):
                w = weight_of(u, ctx.n)
                if w not in allowed:
                    return InvarianceResult(False, Certificate(g, t, u, c, w))
    return InvarianceResult(True)


@dataclass
class Summand:
    xi: OrthWeight
    dim: int
    fiber_size: int
    dominant: OrthWeight
    verified: bool
    certificate: Optional[Certificate] = None

    def as_json(self) -> dict:
        return {
            "xi": list(self.xi.entries),
            "parity": self.xi.parity,
            "dim": self.dim,
            "fiber_size": self.fiber_size,
            "dominant": list(self.dominant.entries),
            "verified": self.verified,
        }


@dataclass
class DecompositionReport:
    context: Context
    characteristic: int
    summands: list[Summand]
    total_dim: int
    partition_ok: bool
    orbits: dict = dc_field(default_factory=dict)

    @property
    def verified(self) -> bool:
        return self.partition_ok and all(s.verified for s in self.summands)

    def to_json(self) -> str:
        return json.dumps({
            "n": self.context.n,
            "r": self.context.r,
            "form": self.context.form,
            "char": self.characteristic,
            "summands": [s.as_json() for s in self.summands],
            "total_dim": self.total_dim,
        }, indent=2)


def full_decomposition(ctx: Context, field: FieldSpec, all_diagrams: bool = False) -> DecompositionReport:
    _require_field(ctx, field)
    summands = []
    seen: set[Index] = set()
    overlap = False
    orbits: dict[OrthWeight, list[OrthWeight]] = {}
    for xi in image_weights(ctx.n, ctx.r):
        mod = build_module(xi, ctx)
        basis = set(mod.basis)
        if seen & basis:
            overlap = True
        seen |= basis
        res = verify_invariance(xi, ctx, field, all_diagrams, module=mod)
        dom = dominant_representative(xi)
        orbits.setdefault(dom, []).append(xi)
        summands.append(Summand(xi, mod.dim, len(mod.weights), dom, res.ok, res.certificate))
    total = sum(s.dim for s in summands)
    partition_ok = (not overlap and total == ctx.n**ctx.r
                    and seen == set(all_indices(ctx.n, ctx.r)))
    return DecompositionReport(ctx, field.p, summands, total, partition_ok, orbits)


# --- isomorphisms --------------------------------------------------------

def satisfies_w_criterion(w: Sequence[int], n: int) -> bool:
    """Literal check of ``delta_{w^-1(i), w^-1(j)'} == delta_{i, j'}`` for all i, j."""
    inv = [0] * (n + 1)
    for i, wi in enumerate(w, start=1):
        inv[wi] = i
    return all(
        (inv[i] == prime(inv[j], n)) == (i == prime(j, n))
        for i in range(1, n + 1) for j in range(1, n + 1)
    )


def isometry_lift(w: SignedPermutation, form: FormSpec) -> tuple[tuple[int, ...], tuple[Scalar, ...]]:
    """Monomial matrix ``e_i -> c_i e_{w(i)}`` preserving the form.

    For the symmetric form every ``c_i`` is 1. For the skew form a bare
    permutation can negate the form on a pair ``{i, i'}``, so ``c_{i'}`` is
    set to ``eps_{w(i)}`` (``i < i'``), giving the signed lift inside Sp_n.
    """
    n = form.n
    images = w.lift(n)
    if not satisfies_w_criterion(images, n):
        raise BrauerError(f"{w} does not lift to a form-compatible permutation")
    coeffs = [1] * n
    if form.kind == SKEW:
        for i in range(1, n + 1):
            if i > prime(i, n):
                coeffs[i - 1] = epsilon(images[prime(i, n) - 1], n)
    cs = tuple(reduce_int(c, form.field) for c in coeffs)
    for i in range(1, n + 1):
        for m in range(1, n + 1):
            lhs = cs[i - 1] * cs[m - 1] * form_value(images[i - 1], images[m - 1], form)
            if lhs != form_value(i, m, form):
                raise BrauerError(f"lift of {w} does not preserve the form")
    return images, cs


def iso_check(xi: OrthWeight, w: SignedPermutation, ctx: Context, field: FieldSpec) -> bool:
    """Check that relabeling by (the lift of) ``w`` is an isomorphism
    ``N^xi -> N^{w(xi)}`` of right Brauer modules."""
    form = _require_field(ctx, field)
    src = build_module(xi, ctx)
    dst = build_module(signed_perm_apply(w, src.label), ctx)
    images, coeffs = isometry_lift(w, form)
    one = field.one()
    moved = [apply_monomial({t: one}, images, coeffs) for t in src.basis]
    if sorted(next(iter(v)) for v in moved) != sorted(dst.basis):
        return False
    for g in algebra_generators(ctx.r):
        op = phi_operator(g, form)
        for t in src.basis:
            lhs = op.apply(apply_monomial({t: one}, images, coeffs))
            rhs = apply_monomial(op.apply({t: one}), images, coeffs)
            if lhs != rhs:
                return False
    return True


def perm_module_iso_check(lam: Composition, w: Sequence[int], ctx: Context) -> bool:
    """Relabeling ``e_i -> e_{w(i)}`` as an isomorphism ``M^lam -> M^{w(lam)}``."""
    src = build_permutation_module(lam, ctx)
    dst = build_permutation_module(permute_composition(lam, w), ctx)

    def relabel(t):
        return tuple(w[i - 1] for i in t)

    if sorted(relabel(t) for t in src.basis) != list(dst.basis):
        return False
    for b in range(1, ctx.r):
        s = list(range(1, ctx.r + 1))
        s[b - 1], s[b] = s[b], s[b - 1]
        for t in src.basis:
            if relabel(apply_permutation(t, s)) != apply_permutation(relabel(t), s):
                return False
    return True


def transitivity_check(lam: Composition) -> bool:
    """The place-permutation orbit of one weight-``lam`` tensor is all of M^lam."""
    basis = multi_indices(lam)
    r = lam.r
    swaps = []
    for b in range(1, r):
        s = list(range(1, r + 1))
        s[b - 1], s[b] = s[b], s[b - 1]
        swaps.append(s)
    seen = {basis[0]}
    todo = [basis[0]]
    while todo:
        t = todo.pop()
        for s in swaps:
            u = apply_permutation(t, s)
            if u not in seen:
                seen.add(u)
                todo.append(u)
    return seen == set(basis)


# --- representation and torus checks ------------------------------------

@dataclass(frozen=True)
class RepresentationFailure:
    left: BrauerDiagram
    right: BrauerDiagram
    basis_tensor: Index

    def __str__(self):
        return f"{self.basis_tensor} . {self.left} . {self.right} != delta^s (d1 d2)"


def representation_check(form: FormSpec, r: int,
                         left: Optional[Sequence[BrauerDiagram]] = None,
                         right: Optional[Sequence[BrauerDiagram]] = None) -> Optional[RepresentationFailure]:
    """Compare ``v . d1 . d2`` with ``delta**s * v . (d1 d2)`` on every basis tensor.

    Defaults to all pairs of diagrams. Checking ``left = generators`` against
    every ``right`` already implies the full statement by induction.
    """
    diagrams = enumerate_diagrams(r)
    left = diagrams if left is None else left
    right = diagrams if right is None else right
    delta = form.delta
    one = form.field.one()
    for d1 in left:
        op1 = phi_operator(d1, form)
        for d2 in right:
            prod = diagram_multiply(d1, d2)
            op2 = phi_operator(d2, form)
            op12 = phi_operator(prod.diagram, form)
            scale = delta**prod.cycles
            for t in all_indices(form.n, r):
                lhs = op2.apply(op1.apply({t: one}))
                rhs = {u: scale * c for u, c in op12.row(t) if scale * c}
                if lhs != rhs:
                    return RepresentationFailure(d1, d2, t)
    return None


def torus_element(n: int, values: Sequence[Scalar]) -> list[Scalar]:
    """Diagonal ``t`` with ``t_i t_{i'} = 1`` from its first ``ceil(n/2)`` entries.

    For odd n the middle entry must square to 1.
    """
    l = n // 2
    if len(values) != n - l:
        raise BrauerError(f"need {n - l} free torus entries for n={n}")
    diag = [None] * n
    for i in range(l):
        diag[i] = values[i]
        diag[n - 1 - i] = 1 / values[i]
    if n % 2:
        mid = values[l]
        if mid * mid != 1:
            raise BrauerError("middle torus entry must square to 1")
        diag[l] = mid
    return diag


def torus_commutes(diag: Sequence[Scalar], d: BrauerDiagram, form: FormSpec) -> bool:
    n = form.n
    for i in range(n):
        if diag[i] * diag[n - 1 - i] != 1:
            raise BrauerError("diagonal element is not in the torus of the form's isometry group")
    op = phi_operator(d, form)
    images = range(1, n + 1)
    one = form.field.one()
    for t in all_indices(n, d.r):
        v = {t: one}
        if op.apply(apply_monomial(v, images, diag)) != apply_monomial(op.apply(v), images, diag):
            return False
    return True
