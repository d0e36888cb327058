"""Compositions, orthogonal weights and the restriction map between them.

For ``n = 2l`` or ``n = 2l + 1`` and the reversal ``i' = n + 1 - i``, a
composition ``lam`` of ``r`` restricts to the orthogonal weight
``xi_i = lam_i - lam_{i'}`` (``i = 1..l``). For odd ``n`` the weight also
carries the parity of the middle part, which is always ``(r - sum xi) mod 2``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from math import comb, factorial
from typing import Iterator, Optional, Sequence

from .errors import WeightError


def prime(i: int, n: int) -> int:
    """The reversal ``i' = n + 1 - i`` on ``1..n``."""
    return n + 1 - i


@dataclass(frozen=True, order=True)
class Composition:
    parts: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "parts", tuple(int(x) for x in self.parts))
        if any(x < 0 for x in self.parts):
            raise WeightError(f"negative part in {self.parts}")

    @property
    def n(self) -> int:
        return len(self.parts)

    @property
    def r(self) -> int:
        return sum(self.parts)

    def __getitem__(self, i):
        return self.parts[i]

    def __str__(self):
        return ",".join(map(str, self.parts))


@dataclass(frozen=True, order=True)
class OrthWeight:
    """An element of Z^l, plus the Z/2 component when n is odd."""

    entries: tuple[int, ...]
    parity: Optional[int] = None

    def __post_init__(self):
        object.__setattr__(self, "entries", tuple(int(x) for x in self.entries))
        if self.parity is not None and self.parity not in (0, 1):
            raise WeightError(f"parity must be 0 or 1, got {self.parity}")

    @property
    def l(self) -> int:
        return len(self.entries)

    @property
    def size(self) -> int:
        return sum(abs(x) for x in self.entries)

    def __str__(self):
        body = ",".join(map(str, self.entries))
        return body if self.parity is None else f"{body};parity={self.parity}"


def parse_composition(text: str) -> Composition:
    try:
        return Composition(tuple(int(x) for x in text.split(",") if x.strip()))
    except ValueError as exc:
        raise WeightError(f"bad composition {text!r}") from exc


def parse_weight(text: str) -> OrthWeight:
    """Parse ``"1,-2"`` or ``"1,-2;parity=1"``."""
    body, _, tail = text.partition(";")
    parity = None
    if tail:
        key, _, val = tail.partition("=")
        if key.strip() != "parity":
            raise WeightError(f"bad weight suffix {tail!r}")
        parity = int(val)
    try:
        entries = tuple(int(x) for x in body.split(",") if x.strip())
    except ValueError as exc:
        raise WeightError(f"bad weight {text!r}") from exc
    return OrthWeight(entries, parity)


def _compositions(n: int, r: int) -> Iterator[tuple[int, ...]]:
    if n == 0:
        if r == 0:
            yield ()
        return
    if n == 1:
        yield (r,)
        return
    for first in range(r, -1, -1):
        for tail in _compositions(n - 1, r - first):
            yield (first,) + tail


def enumerate_compositions(n: int, r: int) -> list[Composition]:
    """Lambda(n, r) in decreasing lexicographic order; ``C(n+r-1, r)`` items."""
    if n < 0 or r < 0:
        raise WeightError(f"need n, r >= 0, got n={n}, r={r}")
    return [Composition(c) for c in _compositions(n, r)]


def count_compositions(n: int, r: int) -> int:
    if n == 0:
        return 1 if r == 0 else 0
    return comb(n + r - 1, r)


def weight_of(multiindex: Sequence[int], n: int) -> Composition:
    counts = [0] * n
    for i in multiindex:
        if not 1 <= i <= n:
            raise WeightError(f"index {i} out of range 1..{n}")
        counts[i - 1] += 1
    return Composition(tuple(counts))


def pi_map(lam: Composition, n: Optional[int] = None) -> OrthWeight:
    n = lam.n if n is None else n
    if lam.n != n:
        raise WeightError(f"{lam} has {lam.n} parts, expected {n}")
    l = n // 2
    xi = tuple(lam[i - 1] - lam[prime(i, n) - 1] for i in range(1, l + 1))
    parity = lam[l] % 2 if n % 2 else None
    return OrthWeight(xi, parity)


def _parity_for(entries: Sequence[int], n: int, r: int) -> Optional[int]:
    return (r - sum(entries)) % 2 if n % 2 else None


def _signed_vectors(l: int, m: int) -> Iterator[tuple[int, ...]]:
    """All ``x`` in Z^l with ``sum |x_i| == m``."""
    for c in _compositions(l, m):
        nz = [i for i, x in enumerate(c) if x]
        for signs in product((1, -1), repeat=len(nz)):
            v = list(c)
            for i, s in zip(nz, signs):
                v[i] *= s
            yield tuple(v)


def in_image(xi: OrthWeight, n: int, r: int) -> bool:
    l = n // 2
    if xi.l != l:
        return False
    gap = r - xi.size
    if gap < 0:
        return False
    if n % 2 == 0 and gap % 2:
        return False
    if n % 2 and xi.parity is not None and xi.parity != _parity_for(xi.entries, n, r):
        return False
    return True


def image_weights(n: int, r: int) -> list[OrthWeight]:
    """The image of Lambda(n, r) under ``pi_map``, in lexicographic order.

    Even n: ``sum |xi_i| = r - 2s``. Odd n: ``sum |xi_i| = r - s``.
    """
    if n < 1 or r < 0:
        raise WeightError(f"need n >= 1, r >= 0, got n={n}, r={r}")
    l = n // 2
    step = 1 if n % 2 else 2
    out = []
    for m in range(r, -1, -step):
        for v in _signed_vectors(l, m):
            out.append(OrthWeight(v, _parity_for(v, n, r)))
    return sorted(out)


def _require_image(xi: OrthWeight, n: int, r: int) -> OrthWeight:
    if not in_image(xi, n, r):
        raise WeightError(f"xi={xi} is not in the image of Lambda({n},{r})")
    if n % 2 and xi.parity is None:
        return OrthWeight(xi.entries, _parity_for(xi.entries, n, r))
    return xi


def _base_weight(xi: OrthWeight, n: int) -> list[int]:
    """Put ``xi_i`` at ``i`` when positive and ``-xi_i`` at ``i'`` when negative."""
    mu = [0] * n
    for i, x in enumerate(xi.entries, start=1):
        if x > 0:
            mu[i - 1] = x
        elif x < 0:
            mu[prime(i, n) - 1] = -x
    return mu


def fiber(xi: OrthWeight, n: int, r: int) -> list[Composition]:
    """All ``lam`` in Lambda(n, r) with ``pi_map(lam) == xi``.

    Built constructively: ``nu`` in Lambda(l, t) is added to the first l
    parts in order and to the last l parts in reverse order. For odd n the
    middle part takes every value ``s - 2t`` with ``0 <= 2t <= s``.
    """
    _require_image(xi, n, r)
    l = n // 2
    mu = _base_weight(xi, n)
    out = []
    if n % 2 == 0:
        s = (r - xi.size) // 2
        for nu in _compositions(l, s):
            lam = mu[:]
            for i, x in enumerate(nu):
                lam[i] += x
                lam[n - 1 - i] += x
            out.append(Composition(lam))
    else:
        s = r - xi.size
        for t in range(s // 2 + 1):
            for nu in _compositions(l, t):
                lam = mu[:]
                lam[l] = s - 2 * t
                for i, x in enumerate(nu):
                    lam[i] += x
                    lam[n - 1 - i] += x
                out.append(Composition(lam))
    return sorted(out, reverse=True)


def fiber_size(xi: OrthWeight, n: int, r: int) -> int:
    """Closed form: ``|Lambda(l, s)|`` (even n) or ``sum_{2t<=s} |Lambda(l, t)|``."""
    _require_image(xi, n, r)
    l = n // 2
    if n % 2 == 0:
        return count_compositions(l, (r - xi.size) // 2)
    s = r - xi.size
    return sum(count_compositions(l, t) for t in range(s // 2 + 1))


def dominant_representative(xi: OrthWeight) -> OrthWeight:
    return OrthWeight(tuple(sorted((abs(x) for x in xi.entries), reverse=True)), xi.parity)


def is_dominant(xi: OrthWeight) -> bool:
    e = xi.entries
    return all(a >= b for a, b in zip(e, e[1:])) and all(x >= 0 for x in e)


@dataclass(frozen=True)
class SignedPermutation:
    """Element of (Z/2)^l x| S_l sending ``eps_i`` to ``signs[i] * eps_{perm[i]}``.

    ``perm`` is one-line notation on ``1..l``; ``signs`` entries are +-1.
    Products compose as maps: ``(w1 * w2)(x) = w1(w2(x))``.
    """

    perm: tuple[int, ...]
    signs: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "perm", tuple(self.perm))
        object.__setattr__(self, "signs", tuple(self.signs))
        l = len(self.perm)
        if sorted(self.perm) != list(range(1, l + 1)):
            raise WeightError(f"{self.perm} is not a permutation of 1..{l}")
        if len(self.signs) != l or any(s not in (1, -1) for s in self.signs):
            raise WeightError(f"bad signs {self.signs} for l={l}")

    @property
    def l(self) -> int:
        return len(self.perm)

    @classmethod
    def identity(cls, l: int) -> SignedPermutation:
        return cls(tuple(range(1, l + 1)), (1,) * l)

    @classmethod
    def sign_flip(cls, l: int, i: int) -> SignedPermutation:
        """``tau_i``: negate entry i (1-based)."""
        signs = [1] * l
        signs[i - 1] = -1
        return cls(tuple(range(1, l + 1)), tuple(signs))

    @classmethod
    def from_perm(cls, perm: Sequence[int]) -> SignedPermutation:
        """``w_sigma``: move entry i to position ``sigma(i)``."""
        return cls(tuple(perm), (1,) * len(perm))

    def __mul__(self, other: SignedPermutation) -> SignedPermutation:
        if self.l != other.l:
            raise WeightError("size mismatch")
        perm = tuple(self.perm[other.perm[i] - 1] for i in range(self.l))
        signs = tuple(other.signs[i] * self.signs[other.perm[i] - 1] for i in range(self.l))
        return SignedPermutation(perm, signs)

    def lift(self, n: int) -> tuple[int, ...]:
        """The permutation of ``1..n`` realizing this element on basis indices.

        ``i -> sigma(i)`` when the sign is +1 and ``i -> sigma(i)'`` when it is
        -1, extended so that ``w(i') = w(i)'``; the middle index of odd n is
        fixed.
        """
        if n // 2 != self.l:
            raise WeightError(f"signed permutation of {self.l} letters does not act on n={n}")
        w = [0] * (n + 1)
        if n % 2:
            w[self.l + 1] = self.l + 1
        for i in range(1, self.l + 1):
            target = self.perm[i - 1]
            if self.signs[i - 1] < 0:
                target = prime(target, n)
            w[i] = target
            w[prime(i, n)] = prime(target, n)
        return tuple(w[1:])


def signed_perm_apply(w: SignedPermutation, xi: OrthWeight) -> OrthWeight:
    if w.l != xi.l:
        raise WeightError(f"signed permutation on {w.l} letters cannot act on {xi}")
    out = [0] * w.l
    for i, x in enumerate(xi.entries):
        out[w.perm[i] - 1] = w.signs[i] * x
    return OrthWeight(tuple(out), xi.parity)


def hyperoctahedral_generators(l: int) -> list[SignedPermutation]:
    """``tau_1..tau_l`` and ``w_sigma`` for the adjacent transpositions."""
    gens = [SignedPermutation.sign_flip(l, i) for i in range(1, l + 1)]
    for i in range(1, l):
        perm = list(range(1, l + 1))
        perm[i - 1], perm[i] = perm[i], perm[i - 1]
        gens.append(SignedPermutation.from_perm(perm))
    return gens


def orbit(xi: OrthWeight, generators: Optional[Sequence[SignedPermutation]] = None) -> set[OrthWeight]:
    gens = hyperoctahedral_generators(xi.l) if generators is None else generators
    seen = {xi}
    todo = [xi]
    while todo:
        x = todo.pop()
        for g in gens:
            y = signed_perm_apply(g, x)
            if y not in seen:
                seen.add(y)
                todo.append(y)
    return seen


def permute_composition(lam: Composition, w: Sequence[int]) -> Composition:
    """``w(lam)``: the part at position i moves to position ``w(i)``."""
    out = [0] * lam.n
    for i, x in enumerate(lam.parts, start=1):
        out[w[i - 1] - 1] = x
    return Composition(out)


def multinomial(parts: Sequence[int]) -> int:
    out = factorial(sum(parts))
    for x in parts:
        out //= factorial(x)
    return out


def dim_M(lam: Composition) -> int:
    return multinomial(lam.parts)


def dim_N(xi: OrthWeight, n: int, r: int) -> int:
    return sum(dim_M(lam) for lam in fiber(xi, n, r))
