"""Exact scalars over the rationals or a prime field F_p."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .errors import FieldError, FormError, NotInvertibleError

SYMMETRIC = "symmetric"
SKEW = "skew"
FORM_KINDS = (SYMMETRIC, SKEW)


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    f = 3
    while f * f <= p:
        if p % f == 0:
            return False
        f += 2
    return True


@dataclass(frozen=True)
class FieldSpec:
    """A prime field F_p, or Q when ``characteristic == 0``."""

    characteristic: int = 0

    def __post_init__(self):
        c = self.characteristic
        if not isinstance(c, int) or isinstance(c, bool):
            raise FieldError(f"characteristic must be an int, got {c!r}")
        if c != 0 and not _is_prime(c):
            raise FieldError(f"characteristic must be 0 or a prime, got {c}")
        if c >= 2**63:
            raise FieldError("characteristic must fit in a machine word")

    @property
    def p(self) -> int:
        return self.characteristic

    def __call__(self, value) -> Scalar:
        return Scalar(value, self)

    def zero(self) -> Scalar:
        return Scalar(0, self)

    def one(self) -> Scalar:
        return Scalar(1, self)

    def elements(self):
        """All elements of a prime field (not available for Q)."""
        if self.p == 0:
            raise FieldError("the rationals are infinite")
        return [Scalar(v, self) for v in range(self.p)]

    def __str__(self):
        return "Q" if self.p == 0 else f"F_{self.p}"


Number = Union[int, Fraction]


class Scalar:
    """Immutable field element. Residues are kept in ``[0, p)``."""

    __slots__ = ("value", "field")

    def __init__(self, value, field: FieldSpec):
        p = field.characteristic
        if isinstance(value, Scalar):
            if value.field != field:
                raise FieldError(f"cannot move {value!r} into {field}")
            value = value.value
        if p == 0:
            value = Fraction(value)
        else:
            if isinstance(value, Fraction):
                if value.denominator % p == 0:
                    raise NotInvertibleError(f"{value} has no image in {field}")
                value = value.numerator * pow(value.denominator, -1, p)
            elif not isinstance(value, int):
                raise FieldError(f"cannot interpret {value!r} as a scalar")
            value %= p
        object.__setattr__(self, "value", value)
        object.__setattr__(self, "field", field)

    def __setattr__(self, name, value):
        raise AttributeError("Scalar is immutable")

    def _coerce(self, other) -> Scalar:
        if isinstance(other, Scalar):
            if other.field != self.field:
                raise FieldError(f"field mismatch: {self.field} vs {other.field}")
            return other
        if isinstance(other, (int, Fraction)):
            return Scalar(other, self.field)
        return NotImplemented

    def _new(self, v) -> Scalar:
        return Scalar(v, self.field)

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self._new(self.value + o.value)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self._new(self.value - o.value)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self._new(o.value - self.value)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self._new(self.value * o.value)

    __rmul__ = __mul__

    def __neg__(self):
        return self._new(-self.value)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self * invert(o)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o * invert(self)

    def __pow__(self, e: int):
        if e < 0:
            return invert(self) ** (-e)
        p = self.field.p
        if p:
            return self._new(pow(self.value, e, p))
        return self._new(self.value**e)

    def __eq__(self, other):
        if isinstance(other, Scalar):
            return self.field == other.field and self.value == other.value
        if isinstance(other, (int, Fraction)):
            try:
                return self.value == Scalar(other, self.field).value
            except NotInvertibleError:
                return False
        return NotImplemented

    def __hash__(self):
        return hash((self.value, self.field.p))

    def __bool__(self):
        return self.value != 0

    def __repr__(self):
        return f"Scalar({self}, {self.field})"

    def __str__(self):
        return str(self.value)


def reduce_int(m: int, field: FieldSpec) -> Scalar:
    """The image ``m * 1_k`` of an integer in the field."""
    return Scalar(m, field)


def invert(x: Scalar) -> Scalar:
    if not x:
        raise NotInvertibleError(f"{x} is not invertible in {x.field}")
    p = x.field.p
    if p:
        return Scalar(pow(x.value, -1, p), x.field)
    return Scalar(1 / x.value, x.field)


def parse_scalar(text: str, field: FieldSpec) -> Scalar:
    """Parse ``"3"``, ``"-2"`` or ``"1/2"`` into the field."""
    try:
        return Scalar(Fraction(text.strip()), field)
    except ValueError as exc:
        raise FieldError(f"bad scalar {text!r}") from exc


def check_form(form_kind: str, n: int, field: FieldSpec) -> None:
    if form_kind not in FORM_KINDS:
        raise FormError(f"form must be one of {FORM_KINDS}, got {form_kind!r}")
    if n < 1:
        raise FormError(f"n must be positive, got {n}")
    if form_kind == SKEW and n % 2:
        raise FormError(f"skew-symmetric form needs even n, got n={n}")
    if form_kind == SYMMETRIC and field.p == 2:
        raise FormError(
            "symmetric form requires characteristic != 2 "
            "(the orthogonal decomposition excludes characteristic 2)"
        )


def delta_parameter(form_kind: str, n: int, field: FieldSpec) -> Scalar:
    """Loop value of the Brauer algebra: ``n`` (symmetric) or ``-n`` (skew).

    Zero is allowed (e.g. ``p | n``); it is a degenerate parameter, not an error.
    """
    check_form(form_kind, n, field)
    return reduce_int(n if form_kind == SYMMETRIC else -n, field)
