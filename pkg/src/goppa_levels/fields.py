"""Exact arithmetic in F_p, F_{p^r} and F_q(z).

Every field object does arithmetic on *raw* values:

* prime and extension fields use the integer index ``c0 + c1*p + ... +
  c_{r-1}*p^(r-1)`` of the coefficient vector of an element written in the
  polynomial basis ``1, x, ..., x^(r-1)``.  Index 0 is zero, index 1 is one,
  and enumeration order is the index order.
* the rational function field uses :class:`RatFunc`, a reduced fraction of
  polynomials over the finite base field with monic denominator.

:class:`FieldElement` wraps a raw value with its field and overloads the
arithmetic operators for interactive use.  The linear algebra works on raw
values directly.
"""

from __future__ import annotations

import itertools
import re
from typing import Iterator, NamedTuple, Sequence

from .errors import (
    BadArity,
    FieldDivisionByZero,
    FieldMismatch,
    InfiniteField,
    NotPrime,
    ReducibleModulus,
    UnsupportedField,
)

_TABLE_LIMIT = 1024


def is_prime(p: int) -> bool:
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


class Field:
    """Common interface.  Subclasses supply the arithmetic on raw values."""

    kind: str
    p: int
    r: int

    zero: object
    one: object

    # -- arithmetic on raw values -------------------------------------
    def add(self, a, b):
        raise NotImplementedError

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def neg(self, a):
        raise NotImplementedError

    def mul(self, a, b):
        raise NotImplementedError

    def inv(self, a):
        raise NotImplementedError

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def pow(self, a, e: int):
        if e < 0:
            a, e = self.inv(a), -e
        result = self.one
        while e:
            if e & 1:
                result = self.mul(result, a)
            a = self.mul(a, a)
            e >>= 1
        return result

    def is_zero(self, a) -> bool:
        return a == self.zero

    def sum(self, values):
        acc = self.zero
        for v in values:
            acc = self.add(acc, v)
        return acc

    def prod(self, values):
        acc = self.one
        for v in values:
            acc = self.mul(acc, v)
        return acc

    # -- conversions ----------------------------------------------------
    def coerce(self, value):
        raise NotImplementedError

    def __call__(self, value) -> "FieldElement":
        return FieldElement(self, self.coerce(value))

    @property
    def is_finite(self) -> bool:
        return self.kind != "rational_function"

    @property
    def order(self) -> int | None:
        return self.p**self.r if self.is_finite else None

    @property
    def characteristic(self) -> int:
        return self.p

    def elements(self) -> list:
        raise InfiniteField(f"{self.spec} is infinite and cannot be enumerated")

    def nonzero_elements(self) -> list:
        return self.elements()[1:]

    @property
    def spec(self) -> str:
        raise NotImplementedError

    def format(self, a) -> str:
        return str(a)

    def to_json_value(self, a):
        raise NotImplementedError

    def from_json_value(self, obj):
        return self.coerce(obj)

    def __repr__(self) -> str:
        return f"<{type(self).__name__} {self.spec}>"

    def __str__(self) -> str:
        return self.spec

    def __eq__(self, other) -> bool:
        return isinstance(other, Field) and self.spec == other.spec

    def __hash__(self) -> int:
        return hash(self.spec)


class PrimeField(Field):
    kind = "prime"
    r = 1

    def __init__(self, p: int):
        if not is_prime(p):
            raise NotPrime(f"{p} is not prime")
        self.p = p
        self.zero = 0
        self.one = 1 % p

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def neg(self, a):
        return -a % self.p

    def mul(self, a, b):
        return a * b % self.p

    def inv(self, a):
        if a == 0:
            raise FieldDivisionByZero("inverse of zero")
        return pow(a, -1, self.p)

    def pow(self, a, e):
        if e < 0:
            return pow(self.inv(a), -e, self.p)
        return pow(a, e, self.p)

    def coerce(self, value):
        if isinstance(value, FieldElement):
            if value.field != self:
                raise FieldMismatch(f"{value.field} element used in {self}")
            return value.value
        if isinstance(value, (list, tuple)):
            if len(value) > 1 and any(c % self.p for c in value[1:]):
                raise ValueError(f"coefficient list {value!r} is not in {self}")
            value = value[0] if value else 0
        return int(value) % self.p

    def elements(self):
        return list(range(self.p))

    @property
    def spec(self):
        return str(self.p)

    def to_json_value(self, a):
        return a


class ExtensionField(Field):
    """F_p[x]/(modulus) with ``modulus`` monic irreducible of degree r."""

    kind = "extension"

    def __init__(self, p: int, modulus: Sequence[int]):
        if not is_prime(p):
            raise NotPrime(f"{p} is not prime")
        modulus = tuple(int(c) % p for c in modulus)
        while len(modulus) > 1 and modulus[-1] == 0:
            modulus = modulus[:-1]
        r = len(modulus) - 1
        if r < 1:
            raise BadArity("modulus must have degree >= 1")
        if modulus[-1] != 1:
            raise BadArity(f"modulus {modulus} is not monic")
        if not is_irreducible(p, modulus):
            raise ReducibleModulus(f"modulus {modulus} is reducible over F_{p}")
        self.p, self.r, self.modulus = p, r, modulus
        self.q = p**r
        self.zero, self.one = 0, 1
        self._powers = [p**i for i in range(r)]
        self._build_log_tables()
        if self.q <= _TABLE_LIMIT:
            self._add = [[self._add_digits(a, b) for b in range(self.q)] for a in range(self.q)]
            self._neg = [self._neg_digits(a) for a in range(self.q)]
        else:
            self._add = None
            self._neg = None

    # digits <-> index
    def digits(self, a: int) -> list[int]:
        out = []
        for _ in range(self.r):
            a, c = divmod(a, self.p)
            out.append(c)
        return out

    def from_digits(self, coeffs: Sequence[int]) -> int:
        coeffs = list(coeffs)
        if len(coeffs) > self.r:
            coeffs = _poly_mod_int(self.p, coeffs, self.modulus)
        return sum((c % self.p) * w for c, w in zip(coeffs, self._powers))

    def _add_digits(self, a, b):
        if self.p == 2:
            return a ^ b
        return self.from_digits([x + y for x, y in zip(self.digits(a), self.digits(b))])

    def _neg_digits(self, a):
        return self.from_digits([-x for x in self.digits(a)])

    def _mul_slow(self, a, b):
        prod = [0] * (2 * self.r - 1)
        for i, x in enumerate(self.digits(a)):
            if x:
                for j, y in enumerate(self.digits(b)):
                    prod[i + j] += x * y
        return self.from_digits(_poly_mod_int(self.p, prod, self.modulus))

    def _build_log_tables(self):
        q = self.q
        for g in range(2, q) if q > 2 else [1]:
            exp = [1]
            x = 1
            for _ in range(q - 2):
                x = self._mul_slow(x, g)
                if x == 1:
                    break
                exp.append(x)
            if len(exp) == q - 1:
                break
        else:  # pragma: no cover - a primitive element always exists
            raise RuntimeError("no primitive element found")
        self.generator = g if q > 2 else 1
        self._exp = exp + exp
        self._log = [0] * q
        for i, v in enumerate(exp):
            self._log[v] = i

    def add(self, a, b):
        if self._add is not None:
            return self._add[a][b]
        return self._add_digits(a, b)

    def neg(self, a):
        if self._neg is not None:
            return self._neg[a]
        return self._neg_digits(a)

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        if a == 0 or b == 0:
            return 0
        return self._exp[self._log[a] + self._log[b]]

    def inv(self, a):
        if a == 0:
            raise FieldDivisionByZero("inverse of zero")
        return self._exp[(self.q - 1 - self._log[a]) % (self.q - 1)]

    def pow(self, a, e):
        if a == 0:
            if e < 0:
                raise FieldDivisionByZero("inverse of zero")
            return 1 if e == 0 else 0
        return self._exp[(self._log[a] * e) % (self.q - 1)]

    def coerce(self, value):
        if isinstance(value, FieldElement):
            if value.field != self:
                raise FieldMismatch(f"{value.field} element used in {self}")
            return value.value
        if isinstance(value, (list, tuple)):
            return self.from_digits(value)
        value = int(value)
        if not 0 <= value < self.q:
            raise ValueError(f"element index {value} out of range for {self}")
        return value

    def elements(self):
        return list(range(self.q))

    @property
    def spec(self):
        return f"{self.p}^{self.r}/" + ",".join(map(str, self.modulus))

    def format(self, a):
        terms = []
        for i, c in enumerate(self.digits(a)):
            if c:
                mono = "1" if i == 0 else ("x" if i == 1 else f"x^{i}")
                terms.append(mono if c == 1 and i else f"{c}" if i == 0 else f"{c}*{mono}")
        return " + ".join(terms) or "0"

    def to_json_value(self, a):
        return self.digits(a)


class RatFunc(NamedTuple):
    """Reduced fraction num/den of polynomials (coefficients low to high)."""

    num: tuple
    den: tuple


class RationalFunctionField(Field):
    """F_q(z) over a finite base field."""

    kind = "rational_function"

    def __init__(self, base: Field):
        if not isinstance(base, Field) or not base.is_finite:
            raise BadArity("rational function field needs a finite base field")
        self.base = base
        self.p, self.r = base.p, 1
        self.zero = RatFunc((), (base.one,))
        self.one = RatFunc((base.one,), (base.one,))

    @property
    def order(self):
        return None

    def _reduce(self, num, den) -> RatFunc:
        B = self.base
        num, den = _trim(B, num), _trim(B, den)
        if not den:
            raise FieldDivisionByZero("zero denominator")
        if not num:
            return self.zero
        g = _poly_gcd(B, num, den)
        if len(g) > 1:
            num, _ = _poly_divmod(B, num, g)
            den, _ = _poly_divmod(B, den, g)
        lead = B.inv(den[-1])
        return RatFunc(_poly_scale(B, num, lead), _poly_scale(B, den, lead))

    def make(self, num: Sequence, den: Sequence = None) -> RatFunc:
        B = self.base
        num = tuple(B.coerce(c) for c in num)
        den = (B.one,) if den is None else tuple(B.coerce(c) for c in den)
        return self._reduce(num, den)

    @property
    def z(self) -> "FieldElement":
        return FieldElement(self, RatFunc((self.base.zero, self.base.one), (self.base.one,)))

    def add(self, a, b):
        B = self.base
        if a.den == b.den:
            return self._reduce(_poly_add(B, a.num, b.num), a.den)
        num = _poly_add(B, _poly_mul(B, a.num, b.den), _poly_mul(B, b.num, a.den))
        return self._reduce(num, _poly_mul(B, a.den, b.den))

    def neg(self, a):
        return RatFunc(tuple(self.base.neg(c) for c in a.num), a.den)

    def mul(self, a, b):
        B = self.base
        if not a.num or not b.num:
            return self.zero
        return self._reduce(_poly_mul(B, a.num, b.num), _poly_mul(B, a.den, b.den))

    def inv(self, a):
        if not a.num:
            raise FieldDivisionByZero("inverse of zero")
        return self._reduce(a.den, a.num)

    def coerce(self, value):
        if isinstance(value, FieldElement):
            if value.field == self:
                return value.value
            if value.field == self.base:
                return self.make((value.value,))
            raise FieldMismatch(f"{value.field} element used in {self}")
        if isinstance(value, RatFunc):
            return self._reduce(value.num, value.den)
        if isinstance(value, dict):
            return self.make([self.base.from_json_value(c) for c in value["num"]],
                             [self.base.from_json_value(c) for c in value["den"]])
        return self.make((self.base.coerce(value),))

    @property
    def spec(self):
        return f"ratfun({self.base.spec})"

    def format(self, a):
        def poly(cs):
            terms = []
            for i, c in enumerate(cs):
                if c != self.base.zero:
                    coef = self.base.format(c)
                    mono = "" if i == 0 else ("z" if i == 1 else f"z^{i}")
                    if not mono:
                        terms.append(coef)
                    elif c == self.base.one:
                        terms.append(mono)
                    else:
                        terms.append(f"({coef})*{mono}")
            return " + ".join(terms) or "0"

        if a.den == (self.base.one,):
            return poly(a.num)
        return f"({poly(a.num)})/({poly(a.den)})"

    def to_json_value(self, a):
        B = self.base
        return {"num": [B.to_json_value(c) for c in a.num],
                "den": [B.to_json_value(c) for c in a.den]}


class FieldElement:
    """A raw value tagged with its field, with operator overloading."""

    __slots__ = ("field", "value")

    def __init__(self, field: Field, value):
        self.field = field
        self.value = value

    def _other(self, other):
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise FieldMismatch(f"cannot combine {self.field} and {other.field} elements")
            return other.value
        return self.field.coerce(other)

    def __add__(self, other):
        return FieldElement(self.field, self.field.add(self.value, self._other(other)))

    __radd__ = __add__

    def __sub__(self, other):
        return FieldElement(self.field, self.field.sub(self.value, self._other(other)))

    def __rsub__(self, other):
        return FieldElement(self.field, self.field.sub(self._other(other), self.value))

    def __mul__(self, other):
        return FieldElement(self.field, self.field.mul(self.value, self._other(other)))

    __rmul__ = __mul__

    def __truediv__(self, other):
        return FieldElement(self.field, self.field.div(self.value, self._other(other)))

    def __rtruediv__(self, other):
        return FieldElement(self.field, self.field.div(self._other(other), self.value))

    def __neg__(self):
        return FieldElement(self.field, self.field.neg(self.value))

    def __pow__(self, e: int):
        return FieldElement(self.field, self.field.pow(self.value, e))

    def inverse(self):
        return FieldElement(self.field, self.field.inv(self.value))

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.field == other.field and self.value == other.value
        try:
            return self.value == self.field.coerce(other)
        except (TypeError, ValueError):
            return NotImplemented

    def __hash__(self):
        return hash((self.field.spec, self.value))

    def __bool__(self):
        return not self.field.is_zero(self.value)

    def __repr__(self):
        return f"{self.field.format(self.value)} in {self.field.spec}"

    def __str__(self):
        return self.field.format(self.value)


# ---------------------------------------------------------------------------
# polynomial helpers (coefficients low to high, trimmed)


def _trim(B, a):
    a = tuple(a)
    end = len(a)
    while end and a[end - 1] == B.zero:
        end -= 1
    return a[:end]


def _poly_add(B, a, b):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] = B.add(out[i], c)
    return _trim(B, out)


def _poly_scale(B, a, c):
    return tuple(B.mul(x, c) for x in a)


def _poly_mul(B, a, b):
    if not a or not b:
        return ()
    out = [B.zero] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == B.zero:
            continue
        for j, y in enumerate(b):
            out[i + j] = B.add(out[i + j], B.mul(x, y))
    return _trim(B, out)


def _poly_divmod(B, a, b):
    a, b = list(_trim(B, a)), _trim(B, b)
    if not b:
        raise FieldDivisionByZero("polynomial division by zero")
    lead_inv = B.inv(b[-1])
    quot = [B.zero] * max(len(a) - len(b) + 1, 0)
    while len(a) >= len(b) and a:
        shift = len(a) - len(b)
        c = B.mul(a[-1], lead_inv)
        quot[shift] = c
        for i, y in enumerate(b):
            a[shift + i] = B.sub(a[shift + i], B.mul(c, y))
        a = list(_trim(B, a))
    return _trim(B, quot), tuple(a)


def _poly_gcd(B, a, b):
    a, b = _trim(B, a), _trim(B, b)
    while b:
        a, b = b, _poly_divmod(B, a, b)[1]
    return a


def _poly_mod_int(p, coeffs, modulus):
    """Reduce an integer coefficient list modulo a monic integer modulus."""
    coeffs = [c % p for c in coeffs]
    r = len(modulus) - 1
    for top in range(len(coeffs) - 1, r - 1, -1):
        c = coeffs[top]
        if c:
            for i in range(r + 1):
                coeffs[top - r + i] = (coeffs[top - r + i] - c * modulus[i]) % p
    return (coeffs + [0] * r)[:r]


def is_irreducible(p: int, modulus: Sequence[int]) -> bool:
    """Trial division by every monic polynomial of degree 1..deg/2 over F_p."""
    F = PrimeField(p)
    f = _trim(F, tuple(c % p for c in modulus))
    deg = len(f) - 1
    if deg <= 0:
        return False
    if deg == 1:
        return True
    if f[0] == 0:
        return False
    for e in range(1, deg // 2 + 1):
        for low in itertools.product(range(p), repeat=e):
            if _poly_divmod(F, f, tuple(low) + (1,))[1] == ():
                return False
    return True


def default_modulus(p: int, r: int) -> tuple:
    """First monic irreducible of degree r, ordered by the index of its lower coefficients."""
    for i in range(p**r):
        low = []
        for _ in range(r):
            i, c = divmod(i, p)
            low.append(c)
        cand = tuple(low) + (1,)
        if is_irreducible(p, cand):
            return cand
    raise ReducibleModulus(f"no irreducible of degree {r} over F_{p}")  # pragma: no cover


# ---------------------------------------------------------------------------
# public operations


def make_field(kind: str, p: int, r: int = 1, modulus: Sequence[int] | None = None,
               base: Field | None = None) -> Field:
    """Validated field descriptor.

    ``kind`` is one of ``"prime"``, ``"extension"`` or ``"rational_function"``.
    The modulus is given low to high and must be present exactly for the
    extension kind; ``base`` exactly for the rational function kind.
    """
    if kind == "prime":
        if modulus is not None or base is not None or r != 1:
            raise BadArity("prime field takes only p")
        return PrimeField(p)
    if kind == "extension":
        if modulus is None or base is not None:
            raise BadArity("extension field needs a modulus and no base")
        if len(modulus) - 1 != r:
            raise BadArity(f"modulus degree {len(modulus) - 1} does not match r={r}")
        return ExtensionField(p, modulus)
    if kind == "rational_function":
        if base is None or modulus is not None:
            raise BadArity("rational function field needs a base field only")
        return RationalFunctionField(base)
    raise BadArity(f"unknown field kind {kind!r}")


_SPEC_RE = re.compile(r"^\s*(\d+)(?:\^(\d+))?(?:/([\d,\s]+))?\s*$")


def parse_field(spec: str | Field) -> Field:
    """Parse a field spec string.

    Accepted forms: ``"7"``, ``"2^3/1,1,0,1"`` (modulus low to high),
    ``"ratfun(...)"``.  A bare prime power (``"9"`` or ``"3^2"``) picks
    :func:`default_modulus`.
    """
    if isinstance(spec, Field):
        return spec
    spec = spec.strip()
    if spec.startswith("ratfun(") and spec.endswith(")"):
        return RationalFunctionField(parse_field(spec[len("ratfun("):-1]))
    m = _SPEC_RE.match(spec)
    if not m:
        raise BadArity(f"cannot parse field spec {spec!r}")
    base, exp, mod = m.groups()
    base = int(base)
    if exp is None and mod is None:
        if is_prime(base):
            return PrimeField(base)
        for p in range(2, base + 1):
            if base % p == 0:
                break
        r = 0
        rest = base
        while rest % p == 0:
            rest //= p
            r += 1
        if rest != 1:
            raise NotPrime(f"{base} is not a prime power")
        return ExtensionField(p, default_modulus(p, r))
    r = int(exp) if exp is not None else 1
    if mod is None:
        if r == 1:
            return PrimeField(base)
        if not is_prime(base):
            raise NotPrime(f"{base} is not prime")
        return ExtensionField(base, default_modulus(base, r))
    coeffs = [int(c) for c in mod.replace(" ", "").split(",") if c]
    return make_field("extension", base, r, coeffs)


def enumerate_elements(F: Field) -> list[FieldElement]:
    """All elements of a finite field: 0 first, 1 second, then index order."""
    return [FieldElement(F, v) for v in F.elements()]


def prime_subfield(F: Field) -> PrimeField:
    if not F.is_finite:
        raise UnsupportedField(f"{F} has no finite prime subfield of this kind")
    return F if isinstance(F, PrimeField) else PrimeField(F.p)


def trace_raw(F: Field, a) -> int:
    """Tr_{q/p}(a) as a raw F_p value."""
    if not F.is_finite:
        raise UnsupportedField("trace is defined for finite fields only")
    acc, x = a, a
    for _ in range(F.r - 1):
        x = F.pow(x, F.p)
        acc = F.add(acc, x)
    if acc >= F.p:  # pragma: no cover - Tr lands in the prime subfield
        raise ArithmeticError("trace left the prime subfield")
    return acc


def trace_to_prime(a: FieldElement) -> FieldElement:
    """a + a^p + ... + a^(p^(r-1)) as an element of F_p."""
    return FieldElement(prime_subfield(a.field), trace_raw(a.field, a.value))


def prime_basis(F: Field) -> list:
    """The F_p-basis 1, x, ..., x^(r-1) of F as raw values."""
    return [F.p**i for i in range(F.r)]


def iter_nonzero(F: Field) -> Iterator:
    return iter(F.elements()[1:])
