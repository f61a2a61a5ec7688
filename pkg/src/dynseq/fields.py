"""Exact coefficient fields: Q, simple algebraic extensions Q[a]/(m(a)), and Q(t).

Rationals are ``gmpy2.mpq`` values (already canonical: positive denominator,
reduced).  Elements of the two extension fields are small immutable classes
supporting the usual Python operators, so the polynomial code above this
layer can treat all three coefficient domains uniformly.
"""
from numbers import Integral, Rational as _RationalABC

from gmpy2 import mpq

from . import upoly
from .errors import DescriptorMismatch, ReducibleMinimalPolynomial

__all__ = [
    "Field",
    "RationalField",
    "AlgebraicField",
    "FunctionField",
    "AlgebraicElement",
    "FunctionFieldElement",
    "QQ",
    "field_add",
    "field_mul",
    "field_neg",
    "field_inv",
    "field_parse",
    "format_rational",
]


def _is_rational_scalar(x):
    return isinstance(x, (Integral, _RationalABC)) or type(x).__name__ == "mpq" or type(x).__name__ == "mpz"


def format_rational(q):
    q = mpq(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


class Field:
    """Common interface of the three coefficient fields."""

    generator_name = None

    def __call__(self, value):
        raise NotImplementedError

    @property
    def zero(self):
        return self(0)

    @property
    def one(self):
        return self(1)

    def contains(self, value):
        raise NotImplementedError

    def to_str(self, value):
        return str(value)

    def parse(self, text):
        return field_parse(self, text)

    def describe(self):
        """JSON-friendly descriptor (see :func:`field_from_description`)."""
        raise NotImplementedError


class RationalField(Field):
    def __call__(self, value):
        if isinstance(value, str):
            return self.parse(value)
        if _is_rational_scalar(value):
            return mpq(value)
        raise DescriptorMismatch(f"cannot coerce {value!r} into QQ")

    def contains(self, value):
        return type(value).__name__ == "mpq"

    def to_str(self, value):
        return format_rational(value)

    def describe(self):
        return {"kind": "QQ"}

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("QQ")

    def __repr__(self):
        return "QQ"


QQ = RationalField()


# --------------------------------------------------------------------------
# Q[a]/(m(a))
# --------------------------------------------------------------------------


class AlgebraicField(Field):
    """Simple extension ``Q[name]/(minpoly)``.

    ``minpoly`` is given lowest degree first and must be monic, of degree at
    least 2 and squarefree.  Irreducibility is not checked: a zero divisor met
    during inversion raises :class:`ReducibleMinimalPolynomial`.
    """

    def __init__(self, minpoly, name="r"):
        mp = upoly.strip(minpoly)
        if len(mp) < 3:
            raise ValueError("minimal polynomial must have degree >= 2")
        if mp[-1] != 1:
            raise ValueError("minimal polynomial must be monic")
        if upoly.degree(upoly.gcd(mp, upoly.derivative(mp))) > 0:
            raise ReducibleMinimalPolynomial("minimal polynomial is not squarefree")
        self.minpoly = mp
        self.degree = len(mp) - 1
        self.generator_name = name
        # reduction table: a^k for k in [e, 2e-2] in the power basis
        e = self.degree
        tail = [-c for c in mp[:-1]]
        table = [tuple(tail)]
        for _ in range(e - 2):
            prev = table[-1]
            nxt = [mpq(0)] + list(prev[:-1])
            top = prev[-1]
            if top:
                nxt = [a + top * b for a, b in zip(nxt, tail)]
            table.append(tuple(nxt))
        self._powers = table

    @property
    def gen(self):
        coords = [mpq(0)] * self.degree
        coords[1] = mpq(1)
        return AlgebraicElement(self, tuple(coords))

    def __call__(self, value):
        if isinstance(value, AlgebraicElement):
            if value.field != self:
                raise DescriptorMismatch("element belongs to a different extension")
            return value
        if isinstance(value, str):
            return self.parse(value)
        if _is_rational_scalar(value):
            coords = [mpq(0)] * self.degree
            coords[0] = mpq(value)
            return AlgebraicElement(self, tuple(coords))
        raise DescriptorMismatch(f"cannot coerce {value!r} into {self!r}")

    def from_coords(self, coords):
        coords = [mpq(c) for c in coords]
        if len(coords) > self.degree:
            return self._reduce(coords)
        coords += [mpq(0)] * (self.degree - len(coords))
        return AlgebraicElement(self, tuple(coords))

    def _reduce(self, coeffs):
        e = self.degree
        out = list(coeffs[:e]) + [mpq(0)] * max(0, e - len(coeffs))
        for k in range(e, len(coeffs)):
            c = coeffs[k]
            if c:
                for i, b in enumerate(self._powers[k - e]):
                    if b:
                        out[i] += c * b
        return AlgebraicElement(self, tuple(out))

    def contains(self, value):
        return isinstance(value, AlgebraicElement) and value.field == self

    def to_str(self, value):
        return str(value)

    def describe(self):
        return {
            "kind": "algebraic",
            "generator": self.generator_name,
            "minpoly": [format_rational(c) for c in self.minpoly],
        }

    def __eq__(self, other):
        return (
            isinstance(other, AlgebraicField)
            and self.minpoly == other.minpoly
            and self.generator_name == other.generator_name
        )

    def __hash__(self):
        return hash(("alg", self.minpoly, self.generator_name))

    def __repr__(self):
        return f"QQ[{self.generator_name}]/({upoly.to_str(self.minpoly, self.generator_name)})"


class AlgebraicElement:
    __slots__ = ("field", "coords")

    def __init__(self, field, coords):
        self.field = field
        self.coords = coords

    def _coerce(self, other):
        if isinstance(other, AlgebraicElement):
            if other.field != self.field:
                raise DescriptorMismatch("elements of different extensions")
            return other
        if _is_rational_scalar(other):
            return self.field(other)
        if isinstance(other, (AlgebraicElement, FunctionFieldElement)):
            raise DescriptorMismatch(f"{other.field!r} != {self.field!r}")
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return AlgebraicElement(self.field, tuple(a + b for a, b in zip(self.coords, other.coords)))

    __radd__ = __add__

    def __neg__(self):
        return AlgebraicElement(self.field, tuple(-a for a in self.coords))

    def __pos__(self):
        return self

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return AlgebraicElement(self.field, tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        if _is_rational_scalar(other):
            c = mpq(other)
            return AlgebraicElement(self.field, tuple(a * c for a in self.coords))
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        a, b = self.coords, other.coords
        prod = [mpq(0)] * (2 * len(a) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        prod[i + j] += x * y
        return self.field._reduce(prod)

    __rmul__ = __mul__

    def inverse(self):
        if not self:
            raise ZeroDivisionError("inverse of zero in " + repr(self.field))
        p = upoly.strip(self.coords)
        g, s, _ = upoly.xgcd(p, self.field.minpoly)
        if len(g) != 1:
            raise ReducibleMinimalPolynomial(
                f"{self} is a zero divisor: minimal polynomial has factor {upoly.to_str(g, self.field.generator_name)}"
            )
        return self.field.from_coords(s)

    def __truediv__(self, other):
        if _is_rational_scalar(other):
            c = mpq(other)
            if not c:
                raise ZeroDivisionError("division by zero")
            return AlgebraicElement(self.field, tuple(a / c for a in self.coords))
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, n):
        if not isinstance(n, Integral):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        result = self.field.one
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __bool__(self):
        return any(self.coords)

    def __eq__(self, other):
        if isinstance(other, AlgebraicElement):
            return self.field == other.field and self.coords == other.coords
        if _is_rational_scalar(other):
            return self.coords[0] == other and not any(self.coords[1:])
        return NotImplemented

    def __hash__(self):
        if not any(self.coords[1:]):
            return hash(self.coords[0])
        return hash(self.coords)

    def is_rational(self):
        return not any(self.coords[1:])

    def __str__(self):
        name = self.field.generator_name
        return upoly.to_str(upoly.strip(self.coords), name)

    def __repr__(self):
        return f"AlgebraicElement({self})"


# --------------------------------------------------------------------------
# Q(t)
# --------------------------------------------------------------------------


class FunctionField(Field):
    """Rational function field ``Q(name)``."""

    def __init__(self, name="t"):
        self.generator_name = name

    @property
    def gen(self):
        return FunctionFieldElement(self, (mpq(0), mpq(1)), upoly.ONE)

    def __call__(self, value):
        if isinstance(value, FunctionFieldElement):
            if value.field != self:
                raise DescriptorMismatch("element belongs to a different function field")
            return value
        if isinstance(value, str):
            return self.parse(value)
        if _is_rational_scalar(value):
            return FunctionFieldElement(self, upoly.strip([mpq(value)]), upoly.ONE)
        raise DescriptorMismatch(f"cannot coerce {value!r} into {self!r}")

    def fraction(self, num, den):
        """Canonical element ``num/den`` from coefficient lists (low degree first)."""
        num = upoly.strip(num)
        den = upoly.strip(den)
        if not den:
            raise ZeroDivisionError("zero denominator in " + repr(self))
        if not num:
            return FunctionFieldElement(self, upoly.ZERO, upoly.ONE)
        g = upoly.gcd(num, den)
        if len(g) > 1:
            num = upoly.divmod_(num, g)[0]
            den = upoly.divmod_(den, g)[0]
        lc = den[-1]
        if lc != 1:
            num = upoly.scale(num, 1 / lc)
            den = upoly.scale(den, 1 / lc)
        return FunctionFieldElement(self, num, den)

    def contains(self, value):
        return isinstance(value, FunctionFieldElement) and value.field == self

    def describe(self):
        return {"kind": "function_field", "variable": self.generator_name}

    def __eq__(self, other):
        return isinstance(other, FunctionField) and other.generator_name == self.generator_name

    def __hash__(self):
        return hash(("ff", self.generator_name))

    def __repr__(self):
        return f"QQ({self.generator_name})"


class FunctionFieldElement:
    __slots__ = ("field", "num", "den")

    def __init__(self, field, num, den):
        self.field = field
        self.num = num
        self.den = den

    def _coerce(self, other):
        if isinstance(other, FunctionFieldElement):
            if other.field != self.field:
                raise DescriptorMismatch("elements of different function fields")
            return other
        if _is_rational_scalar(other):
            return self.field(other)
        if isinstance(other, (AlgebraicElement, FunctionFieldElement)):
            raise DescriptorMismatch(f"{other.field!r} != {self.field!r}")
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if self.den == other.den:
            return self.field.fraction(upoly.add(self.num, other.num), self.den)
        num = upoly.add(upoly.mul(self.num, other.den), upoly.mul(other.num, self.den))
        return self.field.fraction(num, upoly.mul(self.den, other.den))

    __radd__ = __add__

    def __neg__(self):
        return FunctionFieldElement(self.field, upoly.neg(self.num), self.den)

    def __pos__(self):
        return self

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if _is_rational_scalar(other):
            c = mpq(other)
            if not c:
                return self.field.zero
            return FunctionFieldElement(self.field, upoly.scale(self.num, c), self.den)
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self.field.fraction(upoly.mul(self.num, other.num), upoly.mul(self.den, other.den))

    __rmul__ = __mul__

    def inverse(self):
        if not self.num:
            raise ZeroDivisionError("inverse of zero in " + repr(self.field))
        return self.field.fraction(self.den, self.num)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, n):
        if not isinstance(n, Integral):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        result = self.field.one
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __bool__(self):
        return bool(self.num)

    def __eq__(self, other):
        if isinstance(other, FunctionFieldElement):
            return self.field == other.field and self.num == other.num and self.den == other.den
        if _is_rational_scalar(other):
            return self.den == upoly.ONE and self.num == upoly.strip([mpq(other)])
        return NotImplemented

    def __hash__(self):
        if self.den == upoly.ONE and len(self.num) <= 1:
            return hash(self.num[0] if self.num else 0)
        return hash((self.num, self.den))

    def is_rational(self):
        return self.den == upoly.ONE and len(self.num) <= 1

    def __call__(self, value):
        """Specialize the parameter at a rational ``value``."""
        return upoly.evaluate(self.num, mpq(value)) / upoly.evaluate(self.den, mpq(value))

    def __str__(self):
        name = self.field.generator_name
        num = upoly.to_str(self.num, name)
        if self.den == upoly.ONE:
            return num
        if len([c for c in self.num if c]) > 1:
            num = f"({num})"
        den = upoly.to_str(self.den, name)
        if len([c for c in self.den if c]) > 1 or len(self.den) > 1 and self.den[-1] != 1:
            den = f"({den})"
        return f"{num}/{den}"

    def __repr__(self):
        return f"FunctionFieldElement({self})"


# --------------------------------------------------------------------------
# functional surface
# --------------------------------------------------------------------------


def _check_same(field, *values):
    for v in values:
        if not field.contains(v):
            raise DescriptorMismatch(f"{v!r} is not an element of {field!r}")


def field_add(field, a, b):
    _check_same(field, a, b)
    return a + b


def field_mul(field, a, b):
    _check_same(field, a, b)
    return a * b


def field_neg(field, a):
    _check_same(field, a)
    return -a


def field_inv(field, a):
    _check_same(field, a)
    if not a:
        raise ZeroDivisionError("inverse of zero")
    if field == QQ:
        return 1 / a
    return a.inverse()


def field_parse(field, text):
    """Parse a constant expression (integers and the field generator)."""
    from .parser import parse_constant

    return parse_constant(text, field)


def field_from_description(desc):
    """Inverse of :meth:`Field.describe`; accepts a few shorthand spellings."""
    if desc is None or desc == "QQ" or desc == {"kind": "QQ"}:
        return QQ
    if isinstance(desc, str):
        raise ValueError(f"unknown field {desc!r}")
    kind = desc.get("kind", "QQ")
    if kind in ("QQ", "Q", "rational"):
        return QQ
    if kind in ("algebraic", "number_field"):
        name = desc.get("generator", "r")
        minpoly = desc["minpoly"]
        if isinstance(minpoly, str):
            from .parser import parse_univariate

            coeffs = parse_univariate(minpoly, desc.get("minpoly_variable", "s"))
        else:
            coeffs = [mpq(c) if not isinstance(c, str) else mpq(c) for c in minpoly]
        return AlgebraicField(coeffs, name)
    if kind in ("function_field", "rational_functions"):
        return FunctionField(desc.get("variable", "t"))
    raise ValueError(f"unknown field kind {kind!r}")
