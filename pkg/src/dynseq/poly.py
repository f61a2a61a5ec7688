"""Sparse multivariate polynomials over the exact fields.

A :class:`Poly` stores a dict from exponent tuples to nonzero coefficients.
The ambient :class:`PolyRing` fixes the coefficient field, the variable
table and the monomial order; sorted term lists are derived on demand.
"""
from heapq import heapify, heappop, heappush
from operator import add as _add, sub as _sub

from .errors import SizeLimitExceeded, VarTableMismatch, DescriptorMismatch
from .fields import QQ

DEFAULT_MAX_TERMS = 2_000_000


class MonomialOrder:
    name = None

    def key(self, m):
        """Ascending key: larger key means larger monomial."""
        raise NotImplementedError

    def desc_key(self, m):
        """Descending key: smaller key means larger monomial (for heaps and sorts)."""
        raise NotImplementedError

    def __eq__(self, other):
        return type(self) is type(other)

    def __hash__(self):
        return hash(self.name)

    def __repr__(self):
        return self.name


class Lex(MonomialOrder):
    name = "lex"

    def key(self, m):
        return m

    def desc_key(self, m):
        return tuple([-e for e in m])


class DegRevLex(MonomialOrder):
    name = "degrevlex"

    def key(self, m):
        return (sum(m),) + tuple([-e for e in reversed(m)])

    def desc_key(self, m):
        return (-sum(m),) + tuple(reversed(m))


LEX = Lex()
DEGREVLEX = DegRevLex()


def monomial_order(name):
    if isinstance(name, MonomialOrder):
        return name
    name = name.lower()
    if name == "lex":
        return LEX
    if name in ("degrevlex", "grevlex", "drl"):
        return DEGREVLEX
    raise ValueError(f"unknown monomial order {name!r}")


class PolyRing:
    """Polynomial ring ``field[variables]`` with a fixed monomial order."""

    def __init__(self, field=QQ, variables=("x",), order=DEGREVLEX, max_terms=DEFAULT_MAX_TERMS):
        variables = tuple(variables)
        if len(set(variables)) != len(variables):
            raise ValueError(f"duplicate variable names in {variables}")
        self.field = field
        self.variables = variables
        self.nvars = len(variables)
        self.order = monomial_order(order)
        self.max_terms = max_terms
        self.zero_monomial = (0,) * self.nvars
        self._desc_cache = {}

    def __eq__(self, other):
        return (
            isinstance(other, PolyRing)
            and self.field == other.field
            and self.variables == other.variables
            and self.order == other.order
        )

    def __hash__(self):
        return hash((self.field, self.variables, self.order))

    def __repr__(self):
        return f"PolyRing({self.field!r}, {list(self.variables)}, {self.order})"

    def with_order(self, order):
        return PolyRing(self.field, self.variables, order, self.max_terms)

    def desc_key(self, m):
        k = self._desc_cache.get(m)
        if k is None:
            k = self.order.desc_key(m)
            if len(self._desc_cache) < 4_000_000:
                self._desc_cache[m] = k
        return k

    # constructors ---------------------------------------------------------

    def __call__(self, value):
        if isinstance(value, Poly):
            if value.ring != self:
                raise VarTableMismatch("polynomial from another ring")
            return value
        c = self.field(value)
        if not c:
            return Poly(self, {})
        return Poly(self, {self.zero_monomial: c})

    @property
    def zero(self):
        return Poly(self, {})

    @property
    def one(self):
        return self(1)

    def gen(self, i):
        if isinstance(i, str):
            i = self.variables.index(i)
        m = [0] * self.nvars
        m[i] = 1
        return Poly(self, {tuple(m): self.field.one})

    @property
    def gens(self):
        return tuple(self.gen(i) for i in range(self.nvars))

    def from_dict(self, terms):
        field = self.field
        out = {}
        for m, c in terms.items():
            c = field(c)
            if c:
                out[tuple(m)] = c
        return Poly(self, out)

    def check(self, *polys):
        for p in polys:
            if p.ring != self:
                raise VarTableMismatch(f"{p.ring!r} != {self!r}")


class Poly:
    __slots__ = ("ring", "terms", "_lm", "_hash")

    def __init__(self, ring, terms):
        self.ring = ring
        self.terms = terms
        self._lm = None
        self._hash = None
        if len(terms) > ring.max_terms:
            raise SizeLimitExceeded(f"polynomial has {len(terms)} terms (limit {ring.max_terms})")

    # basic queries --------------------------------------------------------

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self):
        return not self.terms

    def __len__(self):
        return len(self.terms)

    def is_constant(self):
        return not self.terms or (len(self.terms) == 1 and self.ring.zero_monomial in self.terms)

    def constant_coeff(self):
        return self.terms.get(self.ring.zero_monomial, self.ring.field.zero)

    @property
    def LM(self):
        if self._lm is None:
            if not self.terms:
                raise ValueError("zero polynomial has no leading monomial")
            self._lm = min(self.terms, key=self.ring.desc_key)
        return self._lm

    @property
    def LC(self):
        return self.terms[self.LM]

    def sorted_terms(self):
        """Terms in strictly descending order under the ring's monomial order."""
        return sorted(self.terms.items(), key=lambda t: self.ring.desc_key(t[0]))

    def total_degree(self):
        return max((sum(m) for m in self.terms), default=-1)

    def degrees(self):
        """Per-variable maximum exponent."""
        deg = [0] * self.ring.nvars
        for m in self.terms:
            for i, e in enumerate(m):
                if e > deg[i]:
                    deg[i] = e
        return deg

    def used_variables(self):
        return [i for i, d in enumerate(self.degrees()) if d]

    # arithmetic -----------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, Poly):
            if other.ring != self.ring:
                raise VarTableMismatch(f"{other.ring!r} != {self.ring!r}")
            return other
        try:
            return self.ring(other)
        except DescriptorMismatch:
            return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if len(self.terms) < len(other.terms):
            a, b = other.terms, self.terms
        else:
            a, b = self.terms, other.terms
        out = dict(a)
        for m, c in b.items():
            s = out.get(m)
            if s is None:
                out[m] = c
            else:
                s = s + c
                if s:
                    out[m] = s
                else:
                    del out[m]
        return Poly(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        return Poly(self.ring, {m: -c for m, c in self.terms.items()})

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

    def scale(self, c):
        c = self.ring.field(c)
        if not c:
            return self.ring.zero
        if c == 1:
            return self
        return Poly(self.ring, {m: v * c for m, v in self.terms.items()})

    def mul_term(self, mono, c):
        """Multiply by the single term ``c * x^mono``."""
        if not c:
            return self.ring.zero
        return Poly(self.ring, {tuple(map(_add, m, mono)): v * c for m, v in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, Poly):
            try:
                c = self.ring.field(other)
            except DescriptorMismatch:
                return NotImplemented
            return self.scale(c)
        if other.ring != self.ring:
            raise VarTableMismatch(f"{other.ring!r} != {self.ring!r}")
        if not self.terms or not other.terms:
            return self.ring.zero
        a, b = self.terms, other.terms
        if len(a) < len(b):
            a, b = b, a
        if len(b) == 1:
            (mb, cb), = b.items()
            return Poly(self.ring, {tuple(map(_add, m, mb)): c * cb for m, c in a.items()})
        out = {}
        limit = self.ring.max_terms
        get = out.get
        for mb, cb in b.items():
            for ma, ca in a.items():
                m = tuple(map(_add, ma, mb))
                s = get(m)
                if s is None:
                    out[m] = ca * cb
                else:
                    out[m] = s + ca * cb
            if len(out) > limit:
                raise SizeLimitExceeded(f"product exceeds {limit} terms")
        return Poly(self.ring, {m: c for m, c in out.items() if c})

    __rmul__ = __mul__

    def __truediv__(self, other):
        """Division by a nonzero scalar only; use RatFunc for quotients."""
        if isinstance(other, Poly):
            if not other.is_constant():
                return NotImplemented
            other = other.constant_coeff()
        c = self.ring.field(other)
        if not c:
            raise ZeroDivisionError("division by zero")
        return self.scale(self.ring.field.one / c)

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            return NotImplemented
        result = self.ring.one
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def monic(self):
        if not self.terms:
            return self
        lc = self.LC
        if lc == 1:
            return self
        return self.scale(1 / lc if self.ring.field == QQ else self.ring.field.one / lc)

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.ring == other.ring and self.terms == other.terms
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    # evaluation / substitution --------------------------------------------

    def evaluate(self, point):
        """Evaluate at a point (sequence of field elements), Horner-free but exact."""
        if len(point) != self.ring.nvars:
            raise VarTableMismatch(f"point has {len(point)} coordinates, ring has {self.ring.nvars}")
        field = self.ring.field
        point = [field(v) for v in point]
        powers = [dict() for _ in point]
        total = field.zero
        for m, c in self.terms.items():
            t = c
            for i, e in enumerate(m):
                if e:
                    cache = powers[i]
                    pw = cache.get(e)
                    if pw is None:
                        pw = point[i] ** e
                        cache[e] = pw
                    t = t * pw
            total = total + t
        return total

    def embed(self, ring, offset=0):
        """Re-express in ``ring``, shifting variable ``i`` to ``i + offset``."""
        if ring.field != self.ring.field:
            raise DescriptorMismatch("cannot embed across coefficient fields")
        n = ring.nvars
        if offset + self.ring.nvars > n:
            raise VarTableMismatch("target ring too small")
        pre = (0,) * offset
        post = (0,) * (n - offset - self.ring.nvars)
        return Poly(ring, {pre + m + post: c for m, c in self.terms.items()})

    def to_str(self):
        if not self.terms:
            return "0"
        ring = self.ring
        field = ring.field
        pieces = []
        for m, c in self.sorted_terms():
            mono = "*".join(
                (v if e == 1 else f"{v}^{e}") for v, e in zip(ring.variables, m) if e
            )
            neg = False
            if field == QQ:
                if c < 0:
                    neg, c = True, -c
                cs = field.to_str(c)
            else:
                if c.is_rational():
                    r = c.coords[0] if hasattr(c, "coords") else (c.num[0] if c.num else 0)
                    if r < 0:
                        neg, c = True, -c
                    cs = field.to_str(c)
                else:
                    cs = f"({field.to_str(c)})"
            if mono:
                body = mono if cs == "1" else f"{cs}*{mono}"
            else:
                body = cs
            pieces.append(("-" if neg else "+", body))
        sign, body = pieces[0]
        out = ("-" if sign == "-" else "") + body
        for sign, body in pieces[1:]:
            out += f" {sign} {body}"
        return out

    def __str__(self):
        return self.to_str()

    def __repr__(self):
        return f"Poly({self.to_str()})"


def divide_exact(p, a):
    """Return ``p / a`` if ``a`` divides ``p`` exactly, else ``None``."""
    ring = p.ring
    if not a:
        raise ZeroDivisionError("division by the zero polynomial")
    if not p:
        return p
    desc_key = ring.desc_key
    lm = a.LM
    inv = ring.field.one / a.terms[lm]
    tail = [(m, c) for m, c in a.terms.items() if m != lm]
    rem = dict(p.terms)
    heap = [(desc_key(m), m) for m in rem]
    heapify(heap)
    quo = {}
    while heap:
        _, m = heappop(heap)
        c = rem.pop(m, None)
        if c is None:
            continue
        q = []
        for x, y in zip(m, lm):
            if x < y:
                return None
            q.append(x - y)
        q = tuple(q)
        c = c * inv
        quo[q] = c
        for mg, cg in tail:
            mm = tuple(map(_add, mg, q))
            v = rem.get(mm)
            if v is None:
                rem[mm] = -c * cg
                heappush(heap, (desc_key(mm), mm))
            else:
                v = v - c * cg
                if v:
                    rem[mm] = v
                else:
                    del rem[mm]
    return Poly(ring, quo)


def monomial_content(p):
    """Largest monomial dividing every term of ``p`` (zero monomial for p == 0)."""
    g = None
    for m in p.terms:
        if g is None:
            g = list(m)
        else:
            for i, e in enumerate(m):
                if e < g[i]:
                    g[i] = e
        if not any(g):
            break
    return tuple(g) if g is not None else p.ring.zero_monomial


def shift_down(p, mono):
    """Divide every term of ``p`` by the monomial ``mono`` (which must divide them)."""
    if not any(mono):
        return p
    return Poly(p.ring, {tuple(map(_sub, m, mono)): c for m, c in p.terms.items()})


def monomial(ring, mono, coeff=None):
    c = ring.field.one if coeff is None else ring.field(coeff)
    return Poly(ring, {tuple(mono): c}) if c else ring.zero


# functional surface ------------------------------------------------------


def poly_add(p, q):
    p.ring.check(q)
    return p + q


def poly_mul(p, q):
    p.ring.check(q)
    return p * q


def poly_scale(p, c):
    return p.scale(c)


def poly_eval(p, point):
    return p.evaluate(point)
