"""Rational functions and rational maps between affine spaces.

Denominators are kept in factored form ``x^mono * prod(atom ** k)`` where
every atom is a monic polynomial without monomial content.  Numerators are
never factored; the only cancellation performed is exact trial division of
the numerator by the known denominator atoms, plus removal of a common
monomial.  That is enough to keep iterates of Laurent-type maps (Somos,
EDS) at their reduced size without a multivariate gcd.
"""
from .errors import DimensionMismatch, Indeterminacy, VarTableMismatch, ZeroDenominatorSymbolic
from .poly import Poly, divide_exact, monomial, monomial_content, shift_down


def _split(p):
    """Write ``p = c * x^mono * rest`` with ``rest`` monic and free of monomial content.

    Returns ``(c, mono, rest)``; ``rest`` is ``None`` when it is constant.
    """
    mono = monomial_content(p)
    rest = shift_down(p, mono)
    c = rest.LC
    if c != 1:
        rest = rest.scale(p.ring.field.one / c)
    if rest.is_constant():
        rest = None
    return c, mono, rest


def _add_mono(a, b, k=1):
    return tuple(x + k * y for x, y in zip(a, b))


def _sub_mono(a, b):
    return tuple(x - y for x, y in zip(a, b))


class RatFunc:
    """Quotient ``num / den`` over a :class:`PolyRing`.

    ``den`` is monic (it is a product of monic factors).  Use :meth:`equals`
    or ``==`` for equality of the functions themselves; the representation
    is not a full canonical form because no multivariate gcd is taken.
    """

    __slots__ = ("num", "den_mono", "den_atoms", "_den")

    def __init__(self, num, den=None):
        ring = num.ring
        if den is None:
            self._set(num, ring.zero_monomial, {})
            return
        if isinstance(den, Poly):
            if den.ring != ring:
                raise VarTableMismatch("numerator and denominator live in different rings")
            if not den:
                raise ZeroDivisionError("zero denominator")
            c, mono, rest = _split(den)
            if c != 1:
                num = num.scale(ring.field.one / c)
            atoms = {rest: 1} if rest is not None else {}
            self._finish(num, mono, atoms)
        else:
            raise TypeError("denominator must be a Poly")

    # construction helpers -------------------------------------------------

    def _set(self, num, mono, atoms):
        self.num = num
        self.den_mono = mono
        self.den_atoms = atoms
        self._den = None

    def _finish(self, num, mono, atoms):
        ring = num.ring
        if not num:
            self._set(num, ring.zero_monomial, {})
            return
        left = {}
        for a, k in atoms.items():
            while k:
                q = divide_exact(num, a)
                if q is None:
                    break
                num = q
                k -= 1
            if k:
                left[a] = k
        if any(mono):
            content = monomial_content(num)
            g = tuple(min(x, y) for x, y in zip(mono, content))
            if any(g):
                num = shift_down(num, g)
                mono = _sub_mono(mono, g)
        self._set(num, mono, left)

    @classmethod
    def _make(cls, num, mono, atoms):
        out = cls.__new__(cls)
        out._finish(num, mono, atoms)
        return out

    @classmethod
    def from_poly(cls, p):
        out = cls.__new__(cls)
        out._set(p, p.ring.zero_monomial, {})
        return out

    # queries ----------------------------------------------------------------

    @property
    def ring(self):
        return self.num.ring

    @property
    def den(self):
        if self._den is None:
            d = monomial(self.ring, self.den_mono)
            for a, k in self.den_atoms.items():
                d = d * a ** k
            self._den = d
        return self._den

    def is_polynomial(self):
        return not self.den_atoms and not any(self.den_mono)

    def __bool__(self):
        return bool(self.num)

    # arithmetic -------------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, RatFunc):
            if other.ring != self.ring:
                raise VarTableMismatch(f"{other.ring!r} != {self.ring!r}")
            return other
        if isinstance(other, Poly):
            if other.ring != self.ring:
                raise VarTableMismatch(f"{other.ring!r} != {self.ring!r}")
            return RatFunc.from_poly(other)
        try:
            return RatFunc.from_poly(self.ring(other))
        except Exception:
            return None

    def _cofactor(self, mono, atoms):
        """``L / den`` for a common multiple ``L = x^mono * prod(atoms)`` of ``den``."""
        c = monomial(self.ring, _sub_mono(mono, self.den_mono))
        for a, k in atoms.items():
            e = k - self.den_atoms.get(a, 0)
            if e:
                c = c * a ** e
        return c

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if not other.num:
            return self
        if not self.num:
            return other
        if self.is_polynomial() and other.is_polynomial():
            return RatFunc.from_poly(self.num + other.num)
        mono = tuple(max(x, y) for x, y in zip(self.den_mono, other.den_mono))
        atoms = dict(self.den_atoms)
        for a, k in other.den_atoms.items():
            if atoms.get(a, 0) < k:
                atoms[a] = k
        num = self.num * self._cofactor(mono, atoms) + other.num * other._cofactor(mono, atoms)
        return RatFunc._make(num, mono, atoms)

    __radd__ = __add__

    def __neg__(self):
        out = RatFunc.__new__(RatFunc)
        out._set(-self.num, self.den_mono, self.den_atoms)
        return out

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
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if self.is_polynomial() and other.is_polynomial():
            return RatFunc.from_poly(self.num * other.num)
        atoms = dict(self.den_atoms)
        for a, k in other.den_atoms.items():
            atoms[a] = atoms.get(a, 0) + k
        return RatFunc._make(self.num * other.num, _add_mono(self.den_mono, other.den_mono), atoms)

    __rmul__ = __mul__

    def inverse(self):
        if not self.num:
            raise ZeroDivisionError("inverse of the zero rational function")
        c, mono, rest = _split(self.num)
        atoms = {rest: 1} if rest is not None else {}
        return RatFunc._make(self.den.scale(self.ring.field.one / c), mono, atoms)

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
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        if n == 0:
            return RatFunc.from_poly(self.ring.one)
        out = RatFunc.__new__(RatFunc)
        out._set(self.num ** n, tuple(n * e for e in self.den_mono), {a: n * k for a, k in self.den_atoms.items()})
        return out

    def equals(self, other):
        """Equality as rational functions (cross-multiplication)."""
        other = self._coerce(other)
        if other is None:
            return False
        if self.den_mono == other.den_mono and self.den_atoms == other.den_atoms:
            return self.num == other.num
        return self.num * other.den == other.num * self.den

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self.equals(other)

    __hash__ = None

    # evaluation -------------------------------------------------------------

    def denominator_at(self, point):
        d = self.ring.field.one
        for i, e in enumerate(self.den_mono):
            if e:
                d = d * point[i] ** e
        for a, k in self.den_atoms.items():
            d = d * a.evaluate(point) ** k
        return d

    def evaluate(self, point):
        point = [self.ring.field(v) for v in point]
        d = self.denominator_at(point)
        if not d:
            raise Indeterminacy()
        return self.num.evaluate(point) / d

    def embed(self, ring, offset=0):
        out = RatFunc.__new__(RatFunc)
        pre = (0,) * offset
        post = (0,) * (ring.nvars - offset - self.ring.nvars)
        out._set(
            self.num.embed(ring, offset),
            pre + self.den_mono + post,
            {a.embed(ring, offset): k for a, k in self.den_atoms.items()},
        )
        return out

    def compose(self, images):
        return ratmap_compose(self, images)

    def to_str(self):
        num = self.num.to_str()
        if self.is_polynomial():
            return num
        return f"({num})/({self.den.to_str()})"

    def __str__(self):
        return self.to_str()

    def __repr__(self):
        return f"RatFunc({self.to_str()})"


class RatMap:
    """A rational map given by ``dim_out`` rational functions in ``dim_in`` variables."""

    def __init__(self, components, ring=None):
        comps = []
        for c in components:
            if isinstance(c, Poly):
                c = RatFunc.from_poly(c)
            comps.append(c)
        if ring is None:
            if not comps:
                raise DimensionMismatch("a map needs a ring or at least one component")
            ring = comps[0].ring
        for c in comps:
            if c.ring != ring:
                raise VarTableMismatch("map components live in different rings")
        self.ring = ring
        self.components = tuple(comps)

    @classmethod
    def identity(cls, ring):
        return cls([RatFunc.from_poly(g) for g in ring.gens], ring)

    @property
    def dim_in(self):
        return self.ring.nvars

    @property
    def dim_out(self):
        return len(self.components)

    def __len__(self):
        return len(self.components)

    def __getitem__(self, i):
        return self.components[i]

    def __iter__(self):
        return iter(self.components)

    def __eq__(self, other):
        return (
            isinstance(other, RatMap)
            and self.ring == other.ring
            and len(self) == len(other)
            and all(a.equals(b) for a, b in zip(self.components, other.components))
        )

    __hash__ = None

    def is_polynomial(self):
        return all(c.is_polynomial() for c in self.components)

    def evaluate(self, point):
        if len(point) != self.dim_in:
            raise DimensionMismatch(f"point has {len(point)} coordinates, map expects {self.dim_in}")
        field = self.ring.field
        point = [field(v) for v in point]
        out = []
        for i, c in enumerate(self.components):
            d = c.denominator_at(point)
            if not d:
                raise Indeterminacy(component=i)
            out.append(c.num.evaluate(point) / d)
        return tuple(out)

    def compose(self, inner):
        """``self o inner``."""
        return ratmap_compose(self, inner)

    def embed(self, ring, offset=0):
        return RatMap([c.embed(ring, offset) for c in self.components], ring)

    def __repr__(self):
        return "RatMap(" + ", ".join(c.to_str() for c in self.components) + ")"


# substitution --------------------------------------------------------------


def _power_table(base, top):
    pw = [base.ring.one]
    for _ in range(top):
        pw.append(pw[-1] * base)
    return pw


def _substitute_cleared(polys, images, target):
    """Substitute ``images`` into each of ``polys`` over one shared denominator.

    The shared denominator is ``prod_i den_i ** E_i`` where ``E_i`` is the
    largest exponent of variable ``i`` across ``polys``; it is returned as a
    pair ``(mono, atoms)``.
    """
    n = len(images)
    top = [0] * n
    for p in polys:
        for i, d in enumerate(p.degrees()):
            if d > top[i]:
                top[i] = d
    factors = [None] * n
    mono = target.zero_monomial
    atoms = {}
    for i, img in enumerate(images):
        if not top[i]:
            continue
        nums = _power_table(img.num, top[i])
        if img.is_polynomial():
            factors[i] = nums
            continue
        dens = _power_table(img.den, top[i])
        factors[i] = [nums[k] * dens[top[i] - k] for k in range(top[i] + 1)]
        mono = _add_mono(mono, img.den_mono, top[i])
        for a, k in img.den_atoms.items():
            atoms[a] = atoms.get(a, 0) + k * top[i]
    active = [i for i in range(n) if factors[i] is not None]
    zero = target.field.zero

    def rec(terms, level):
        if level == len(active):
            c = zero
            for _, v in terms:
                c = c + v
            return target(c)
        i = active[level]
        groups = {}
        for m, c in terms:
            groups.setdefault(m[i], []).append((m, c))
        acc = target.zero
        table = factors[i]
        for e in sorted(groups):
            inner = rec(groups[e], level + 1)
            if inner:
                acc = acc + table[e] * inner
        return acc

    nums = [rec(list(p.terms.items()), 0) for p in polys]
    return nums, mono, atoms


def _as_ratfunc(x):
    if isinstance(x, RatFunc):
        return x
    if isinstance(x, Poly):
        return RatFunc.from_poly(x)
    raise TypeError(f"expected RatFunc or Poly, got {type(x).__name__}")


def substitute(f, images):
    """``f(images)`` for a RatFunc (or Poly) ``f`` and one image per variable."""
    if isinstance(images, RatMap):
        images = images.components
    images = [_as_ratfunc(img) for img in images]
    f = _as_ratfunc(f)
    if len(images) != f.ring.nvars:
        raise DimensionMismatch(f"{len(images)} images for {f.ring.nvars} variables")
    if not images:
        raise DimensionMismatch("no images")
    target = images[0].ring
    for img in images:
        if img.ring != target:
            raise VarTableMismatch("images live in different rings")
    field = target.field
    if f.ring.field != field:
        raise VarTableMismatch("coefficient fields differ")
    atom_list = list(f.den_atoms.items())
    polys = [f.num] + [a for a, _ in atom_list]
    subs, b_mono, b_atoms = _substitute_cleared(polys, images, target)
    num = subs[0]
    if not num:
        return RatFunc.from_poly(target.zero)
    # net exponents of the image-denominator factors and of x^mono
    total_m = sum(k for _, k in atom_list)
    net_mono = tuple((total_m - 1) * e for e in b_mono)
    net_atoms = {a: (total_m - 1) * k for a, k in b_atoms.items()}
    den_mono = target.zero_monomial
    den_atoms = {}
    scale = field.one

    def push_den(poly, k):
        nonlocal den_mono, scale
        if not poly:
            raise ZeroDenominatorSymbolic("denominator vanishes identically after substitution")
        c, mono, rest = _split(poly)
        scale = scale / c ** k
        den_mono = _add_mono(den_mono, mono, k)
        if rest is not None:
            den_atoms[rest] = den_atoms.get(rest, 0) + k

    for i, e in enumerate(f.den_mono):
        if not e:
            continue
        img = images[i]
        push_den(img.num, e)
        net_mono = _add_mono(net_mono, img.den_mono, e)
        for a, k in img.den_atoms.items():
            net_atoms[a] = net_atoms.get(a, 0) + k * e
    for (a, k), sub in zip(atom_list, subs[1:]):
        push_den(sub, k)
    num_extra = target.one
    pos_mono = tuple(max(e, 0) for e in net_mono)
    neg_mono = tuple(max(-e, 0) for e in net_mono)
    if any(pos_mono):
        num_extra = monomial(target, pos_mono)
    den_mono = _add_mono(den_mono, neg_mono)
    for a, k in net_atoms.items():
        if k > 0:
            num_extra = num_extra * a ** k
        elif k < 0:
            den_atoms[a] = den_atoms.get(a, 0) - k
    if not num_extra.is_constant():
        num = num * num_extra
    if scale != 1:
        num = num.scale(scale)
    return RatFunc._make(num, den_mono, den_atoms)


def poly_substitute(p, images):
    """Ring-homomorphism extension ``x_i -> images[i]``; returns a RatFunc."""
    return substitute(p, images)


def ratmap_compose(outer, inner):
    """Formal substitution of ``inner``'s components into ``outer``."""
    if isinstance(inner, RatMap):
        inner_components = inner.components
    else:
        inner_components = [_as_ratfunc(c) for c in inner]
    inner_dim = len(inner_components)
    if isinstance(outer, RatMap):
        if outer.dim_in != inner_dim:
            raise DimensionMismatch(f"outer expects {outer.dim_in} inputs, inner gives {inner_dim}")
        ring = inner_components[0].ring if inner_components else outer.ring
        return RatMap([substitute(c, inner_components) for c in outer.components], ring)
    outer = _as_ratfunc(outer)
    if outer.ring.nvars != inner_dim:
        raise DimensionMismatch(f"outer expects {outer.ring.nvars} inputs, inner gives {inner_dim}")
    return substitute(outer, inner_components)


def ratfunc_numerator_cleared(f):
    """Numerator after the cancellations above (a Poly is returned unchanged)."""
    if isinstance(f, Poly):
        return f
    return f.num


def ratmap_eval(m, point):
    return m.evaluate(point)


def iterate_map(m, n):
    """``m`` composed with itself ``n`` times; the identity for ``n == 0``."""
    if n < 1:
        return RatMap.identity(m.ring)
    out = m
    for _ in range(n - 1):
        out = ratmap_compose(m, out)
    return out
