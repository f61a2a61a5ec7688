"""Dynamical sequences: geometric data, orbit evaluation, closure combinators and builders.

A :class:`DynSeq` is a finite prefix followed by the sequence
``h(chi^n(z0))`` of a :class:`GeometricData`.  Every combinator below
returns a new DynSeq whose geometric data is the explicit construction
(product spaces, accumulators, rotations, shift registers); nothing is
computed by tabulating values except prefixes.
"""
from dataclasses import dataclass, field as dc_field
from math import comb, factorial
from typing import Sequence

from gmpy2 import mpq

from . import upoly
from .errors import (
    DescriptorMismatch,
    DimensionMismatch,
    Indeterminacy,
    NonIntegerValuedPolynomial,
    ZeroBaseNegativeExponent,
)
from .fields import QQ
from .poly import Poly, PolyRing
from .ratmap import RatFunc, RatMap, iterate_map

__all__ = [
    "GeometricData",
    "DynSeq",
    "ExpPolyData",
    "seq_eval",
    "seq_sum",
    "seq_difference",
    "seq_product",
    "seq_scale",
    "seq_partial_sums",
    "seq_partial_products",
    "seq_shift",
    "seq_with_prefix",
    "seq_arith_progression",
    "seq_floor",
    "seq_interlace",
    "seq_constant",
    "seq_from_linear_recurrence",
    "seq_from_recurrence_with_coeffs",
    "seq_somos",
    "seq_eds",
    "seq_lambda_power_tower",
    "seq_lambda_poly_exponent",
    "seq_exp_poly_subsequence",
    "PowerOfD",
    "Polynomial",
    "join_rings",
]


@dataclass(frozen=True, eq=False)
class GeometricData:
    """Rational self-map ``map`` of affine space, start ``point`` and ``observable``.

    ``relations`` are polynomials vanishing at ``point`` (and, for the data
    to be meaningful, along its orbit); the prover adds them to every ideal.
    """

    ring: PolyRing
    map: RatMap
    point: tuple
    observable: RatFunc
    relations: tuple = ()

    def __post_init__(self):
        ring = self.ring
        if self.map.ring != ring or self.map.dim_out != ring.nvars:
            raise DimensionMismatch("map must be a self-map of the ambient space")
        if self.observable.ring != ring:
            raise DimensionMismatch("observable lives in another ring")
        if len(self.point) != ring.nvars:
            raise DimensionMismatch(f"point has {len(self.point)} coordinates, space has {ring.nvars}")
        object.__setattr__(self, "point", tuple(ring.field(c) for c in self.point))
        rels = tuple(r for r in self.relations if r)
        for r in rels:
            if r.ring != ring:
                raise DimensionMismatch("relation lives in another ring")
            if r.evaluate(self.point):
                raise ValueError(f"base point does not satisfy relation {r}")
        object.__setattr__(self, "relations", rels)

    @property
    def field(self):
        return self.ring.field

    @property
    def dim(self):
        return self.ring.nvars

    @property
    def variables(self):
        return self.ring.variables

    def step(self, point):
        return self.map.evaluate(point)

    def advance(self, steps):
        """Same data with the base point moved ``steps`` times along the orbit."""
        pt = self.point
        for k in range(steps):
            try:
                pt = self.map.evaluate(pt)
            except Indeterminacy as exc:
                raise exc.at_step(k) from None
        return GeometricData(self.ring, self.map, tuple(pt), self.observable, self.relations)

    def orbit(self, n_points):
        """The first ``n_points`` points of the orbit (index of failure in Indeterminacy)."""
        pts = []
        pt = self.point
        for k in range(n_points):
            if k:
                try:
                    pt = self.map.evaluate(pt)
                except Indeterminacy as exc:
                    raise exc.at_step(k) from None
            pts.append(pt)
        return pts

    def values(self, count):
        out = []
        pt = self.point
        for k in range(count):
            try:
                if k:
                    pt = self.map.evaluate(pt)
                out.append(self.observable.evaluate(pt))
            except Indeterminacy as exc:
                raise exc.at_step(k) from None
        return out

    def with_ring(self, ring, offset=0):
        return GeometricData(
            ring,
            self.map.embed(ring, offset),
            self.point,
            self.observable.embed(ring, offset),
            tuple(r.embed(ring, offset) for r in self.relations),
        )

    def same_as(self, other):
        """Structural equality up to the representation of rational functions."""
        return (
            self.ring == other.ring
            and self.map == other.map
            and self.point == other.point
            and self.observable.equals(other.observable)
            and list(self.relations) == list(other.relations)
        )


@dataclass(frozen=True, eq=False)
class DynSeq:
    """``a(n) = prefix[n]`` for ``n < len(prefix)``, else ``h(chi^(n - len(prefix))(z0))``."""

    geo: GeometricData
    prefix: tuple = ()

    def __post_init__(self):
        field = self.geo.field
        object.__setattr__(self, "prefix", tuple(field(c) for c in self.prefix))

    @property
    def field(self):
        return self.geo.field

    def terms(self, n_max):
        return seq_eval(self, n_max)

    def __getitem__(self, n):
        if isinstance(n, slice):
            stop = n.stop
            if stop is None:
                raise ValueError("open-ended slices are not supported")
            return seq_eval(self, stop - 1)[n]
        return seq_eval(self, n)[n]

    def strip_prefix(self):
        return DynSeq(self.geo)

    def __repr__(self):
        return f"DynSeq(dim={self.geo.dim}, prefix={len(self.prefix)}, vars={list(self.geo.variables)})"


def seq_eval(s, n_max):
    """``[a(0), ..., a(n_max)]`` walking the orbit once."""
    if n_max < 0:
        return []
    N = len(s.prefix)
    out = list(s.prefix[: n_max + 1])
    remaining = n_max + 1 - len(out)
    if remaining > 0:
        try:
            out.extend(s.geo.values(remaining))
        except Indeterminacy as exc:
            raise exc.at_step(exc.index + N) from None
    return out


# ---------------------------------------------------------------------------
# helpers
# ---------------------------------------------------------------------------


def _check_fields(*seqs):
    field = seqs[0].field
    for s in seqs[1:]:
        if s.field != field:
            raise DescriptorMismatch(f"{s.field!r} != {field!r}")
    return field


def join_rings(rings, order=None):
    """Product ring with disjoint variable names; returns ``(ring, offsets)``.

    Names are kept when already distinct, otherwise the k-th factor's names
    get suffix ``k+1`` (so two copies of ``x, y`` become ``x1, y1, x2, y2``).
    """
    field = rings[0].field
    for r in rings[1:]:
        if r.field != field:
            raise DescriptorMismatch("cannot join rings over different fields")
    flat = [v for r in rings for v in r.variables]
    if len(set(flat)) != len(flat):
        for sep in ("", "_"):
            flat = [f"{v}{sep}{k + 1}" for k, r in enumerate(rings) for v in r.variables]
            if len(set(flat)) == len(flat):
                break
        else:
            flat = [f"v{i}" for i in range(len(flat))]
    offsets = []
    off = 0
    for r in rings:
        offsets.append(off)
        off += r.nvars
    if order is None:
        order = rings[0].order
    return PolyRing(field, flat, order, rings[0].max_terms), offsets


def _product_geo(geos, combine):
    """Product system of ``geos``; ``combine`` builds the observable from the lifted ones."""
    ring, offsets = join_rings([g.ring for g in geos])
    comps = []
    point = []
    rels = []
    lifted = []
    for g, off in zip(geos, offsets):
        comps.extend(c.embed(ring, off) for c in g.map.components)
        point.extend(g.point)
        rels.extend(r.embed(ring, off) for r in g.relations)
        lifted.append(g.observable.embed(ring, off))
    return GeometricData(ring, RatMap(comps, ring), tuple(point), combine(lifted), tuple(rels))


def _align(seqs):
    """Bring all sequences to a common prefix length; returns (prefix rows, geos)."""
    N = max(len(s.prefix) for s in seqs)
    rows = []
    geos = []
    for s in seqs:
        vals = seq_eval(s, N - 1) if N else []
        rows.append(vals)
        extra = N - len(s.prefix)
        geo = s.geo
        if extra:
            try:
                geo = geo.advance(extra)
            except Indeterminacy as exc:
                raise exc.at_step(exc.index + len(s.prefix)) from None
        geos.append(geo)
    return N, rows, geos


def _poly(ring, value):
    return RatFunc.from_poly(ring(value))


# ---------------------------------------------------------------------------
# closure combinators
# ---------------------------------------------------------------------------


def seq_sum(a, b):
    """``a(n) + b(n)`` on the product space."""
    _check_fields(a, b)
    N, rows, geos = _align([a, b])
    geo = _product_geo(geos, lambda fs: fs[0] + fs[1])
    return DynSeq(geo, tuple(x + y for x, y in zip(*rows)))


def seq_difference(a, b):
    _check_fields(a, b)
    N, rows, geos = _align([a, b])
    geo = _product_geo(geos, lambda fs: fs[0] - fs[1])
    return DynSeq(geo, tuple(x - y for x, y in zip(*rows)))


def seq_product(a, b):
    """``a(n) * b(n)`` on the product space."""
    _check_fields(a, b)
    N, rows, geos = _align([a, b])
    geo = _product_geo(geos, lambda fs: fs[0] * fs[1])
    return DynSeq(geo, tuple(x * y for x, y in zip(*rows)))


def seq_scale(a, c):
    """``c * a(n)``; multiplies the observable (a product with a constant sequence)."""
    geo = a.geo
    c = geo.field(c)
    new = GeometricData(geo.ring, geo.map, geo.point, geo.observable * c, geo.relations)
    return DynSeq(new, tuple(c * v for v in a.prefix))


def _accumulate(a, product):
    geo = a.geo
    field = geo.field
    acc0 = field.one if product else field.zero
    pref = []
    for v in a.prefix:
        acc0 = acc0 * v if product else acc0 + v
        pref.append(acc0)
    # after the prefix, the accumulator holds the fold of the prefix values
    base = geo.ring
    ring, _ = join_rings([base, PolyRing(field, ["p"], base.order)])
    p = RatFunc.from_poly(ring.gen(ring.nvars - 1))
    f = geo.observable.embed(ring)
    comps = [c.embed(ring) for c in geo.map.components]
    comps.append(p * f if product else p + f)
    new = GeometricData(
        ring,
        RatMap(comps, ring),
        tuple(geo.point) + (acc0,),
        p * f if product else p + f,
        tuple(r.embed(ring) for r in geo.relations),
    )
    return DynSeq(new, tuple(pref))


def seq_partial_sums(a):
    """``a(0) + ... + a(n)`` via the accumulator ``chi(x, p) = (phi(x), p + f(x))``."""
    return _accumulate(a, product=False)


def seq_partial_products(a):
    """``a(0) * ... * a(n)`` via ``chi(x, p) = (phi(x), p * f(x))``."""
    return _accumulate(a, product=True)


def seq_shift(a, i):
    """``a(n + i)``."""
    if i < 0:
        raise ValueError("shift must be nonnegative")
    N = len(a.prefix)
    if i <= N:
        return DynSeq(a.geo, a.prefix[i:])
    try:
        geo = a.geo.advance(i - N)
    except Indeterminacy as exc:
        raise exc.at_step(exc.index + N) from None
    return DynSeq(geo)


def seq_with_prefix(a, new_prefix, j):
    """``b(n) = new_prefix[n]`` for ``n < L``, ``b(n) = a(n - j)`` for ``n >= L`` (``j <= L``)."""
    L = len(new_prefix)
    if j < 0 or j > L:
        raise ValueError(f"need 0 <= j <= len(new_prefix), got j={j}, L={L}")
    shifted = seq_shift(a, L - j)
    field = a.field
    return DynSeq(shifted.geo, tuple(field(v) for v in new_prefix) + shifted.prefix)


def seq_arith_progression(a, d, i):
    """``a(d*n + i)`` using the iterate ``phi^d``."""
    if d < 1 or not 0 <= i < d:
        raise ValueError("need d >= 1 and 0 <= i < d")
    N = len(a.prefix)
    K = -(-(N - i) // d) if N > i else 0
    pref = []
    if K:
        vals = seq_eval(a, d * (K - 1) + i)
        pref = [vals[d * n + i] for n in range(K)]
    offset = d * K + i - N
    geo = a.geo
    if offset:
        try:
            geo = geo.advance(offset)
        except Indeterminacy as exc:
            raise exc.at_step(exc.index + N) from None
    if d > 1:
        geo = GeometricData(geo.ring, iterate_map(geo.map, d), geo.point, geo.observable, geo.relations)
    return DynSeq(geo, tuple(pref))


def seq_floor(a, d):
    """``a(floor(n / d))`` via the rotation ``mu(u_1..u_d) = (phi(u_d), u_1, ..., u_{d-1})``."""
    if d < 1:
        raise ValueError("d must be positive")
    if d == 1:
        return a
    pref = tuple(v for v in a.prefix for _ in range(d))
    geo = a.geo
    ring, offsets = join_rings([geo.ring] * d)
    n = geo.dim
    comps = [c.embed(ring, offsets[d - 1]) for c in geo.map.components]
    for k in range(d - 1):
        comps.extend(RatFunc.from_poly(ring.gen(offsets[k] + v)) for v in range(n))
    rels = [r.embed(ring, off) for off in offsets for r in geo.relations]
    new = GeometricData(
        ring,
        RatMap(comps, ring),
        tuple(geo.point) * d,
        geo.observable.embed(ring, offsets[d - 1]),
        tuple(rels),
    )
    return DynSeq(new, pref)


def seq_interlace(seqs):
    """``b(n) = sum_i c_i(n) * a_i(floor(n / s))`` with period-s indicators ``c_i``."""
    seqs = list(seqs)
    s = len(seqs)
    if s < 1:
        raise ValueError("need at least one sequence")
    field = _check_fields(*seqs)
    period = [field.zero] * (s - 1) + [field.one]
    total = None
    for i, a in enumerate(seqs):
        init = [field.one if k == i else field.zero for k in range(s)]
        indicator = seq_from_linear_recurrence(period, init)
        term = seq_product(indicator, seq_floor(a, s))
        total = term if total is None else seq_sum(total, term)
    return total


# ---------------------------------------------------------------------------
# builders
# ---------------------------------------------------------------------------


def seq_from_linear_recurrence(coeffs, init, field=None):
    """``a(n) = sum_i coeffs[i-1] * a(n-i)`` for ``n >= d``, with ``a(k) = init[k]``.

    Shift register on ``A^d``; the observable is the first coordinate.
    """
    d = len(coeffs)
    if d < 1 or len(init) != d:
        raise ValueError("need d >= 1 coefficients and d initial values")
    if field is None:
        field = _infer_field(list(coeffs) + list(init))
    coeffs = [field(c) for c in coeffs]
    ring = PolyRing(field, [f"u{k}" for k in range(d)])
    gens = ring.gens
    new = ring.zero
    for i, k in enumerate(coeffs, start=1):
        if k:
            new = new + gens[d - i] * k
    comps = [RatFunc.from_poly(g) for g in gens[1:]] + [RatFunc.from_poly(new)]
    geo = GeometricData(ring, RatMap(comps, ring), tuple(init), RatFunc.from_poly(gens[0]))
    return DynSeq(geo)


def seq_constant(c, field=None):
    if field is None:
        field = _infer_field([c])
    return seq_from_linear_recurrence([1], [c], field)


def _infer_field(values):
    for v in values:
        f = getattr(v, "field", None)
        if f is not None:
            return f
    return QQ


def seq_from_recurrence_with_coeffs(R, coeff_seqs, init):
    """Sequence driven by ``f(n + d) = R(c_1(n), ..., c_s(n), f(n), ..., f(n + d - 1))``.

    ``R`` is a RatFunc in ``s + d`` variables (the ``s`` coefficient slots
    first, then the ``d`` previous terms, oldest first).  The state is
    ``(phi_1^n(x_1), ..., phi_s^n(x_s), f(n), ..., f(n+d-1))`` and the
    observable is the first accumulator coordinate.
    """
    coeff_seqs = list(coeff_seqs)
    s = len(coeff_seqs)
    d = len(init)
    if R.ring.nvars != s + d:
        raise DimensionMismatch(f"R has {R.ring.nvars} variables, expected {s + d}")
    field = R.ring.field
    if coeff_seqs:
        _check_fields(*coeff_seqs)
        if coeff_seqs[0].field != field:
            raise DescriptorMismatch("R and coefficient sequences use different fields")
    geos = []
    for c in coeff_seqs:
        if c.prefix:
            raise ValueError("coefficient sequences must be prefix-free; shift them first")
        geos.append(c.geo)
    acc_ring = PolyRing(field, [f"a{k}" for k in range(d)], R.ring.order)
    ring, offsets = join_rings([g.ring for g in geos] + [acc_ring])
    acc_off = offsets[-1]
    comps = []
    for g, off in zip(geos, offsets):
        comps.extend(c.embed(ring, off) for c in g.map.components)
    acc = [RatFunc.from_poly(ring.gen(acc_off + k)) for k in range(d)]
    args = [g.observable.embed(ring, off) for g, off in zip(geos, offsets)] + acc
    comps.extend(acc[1:])
    comps.append(R.compose(args))
    point = [c for g in geos for c in g.point] + [field(v) for v in init]
    rels = [r.embed(ring, off) for g, off in zip(geos, offsets) for r in g.relations]
    geo = GeometricData(ring, RatMap(comps, ring), tuple(point), acc[0], tuple(rels))
    return DynSeq(geo)


def seq_somos(k, init):
    """Somos-k: ``a(n) a(n-k) = sum_{i=1}^{floor(k/2)} a(n-i) a(n-k+i)``."""
    if k < 4:
        raise ValueError("Somos sequences need k >= 4")
    if len(init) != k:
        raise ValueError(f"need {k} initial values")
    field = _infer_field(init)
    ring = PolyRing(field, [f"x{i}" for i in range(1, k + 1)])
    x = ring.gens  # x[0] = a(n-k), ..., x[k-1] = a(n-1)
    num = ring.zero
    for i in range(1, k // 2 + 1):
        num = num + x[k - i] * x[i]
    comps = [RatFunc.from_poly(g) for g in x[1:]] + [RatFunc(num, x[0])]
    geo = GeometricData(ring, RatMap(comps, ring), tuple(init), RatFunc.from_poly(x[0]))
    return DynSeq(geo)


def seq_eds(w1, w2, w3, w4):
    """Elliptic divisibility sequence ``W_n`` from ``W_1..W_4`` (term 0 is ``W_0 = 0``).

    ``W_{n+2} = (W_{n+1} W_{n-1} W_2^2 - W_3 W_1 W_n^2) / (W_{n-2} W_1^2)``.
    """
    field = _infer_field([w1, w2, w3, w4])
    w1, w2, w3, w4 = (field(v) for v in (w1, w2, w3, w4))
    if not w1:
        raise ValueError("W_1 must be nonzero")
    ring = PolyRing(field, ["x", "y", "z", "w"])
    x, y, z, w = ring.gens
    num = w * y * (w2 * w2) - z * z * (w3 * w1)
    den = x * (w1 * w1)
    comps = [RatFunc.from_poly(y), RatFunc.from_poly(z), RatFunc.from_poly(w), RatFunc(num, den)]
    geo = GeometricData(ring, RatMap(comps, ring), (w1, w2, w3, w4), RatFunc.from_poly(x))
    return DynSeq(geo, (field.zero,))


def seq_lambda_power_tower(lam, d):
    """``lam ** (d ** n)`` from the map ``x -> x^d``."""
    if d < 1:
        raise ValueError("d must be positive")
    field = _infer_field([lam])
    ring = PolyRing(field, ["x"])
    (x,) = ring.gens
    geo = GeometricData(ring, RatMap([RatFunc.from_poly(x ** d)], ring), (lam,), RatFunc.from_poly(x))
    return DynSeq(geo)


def binomial_coefficients(P):
    """Coefficients ``c_i`` of ``P(x) = sum_i c_i * C(x, i)`` (forward differences at 0)."""
    P = upoly.strip(P)
    deg = len(P) - 1
    vals = [upoly.evaluate(P, mpq(k)) for k in range(deg + 1)]
    out = []
    for i in range(deg + 1):
        out.append(sum(((-1) ** (i - k)) * comb(i, k) * vals[k] for k in range(i + 1)))
    return out


def seq_lambda_poly_exponent(lam, P):
    """``lam ** P(n)`` for integer-valued ``P`` (dense coefficients over Q, lowest first).

    Uses ``phi(a_1..a_d) = (lam*a_1, a_2*a_1, ..., a_d*a_{d-1})`` from ``(1, ..., 1)``,
    whose n-th iterate is ``(lam^C(n,1), ..., lam^C(n,d))``, and the observable
    ``lam^c_0 * prod u_i^c_i``.  Negative ``c_i`` give a rational observable.
    """
    if isinstance(P, str):
        from .parser import parse_univariate

        P = parse_univariate(P, "x")
    cs = binomial_coefficients(P)
    if not cs:
        cs = [mpq(0)]
    for c in cs:
        if c.denominator != 1:
            raise NonIntegerValuedPolynomial(f"polynomial is not integer valued (coefficient {c})")
    cs = [int(c) for c in cs]
    field = _infer_field([lam])
    lam = field(lam)
    if not lam and any(c < 0 for c in cs):
        raise ZeroBaseNegativeExponent("negative binomial coefficient with zero base")
    d = max(len(cs) - 1, 1)
    ring = PolyRing(field, [f"u{k}" for k in range(1, d + 1)])
    u = ring.gens
    comps = [RatFunc.from_poly(u[0] * lam)] + [RatFunc.from_poly(u[k] * u[k - 1]) for k in range(1, d)]
    obs = RatFunc.from_poly(ring(lam ** cs[0] if cs[0] >= 0 or lam else 0))
    for k, c in enumerate(cs[1:]):
        if c > 0:
            obs = obs * RatFunc.from_poly(u[k] ** c)
        elif c < 0:
            obs = obs / RatFunc.from_poly(u[k] ** (-c))
    geo = GeometricData(ring, RatMap(comps, ring), (field.one,) * d, obs)
    return DynSeq(geo)


@dataclass(frozen=True)
class ExpPolyData:
    """``f(n) = sum c * C(n, j) * lam^n`` over ``entries`` of ``(lam, j, c)``."""

    entries: tuple

    def __post_init__(self):
        lams = []
        for lam, j, c in self.entries:
            if j < 0:
                raise ValueError("binomial index must be nonnegative")
            if lam not in lams:
                lams.append(lam)
        object.__setattr__(self, "entries", tuple(self.entries))

    @property
    def M(self):
        return max((j for _, j, _ in self.entries), default=0)

    def value(self, n):
        total = 0
        for lam, j, c in self.entries:
            total = c * comb(n, j) * lam ** n + total
        return total


@dataclass(frozen=True)
class PowerOfD:
    d: int


@dataclass(frozen=True)
class Polynomial:
    P: Sequence


def _poly_values_sequence(P, shift, field):
    """Sequence ``P(n) - shift`` as a linear recurrence of order ``deg P + 1``."""
    P = upoly.strip(P)
    e = max(len(P) - 1, 0)
    order = e + 1
    # (1 - E^{-1})^{order} annihilates polynomials of degree e
    coeffs = [field(-((-1) ** i) * comb(order, i)) for i in range(1, order + 1)]
    init = [field(upoly.evaluate(P, mpq(k)) - shift) for k in range(order)]
    return seq_from_linear_recurrence(coeffs, init, field)


def seq_exp_poly_subsequence(data, mode):
    """``f(d^n)`` or ``f(P(n))`` for an exponential polynomial ``f``.

    Assembled from ``lam^(d^n)`` (or ``lam^P(n)``), binomial factors
    ``C(m_n, j) = prod_k (m_n - k) / j!`` built from linear recurrence
    sequences, and sums/products of those.
    """
    entries = list(data.entries)
    if not entries:
        raise ValueError("empty exponential-polynomial data")
    field = _infer_field([x for e in entries for x in (e[0], e[2])])
    total = None
    for lam, j, c in entries:
        lam = field(lam)
        c = field(c)
        if not c:
            continue
        if isinstance(mode, PowerOfD):
            d = mode.d
            if d < 1:
                raise ValueError("d must be positive")
            power = seq_lambda_power_tower(lam, d)
            factors = [
                seq_from_linear_recurrence([field(d + 1), field(-d)], [field(1 - k), field(d - k)], field)
                for k in range(j)
            ]
        elif isinstance(mode, Polynomial):
            P = mode.P
            if isinstance(P, str):
                from .parser import parse_univariate

                P = parse_univariate(P, "x")
            power = seq_lambda_poly_exponent(lam, P)
            factors = [_poly_values_sequence(P, k, field) for k in range(j)]
        else:
            raise TypeError(f"unknown mode {mode!r}")
        term = power
        for fac in factors:
            term = seq_product(term, fac)
        term = seq_scale(term, c / factorial(j))
        total = term if total is None else seq_sum(total, term)
    if total is None:
        return seq_constant(field.zero, field)
    return total
