"""Deciding ``a(n) = b(n)`` for all ``n`` by an ascending chain of ideals.

For the difference system ``c(n) = h(chi^n(z0))`` we form the cleared
numerators ``r_j`` of ``h o chi^j`` and the ideals
``I_j = <relations, r_0, ..., r_j>``.  As soon as ``r_{j}`` lies in
``I_{j-1}`` the chain has stabilized with ``n0 = j - 1``: at any orbit point
where ``c`` vanishes for ``n0 + 1`` consecutive steps it vanishes forever.
So the identity holds iff ``c(0) = ... = c(n0) = 0``, which is checked
exactly (together with an audit window of extra terms).
"""
from dataclasses import asdict, dataclass, field as dc_field
import json
import time

from .errors import Indeterminacy, SizeLimitExceeded
from .fields import AlgebraicElement, FunctionFieldElement, format_rational
from .groebner import empty_basis, groebner_basis, normal_form
from .poly import monomial_order
from .ratmap import RatFunc, RatMap, ratmap_compose
from .sequences import DynSeq, GeometricData, _align, _check_fields, _product_geo, seq_eval

__all__ = [
    "DifferenceSystem",
    "ProverOptions",
    "ProvedEqual",
    "Refuted",
    "Aborted",
    "ChainStep",
    "ProofCertificate",
    "build_difference_system",
    "ideal_chain",
    "prove_zero",
    "prove_equal",
    "certificate_render",
]


@dataclass(frozen=True, eq=False)
class DifferenceSystem:
    """``geo`` carries ``h = f - g`` on ``X x Y``; ``prefix`` holds the directly compared pairs."""

    geo: GeometricData
    lhs: GeometricData
    rhs: GeometricData
    prefix: tuple = ()  # ((a(n), b(n)), ...) for n < offset

    @property
    def offset(self):
        return len(self.prefix)


@dataclass(frozen=True)
class ProverOptions:
    order: str = "degrevlex"
    max_steps: int = 64
    extra_check_terms: int = 20
    compare_bases: bool = False
    audit_cost_limit: int = 1 << 20

    def __post_init__(self):
        monomial_order(self.order)
        if self.max_steps < 1:
            raise ValueError("max_steps must be positive")
        if self.extra_check_terms < 0:
            raise ValueError("extra_check_terms must be nonnegative")


@dataclass(frozen=True)
class ProvedEqual:
    n0: int
    terms_checked: int
    name = "ProvedEqual"


@dataclass(frozen=True)
class Refuted:
    witness_index: int
    lhs_value: object
    rhs_value: object
    name = "Refuted"


@dataclass(frozen=True)
class Aborted:
    reason: str
    detail: str = ""
    name = "Aborted"


@dataclass(frozen=True)
class ChainStep:
    j: int
    numerator_terms: int
    member: bool
    basis_size: int


@dataclass
class ProofCertificate:
    verdict: object
    order: str
    options: ProverOptions
    chain: list = dc_field(default_factory=list)
    prefix_indices_checked: list = dc_field(default_factory=list)
    checked_terms: int = 0
    audit_truncated: bool = False
    elapsed_time: float = 0.0

    @property
    def chain_basis_sizes(self):
        return [s.basis_size for s in self.chain]

    @property
    def proved(self):
        return isinstance(self.verdict, ProvedEqual)

    @property
    def refuted(self):
        return isinstance(self.verdict, Refuted)

    @property
    def n0(self):
        return getattr(self.verdict, "n0", None)

    @property
    def exit_code(self):
        if isinstance(self.verdict, ProvedEqual):
            return 0
        if isinstance(self.verdict, Refuted):
            return 1
        return 2


def build_difference_system(a, b):
    """Product system for ``a - b``; returns ``(system, prefix_check_length)``.

    Both operands are advanced past ``max(N_a, N_b)`` prefix entries; those
    indices are kept for direct comparison.
    """
    _check_fields(a, b)
    N, rows, geos = _align([a, b])
    geo = _product_geo(geos, lambda fs: fs[0] - fs[1])
    sys = DifferenceSystem(geo, geos[0], geos[1], tuple(zip(rows[0], rows[1])))
    return sys, N


def _reorder(geo, order):
    ring = geo.ring.with_order(monomial_order(order))
    if ring == geo.ring:
        return geo
    return geo.with_ring(ring)


def ideal_chain(geo, order="degrevlex", max_steps=64, compare_bases=False, stop=True):
    """Yield ``(ChainStep, basis)`` for ``j = 0, 1, ..., max_steps``.

    With ``stop`` the step whose ``member`` flag is first true is the last
    one yielded.
    """
    geo = _reorder(geo, order)
    ring = geo.ring
    chi = geo.map
    if geo.relations:
        G = groebner_basis(list(geo.relations))
    else:
        G = empty_basis(ring)
    cur = geo.observable
    for j in range(max_steps + 1):
        r = cur.num
        if compare_bases:
            new = groebner_basis([r], start=G) if len(G) else groebner_basis([r], ring=ring)
            member = new == G
        else:
            member = normal_form(r, G).is_member if len(G) else not r
            if not member:
                new = groebner_basis([r], start=G) if len(G) else groebner_basis([r], ring=ring)
            else:
                new = G
        G = new
        yield ChainStep(j, len(r), member, len(G)), G
        if member and stop:
            return
        if j < max_steps:
            cur = ratmap_compose(cur, chi)


def _cost(v):
    """Rough cost of arithmetic with ``v``: gmp integers are cheap, dense polynomials are not."""
    if isinstance(v, FunctionFieldElement):
        coeffs = v.num + v.den
        return len(coeffs) ** 2 + sum(_cost(c) for c in coeffs)
    if isinstance(v, AlgebraicElement):
        return sum(_cost(c) for c in v.coords)
    return (v.numerator.bit_length() + v.denominator.bit_length()) >> 4


def _verify(system, upto, mandatory=0, cost_limit=None):
    """Evaluate ``c(n)`` for geometric indices ``0..upto``.

    Returns ``(first nonzero index or None, last index checked)``.  Beyond
    ``mandatory`` the walk stops early once an orbit coordinate costs more
    than ``cost_limit``.
    """
    geo = system.geo
    rels = geo.relations
    pt = geo.point
    for n in range(upto + 1):
        if n:
            if cost_limit is not None and n > mandatory and max(map(_cost, pt), default=0) > cost_limit:
                return None, n - 1
            try:
                pt = geo.map.evaluate(pt)
            except Indeterminacy as exc:
                raise exc.at_step(n) from None
        for r in rels:
            if r.evaluate(pt):
                raise ValueError(f"relation {r} fails on the orbit at step {n}")
        try:
            c = geo.observable.evaluate(pt)
        except Indeterminacy as exc:
            raise exc.at_step(n) from None
        if c:
            return n, n
    return None, upto


def _witness(system, n):
    N = system.offset
    a = system.lhs.values(n - N + 1)[-1]
    b = system.rhs.values(n - N + 1)[-1]
    return Refuted(n, a, b)


def prove_zero(system, opts=None, **kw):
    """Run the chain on ``system`` and return a :class:`ProofCertificate`."""
    if opts is None:
        opts = ProverOptions(**kw)
    t0 = time.perf_counter()
    order = monomial_order(opts.order).name
    cert = ProofCertificate(None, order, opts)
    N = system.offset

    def done(verdict):
        cert.verdict = verdict
        cert.elapsed_time = time.perf_counter() - t0
        return cert

    for n, (x, y) in enumerate(system.prefix):
        cert.prefix_indices_checked.append(n)
        if x != y:
            return done(Refuted(n, x, y))

    # Cheap screen: a short exact window often exposes a non-identity
    # before any Groebner basis is computed.
    screen = opts.extra_check_terms
    try:
        bad, _ = _verify(system, screen, -1, opts.audit_cost_limit)
    except Indeterminacy as exc:
        return done(Aborted("Indeterminacy", f"orbit indeterminate at n={exc.index + N}"))
    except ValueError as exc:
        return done(Aborted("RelationViolated", str(exc)))
    if bad is not None:
        cert.checked_terms = N + bad + 1
        return done(_witness(system, N + bad))

    n0 = None
    try:
        for step, _ in ideal_chain(system.geo, opts.order, opts.max_steps, opts.compare_bases):
            cert.chain.append(step)
            if step.member:
                n0 = max(step.j - 1, 0)
    except SizeLimitExceeded as exc:
        return done(Aborted("SizeLimit", str(exc)))
    if n0 is None:
        return done(Aborted("ChainCap", f"no stabilization within {opts.max_steps} steps"))

    upto = n0 + opts.extra_check_terms
    try:
        bad, last = _verify(system, upto, n0, opts.audit_cost_limit)
    except Indeterminacy as exc:
        return done(Aborted("Indeterminacy", f"orbit indeterminate at n={exc.index + N}"))
    except ValueError as exc:
        return done(Aborted("RelationViolated", str(exc)))
    if bad is not None:
        cert.checked_terms = N + bad + 1
        return done(_witness(system, N + bad))
    cert.checked_terms = N + last + 1
    cert.audit_truncated = last < upto
    return done(ProvedEqual(n0, N + last + 1))


def prove_equal(a, b, opts=None, **kw):
    """Decide whether two dynamical sequences agree for every ``n``."""
    system, _ = build_difference_system(a, b)
    return prove_zero(system, opts, **kw)


def _value_str(v):
    return format_rational(v) if hasattr(v, "numerator") else str(v)


def certificate_to_dict(cert):
    v = cert.verdict
    witness = None
    n0 = None
    if isinstance(v, ProvedEqual):
        n0 = v.n0
    elif isinstance(v, Refuted):
        witness = {"index": v.witness_index, "lhs": _value_str(v.lhs_value), "rhs": _value_str(v.rhs_value)}
    out = {
        "verdict": v.name,
        "n0": n0,
        "chain_basis_sizes": cert.chain_basis_sizes,
        "chain_membership": [s.member for s in cert.chain],
        "checked_terms": cert.checked_terms,
        "audit_truncated": cert.audit_truncated,
        "witness": witness,
        "order": cert.order,
        "options": asdict(cert.options),
    }
    if isinstance(v, Aborted):
        out["reason"] = v.reason
        out["detail"] = v.detail
    return out


def certificate_render(cert, format="human"):
    """Deterministic text form; ``format`` is ``"human"`` or ``"json"``."""
    if format in ("json", "structured"):
        return json.dumps(certificate_to_dict(cert), sort_keys=True)
    v = cert.verdict
    if isinstance(v, ProvedEqual):
        head = f"equal for all n (stabilized at step {v.n0}; verified n ≤ {v.terms_checked - 1})"
    elif isinstance(v, Refuted):
        head = (
            f"not equal: a({v.witness_index}) = {_value_str(v.lhs_value)} "
            f"but b({v.witness_index}) = {_value_str(v.rhs_value)}"
        )
    else:
        head = f"aborted: {v.reason}" + (f" ({v.detail})" if v.detail else "")
    lines = [head, f"order: {cert.order}"]
    if cert.audit_truncated:
        lines.append("audit window cut short by the size limit")
    if cert.chain:
        sizes = ", ".join(str(s.basis_size) for s in cert.chain)
        lines.append(f"chain basis sizes: [{sizes}]")
    return "\n".join(lines)
