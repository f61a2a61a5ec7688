"""Buchberger's algorithm with reduced output, normal forms and ideal equality.

Pairs are pruned with Buchberger's coprime criterion and the chain
criterion, both applied through the Gebauer-Moeller update.  Pairs are
selected by the normal strategy (smallest lcm first, ties broken by
generator index), so runs are deterministic.
"""
from dataclasses import dataclass, field as dc_field
from heapq import heappop, heappush
import logging
from operator import add as _add, sub as _sub

from .errors import OrderMismatch, SizeLimitExceeded, VarTableMismatch
from .poly import Poly, PolyRing, monomial_order

log = logging.getLogger(__name__)

DEFAULT_MAX_PAIRS = 500_000


def _divides(a, b):
    for x, y in zip(a, b):
        if x > y:
            return False
    return True


def _lcm(a, b):
    return tuple([x if x > y else y for x, y in zip(a, b)])


def _coprime(a, b):
    for x, y in zip(a, b):
        if x and y:
            return False
    return True


@dataclass
class Ideal:
    generators: list

    def __post_init__(self):
        self.generators = [g for g in self.generators if g]

    @property
    def ring(self):
        return self.generators[0].ring if self.generators else None


@dataclass
class GBStats:
    pairs_considered: int = 0
    pairs_reduced: int = 0
    zero_reductions: int = 0
    pruned_coprime: int = 0
    pruned_chain: int = 0


class GroebnerBasis:
    """Reduced Groebner basis: monic elements sorted by increasing leading monomial."""

    def __init__(self, ring, basis, stats=None):
        self.ring = ring
        self.order = ring.order
        self.basis = tuple(basis)
        self.stats = stats or GBStats()
        self._lms = [g.LM for g in self.basis]
        self._finder = None

    def finder(self):
        if self._finder is None:
            f = _DivisorFinder(self.ring.nvars)
            for lm in self._lms:
                f.add(lm)
            self._finder = f
        return self._finder

    def __len__(self):
        return len(self.basis)

    def __iter__(self):
        return iter(self.basis)

    def __getitem__(self, i):
        return self.basis[i]

    def is_unit(self):
        return len(self.basis) == 1 and self.basis[0].is_constant()

    def __eq__(self, other):
        if not isinstance(other, GroebnerBasis):
            return NotImplemented
        return ideal_equal(self, other)

    def __hash__(self):
        return hash(frozenset(self.basis))

    def __repr__(self):
        return "GroebnerBasis([" + ", ".join(g.to_str() for g in self.basis) + f"], order={self.order})"


@dataclass
class NormalFormResult:
    remainder: Poly
    is_member: bool = dc_field(init=False)

    def __post_init__(self):
        self.is_member = self.remainder.is_zero()


# ---------------------------------------------------------------------------
# reduction kernel on raw dicts
# ---------------------------------------------------------------------------

_FIELD_BITS = 16
_MAX_EXP = (1 << (_FIELD_BITS - 1)) - 1


def _guard_mask(nvars):
    g = 0
    for i in range(nvars):
        g |= 1 << (_FIELD_BITS * i + _FIELD_BITS - 1)
    return g


def _pack(m):
    """Exponent vector packed into one int with a guard bit per field.

    ``a`` divides ``b`` iff ``(pack(b) - pack(a)) & guard == 0``.
    """
    out = 0
    shift = 0
    for e in m:
        if e > _MAX_EXP:
            raise SizeLimitExceeded(f"exponent {e} too large")
        out |= e << shift
        shift += _FIELD_BITS
    return out


class _DivisorFinder:
    """Finds the lowest-index active leading monomial dividing a monomial.

    Answers are cached per monomial; indices only ever get deactivated or
    appended, which keeps cached answers cheap to revalidate.
    """

    def __init__(self, nvars):
        self.guard = _guard_mask(nvars)
        self.lms = []
        self.packed = []
        self.active = []
        self.cache = {}

    def add(self, lm, active=True):
        self.lms.append(lm)
        self.packed.append(_pack(lm))
        self.active.append(active)
        return len(self.lms) - 1

    def deactivate(self, idx):
        self.active[idx] = False

    def find(self, m):
        hit = self.cache.get(m)
        if hit is None:
            start = 0
        else:
            idx, start = hit
            if idx >= 0:
                if self.active[idx]:
                    return idx
                start = idx + 1
        pm = _pack(m)
        guard = self.guard
        packed = self.packed
        active = self.active
        for k in range(start, len(packed)):
            if active[k] and not ((pm - packed[k]) & guard):
                self.cache[m] = (k, 0)
                return k
        self.cache[m] = (-1, len(packed))
        return -1


def _reduce(terms, polys, finder, desc_key, full=True, max_terms=None):
    """Reduce ``terms`` (dict) modulo the monic ``polys`` indexed by ``finder``.

    With ``full`` the remainder is fully reduced; otherwise reduction stops at
    the first irreducible leading term.  Returns a dict.
    """
    p = dict(terms)
    heap = [(desc_key(m), m) for m in p]
    heap.sort()
    rem = {}
    lms = finder.lms
    find = finder.find
    while heap:
        _, m = heappop(heap)
        c = p.pop(m, None)
        if c is None:
            continue
        k = find(m)
        if k < 0:
            rem[m] = c
            if not full:
                rem.update(p)
                return rem
            continue
        lm = lms[k]
        q = tuple(map(_sub, m, lm))
        for mg, cg in polys[k].items():
            if mg == lm:
                continue
            mm = tuple(map(_add, mg, q))
            v = p.get(mm)
            if v is None:
                p[mm] = -c * cg
                heappush(heap, (desc_key(mm), mm))
            else:
                v = v - c * cg
                if v:
                    p[mm] = v
                else:
                    del p[mm]
        if max_terms is not None and len(p) > max_terms:
            raise SizeLimitExceeded(f"intermediate reduction exceeds {max_terms} terms")
    return rem


def _monic_terms(terms, lm, one):
    lc = terms[lm]
    if lc == 1:
        return terms
    inv = one / lc
    return {m: c * inv for m, c in terms.items()}


def _leading(terms, desc_key):
    return min(terms, key=desc_key)


class _Buchberger:
    def __init__(self, ring, max_pairs, stats):
        self.ring = ring
        self.desc_key = ring.desc_key
        self.key = ring.order.key
        self.one = ring.field.one
        self.max_pairs = max_pairs
        self.max_terms = ring.max_terms
        self.stats = stats
        self.guard = _guard_mask(ring.nvars)
        self.finder = _DivisorFinder(ring.nvars)
        self.polys = []  # every polynomial ever added, by index
        self.lms = self.finder.lms
        self.active = []  # indices currently in G, increasing
        self.pairs = {}  # (i, j) -> lcm
        self.heap = []

    def add_complete(self, terms):
        """Add an element of an already-complete basis (no pairs generated)."""
        lm = _leading(terms, self.desc_key)
        self.polys.append(terms)
        self.active.append(self.finder.add(lm))

    def reduce_against_active(self, terms, full=True):
        return _reduce(terms, self.polys, self.finder, self.desc_key, full, self.max_terms)

    def update(self, terms):
        """Gebauer-Moeller update with a new monic polynomial."""
        lm = _leading(terms, self.desc_key)
        self.polys.append(terms)
        t = self.finder.add(lm, active=False)
        stats = self.stats
        lms = self.lms
        packed = self.finder.packed
        guard = self.guard
        active = self.active
        lcm_with = {}
        coprime = {}
        for i in active:
            lcm_with[i] = _lcm(lms[i], lm)
            coprime[i] = _coprime(lms[i], lm)
        # A pair (i, t) is superseded by (j, t) when lcm(j, t) divides lcm(i, t),
        # i.e. when lm_j divides lcm(i, t).  Among pairs with equal lcm only the
        # highest index survives; a coprime pair with the same lcm wins outright.
        new_pairs = []
        for i in active:
            if coprime[i]:
                stats.pruned_coprime += 1
                continue
            l = lcm_with[i]
            pl = _pack(l)
            drop = False
            for j in active:
                if j == i or (pl - packed[j]) & guard:
                    continue
                lj = lcm_with[j]
                if lj != l or coprime[j] or j > i:
                    drop = True
                    break
            if drop:
                stats.pruned_chain += 1
                continue
            new_pairs.append(i)
        for (i, j), l in list(self.pairs.items()):
            if (_pack(l) - packed[t]) & guard:
                continue
            li = lcm_with[i] if i in lcm_with else _lcm(lms[i], lm)
            lj = lcm_with[j] if j in lcm_with else _lcm(lms[j], lm)
            if li != l and lj != l:
                del self.pairs[(i, j)]
                stats.pruned_chain += 1
        for i in new_pairs:
            l = lcm_with[i]
            self.pairs[(i, t)] = l
            heappush(self.heap, (self.key(l), i, t))
        pt = packed[t]
        keep = []
        for i in active:
            if (packed[i] - pt) & guard:
                keep.append(i)
            else:
                self.finder.deactivate(i)
        keep.append(t)
        self.finder.active[t] = True
        self.active = keep

    def spoly(self, i, j, l):
        fi, fj = self.polys[i], self.polys[j]
        qi = tuple(map(_sub, l, self.lms[i]))
        qj = tuple(map(_sub, l, self.lms[j]))
        out = {}
        for m, c in fi.items():
            out[tuple(map(_add, m, qi))] = c
        for m, c in fj.items():
            mm = tuple(map(_add, m, qj))
            v = out.get(mm)
            if v is None:
                out[mm] = -c
            else:
                v = v - c
                if v:
                    out[mm] = v
                else:
                    del out[mm]
        return out

    def run(self):
        stats = self.stats
        while self.heap:
            _, i, j = heappop(self.heap)
            l = self.pairs.pop((i, j), None)
            if l is None:
                continue
            stats.pairs_considered += 1
            if stats.pairs_considered > self.max_pairs:
                raise SizeLimitExceeded(f"more than {self.max_pairs} S-pairs")
            s = self.spoly(i, j, l)
            if not s:
                stats.zero_reductions += 1
                continue
            r = self.reduce_against_active(s)
            stats.pairs_reduced += 1
            if not r:
                stats.zero_reductions += 1
                continue
            lm = _leading(r, self.desc_key)
            r = _monic_terms(r, lm, self.one)
            self.update(r)
            if lm == self.ring.zero_monomial:
                return

    def reduced_basis(self):
        active = sorted(self.active, key=lambda i: self.key(self.lms[i]))
        # Active leading monomials are pairwise non-dividing, and no leading
        # monomial divides a smaller monomial, so each tail can be reduced
        # against the whole active set including its own polynomial.
        finder = _DivisorFinder(self.ring.nvars)
        polys = []
        for idx in active:
            polys.append(self.polys[idx])
            finder.add(self.lms[idx])
        out = []
        for idx in active:
            terms = self.polys[idx]
            lm = self.lms[idx]
            tail = {m: c for m, c in terms.items() if m != lm}
            tail = _reduce(tail, polys, finder, self.desc_key, True, self.max_terms)
            tail[lm] = terms[lm]
            out.append(_monic_terms(tail, lm, self.one))
        return [Poly(self.ring, t) for t in out]


def groebner_basis(ideal, order=None, start=None, ring=None, max_pairs=DEFAULT_MAX_PAIRS):
    """Reduced Groebner basis of an :class:`Ideal` (or list of polynomials).

    ``start`` may be a :class:`GroebnerBasis` of a sub-ideal in the same ring;
    its pairs are then known to reduce to zero and are not revisited.  An
    empty generator list needs ``ring``.
    """
    gens = ideal.generators if isinstance(ideal, Ideal) else [g for g in ideal if g]
    if start is not None:
        ring = start.ring
    elif gens:
        ring = gens[0].ring
    if ring is None:
        raise ValueError("empty ideal needs an explicit ring")
    if not gens and start is None:
        return GroebnerBasis(ring if order is None else ring.with_order(order), [])
    if order is not None and monomial_order(order) != ring.order:
        ring = ring.with_order(order)
        gens = [Poly(ring, g.terms) for g in gens]
        if start is not None:
            start = None
    for g in gens:
        if g.ring.variables != ring.variables or g.ring.field != ring.field:
            raise VarTableMismatch("generators live in different rings")
        if g.ring != ring:
            raise OrderMismatch("generators carry a different monomial order")
    stats = GBStats()
    bb = _Buchberger(ring, max_pairs, stats)
    if start is not None:
        for g in start.basis:
            bb.add_complete(g.terms)
    for g in gens:
        if not g:
            continue
        r = bb.reduce_against_active(g.terms) if bb.active else dict(g.terms)
        if not r:
            continue
        lm = _leading(r, bb.desc_key)
        bb.update(_monic_terms(r, lm, bb.one))
        if ring.zero_monomial in bb.lms[-1:]:
            break
    if bb.active and ring.zero_monomial == bb.lms[bb.active[-1]]:
        return GroebnerBasis(ring, [ring.one], stats)
    bb.run()
    if any(bb.lms[i] == ring.zero_monomial for i in bb.active):
        return GroebnerBasis(ring, [ring.one], stats)
    return GroebnerBasis(ring, bb.reduced_basis(), stats)


def empty_basis(ring):
    return GroebnerBasis(ring, [])


def normal_form(p, G):
    if p.ring != G.ring:
        if p.ring.variables == G.ring.variables and p.ring.field == G.ring.field:
            p = Poly(G.ring, p.terms)
        else:
            raise VarTableMismatch("polynomial and basis live in different rings")
    ring = G.ring
    rem = _reduce(p.terms, [g.terms for g in G.basis], G.finder(), ring.desc_key, True, ring.max_terms)
    return NormalFormResult(Poly(ring, rem))


def ideal_equal(G1, G2):
    if G1.order != G2.order:
        raise OrderMismatch(f"{G1.order} != {G2.order}")
    if G1.ring.variables != G2.ring.variables:
        raise VarTableMismatch("bases live in different rings")
    return set(G1.basis) == set(G2.basis)


def s_polynomial(f, g):
    l = _lcm(f.LM, g.LM)
    ring = f.ring
    qf = tuple(map(_sub, l, f.LM))
    qg = tuple(map(_sub, l, g.LM))
    one = ring.field.one
    return f.mul_term(qf, one / f.LC) - g.mul_term(qg, one / g.LC)


def is_groebner(G):
    """Buchberger criterion check: every S-polynomial reduces to zero."""
    basis = G.basis
    for a in range(len(basis)):
        for b in range(a + 1, len(basis)):
            if not normal_form(s_polynomial(basis[a], basis[b]), G).is_member:
                return False
    return True


def is_reduced(G):
    lms = [g.LM for g in G.basis]
    if len(set(lms)) != len(lms):
        return False
    for k, g in enumerate(G.basis):
        if g.LC != 1:
            return False
        for j, lm in enumerate(lms):
            if j != k and any(_divides(lm, m) for m in g.terms):
                return False
    return True
