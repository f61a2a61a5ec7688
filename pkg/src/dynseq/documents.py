"""JSON documents for systems and identities, combinator expressions, and the catalog.

A system document looks like::

    {"field": {"kind": "QQ"}, "variables": ["x", "y"],
     "map": ["x + 1", "x*y"], "point": ["1", "1"], "observable": "y",
     "relations": [], "prefix": [], "order": "degrevlex"}

An identity document has ``lhs`` and ``rhs`` (each a system document, a
``catalog:NAME`` reference or a combinator expression such as
``partial_products(catalog:factorial)``) and optional ``options``.
"""
import json
from pathlib import Path
import re

from gmpy2 import mpq

from .errors import DynSeqError, ParseError
from .fields import QQ, field_from_description
from .parser import parse_constant, parse_expression, parse_polynomial
from .poly import PolyRing, monomial_order
from .ratmap import RatMap
from . import sequences as S

__all__ = [
    "system_from_document",
    "system_to_document",
    "load_system",
    "load_identity",
    "parse_combinator",
    "CATALOG_SYSTEMS",
    "CATALOG_IDENTITIES",
    "catalog_system",
    "catalog_identity",
]

SYSTEM_KEYS = {"field", "variables", "map", "point", "observable", "relations", "prefix", "order", "description"}


class DocumentError(DynSeqError, ValueError):
    pass


def _const(text, field):
    if isinstance(text, int):
        return field(text)
    if not isinstance(text, str):
        raise DocumentError(f"constants must be strings or integers, got {text!r}")
    return parse_constant(text, field)


def system_from_document(doc):
    """Build a :class:`~dynseq.sequences.DynSeq` from a system document."""
    unknown = set(doc) - SYSTEM_KEYS
    if unknown:
        raise DocumentError(f"unknown keys in system document: {sorted(unknown)}")
    for key in ("variables", "map", "point", "observable"):
        if key not in doc:
            raise DocumentError(f"system document lacks {key!r}")
    field = field_from_description(doc.get("field"))
    variables = list(doc["variables"])
    if len(doc["map"]) != len(variables) or len(doc["point"]) != len(variables):
        raise DocumentError("map, point and variables must have the same length")
    order = monomial_order(doc.get("order", "degrevlex"))
    ring = PolyRing(field, variables, order)
    comps = [parse_expression(e, variables, ring=ring) for e in doc["map"]]
    point = [_const(c, field) for c in doc["point"]]
    obs = parse_expression(doc["observable"], variables, ring=ring)
    rels = [parse_polynomial(r, ring) for r in doc.get("relations", [])]
    geo = S.GeometricData(ring, RatMap(comps, ring), tuple(point), obs, tuple(rels))
    prefix = [_const(c, field) for c in doc.get("prefix", [])]
    return S.DynSeq(geo, tuple(prefix))


def system_to_document(seq):
    """Inverse of :func:`system_from_document` (canonical expression strings)."""
    geo = seq.geo
    field = geo.field
    doc = {
        "field": field.describe(),
        "variables": list(geo.variables),
        "map": [c.to_str() for c in geo.map.components],
        "point": [field.to_str(c) for c in geo.point],
        "observable": geo.observable.to_str(),
    }
    if geo.relations:
        doc["relations"] = [r.to_str() for r in geo.relations]
    if seq.prefix:
        doc["prefix"] = [field.to_str(c) for c in seq.prefix]
    doc["order"] = geo.ring.order.name
    return doc


# ---------------------------------------------------------------------------
# combinator expressions
# ---------------------------------------------------------------------------

_CTOK = re.compile(
    r"\s*(?:(catalog:[A-Za-z0-9_\-]+)|([A-Za-z_][A-Za-z_0-9]*)|(-?\d+(?:/\d+)?)|(\"[^\"]*\"|'[^']*')|([()\[\],]))"
)


def _ctokenize(text):
    out = []
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _CTOK.match(text, pos)
        if not m:
            raise ParseError(f"unexpected character {text[pos]!r}", pos, text=text)
        kind = m.lastindex
        out.append((kind, m.group(kind), m.start(kind)))
        pos = m.end()
    out.append((0, "", len(text)))
    return out


def _seq_arg(v, name):
    if not isinstance(v, S.DynSeq):
        raise DocumentError(f"{name} expects a sequence, got {v!r}")
    return v


def _int_arg(v, name):
    if isinstance(v, mpq) and v.denominator == 1:
        return int(v)
    raise DocumentError(f"{name} expects an integer, got {v!r}")


def _field_value(v, field):
    if isinstance(v, str):
        return parse_constant(v, field)
    return field(v)


def _ops(field):
    sq, iq = _seq_arg, _int_arg

    def lst(v, name):
        if not isinstance(v, list):
            raise DocumentError(f"{name} expects a list, got {v!r}")
        return [_field_value(x, field) for x in v]

    def poly_arg(v):
        if isinstance(v, str):
            from .parser import parse_univariate

            return parse_univariate(v, "x")
        return lst(v, "poly_exponent")

    return {
        "sum": lambda a, b: S.seq_sum(sq(a, "sum"), sq(b, "sum")),
        "difference": lambda a, b: S.seq_difference(sq(a, "difference"), sq(b, "difference")),
        "product": lambda a, b: S.seq_product(sq(a, "product"), sq(b, "product")),
        "scale": lambda a, c: S.seq_scale(sq(a, "scale"), _field_value(c, a.field)),
        "partial_sums": lambda a: S.seq_partial_sums(sq(a, "partial_sums")),
        "partial_products": lambda a: S.seq_partial_products(sq(a, "partial_products")),
        "shift": lambda a, i: S.seq_shift(sq(a, "shift"), iq(i, "shift")),
        "with_prefix": lambda a, p, j: S.seq_with_prefix(
            sq(a, "with_prefix"), [_field_value(x, a.field) for x in p], iq(j, "with_prefix")
        ),
        "arith_progression": lambda a, d, i: S.seq_arith_progression(
            sq(a, "arith_progression"), iq(d, "arith_progression"), iq(i, "arith_progression")
        ),
        "floor": lambda a, d: S.seq_floor(sq(a, "floor"), iq(d, "floor")),
        "interlace": lambda *seqs: S.seq_interlace([sq(a, "interlace") for a in seqs]),
        "linear_recurrence": lambda c, i: S.seq_from_linear_recurrence(
            lst(c, "linear_recurrence"), lst(i, "linear_recurrence"), field
        ),
        "constant": lambda c: S.seq_constant(_field_value(c, field), field),
        "somos": lambda k, init: S.seq_somos(iq(k, "somos"), lst(init, "somos")),
        "eds": lambda *w: S.seq_eds(*[_field_value(x, field) for x in w]),
        "power_tower": lambda lam, d: S.seq_lambda_power_tower(_field_value(lam, field), iq(d, "power_tower")),
        "poly_exponent": lambda lam, P: S.seq_lambda_poly_exponent(_field_value(lam, field), poly_arg(P)),
    }


def parse_combinator(text, field=QQ):
    """Evaluate a prefix-syntax combinator expression to a DynSeq.

    ``catalog:NAME`` refers to a catalog system; numbers are integers or
    fractions; quoted strings are constants over ``field``; ``[...]`` is a list.
    """
    toks = _ctokenize(text)
    pos = [0]

    def peek():
        return toks[pos[0]]

    def take():
        t = toks[pos[0]]
        pos[0] += 1
        return t

    def expect(ch):
        t = take()
        if t[1] != ch:
            raise ParseError(f"unexpected {t[1]!r}", t[2], repr(ch), text)

    def value():
        kind, tok, at = take()
        if kind == 1:
            return catalog_system(tok.split(":", 1)[1])
        if kind == 3:
            return mpq(tok)
        if kind == 4:
            return tok[1:-1]
        if kind == 5 and tok == "[":
            items = []
            if peek()[1] != "]":
                items.append(value())
                while peek()[1] == ",":
                    take()
                    items.append(value())
            expect("]")
            return items
        if kind == 2:
            ops = _ops(field)
            if tok not in ops:
                raise ParseError(f"unknown combinator {tok!r}", at, "one of " + ", ".join(sorted(ops)), text)
            expect("(")
            args = []
            if peek()[1] != ")":
                args.append(value())
                while peek()[1] == ",":
                    take()
                    args.append(value())
            expect(")")
            try:
                return ops[tok](*args)
            except TypeError as exc:
                raise DocumentError(f"bad arguments to {tok}: {exc}") from None
        raise ParseError(f"unexpected {tok!r}" if tok else "unexpected end of input", at, "a value", text)

    out = value()
    if peek()[0] != 0:
        t = peek()
        raise ParseError(f"trailing input {t[1]!r}", t[2], "end of input", text)
    if not isinstance(out, S.DynSeq):
        raise DocumentError("expression does not denote a sequence")
    return out


# ---------------------------------------------------------------------------
# catalog
# ---------------------------------------------------------------------------

_Q5 = {"kind": "algebraic", "generator": "r", "minpoly": "s^2 - 5"}
_QT = {"kind": "function_field", "variable": "t"}

CATALOG_SYSTEMS = {
    "factorial": {
        "description": "n! from (x, y) -> (x + 1, x*y) at (1, 1)",
        "variables": ["x", "y"],
        "map": ["x + 1", "x*y"],
        "point": ["1", "1"],
        "observable": "y",
    },
    "triangular": {
        "description": "1 + 2 + ... + n by accumulation",
        "variables": ["x", "y"],
        "map": ["x + 1", "y + x"],
        "point": ["1", "0"],
        "observable": "y",
    },
    "triangular-closed": {
        "description": "n(n+1)/2 from the translation z -> z + 1",
        "variables": ["z"],
        "map": ["z + 1"],
        "point": ["0"],
        "observable": "z*(z + 1)/2",
    },
    "A058635": {
        "description": "F(2^(n+1)) from (x, y) -> (x*y, y^2 - 2) at (1, 3)",
        "field": _Q5,
        "variables": ["x", "y"],
        "map": ["x*y", "y^2 - 2"],
        "point": ["1", "3"],
        "observable": "x",
        "order": "lex",
    },
    "A058635-binet": {
        "description": "(rho^(2^(n+1)) - rho^(-2^(n+1)))/sqrt(5) with t standing for 1/z",
        "field": _Q5,
        "variables": ["z", "t"],
        "map": ["z^2", "t^2"],
        "point": ["(3 + r)/2", "(3 - r)/2"],
        "observable": "(z - t)/r",
        "relations": ["z*t - 1"],
        "order": "lex",
    },
    "A000178": {
        "description": "superfactorials from (x, y, z) -> (x + 1, x*y, x*y*z)",
        "variables": ["x", "y", "z"],
        "map": ["x + 1", "x*y", "x*y*z"],
        "point": ["1", "1", "1"],
        "observable": "z",
    },
    "A000178-somos": {
        "description": "superfactorials from the Somos-form recurrence, state (b(n-1), b(n), b(n+1))",
        "variables": ["x", "y", "z"],
        "map": ["y", "z", "(x*z^3 + y^2*z^2)/y^3"],
        "point": ["1", "1", "1"],
        "observable": "y",
    },
    "A006769": {
        "description": "elliptic divisibility sequence, four-term recurrence",
        "variables": ["x", "y", "z", "w"],
        "map": ["y", "z", "w", "(w*y + z^2)/x"],
        "point": ["1", "1", "-1", "1"],
        "observable": "x",
        "prefix": ["0"],
    },
    "A006769-order5": {
        "description": "elliptic divisibility sequence, five-term recurrence",
        "variables": ["x", "y", "z", "w", "t"],
        "map": ["y", "z", "w", "t", "-(t*y + z*w)/x"],
        "point": ["1", "1", "-1", "1", "2"],
        "observable": "x",
        "prefix": ["0"],
    },
    "A006720": {
        "description": "Somos-4",
        "variables": ["x", "y", "z", "w"],
        "map": ["y", "z", "w", "(w*y + z^2)/x"],
        "point": ["1", "1", "1", "1"],
        "observable": "x",
    },
    "A006720-eds-sign": {
        "description": "(-1)^n a(2n+1) for the elliptic divisibility sequence a",
        "variables": ["x", "y", "z", "w", "t"],
        "map": ["z", "w", "(w*y + z^2)/x", "((z/x)*(w*y + z^2) + w^2)/y", "-t"],
        "point": ["1", "1", "-1", "1", "1"],
        "observable": "x*t",
    },
    "dyadic-product": {
        "description": "(1 + t)(1 + t^2)...(1 + t^(2^(n-1))) over Q(t)",
        "field": _QT,
        "variables": ["x", "y"],
        "map": ["x^2", "(x + 1)*y"],
        "point": ["t", "1"],
        "observable": "y",
    },
    "dyadic-quotient": {
        "description": "(t^(2^n) - 1)/(t - 1) over Q(t)",
        "field": _QT,
        "variables": ["z"],
        "map": ["z^2"],
        "point": ["t"],
        "observable": "(z - 1)/(t - 1)",
    },
}

CATALOG_IDENTITIES = {
    "triangular": {
        "description": "1 + ... + n = n(n+1)/2",
        "lhs": "catalog:triangular",
        "rhs": "catalog:triangular-closed",
        "options": {"order": "lex"},
    },
    "fib-power-of-two": {
        "description": "x-coordinate of (x, y) -> (x*y, y^2 - 2) equals F(2^(n+1))",
        "lhs": "catalog:A058635",
        "rhs": "catalog:A058635-binet",
        "options": {"order": "lex"},
    },
    "superfactorial-somos": {
        "description": "partial products of n! satisfy the Somos-form recurrence",
        "lhs": "partial_products(catalog:factorial)",
        "rhs": "catalog:A000178-somos",
        "options": {"order": "degrevlex"},
    },
    "eds-two-recurrences": {
        "description": "the four- and five-term recurrences give the same sequence",
        "lhs": "catalog:A006769",
        "rhs": "catalog:A006769-order5",
        "options": {"order": "degrevlex"},
    },
    "somos4-eds-sign": {
        "description": "b(n+2) = (-1)^n a(2n+1) for Somos-4 b and the sequence a above",
        "lhs": "shift(catalog:A006720, 2)",
        "rhs": "catalog:A006720-eds-sign",
        "options": {"order": "degrevlex"},
    },
    "dyadic-product": {
        "description": "(1 + t)...(1 + t^(2^(n-1))) = (t^(2^n) - 1)/(t - 1)",
        "lhs": "catalog:dyadic-product",
        "rhs": "catalog:dyadic-quotient",
        "options": {"order": "degrevlex"},
    },
}

# short aliases used on the command line
_SYSTEM_ALIASES = {"product-identity": "dyadic-product"}


def catalog_system(name):
    name = _SYSTEM_ALIASES.get(name, name)
    if name not in CATALOG_SYSTEMS:
        raise DocumentError(f"no catalog system {name!r}; known: {', '.join(sorted(CATALOG_SYSTEMS))}")
    return system_from_document(CATALOG_SYSTEMS[name])


def catalog_identity(name):
    if name not in CATALOG_IDENTITIES:
        raise DocumentError(f"no catalog identity {name!r}; known: {', '.join(sorted(CATALOG_IDENTITIES))}")
    return identity_from_document(CATALOG_IDENTITIES[name])


def _side(side, field=None):
    if isinstance(side, dict):
        return system_from_document(side)
    if isinstance(side, str):
        text = side.strip()
        if re.fullmatch(r"catalog:[A-Za-z0-9_\-]+", text):
            return catalog_system(text.split(":", 1)[1])
        return parse_combinator(text, field or QQ)
    raise DocumentError(f"cannot interpret identity side {side!r}")


def identity_from_document(doc):
    """Return ``(lhs, rhs, options_dict)``."""
    if "lhs" not in doc or "rhs" not in doc:
        raise DocumentError("identity document needs 'lhs' and 'rhs'")
    field = field_from_description(doc["field"]) if "field" in doc else None
    lhs = _side(doc["lhs"], field)
    rhs = _side(doc["rhs"], field or lhs.field)
    opts = dict(doc.get("options", {}))
    unknown = set(opts) - {"order", "max_steps", "extra_check_terms", "compare_bases"}
    if unknown:
        raise DocumentError(f"unknown options {sorted(unknown)}")
    return lhs, rhs, opts


def _read_json(path):
    try:
        return json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise DocumentError(f"{path}: invalid JSON ({exc})") from None


def load_system(ref):
    """``catalog:NAME``, a JSON file path, or a combinator expression."""
    if ref.startswith("catalog:"):
        return catalog_system(ref.split(":", 1)[1])
    p = Path(ref)
    if p.suffix == ".json" or p.exists():
        doc = _read_json(p)
        if "lhs" in doc:
            raise DocumentError(f"{ref} is an identity document, not a system")
        return system_from_document(doc)
    return parse_combinator(ref)


def load_identity(ref):
    """``catalog:NAME`` or a JSON identity file; returns ``(lhs, rhs, options)``."""
    if ref.startswith("catalog:"):
        return catalog_identity(ref.split(":", 1)[1])
    return identity_from_document(_read_json(ref))
