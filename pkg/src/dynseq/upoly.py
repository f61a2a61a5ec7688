"""Dense univariate polynomials over Q.

A polynomial is a tuple of ``mpq`` coefficients, lowest degree first, with
no trailing zeros; the zero polynomial is the empty tuple.
"""
from gmpy2 import mpq

ZERO = ()
ONE = (mpq(1),)


def strip(coeffs):
    coeffs = list(coeffs)
    while coeffs and not coeffs[-1]:
        coeffs.pop()
    return tuple(mpq(c) for c in coeffs)


def degree(p):
    return len(p) - 1


def add(p, q):
    if len(p) < len(q):
        p, q = q, p
    out = list(p)
    for i, c in enumerate(q):
        out[i] += c
    return strip(out)


def neg(p):
    return tuple(-c for c in p)


def sub(p, q):
    return add(p, neg(q))


def scale(p, c):
    if not c:
        return ZERO
    return tuple(a * c for a in p)


def mul(p, q):
    if not p or not q:
        return ZERO
    out = [mpq(0)] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return strip(out)


def divmod_(p, q):
    if not q:
        raise ZeroDivisionError("polynomial division by zero")
    r = list(p)
    dq = len(q) - 1
    lc = q[-1]
    if len(r) <= dq:
        return ZERO, strip(r)
    quo = [mpq(0)] * (len(r) - dq)
    for k in range(len(r) - 1, dq - 1, -1):
        c = r[k]
        if not c:
            continue
        c = c / lc
        quo[k - dq] = c
        for j in range(dq + 1):
            r[k - dq + j] -= c * q[j]
    return strip(quo), strip(r[:dq])


def monic(p):
    if not p:
        return p
    lc = p[-1]
    if lc == 1:
        return p
    return tuple(c / lc for c in p)


def gcd(p, q):
    while q:
        p, q = q, divmod_(p, q)[1]
    return monic(p)


def xgcd(p, q):
    """Return ``(g, s, t)`` with ``s*p + t*q == g`` and ``g`` monic."""
    r0, r1 = p, q
    s0, s1 = ONE, ZERO
    t0, t1 = ZERO, ONE
    while r1:
        quo, rem = divmod_(r0, r1)
        r0, r1 = r1, rem
        s0, s1 = s1, sub(s0, mul(quo, s1))
        t0, t1 = t1, sub(t0, mul(quo, t1))
    if not r0:
        return ZERO, ZERO, ZERO
    lc = r0[-1]
    inv = 1 / lc
    return scale(r0, inv), scale(s0, inv), scale(t0, inv)


def derivative(p):
    return strip([i * c for i, c in enumerate(p)][1:])


def evaluate(p, x):
    acc = 0
    for c in reversed(p):
        acc = acc * x + c
    return acc


def to_str(p, var="t"):
    if not p:
        return "0"
    parts = []
    for i in range(len(p) - 1, -1, -1):
        c = p[i]
        if not c:
            continue
        if i == 0:
            mono = ""
        elif i == 1:
            mono = var
        else:
            mono = f"{var}^{i}"
        if mono and c == 1:
            body = mono
            sign = "+"
        elif mono and c == -1:
            body = mono
            sign = "-"
        else:
            sign = "-" if c < 0 else "+"
            mag = -c if c < 0 else c
            body = _qstr(mag) + ("*" + mono if mono else "")
        parts.append((sign, body))
    first_sign, first = parts[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


def _qstr(q):
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"
