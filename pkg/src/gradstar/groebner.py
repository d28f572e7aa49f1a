"""Sparse multivariate polynomial arithmetic and Groebner bases.

Polynomials are dicts mapping exponent tuples to nonzero coefficients
(Fraction over the rationals, int over the integers). Over a field the
engine computes the unique reduced basis; over the integers it computes a
reduced strong basis (leading terms of ideal members are divisible, monomial
and coefficient alike, by some basis leading term).
"""

from __future__ import annotations

from fractions import Fraction
from heapq import heappush, heappop
from math import gcd
from typing import NamedTuple


# ---------- monomial orders ----------

def grevlex_key(m):
    return (sum(m), tuple(-e for e in reversed(m)))


def lex_key(m):
    return m


def elim_key(nelim):
    """Block order eliminating the first nelim variables."""

    def key(m):
        head, tail = m[:nelim], m[nelim:]
        return (sum(head), tuple(-e for e in reversed(head)),
                sum(tail), tuple(-e for e in reversed(tail)))

    return key


ORDERS = {"degrevlex": grevlex_key, "lex": lex_key}


# ---------- monomial helpers ----------

def mono_mul(a, b):
    return tuple(x + y for x, y in zip(a, b))


def mono_div(a, b):
    return tuple(x - y for x, y in zip(a, b))


def mono_lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


def mono_divides(a, b):
    return all(x <= y for x, y in zip(a, b))


# ---------- polynomial helpers ----------

def poly_add_into(acc, p, factor=1, shift=None):
    for m, c in p.items():
        key = mono_mul(m, shift) if shift is not None else m
        v = acc.get(key, 0) + factor * c
        if v:
            acc[key] = v
        else:
            acc.pop(key, None)


def poly_mul(p, q):
    acc = {}
    for m1, c1 in p.items():
        for m2, c2 in q.items():
            key = mono_mul(m1, m2)
            v = acc.get(key, 0) + c1 * c2
            if v:
                acc[key] = v
            else:
                acc.pop(key, None)
    return acc


def poly_scale(p, c):
    if not c:
        return {}
    return {m: a * c for m, a in p.items()}


def leading(p, key):
    m = max(p, key=key)
    return m, p[m]


def to_field(p):
    return {m: Fraction(c) for m, c in p.items()}


def content_int(p):
    g = 0
    for c in p.values():
        g = gcd(g, abs(c))
    return g


def freeze(p):
    return tuple(sorted(p.items()))


def thaw(items):
    return dict(items)


# ---------- normal forms ----------

def normal_form_field(p, basis, key):
    """Full normal form against [(lm, lc, poly), ...] over a field."""
    work = dict(p)
    rem = {}
    while work:
        m = max(work, key=key)
        c = work.pop(m)
        for lm, lc, g in basis:
            if mono_divides(lm, m):
                shift = mono_div(m, lm)
                coef = -(c / lc)
                for gm, gc in g.items():
                    if gm == lm:
                        continue
                    kk = mono_mul(gm, shift)
                    v = work.get(kk, 0) + coef * gc
                    if v:
                        work[kk] = v
                    else:
                        work.pop(kk, None)
                break
        else:
            rem[m] = c
    return rem


def normal_form_euclid(p, basis, key):
    """Full normal form over Z; basis leading coefficients are positive."""
    work = dict(p)
    rem = {}
    while work:
        m = max(work, key=key)
        c = work.pop(m)
        changed = True
        while c and changed:
            changed = False
            for lm, lc, g in basis:
                if c and mono_divides(lm, m):
                    q = c // lc
                    if q:
                        c -= q * lc
                        shift = mono_div(m, lm)
                        for gm, gc in g.items():
                            if gm == lm:
                                continue
                            kk = mono_mul(gm, shift)
                            v = work.get(kk, 0) - q * gc
                            if v:
                                work[kk] = v
                            else:
                                work.pop(kk, None)
                        changed = True
        if c:
            rem[m] = c
    return rem


# ---------- Buchberger over a field ----------

def _prep(basis, key):
    out = []
    for g in basis:
        lm, lc = leading(g, key)
        out.append((lm, lc, g))
    return out


class GBResult(NamedTuple):
    basis: tuple        # tuple of frozen polynomials
    order: str
    pairs: int          # critical pairs examined
    reductions: int     # nonzero reductions adjoined


def groebner_field(gens, key, order_name="degrevlex"):
    G = []
    for f in sorted((to_field(g) for g in gens if g), key=lambda p: sorted(p)):
        r = normal_form_field(f, _prep(G, key), key)
        if r:
            lc = leading(r, key)[1]
            G.append({m: c / lc for m, c in r.items()})
    pairs_done = 0
    added = 0
    heap = []
    tick = 0
    lms = [leading(g, key)[0] for g in G]
    for i in range(len(G)):
        for j in range(i + 1, len(G)):
            L = mono_lcm(lms[i], lms[j])
            heappush(heap, (key(L), tick, i, j))
            tick += 1
    while heap:
        _, _, i, j = heappop(heap)
        pairs_done += 1
        fi, fj = G[i], G[j]
        u, v = lms[i], lms[j]
        L = mono_lcm(u, v)
        if all(a + b == c for a, b, c in zip(u, v, L)):
            continue  # coprime leading monomials
        s = {}
        poly_add_into(s, fi, 1, mono_div(L, u))
        poly_add_into(s, fj, -1, mono_div(L, v))
        r = normal_form_field(s, _prep(G, key), key)
        if r:
            lc = leading(r, key)[1]
            h = {m: c / lc for m, c in r.items()}
            G.append(h)
            lms.append(leading(h, key)[0])
            added += 1
            n = len(G) - 1
            for i2 in range(n):
                L = mono_lcm(lms[i2], lms[n])
                heappush(heap, (key(L), tick, i2, n))
                tick += 1
    G = _reduce_field(G, key)
    return GBResult(tuple(freeze(g) for g in G), order_name, pairs_done, added)


def _reduce_field(G, key):
    # minimalize: drop any lm divisible by another (ties keep the first)
    lms = [leading(g, key)[0] for g in G]
    keep = []
    for i, lm in enumerate(lms):
        dominated = False
        for j, lm2 in enumerate(lms):
            if j == i:
                continue
            if mono_divides(lm2, lm) and (lm2 != lm or j < i):
                dominated = True
                break
        if not dominated:
            keep.append(i)
    G = [G[i] for i in keep]
    # tail-reduce to the unique reduced basis
    out = []
    for i, g in enumerate(G):
        others = _prep([h for j, h in enumerate(G) if j != i], key)
        r = normal_form_field(g, others, key)
        lc = leading(r, key)[1]
        out.append({m: c / lc for m, c in r.items()})
    out.sort(key=lambda p: key(leading(p, key)[0]))
    return out


# ---------- strong Groebner bases over the integers ----------

def _xgcd(a, b):
    prevx, x = 1, 0
    prevy, y = 0, 1
    while b:
        q, r = divmod(a, b)
        x, prevx = prevx - q * x, x
        y, prevy = prevy - q * y, y
        a, b = b, r
    return a, prevx, prevy


def _pos(p, key):
    if leading(p, key)[1] < 0:
        return {m: -c for m, c in p.items()}
    return p


def groebner_euclid(gens, key, order_name="degrevlex"):
    G = []
    for f in sorted((dict(g) for g in gens if g), key=lambda p: sorted(p)):
        r = normal_form_euclid(f, _prep(G, key), key)
        if r:
            G.append(_pos(r, key))
    pairs_done = 0
    added = 0
    queue = []
    tick = 0

    def push_pairs(n):
        nonlocal tick
        for i in range(n):
            u, a = leading(G[i], key)
            v, b = leading(G[n], key)
            L = mono_lcm(u, v)
            heappush(queue, (key(L), tick, i, n, "s"))
            tick += 1
            d = gcd(a, b)
            if d != a and d != b:
                heappush(queue, (key(L), tick, i, n, "g"))
                tick += 1

    for n in range(len(G)):
        push_pairs(n)
    while queue:
        _, _, i, j, kind = heappop(queue)
        pairs_done += 1
        fi, fj = G[i], G[j]
        u, a = leading(fi, key)
        v, b = leading(fj, key)
        L = mono_lcm(u, v)
        s = {}
        if kind == "s":
            l = a * b // gcd(a, b)
            poly_add_into(s, fi, l // a, mono_div(L, u))
            poly_add_into(s, fj, -(l // b), mono_div(L, v))
        else:
            _, sa, tb = _xgcd(a, b)
            poly_add_into(s, fi, sa, mono_div(L, u))
            poly_add_into(s, fj, tb, mono_div(L, v))
        r = normal_form_euclid(s, _prep(G, key), key)
        if r:
            G.append(_pos(r, key))
            added += 1
            push_pairs(len(G) - 1)
    G = _reduce_euclid(G, key)
    return GBResult(tuple(freeze(g) for g in G), order_name, pairs_done, added)


def _reduce_euclid(G, key):
    changed = True
    while changed:
        changed = False
        # minimal: drop leading terms divisible (monomial and coefficient)
        lts = [leading(g, key) for g in G]
        keep = []
        for i, (lm, lc) in enumerate(lts):
            dominated = False
            for j, (lm2, lc2) in enumerate(lts):
                if j == i:
                    continue
                if mono_divides(lm2, lm) and lc % lc2 == 0 and (
                        (lm2, lc2) != (lm, lc) or j < i):
                    dominated = True
                    break
            if not dominated:
                keep.append(i)
        if len(keep) != len(G):
            changed = True
        G = [G[i] for i in keep]
        out = []
        for i, g in enumerate(G):
            others = _prep([h for j, h in enumerate(G) if j != i], key)
            r = normal_form_euclid(g, others, key)
            if not r:
                changed = True
                continue
            r = _pos(r, key)
            if r != g:
                changed = True
            out.append(r)
        G = out
    G.sort(key=lambda p: key(leading(p, key)[0]))
    return G


# ---------- entry points ----------

def groebner(gens, base, key=grevlex_key, order_name="degrevlex"):
    """Reduced (strong, over Z) Groebner basis of the given generators."""
    if base == "Q":
        return groebner_field(gens, key, order_name)
    return groebner_euclid(gens, key, order_name)


def nf(p, gb, base, key=grevlex_key):
    """Normal form of p against a GBResult or a list of polynomials."""
    basis = gb.basis if isinstance(gb, GBResult) else gb
    polys = [thaw(g) if isinstance(g, tuple) else g for g in basis]
    prepped = _prep(polys, key)
    if base == "Q":
        return normal_form_field(to_field(p), prepped, key)
    return normal_form_euclid(dict(p), prepped, key)


def member(p, gb, base, key=grevlex_key):
    return not nf(p, gb, base, key)


# ---------- derived ideal operations (tag-variable tricks) ----------

def _prepend_var(p, extra=1, power=0):
    return {(power,) * extra + m if extra == 1 else (power,) + m: c
            for m, c in p.items()}


def _add_var(p, power=0):
    return {(power,) + m: c for m, c in p.items()}


def _strip_var(p):
    return {m[1:]: c for m, c in p.items()}


def _one(nvars):
    return {(0,) * nvars: 1}


def intersect(A, B, base, nvars):
    """Generators of (A) ∩ (B) via w·A + (1−w)·B and elimination of w."""
    gens = []
    for a in A:
        gens.append(_add_var(a, 1))
    for b in B:
        g = _add_var(b, 0)
        poly_add_into(g, _add_var(b, 1), -1)
        gens.append(g)
    key = elim_key(1)
    res = groebner(gens, base, key, "elim1")
    out = []
    for fg in res.basis:
        g = thaw(fg)
        if all(m[0] == 0 for m in g):
            out.append(_strip_var(g))
    return out


def saturate(A, f, base, nvars):
    """Generators of (A) : f^∞ via the Rabinowitsch trick."""
    gens = [_add_var(a, 0) for a in A]
    g = _one(nvars + 1)
    poly_add_into(g, _add_var(f, 1), -1)
    gens.append(g)
    key = elim_key(1)
    res = groebner(gens, base, key, "elim1")
    out = []
    for fg in res.basis:
        h = thaw(fg)
        if all(m[0] == 0 for m in h):
            out.append(_strip_var(h))
    return out


def exact_div(p, b, base, key=grevlex_key):
    """Exact quotient p / b in the polynomial ring, or None."""
    if not p:
        return {}
    if not b:
        return None
    lmb, lcb = leading(b, key)
    q = {}
    r = dict(p)
    while r:
        m, c = leading(r, key)
        if not mono_divides(lmb, m):
            return None
        if base == "Q":
            coef = Fraction(c) / lcb
        else:
            if c % lcb:
                return None
            coef = c // lcb
        shift = mono_div(m, lmb)
        q[shift] = coef
        poly_add_into(r, b, -coef, shift)
    return q


def colon_single(A, b, base, nvars):
    """Generators of (A) : (b) for a single nonzero b."""
    inter = intersect(A, [b], base, nvars)
    out = []
    for g in inter:
        qt = exact_div(g, b, base)
        if qt is None:
            raise AssertionError("intersection element not divisible by b")
        if qt:
            out.append(qt)
    return out
