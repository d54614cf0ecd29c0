"""Sparse exact polynomial ring Q[p1, p2, ..., q1, q2, ...].

The ring carries two gradings: the *weight* of a monomial (p_n and q_n
both count n) and the *s-degree* (p_n counts n-1, q_n counts n).  There
is no q0 variable: formulas that would produce it substitute the genus
scalar instead, so the ring itself is genus independent.

A monomial is encoded as a tuple of ``(index, kind, exponent)`` triples
with ``kind`` one of ``'p'``/``'q'``, sorted in descending variable
order.  With variables ordered p1 < q1 < p2 < q2 < ..., plain tuple
comparison of two monomials is then exactly the canonical term order
used everywhere in the package (exponent vectors compared
lexicographically, highest variable first).  The empty tuple is the
monomial 1.
"""

from fractions import Fraction
from functools import lru_cache

MONOMIAL_ORDER_ID = "plex-interleaved-v1"

MONO_ONE = ()

P_KIND = "p"
Q_KIND = "q"


def norm_coeff(c):
    """Collapse integral Fractions to plain int (keeps arithmetic on the
    fast integer path whenever denominators are 1)."""
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


def qdiv(a, b):
    """Exact division of two rationals; never falls into float division."""
    if isinstance(a, int) and isinstance(b, int):
        return norm_coeff(Fraction(a, b))
    return norm_coeff(a / b)


def coeff_str(c):
    """Canonical text for a rational coefficient: "a" or "a/b"."""
    return str(c)


def variable(kind, index):
    """A variable as an ``(index, kind)`` pair; index must be >= 1."""
    if kind not in (P_KIND, Q_KIND):
        raise ValueError("variable kind must be 'p' or 'q', got %r" % (kind,))
    if index < 1:
        raise ValueError("variable index must be >= 1, got %r" % (index,))
    return (index, kind)


def var_name(var):
    index, kind = var
    return "%s%d" % (kind, index)


def var_from_name(name):
    kind, index = name[0], name[1:]
    return variable(kind, int(index))


def mono_from_exponents(pairs):
    """Build a monomial from ``(var, exponent)`` pairs; repeated
    variables accumulate."""
    acc = {}
    for (index, kind), e in pairs:
        if e < 0:
            raise ValueError("negative exponent in monomial")
        if e:
            acc[(index, kind)] = acc.get((index, kind), 0) + e
    entries = sorted(((i, k, e) for (i, k), e in acc.items()), reverse=True)
    return tuple(entries)


def mono_mul(a, b):
    """Merge two sorted monomials (exponents add)."""
    if not a:
        return b
    if not b:
        return a
    out = []
    i = j = 0
    na, nb = len(a), len(b)
    while i < na and j < nb:
        ia, ka, ea = a[i]
        ib, kb, eb = b[j]
        if (ia, ka) == (ib, kb):
            out.append((ia, ka, ea + eb))
            i += 1
            j += 1
        elif (ia, ka) > (ib, kb):
            out.append(a[i])
            i += 1
        else:
            out.append(b[j])
            j += 1
    out.extend(a[i:])
    out.extend(b[j:])
    return tuple(out)


def mono_weight(m):
    return sum(i * e for i, _k, e in m)


def mono_sdeg(m):
    return sum((i - 1) * e if k == P_KIND else i * e for i, k, e in m)


def mono_pdeg(m):
    return sum(e for _i, k, e in m if k == P_KIND)


def mono_qdeg(m):
    return sum(e for _i, k, e in m if k == Q_KIND)


def mono_diff(m, parts):
    """Differentiate monomial ``m`` by the multiset ``parts`` (itself a
    monomial).  Returns ``(integer factor, reduced monomial)`` or None
    when some variable of ``parts`` is missing from ``m``."""
    if not parts:
        return 1, m
    have = dict(((i, k), e) for i, k, e in m)
    factor = 1
    for i, k, e in parts:
        cur = have.get((i, k), 0)
        if cur < e:
            return None
        for _ in range(e):
            factor *= cur
            cur -= 1
        if cur:
            have[(i, k)] = cur
        else:
            del have[(i, k)]
    out = sorted(((i, k, e) for (i, k), e in have.items()), reverse=True)
    return factor, tuple(out)


def mono_str(m):
    """Text form with p-factors first, each kind by ascending index,
    e.g. "p1^2*q3" (display order only; term order is unaffected)."""
    if not m:
        return "1"
    return "*".join(
        "%s%d" % (k, i) if e == 1 else "%s%d^%d" % (k, i, e)
        for i, k, e in sorted(m, key=lambda t: (t[1], t[0]))
    )


def mono_from_str(text):
    """Inverse of :func:`mono_str` for well-formed factors like "p1^2*q3"."""
    if text == "1":
        return MONO_ONE
    pairs = []
    for chunk in text.split("*"):
        if "^" in chunk:
            name, _, exp = chunk.partition("^")
            pairs.append((var_from_name(name), int(exp)))
        else:
            pairs.append((var_from_name(chunk), 1))
    return mono_from_exponents(pairs)


@lru_cache(maxsize=None)
def enumerate_monomials(w):
    """All monomials of weight exactly ``w``, canonically ordered with
    the largest monomial first.  Deterministic and cached."""
    if w < 0:
        raise ValueError("weight must be >= 0")

    def gen(var_list, remaining):
        if remaining == 0:
            yield ()
            return
        if not var_list:
            return
        (index, kind), rest = var_list[0], var_list[1:]
        for e in range(remaining // index, -1, -1):
            head = ((index, kind, e),) if e else ()
            for tail in gen(rest, remaining - index * e):
                yield head + tail

    variables = []
    for index in range(w, 0, -1):
        variables.append((index, Q_KIND))
        variables.append((index, P_KIND))
    return tuple(gen(variables, w))


class Poly:
    """Immutable sparse polynomial: a map from monomials to nonzero
    exact rational coefficients (int or Fraction)."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean = {}
        if terms:
            for m, c in terms.items():
                c = norm_coeff(c)
                if c:
                    clean[m] = c
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def one(cls):
        return cls({MONO_ONE: 1})

    @classmethod
    def constant(cls, c):
        return cls({MONO_ONE: c})

    @classmethod
    def monomial(cls, m, c=1):
        return cls({m: c})

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self.terms == Poly.constant(other).terms
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Poly.constant(other)
        if not isinstance(other, Poly):
            return NotImplemented
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, 0) + c
        return Poly(out)

    __radd__ = __add__

    def __neg__(self):
        return Poly({m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Poly.constant(other)
        if not isinstance(other, Poly):
            return NotImplemented
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, 0) - c
        return Poly(out)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return Poly.zero()
            return Poly({m: c * other for m, c in self.terms.items()})
        if not isinstance(other, Poly):
            return NotImplemented
        out = {}
        for ma, ca in self.terms.items():
            for mb, cb in other.terms.items():
                m = mono_mul(ma, mb)
                out[m] = out.get(m, 0) + ca * cb
        return Poly(out)

    __rmul__ = __mul__

    def __truediv__(self, scalar):
        if not isinstance(scalar, (int, Fraction)):
            return NotImplemented
        return Poly({m: qdiv(c, scalar) for m, c in self.terms.items()})

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a nonnegative integer")
        out = Poly.one()
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def partial(self, var):
        """Formal partial derivative with respect to one variable."""
        index, kind = var
        out = {}
        for m, c in self.terms.items():
            for pos, (i, k, e) in enumerate(m):
                if (i, k) == (index, kind):
                    rest = m[:pos] + (((i, k, e - 1),) if e > 1 else ()) + m[pos + 1:]
                    out[rest] = out.get(rest, 0) + c * e
                    break
        return Poly(out)

    def max_weight(self):
        """Largest monomial weight present (0 for the zero polynomial)."""
        return max((mono_weight(m) for m in self.terms), default=0)

    def graded(self):
        """Split into bigraded components: a map (weight, sdeg) -> Poly."""
        buckets = {}
        for m, c in self.terms.items():
            key = (mono_weight(m), mono_sdeg(m))
            buckets.setdefault(key, {})[m] = c
        return {key: Poly(t) for key, t in sorted(buckets.items())}

    def weight_components(self):
        """Split by weight alone: a map weight -> Poly."""
        buckets = {}
        for m, c in self.terms.items():
            buckets.setdefault(mono_weight(m), {})[m] = c
        return {w: Poly(t) for w, t in sorted(buckets.items())}

    def sorted_terms(self):
        """Terms as (monomial, coeff) pairs, leading monomial first."""
        return sorted(self.terms.items(), key=lambda mc: mc[0], reverse=True)

    def __str__(self):
        if not self.terms:
            return "0"
        pieces = []
        for m, c in self.sorted_terms():
            neg = c < 0
            mag = -c if neg else c
            if not m:
                body = coeff_str(mag)
            elif mag == 1:
                body = mono_str(m)
            else:
                body = "%s*%s" % (coeff_str(mag), mono_str(m))
            if not pieces:
                pieces.append("-" + body if neg else body)
            else:
                pieces.append((" - " if neg else " + ") + body)
        return "".join(pieces)

    def __repr__(self):
        return "Poly(%s)" % self


def p(n):
    """The generator p_n as a polynomial."""
    if n < 1:
        raise ValueError("p indices start at 1")
    return Poly.monomial(((n, P_KIND, 1),))


def q(n):
    """The generator q_n as a polynomial (q0 is not a variable)."""
    if n == 0:
        raise ValueError("q0 is not a variable; substitute the genus scalar")
    if n < 0:
        raise ValueError("q indices start at 1")
    return Poly.monomial(((n, Q_KIND, 1),))
