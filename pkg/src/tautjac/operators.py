"""Normal-ordered differential operators with polynomial coefficients.

An operator is a finite sum of terms ``coeff * multiplier * d(...)``:
the term acts on a polynomial f as coeff * multiplier * (product of
partial derivatives applied to f).  Both the multiplier and the
multiset of partials are stored as monomials of :mod:`tautjac.poly`.

Operators carry a validity *window* W: every term of the (possibly
infinite) ideal operator whose partial multiset has index-sum <= W is
present, which makes application to any polynomial of weight <= W
exact.  ``window=None`` marks an operator that is stored in full
(multiplication operators, finite hand-built operators), valid at every
weight.  Composition propagates windows so validity is never
overstated, and discards product terms that fall outside the resulting
window.
"""

from itertools import product as cartesian_product

from .errors import WindowExceeded
from .poly import (
    MONO_ONE,
    Poly,
    coeff_str,
    mono_diff,
    mono_mul,
    mono_str,
    mono_weight,
    norm_coeff,
)


def _min_window(*windows):
    finite = [w for w in windows if w is not None]
    return min(finite) if finite else None


def term_weight_shift(key):
    """Weight shift of a single (multiplier, partials) term."""
    mult, parts = key
    return mono_weight(mult) - mono_weight(parts)


class Operator:
    """Canonical normal-ordered operator: dict (multiplier, partials) ->
    nonzero coefficient, plus a validity window."""

    __slots__ = ("terms", "window")

    def __init__(self, terms=None, window=None):
        clean = {}
        if terms:
            for key, c in terms.items():
                c = norm_coeff(c)
                if c:
                    clean[key] = c
        object.__setattr__(self, "terms", clean)
        object.__setattr__(self, "window", window)

    def __setattr__(self, name, value):
        raise AttributeError("Operator is immutable")

    @classmethod
    def zero(cls, window=None):
        return cls({}, window)

    @classmethod
    def identity(cls, window=None):
        return cls({(MONO_ONE, MONO_ONE): 1}, window)

    @classmethod
    def multiplication(cls, f, window=None):
        """Multiplication by a polynomial; exact at every weight."""
        if not isinstance(f, Poly):
            f = Poly.constant(f)
        return cls({(m, MONO_ONE): c for m, c in f.terms.items()}, window)

    @classmethod
    def derivative(cls, *var_names, window=None):
        """Pure partial-derivative operator, e.g. derivative("p1", "p1")."""
        from .poly import var_from_name

        parts = MONO_ONE
        for name in var_names:
            index, kind = var_from_name(name)
            parts = mono_mul(parts, ((index, kind, 1),))
        return cls({(MONO_ONE, parts): 1}, window)

    @classmethod
    def single(cls, coeff, multiplier=MONO_ONE, partials=MONO_ONE, window=None):
        return cls({(multiplier, partials): coeff}, window)

    def is_zero(self):
        return not self.terms

    def __eq__(self, other):
        if not isinstance(other, Operator):
            return NotImplemented
        return self.terms == other.terms and self.window == other.window

    def __hash__(self):
        return hash((frozenset(self.terms.items()), self.window))

    def max_weight_shift(self):
        """Largest weight shift over stored terms (None when empty)."""
        return max((term_weight_shift(k) for k in self.terms), default=None)

    def weight_shifts(self):
        return sorted({term_weight_shift(k) for k in self.terms})

    def __add__(self, other):
        if not isinstance(other, Operator):
            return NotImplemented
        out = dict(self.terms)
        for key, c in other.terms.items():
            out[key] = out.get(key, 0) + c
        return Operator(out, _min_window(self.window, other.window))

    def __sub__(self, other):
        if not isinstance(other, Operator):
            return NotImplemented
        out = dict(self.terms)
        for key, c in other.terms.items():
            out[key] = out.get(key, 0) - c
        return Operator(out, _min_window(self.window, other.window))

    def __neg__(self):
        return Operator({k: -c for k, c in self.terms.items()}, self.window)

    def __mul__(self, scalar):
        from fractions import Fraction

        if not isinstance(scalar, (int, Fraction)):
            return NotImplemented
        return Operator({k: c * scalar for k, c in self.terms.items()}, self.window)

    __rmul__ = __mul__

    def apply(self, f):
        """Act on a polynomial.  Exact for weights up to the window."""
        if self.window is not None:
            w = f.max_weight()
            if w > self.window:
                raise WindowExceeded(w, self.window)
        out = {}
        terms = self.terms
        for m, c in f.terms.items():
            for (mult, parts), oc in terms.items():
                d = mono_diff(m, parts)
                if d is None:
                    continue
                factor, reduced = d
                res = mono_mul(mult, reduced)
                out[res] = out.get(res, 0) + c * oc * factor
        return Poly(out)

    def compose(self, other):
        """Normal-ordered product self o other (apply ``other`` first).

        The window W of the result guarantees
        ``(self @ other).apply(f) == self.apply(other.apply(f))``
        for every f of weight <= W.
        """
        sb = other.max_weight_shift()
        win = _min_window(
            other.window,
            None if self.window is None else self.window - (sb or 0),
        )
        out = {}
        get = out.get
        bterms = [
            (bmult, bparts, bc, mono_weight(bparts))
            for (bmult, bparts), bc in other.terms.items()
        ]
        for (amult, aparts), ac in self.terms.items():
            asum = mono_weight(aparts)
            for bmult, bparts, bc, bsum in bterms:
                total = asum + bsum
                if len(bmult) == 1 and aparts:
                    # Fast path: single-variable right multiplier; the left
                    # partials hit it 0..min(ea, eb) times (Leibniz).
                    ib, kb, eb = bmult[0]
                    ea = 0
                    for apos, entry in enumerate(aparts):
                        if entry[0] == ib and entry[1] == kb:
                            ea = entry[2]
                            break
                    if not ea:
                        if win is None or total <= win:
                            key = (mono_mul(amult, bmult), mono_mul(aparts, bparts))
                            out[key] = get(key, 0) + ac * bc
                        continue
                    if win is not None and total - ib * min(ea, eb) > win:
                        continue
                    bfac = 1  # C(ea, j) * falling(eb, j), updated in place
                    for j in range(min(ea, eb) + 1):
                        if j:
                            bfac = bfac * ((ea - j + 1) * (eb - j + 1)) // j
                        if win is not None and total - ib * j > win:
                            continue
                        if ea - j:
                            red_a = aparts[:apos] + ((ib, kb, ea - j),) + aparts[apos + 1:]
                        else:
                            red_a = aparts[:apos] + aparts[apos + 1:]
                        red_b = ((ib, kb, eb - j),) if eb - j else MONO_ONE
                        key = (mono_mul(amult, red_b), mono_mul(red_a, bparts))
                        out[key] = get(key, 0) + ac * bc * bfac
                    continue
                # General path: distribute every shared variable.
                shared = [
                    (i, k, ea, eb)
                    for i, k, ea in aparts
                    for ib, kb, eb in bmult
                    if (i, k) == (ib, kb)
                ]
                if win is not None:
                    max_hit = sum(i * min(ea, eb) for i, _k, ea, eb in shared)
                    if total - max_hit > win:
                        continue
                if not shared:
                    key = (mono_mul(amult, bmult), mono_mul(aparts, bparts))
                    out[key] = get(key, 0) + ac * bc
                    continue
                shared_vars = {(i, k) for i, k, _ea, _eb in shared}
                ranges = [range(min(ea, eb) + 1) for _i, _k, ea, eb in shared]
                for hits in cartesian_product(*ranges):
                    factor = 1
                    hit_weight = 0
                    for (i, _k, ea, eb), j in zip(shared, hits):
                        if not j:
                            continue
                        hit_weight += i * j
                        # C(ea, j) ways to pick the partials, falling
                        # factorial from differentiating the power j times.
                        for t in range(1, j + 1):
                            factor = factor * ((ea - t + 1) * (eb - t + 1)) // t
                    if win is not None and total - hit_weight > win:
                        continue
                    rem_a = [
                        (i, k, ea - j)
                        for (i, k, ea, _eb), j in zip(shared, hits)
                        if ea - j
                    ]
                    rem_a.extend(
                        e for e in aparts if (e[0], e[1]) not in shared_vars
                    )
                    rem_a.sort(reverse=True)
                    red_b = [
                        (i, k, eb - j)
                        for (i, k, _ea, eb), j in zip(shared, hits)
                        if eb - j
                    ]
                    red_b.extend(
                        e for e in bmult if (e[0], e[1]) not in shared_vars
                    )
                    red_b.sort(reverse=True)
                    key = (
                        mono_mul(amult, tuple(red_b)),
                        mono_mul(tuple(rem_a), bparts),
                    )
                    out[key] = get(key, 0) + ac * bc * factor
        return Operator(out, win)

    def __matmul__(self, other):
        return self.compose(other)

    def commutator(self, other):
        return self.compose(other) - other.compose(self)

    def equal_within(self, other, w):
        """Exact term agreement up to partial index-sum w (equivalently,
        agreement of apply on every polynomial of weight <= w)."""
        for win in (self.window, other.window):
            if win is not None and w > win:
                raise WindowExceeded(w, win)
        mine = {k: c for k, c in self.terms.items() if mono_weight(k[1]) <= w}
        theirs = {k: c for k, c in other.terms.items() if mono_weight(k[1]) <= w}
        return mine == theirs

    def truncated(self, w):
        """Drop terms with partial index-sum above w; window becomes w."""
        win = w if self.window is None else min(w, self.window)
        return Operator(
            {k: c for k, c in self.terms.items() if mono_weight(k[1]) <= win},
            win,
        )

    def sorted_terms(self):
        """Terms ordered by partial multiset, then multiplier."""
        return sorted(self.terms.items(), key=lambda kc: (kc[0][1], kc[0][0]))

    def __str__(self):
        if not self.terms:
            return "0"
        pieces = []
        for (mult, parts), c in self.sorted_terms():
            neg = c < 0
            mag = -c if neg else c
            bits = [coeff_str(mag)]
            if mult:
                bits.append(mono_str(mult))
            if parts:
                bits.append(
                    "".join(
                        "d(%s%d)" % (k, i) * e for i, k, e in reversed(parts)
                    )
                )
            body = " * ".join(bits)
            if not pieces:
                pieces.append("-" + body if neg else body)
            else:
                pieces.append((" - " if neg else " + ") + body)
        return "".join(pieces)

    def __repr__(self):
        return "Operator(%s; window=%s)" % (self, self.window)


def commutator(a, b):
    """[a, b] = a o b - b o a."""
    return a.commutator(b)


def op_equal(a, b, w):
    return a.equal_within(b, w)


def mul_op(f, window=None):
    return Operator.multiplication(f, window)


def diff_op(*names, window=None):
    return Operator.derivative(*names, window=window)
