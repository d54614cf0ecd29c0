"""Fourier transform on the genus-g quotient ring.

On the quotient modulo a :class:`~tautjac.ideal.RelationIdeal`,
multiplication by p1 raises weight (nilpotent, since weight above the
genus vanishes) and the descent operator lowers it, so both
exponentials below are finite sums and

    S = exp(e) exp(D) exp(e)

is computed exactly, reducing to normal form after every step.  S sends
a (weight w, s-degree s) class to one of bidegree (g - w + s, s), and
S^2 = (-1)^g [-1]^* where [-1]^* scales an s-homogeneous class by
(-1)^s.  The Pontryagin product is realized through S:
a * b = S^{-1}(S(a) S(b)).
"""

from .errors import CapExceeded, NotNilpotent, VerificationFailure
from .lie import LieContext, density_op, descent_op, field_op
from .operators import mul_op
from .poly import P_KIND, Poly, mono_sdeg, mono_weight, p

__all__ = [
    "FourierMap",
    "exp_apply",
    "minus_one_pullback",
]


def minus_one_pullback(f):
    """Pullback along the inversion of the group: each (w, s)-component
    is scaled by (-1)**s."""
    return Poly(
        {m: -c if mono_sdeg(m) % 2 else c for m, c in f.terms.items()}
    )


def exp_apply(op, f, ideal=None):
    """Apply exp(op) = sum op^k / k! to a polynomial, reducing to normal
    form after each step when an ideal is supplied.

    Termination is guaranteed statically: every term of ``op`` must
    either lower weight, raise weight (allowed only over a quotient,
    where weights above the genus die), or preserve weight while
    strictly lowering the p-degree.  Mixing weight-raising and
    weight-lowering terms is rejected.
    """
    raises = lowers = False
    for mult, parts in op.terms:
        shift = mono_weight(mult) - mono_weight(parts)
        if shift > 0:
            raises = True
        elif shift < 0:
            lowers = True
        else:
            pdrop = sum(e for _i, k, e in mult if k == P_KIND) - sum(
                e for _i, k, e in parts if k == P_KIND
            )
            if pdrop >= 0:
                raise NotNilpotent(
                    "operator has a weight-preserving term that does not "
                    "lower the p-degree; exp would not terminate"
                )
    if raises and lowers:
        raise NotNilpotent(
            "operator mixes weight-raising and weight-lowering terms"
        )
    if raises and ideal is None:
        raise NotNilpotent(
            "weight-raising exponential terminates only on a quotient; "
            "supply a relation ideal"
        )
    if ideal is not None and f.max_weight() > ideal.source_cap:
        raise CapExceeded(f.max_weight(), ideal.source_cap)
    reduce = ideal.reduce if ideal is not None else (lambda x: x)
    current = reduce(f)
    total = current
    k = 1
    while current.terms:
        current = reduce(op.apply(current)) / k
        total = total + current
        k += 1
    return total


class FourierMap:
    """The transform S and the Pontryagin product over a fixed
    relation ideal."""

    def __init__(self, ideal):
        self.ideal = ideal
        self.ctx = LieContext(ideal.genus, ideal.source_cap)
        self.raising = mul_op(p(1))
        self.descent = descent_op(self.ctx)

    @property
    def genus(self):
        return self.ideal.genus

    def transform(self, f):
        """S(f) in normal form."""
        out = exp_apply(self.raising, f, self.ideal)
        out = exp_apply(self.descent, out, self.ideal)
        return exp_apply(self.raising, out, self.ideal)

    def inverse(self, f):
        """S^{-1}(f) = (-1)^g [-1]^* S(f)."""
        sign = -1 if self.genus % 2 else 1
        return sign * minus_one_pullback(self.transform(f))

    def pontryagin(self, a, b):
        """Convolution product: S^{-1}(S(a) S(b)).  The intermediate
        product can reach weight 2g; it is reduced before inverting."""
        return self.inverse(self.ideal.reduce(self.transform(a) * self.transform(b)))

    def unit(self):
        """The Pontryagin unit S^{-1}(1)."""
        return self.inverse(Poly.one())

    def quotient_basis(self):
        """(weight, sdeg, monomial) for the full quotient basis, weights
        ascending, monomials descending within a weight."""
        out = []
        for w in range(self.genus + 1):
            for m in self.ideal.quotient_basis(w):
                out.append((w, mono_sdeg(m), m))
        return out

    def check_degree_law(self):
        """S maps bidegree (w, s) to (g - w + s, s) on every quotient
        basis element; returns failing entries (empty when exact)."""
        failures = []
        for w, s, m in self.quotient_basis():
            img = self.transform(Poly.monomial(m))
            keys = set(img.graded())
            if not keys <= {(self.genus - w + s, s)}:
                failures.append(self._entry(
                    "S is bigraded (w,s) -> (g-w+s,s)",
                    {"weight": w, "sdeg": s, "monomial": str(Poly.monomial(m))},
                    "fail",
                    "components %s" % sorted(keys),
                ))
        return failures

    def check_s2(self):
        """S^2 = (-1)^g [-1]^* on the quotient basis.  Returns failing
        entries; a non-empty result means the stored ideal is incomplete
        at the tested weights - raise source_cap."""
        sign = -1 if self.genus % 2 else 1
        failures = []
        for w, s, m in self.quotient_basis():
            b = Poly.monomial(m)
            got = self.transform(self.transform(b))
            expected = sign * minus_one_pullback(b)
            if got != expected:
                failures.append(self._entry(
                    "S^2 = (-1)^g [-1]^*",
                    {"weight": w, "sdeg": s, "monomial": str(b)},
                    "fail",
                    str(got - expected),
                ))
        return failures

    def verify_conjugation(self, m, n, family="field"):
        """Check S o op(m,n) o S^{-1} = (-1)^n op(n,m) on every quotient
        basis element; raises VerificationFailure on the first mismatch."""
        ctor = {"field": field_op, "density": density_op}[family]
        op = ctor(m, n, self.ctx)
        flipped = ctor(n, m, self.ctx)
        sign = -1 if n % 2 else 1
        reports = []
        for w, s, mono in self.quotient_basis():
            b = Poly.monomial(mono)
            left = self.transform(self.ideal.reduce(op.apply(self.inverse(b))))
            right = sign * self.ideal.reduce(flipped.apply(b))
            if left != right:
                entry = self._entry(
                    "S %s(%d,%d) S^-1 = %s%s(%d,%d)"
                    % (family, m, n, "-" if sign < 0 else "", family, n, m),
                    {"monomial": str(b), "weight": w},
                    "fail",
                    str(left - right),
                )
                raise VerificationFailure(entry, None)
        reports.append(self._entry(
            "S %s(%d,%d) S^-1 = %s%s(%d,%d)"
            % (family, m, n, "-" if sign < 0 else "", family, n, m),
            {"basis_size": len(self.quotient_basis())},
            "ok",
        ))
        return reports

    def _entry(self, identity, params, status, counterexample=None):
        entry = {
            "identity": identity,
            "params": params,
            "genus": self.genus,
            "window": self.ideal.source_cap,
            "status": status,
        }
        if counterexample is not None:
            entry["counterexample"] = counterexample
        return entry
