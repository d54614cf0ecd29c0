"""Genus-g relation ideal generated by closure under the descent operator.

Every monomial of weight above the genus is a relation (codimension
beyond g vanishes).  Starting from all monomials with weight in
(g, source_cap], the builder repeatedly applies the descent operator D
(one weight down) and multiplies known relations by ring variables
(back up, capped at the genus), until the per-weight relation spaces
stop growing.  Each graded space is kept in reduced row echelon form
over exact rationals, with pivots on the canonically largest monomials,
so normal forms are unique and the whole structure is deterministic.

The result is a *derived* sub-ideal of the true relation ideal: a
polynomial outside it is not thereby proven nonzero in the Chow ring.
"""

import json
from collections import deque
from fractions import Fraction

from .errors import CapExceeded, CapTooSmall, InvalidGenus, VerificationFailure
from .lie import LieContext, descent_op
from .poly import (
    MONOMIAL_ORDER_ID,
    P_KIND,
    Q_KIND,
    Poly,
    enumerate_monomials,
    mono_from_str,
    mono_mul,
    mono_str,
    norm_coeff,
    qdiv,
)

FORMAT_VERSION = 1


class _Space:
    """One graded piece: rows in RREF, keyed by their pivot monomial."""

    __slots__ = ("weight", "pivots", "full")

    def __init__(self, weight):
        self.weight = weight
        self.pivots = {}
        self.full = False

    def dimension(self):
        return len(enumerate_monomials(self.weight))

    def rank(self):
        return len(self.pivots)

    def fill(self):
        for m in enumerate_monomials(self.weight):
            self.pivots[m] = {m: 1}
        self.full = True

    def reduce(self, vec):
        """Reduce a coefficient vector modulo the stored rows.  Rows are
        fully back-substituted, so eliminating a pivot only introduces
        non-pivot monomials and one descending pass suffices."""
        work = dict(vec)
        pivots = self.pivots
        for m in sorted(vec, reverse=True):
            c = work.get(m)
            if not c or m not in pivots:
                continue
            for mm, cc in pivots[m].items():
                nc = norm_coeff(work.get(mm, 0) - c * cc)
                if nc:
                    work[mm] = nc
                else:
                    work.pop(mm, None)
        return work

    def insert(self, vec):
        """Adjoin a vector; returns a copy of the new normalized row, or
        None when the vector was already in the span."""
        red = self.reduce(vec)
        if not red:
            return None
        piv = max(red)
        lead = red[piv]
        row = {m: qdiv(c, lead) for m, c in red.items()}
        for other in self.pivots.values():
            oc = other.get(piv)
            if oc:
                for m, c in row.items():
                    nc = norm_coeff(other.get(m, 0) - oc * c)
                    if nc:
                        other[m] = nc
                    else:
                        other.pop(m, None)
        self.pivots[piv] = row
        if len(self.pivots) == self.dimension():
            self.full = True
        return dict(row)

    def sorted_rows(self):
        return [self.pivots[piv] for piv in sorted(self.pivots, reverse=True)]


class RelationIdeal:
    """Per-weight RREF relation bases for a fixed genus, with quotient
    dimensions and normal-form reduction."""

    def __init__(self, genus, source_cap, spaces):
        self.genus = genus
        self.source_cap = source_cap
        self.spaces = spaces

    @classmethod
    def build(cls, genus, source_cap, check=True):
        """Close the vanishing ideal under descent and multiplication.

        Deterministic: the spaces are spans, and RREF with the canonical
        monomial order is unique for a given span.
        """
        if not isinstance(genus, int) or genus < 2:
            raise InvalidGenus("genus must be an integer >= 2, got %r" % (genus,))
        if source_cap <= genus:
            raise CapTooSmall(
                "source_cap must exceed the genus (got cap %s for genus %s)"
                % (source_cap, genus)
            )
        ctx = LieContext(genus, source_cap)
        descent = descent_op(ctx)
        spaces = [_Space(w) for w in range(source_cap + 1)]
        for w in range(genus + 1, source_cap + 1):
            spaces[w].fill()
        # Descent and products out of weights above genus+1 only land in
        # already-full spaces, so the queue starts at genus+1.
        queue = deque((genus + 1, {m: 1}) for m in enumerate_monomials(genus + 1))
        while queue:
            w, vec = queue.popleft()
            if w >= 1 and not spaces[w - 1].full:
                img = descent.apply(Poly(vec))
                if img.terms:
                    row = spaces[w - 1].insert(dict(img.terms))
                    if row is not None:
                        queue.append((w - 1, row))
            for idx in range(1, genus - w + 1):
                for kind in (P_KIND, Q_KIND):
                    target = spaces[w + idx]
                    if target.full:
                        continue
                    var = ((idx, kind, 1),)
                    prod = {mono_mul(m, var): c for m, c in vec.items()}
                    row = target.insert(prod)
                    if row is not None:
                        queue.append((w + idx, row))
        ideal = cls(genus, source_cap, spaces)
        if check:
            ideal.check_stability()
        return ideal

    # -- queries ---------------------------------------------------------

    def _component_spaces(self, f):
        for w, comp in f.weight_components().items():
            if w > self.source_cap:
                raise CapExceeded(w, self.source_cap)
            yield self.spaces[w], comp

    def normal_form(self, f):
        """Unique reduction of f modulo the stored bases; idempotent and
        linear, and f - normal_form(f) always lies in the ideal."""
        out = {}
        for space, comp in self._component_spaces(f):
            out.update(space.reduce(comp.terms))
        return Poly(out)

    def contains(self, f):
        """Membership in the derived ideal (graded reduction to zero)."""
        for space, comp in self._component_spaces(f):
            if space.reduce(comp.terms):
                return False
        return True

    def reduce(self, f):
        """Like :meth:`normal_form` but with every monomial of weight
        above the genus dropped outright, regardless of the cap (such
        monomials are relations for trivial reasons).  Used by the
        transform machinery, whose intermediates can exceed the cap."""
        out = {}
        for w, comp in f.weight_components().items():
            if w > self.genus:
                continue
            out.update(self.spaces[w].reduce(comp.terms))
        return Poly(out)

    def quotient_dimension(self, w):
        if w > self.source_cap:
            raise CapExceeded(w, self.source_cap)
        space = self.spaces[w]
        return space.dimension() - space.rank()

    def quotient_dims(self):
        return {w: self.quotient_dimension(w) for w in range(self.source_cap + 1)}

    def relation_basis(self, w):
        """RREF relation rows of weight w as polynomials, leading pivot
        first."""
        if w > self.source_cap:
            raise CapExceeded(w, self.source_cap)
        return [Poly(row) for row in self.spaces[w].sorted_rows()]

    def quotient_basis(self, w):
        """Monomials of weight w that are not pivots (descending)."""
        if w > self.source_cap:
            raise CapExceeded(w, self.source_cap)
        pivots = self.spaces[w].pivots
        return [m for m in enumerate_monomials(w) if m not in pivots]

    # -- structural checks -------------------------------------------------

    def check_stability(self):
        """Assert closure of the stored spaces under descent and under
        multiplication by every variable (within the caps)."""
        ctx = LieContext(self.genus, self.source_cap)
        descent = descent_op(ctx)
        for w in range(1, self.source_cap + 1):
            src = self.spaces[w]
            if not (src.full and self.spaces[w - 1].full):
                for row in src.pivots.values():
                    img = descent.apply(Poly(row))
                    if self.spaces[w - 1].reduce(img.terms):
                        raise VerificationFailure(
                            {
                                "identity": "descent stability",
                                "params": {"weight": w},
                                "genus": self.genus,
                                "window": self.source_cap,
                                "status": "fail",
                                "counterexample": str(Poly(row)),
                            }
                        )
        for w in range(self.source_cap + 1):
            src = self.spaces[w]
            for idx in range(1, self.source_cap - w + 1):
                for kind in (P_KIND, Q_KIND):
                    target = self.spaces[w + idx]
                    if target.full:
                        continue
                    var = ((idx, kind, 1),)
                    for row in src.pivots.values():
                        prod = {mono_mul(m, var): c for m, c in row.items()}
                        if target.reduce(prod):
                            raise VerificationFailure(
                                {
                                    "identity": "ideal stability",
                                    "params": {"weight": w, "times": "%s%d" % (kind, idx)},
                                    "genus": self.genus,
                                    "window": self.source_cap,
                                    "status": "fail",
                                    "counterexample": str(Poly(row)),
                                }
                            )

    # -- serialization -----------------------------------------------------

    def to_json_dict(self):
        weights = []
        for w in range(self.source_cap + 1):
            space = self.spaces[w]
            relations = [
                [
                    {"monomial": mono_str(m), "coeff": str(c)}
                    for m, c in sorted(row.items(), reverse=True)
                ]
                for row in space.sorted_rows()
            ]
            weights.append(
                {
                    "w": w,
                    "quotient_dim": self.quotient_dimension(w),
                    "relations": relations,
                }
            )
        return {
            "format-version": FORMAT_VERSION,
            "genus": self.genus,
            "source_cap": self.source_cap,
            "monomial_order": MONOMIAL_ORDER_ID,
            "weights": weights,
        }

    def to_json(self, indent=None):
        return json.dumps(self.to_json_dict(), indent=indent, sort_keys=False)

    @classmethod
    def from_json_dict(cls, data):
        if data.get("format-version") != FORMAT_VERSION:
            raise ValueError("unsupported format-version %r" % (data.get("format-version"),))
        if data.get("monomial_order") != MONOMIAL_ORDER_ID:
            raise ValueError("unsupported monomial order %r" % (data.get("monomial_order"),))
        genus = data["genus"]
        source_cap = data["source_cap"]
        spaces = [_Space(w) for w in range(source_cap + 1)]
        for block in data["weights"]:
            w = block["w"]
            space = spaces[w]
            for rel in block["relations"]:
                row = {
                    mono_from_str(term["monomial"]): norm_coeff(Fraction(term["coeff"]))
                    for term in rel
                }
                piv = max(row)
                if row[piv] != 1:
                    raise ValueError("relation row is not pivot-normalized")
                space.pivots[piv] = row
            if space.rank() != space.dimension() - block["quotient_dim"]:
                raise ValueError("inconsistent quotient dimension at weight %d" % w)
            space.full = space.rank() == space.dimension()
        return cls(genus, source_cap, spaces)

    def __repr__(self):
        return "RelationIdeal(genus=%d, source_cap=%d, dims=%s)" % (
            self.genus,
            self.source_cap,
            self.quotient_dims(),
        )


def build(genus, source_cap, check=True):
    return RelationIdeal.build(genus, source_cap, check=check)
