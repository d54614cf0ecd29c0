"""Independent oracles and random generators shared by the test suite.

The enumeration and counting oracles here deliberately use different
algorithms from the package (integer partitions glued pairwise instead
of a recursive descent over variables), so agreement is meaningful.
"""

import random
from fractions import Fraction
from functools import lru_cache

from tautjac.operators import Operator
from tautjac.poly import P_KIND, Q_KIND, Poly, mono_from_exponents


@lru_cache(maxsize=None)
def partitions(n):
    """All integer partitions of n as descending tuples."""
    if n == 0:
        return ((),)
    out = []
    def rec(remaining, largest, prefix):
        if remaining == 0:
            out.append(tuple(prefix))
            return
        for part in range(min(remaining, largest), 0, -1):
            rec(remaining - part, part, prefix + [part])
    rec(n, n, [])
    return tuple(out)


def partition_count(n):
    return len(partitions(n))


def brute_force_monomials(w):
    """Oracle: every monomial of weight w, as a pair of partitions (one
    for the p-variables, one for the q-variables)."""
    monos = set()
    for k in range(w + 1):
        for lam in partitions(k):
            for mu in partitions(w - k):
                pairs = [((i, P_KIND), 1) for i in lam]
                pairs += [((i, Q_KIND), 1) for i in mu]
                monos.add(mono_from_exponents(pairs))
    return monos


def brute_force_count(w):
    """Independent recursive counter: multisets of (kind, index) pairs
    with index sum w."""
    return sum(
        partition_count(k) * partition_count(w - k) for k in range(w + 1)
    )


def random_poly(rng, max_index=3, max_terms=4, max_exp=2):
    terms = {}
    for _ in range(rng.randint(0, max_terms)):
        pairs = [
            ((rng.randint(1, max_index), rng.choice((P_KIND, Q_KIND))),
             rng.randint(1, max_exp))
            for _ in range(rng.randint(0, 3))
        ]
        coeff = Fraction(rng.randint(-6, 6), rng.randint(1, 4))
        terms[mono_from_exponents(pairs)] = coeff
    return Poly(terms)


def random_operator(rng, max_index=3, max_terms=3):
    """A finite random operator; being finite it is exact at every
    weight (window None)."""
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        mult_pairs = [
            ((rng.randint(1, max_index), rng.choice((P_KIND, Q_KIND))), 1)
            for _ in range(rng.randint(0, 2))
        ]
        part_pairs = [
            ((rng.randint(1, max_index), rng.choice((P_KIND, Q_KIND))), 1)
            for _ in range(rng.randint(0, 2))
        ]
        key = (mono_from_exponents(mult_pairs), mono_from_exponents(part_pairs))
        terms[key] = terms.get(key, 0) + rng.randint(-4, 4)
    return Operator(terms, None)


def seeded(seed):
    return random.Random(seed)
