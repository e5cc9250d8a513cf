"""Fourier-Motzkin elimination, used only as an independent feasibility oracle
for the exact simplex in the tests.

Each derived inequality tracks the set of original rows it combines; by
Imbert's acceleration theorem a row whose history exceeds one plus the number
of eliminated variables is redundant and safely dropped, which keeps the
elimination tractable on the test systems.  Rows with identical directions
keep only the tightest right-hand side.
"""

from fractions import Fraction
from math import gcd


def _direction(coeffs):
    den = 1
    for x in coeffs:
        den = den * x.denominator // gcd(den, x.denominator)
    ints = [int(x * den) for x in coeffs]
    g = 0
    for k in ints:
        g = gcd(g, abs(k))
    return tuple(k // g for k in ints), Fraction(g, den)


def _compact(items, eliminated):
    """Dedupe by direction (keeping the tightest bound), apply Imbert's bound,
    and detect constant rows.  Returns None when infeasibility is certain."""
    best = {}
    for coeffs, rhs, hist in items:
        if all(x == 0 for x in coeffs):
            if rhs > 0:
                return None
            continue
        if len(hist) > eliminated + 1:
            continue  # redundant by Imbert's acceleration theorem
        direction, scale = _direction(coeffs)
        bound = rhs / scale
        old = best.get(direction)
        if old is None or bound > old[0]:
            best[direction] = (bound, hist)
        elif bound == old[0] and len(hist) < len(old[1]):
            best[direction] = (bound, hist)
    return [
        (tuple(Fraction(c) for c in direction), bound, hist)
        for direction, (bound, hist) in best.items()
    ]


def fm_feasible(rows, unknowns):
    """Feasibility of rows (coeffs, rhs, relation) with relation '>=' or '='
    over free rational unknowns, by eliminating one variable at a time."""
    ineqs = []  # each: (coeffs, rhs, history) meaning coeffs . x >= rhs
    for idx, (coeffs, rhs, rel) in enumerate(rows):
        c = tuple(Fraction(x) for x in coeffs)
        b = Fraction(rhs)
        ineqs.append((c, b, frozenset([(idx, "+")])))
        if rel == "=":
            ineqs.append((tuple(-x for x in c), -b, frozenset([(idx, "-")])))

    ineqs = _compact(ineqs, 0)
    if ineqs is None:
        return False
    remaining = list(range(unknowns))
    for step in range(unknowns):
        # eliminate the variable with the fewest pos*neg combinations
        def cost(var):
            pos = sum(1 for c, _, _ in ineqs if c[var] > 0)
            neg = sum(1 for c, _, _ in ineqs if c[var] < 0)
            return pos * neg

        var = min(remaining, key=cost)
        remaining.remove(var)
        pos = [i for i in ineqs if i[0][var] > 0]
        neg = [i for i in ineqs if i[0][var] < 0]
        zero = [i for i in ineqs if i[0][var] == 0]
        new = list(zero)
        for cp, bp, hp in pos:
            for cn, bn, hn in neg:
                mp, mn = -cn[var], cp[var]
                c = tuple(mp * a + mn * b for a, b in zip(cp, cn))
                b = mp * bp + mn * bn
                new.append((c, b, hp | hn))
        ineqs = _compact(new, step + 1)
        if ineqs is None:
            return False
    return True
