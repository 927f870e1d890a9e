"""Independent oracles used by the test suite.

brute_count enumerates solutions directly and shares no code with the
library's dynamic programs.  The closed-form fixtures reproduce the
traditionally quoted piecewise tables for the worked example with generator
degrees (2, 3, 6); the first-syzygy table is kept verbatim, including its
two known defects, so tests can pin down exactly where the oracle disagrees.
"""

from fractions import Fraction


def brute_count(columns, u):
    """Number of nonnegative integer combinations of the columns equal to u."""
    u = list(u)
    if any(x < 0 for x in u):
        return 0

    def rec(idx, rem):
        if idx == len(columns):
            return 1 if all(r == 0 for r in rem) else 0
        col = columns[idx]
        caps = [rem[i] // col[i] for i in range(len(rem)) if col[i] > 0]
        cap = min(caps) if caps else 0
        total = 0
        for k in range(cap + 1):
            total += rec(idx + 1, [r - k * c for r, c in zip(rem, col)])
        return total

    return rec(0, u)


def P_formula(x, y):
    """floor((x - 2y)/4) + 1; the first-chamber closed form."""
    return (x - 2 * y) // 4 + 1


def Q_formula(x, y):
    """The second-chamber closed form, split on divisibility of x - 3y by 3."""
    i = (x - 2 * y) % 4
    j = (x - 3 * y) % 3
    v = Fraction(6 * y - x + 4 * j - 3 * i, 12)
    if (x - 3 * y) % 3 == 0:
        v += 1
    return v


def ring_hilbert_closed_form(mu, t):
    """Three-branch closed form for the (2, 3, 6) bigraded ring, 2t <= mu <= 6t."""
    if mu <= 3 * t:
        return (mu - 2 * t) // 4 + 1
    if (mu - 3 * t) % 3 == 0:
        return (mu - 2 * t) // 4 - (mu - 3 * t) // 3 + 1
    return (mu - 2 * t) // 4 - (mu - 3 * t) // 3


def beta0_printed(mu, t):
    if 2 * t <= mu <= 3 * t:
        return P_formula(mu, t)
    if 3 * t < mu <= 6 * t:
        return Q_formula(mu, t)
    return 0


def beta1_printed(mu, t):
    """The traditionally quoted nine-case first-syzygy table, defects included.

    Known defects (both resolved against the counting oracle elsewhere):
    the '(Q2 + Q2)' row, and the gap at mu = 6t + 2 left by the strict
    inequalities of the last two rows.
    """
    P1 = lambda: P_formula(mu - 5, t - 1)
    P2 = lambda: P_formula(mu - 8, t - 1)
    P3 = lambda: P_formula(mu - 9, t - 1)
    P4 = lambda: P_formula(mu - 11, t - 2)
    Q1 = lambda: Q_formula(mu - 5, t - 1)
    Q2 = lambda: Q_formula(mu - 8, t - 1)
    Q3 = lambda: Q_formula(mu - 9, t - 1)
    Q4 = lambda: Q_formula(mu - 11, t - 2)
    if 2 * t + 3 <= mu < 2 * t + 6:
        return P1()
    if 2 * t + 6 <= mu < 2 * t + 7:
        return P1() + P2()
    if 2 * t + 7 <= mu < 3 * t + 2:
        return P1() + P2() + P3() - P4()
    if 3 * t + 2 <= mu < 3 * t + 5:
        return Q1() + P2() + P3() - P4()
    if 3 * t + 5 <= mu < 3 * t + 6:
        return Q1() + Q2() + P3() - P4()
    if 3 * t + 6 <= mu < 6 * t - 1:
        return Q1() + Q2() + Q3() - Q4()
    if 6 * t - 1 <= mu < 6 * t + 2:
        return Q2() + Q2()
    if 6 * t + 2 < mu <= 6 * t + 3:
        return Q3()
    return 0


def beta2_printed(mu, t):
    if 2 * t + 9 <= mu < 3 * t + 8:
        return P_formula(mu - 11, t - 1)
    if 3 * t + 8 <= mu <= 6 * t + 5:
        return Q_formula(mu - 11, t - 1)
    return 0
