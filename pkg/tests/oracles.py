"""Independent reference computations used by the tests.

Nothing here imports the engine's arithmetic: binomials come from
``math.comb`` and relation right-hand sides are evaluated from the closed
formulas directly.
"""
from itertools import product
from math import comb

BETA = -1


def binom_oracle(n, k, p):
    if n < 0 or k < 0 or k > n:
        return 0
    return comb(n, k) % p


def coeff_a_oracle(p, k, r, j):
    return (-1) ** (r + j) * binom_oracle((p - 1) * (k - j) - 1, r - p * j, p) % p


def coeff_b_oracle(p, k, r, j):
    return (-1) ** (r + j) * binom_oracle((p - 1) * (k - j), r - p * j, p) % p


def pp_rhs_oracle(a, b, p):
    """P^a P^b for a < pb, as {word: coeff}."""
    out = {}
    for t in range(0, a // p + 1):
        c = coeff_a_oracle(p, b, a, t)
        if c:
            out[(a + b - t, t)] = c
    return out


def pbp_rhs_oracle(a, b, p):
    """P^a b P^b for a <= pb, as {word: coeff}."""
    out = {}
    for t in range(0, a // p + 1):
        w = (BETA, a + b - t, t)
        out[w] = (out.get(w, 0) + coeff_b_oracle(p, b, a, t)) % p
    if a >= 1:
        for t in range(0, (a - 1) // p + 1):
            w = (a + b - t, BETA, t)
            out[w] = (out.get(w, 0) + coeff_a_oracle(p, b, a - 1, t)) % p
    return {w: c for w, c in out.items() if c}


def _compositions(total, parts):
    """All tuples of ``parts`` non-negative ints summing to ``total``."""
    if parts == 0:
        if total == 0:
            yield ()
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def admissible_bruteforce(p, n, s):
    """Every (eps_0..eps_s, t_1..t_s) tuple of internal degree n satisfying the
    admissibility inequalities, rendered as words."""
    q = 2 * (p - 1)
    found = set()
    for eps in product((0, 1), repeat=s + 1):
        rest = n - sum(eps)
        if rest < 0 or rest % q:
            continue
        for ts in _compositions(rest // q, s):
            if any(ts[j] < p * ts[j + 1] + eps[j + 1] for j in range(s - 1)):
                continue
            w = [BETA] if eps[0] else []
            for j in range(s):
                w.append(ts[j])
                if eps[j + 1]:
                    w.append(BETA)
            found.add(tuple(w))
    return found
