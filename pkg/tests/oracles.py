"""Independent brute-force oracles over prime fields, using plain int lists.

Nothing here imports the package: these are the reference computations the
frozen expected values were produced with.
"""

import itertools


def pmul(a, b, p):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] = (out[i + j] + x * y) % p
    while len(out) > 1 and out[-1] == 0:
        out.pop()
    return out


def naive_order(g, p, limit=10 ** 6):
    """Least e >= 1 with x^e = 1 mod g (g low-first, g[0] != 0), by stepping."""
    g = list(g)
    while g[-1] == 0:
        g.pop()
    m = len(g) - 1
    if m == 0:
        return 1
    inv = pow(g[-1], p - 2, p)
    g = [c * inv % p for c in g]
    r = [1] + [0] * (m - 1)
    for e in range(1, limit + 1):
        lead = r[-1]
        r = [0] + r[:-1]
        for j in range(m):
            r[j] = (r[j] - lead * g[j]) % p
        if r[0] == 1 and not any(r[1:]):
            return e
    raise AssertionError("no order found")


def naive_census(factors, e, p):
    """Count exponent vectors whose product of factors has order exactly e."""
    count = 0
    for exps in itertools.product(*(range(f + 1) for _, f in factors)):
        g = [1]
        for (fac, _), a in zip(factors, exps):
            for _ in range(a):
                g = pmul(g, fac, p)
        count += naive_order(g, p) == e
    return count


def powers_until_one(x, p):
    seen, v = [], x % p
    while True:
        seen.append(v)
        if v == 1:
            return seen
        v = v * x % p
