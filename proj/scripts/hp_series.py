"""High-precision direct summation of the 24 series (mpmath reference)."""

import mpmath as mp


def direct_sum(key, eta, tol=None):
    fam, mom, k = key[0], int(key[1]), int(key[3])
    eta = mp.mpf(eta)
    tol = tol or mp.mpf(10) ** (-(mp.mp.dps - 8))
    s = mp.mpf(0)
    n = 0
    while True:
        t = mp.mpf(2 * n + 1)
        x = t * eta
        if fam == "T":
            term = t**mom * mp.exp(k * x) / mp.expm1(2 * x) ** 2
        else:
            tp = mp.mpf(2 * n + 3)
            term = t**mom * mp.exp(k * x) / (mp.expm1(2 * x) * mp.expm1(2 * tp * eta))
        s += term
        if term < tol * s and n > 4:
            return s
        n += 1
        if n > 10_000_000:
            raise RuntimeError("term budget exceeded")
