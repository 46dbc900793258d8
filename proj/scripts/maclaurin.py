"""Exact small-m data for every constant's subtracted integrand.

For each kernel K(m) = e^{c m} sum_j P_j(m) e^{4 j m} / (e^{4m} - 1)^d the
Laurent coefficients are computed with exact Fraction series arithmetic.  The
singular part must cancel the registered counterterms exactly (checked); what
remains is the Maclaurin expansion (m^0..m^16) used by the library's
cancellation-safe branch near m = 0.

Outputs: maclaurin.json, kernel_at1.json.
"""

import json
from fractions import Fraction as Fr

import mpmath as mp

import registry

with open("derived_kernels.json") as f:
    DK = json.load(f)

NMAX = 16
ORD = NMAX + 8


def s_exp(rate, order=ORD):
    out = [Fr(0)] * (order + 1)
    term = Fr(1)
    for i in range(order + 1):
        out[i] = term
        term = term * rate / (i + 1)
    return out


def s_mul(a, b, order=ORD):
    out = [Fr(0)] * (order + 1)
    for i, ai in enumerate(a):
        if ai == 0:
            continue
        for j in range(min(len(b), order + 1 - i)):
            if b[j]:
                out[i + j] += ai * b[j]
    return out


def s_pow(a, n, order=ORD):
    out = [Fr(1)] + [Fr(0)] * order
    for _ in range(n):
        out = s_mul(out, a, order)
    return out


def s_div(a, b, order=ORD):
    out = [Fr(0)] * (order + 1)
    inv0 = Fr(1) / b[0]
    for i in range(order + 1):
        acc = a[i] if i < len(a) else Fr(0)
        for j in range(1, i + 1):
            if j < len(b) and b[j]:
                acc -= b[j] * out[i - j]
        out[i] = acc * inv0
    return out


def kernel_laurent(name):
    spec = DK[name]
    c, d = spec["c"], spec["d"]
    num = [Fr(0)] * (ORD + 1)
    for jj, p in spec["polys"].items():
        pc = [Fr(x) for x in p]
        t = s_mul(pc + [Fr(0)] * (ORD + 1 - len(pc)), s_exp(Fr(4 * int(jj))))
        num = [x + y for x, y in zip(num, t)]
    num = s_mul(num, s_exp(Fr(c)))
    g = s_exp(Fr(4))
    g = [g[i + 1] if i + 1 <= ORD else Fr(0) for i in range(ORD + 1)]  # (e^{4m}-1)/m
    h = s_div(num, s_pow(g, d))  # m^d * kernel
    return {p: h[p + d] for p in range(-d, NMAX + 1) if p + d <= ORD}


def main():
    table = {name: kernel_laurent(name) for name in DK}

    macl = {}
    for label, (kern, dom, cts, printed) in registry.CONSTS.items():
        if dom == "1inf":
            continue
        ctmap = {p: c for c, p in cts}
        lau = table[kern]
        for p, coef in lau.items():
            if p < 0 and coef != ctmap.get(-p, Fr(0)):
                raise SystemExit("counterterm mismatch for %s at m^%d: kernel has %s, "
                                 "registered %s" % (label, p, coef, ctmap.get(-p, 0)))
        coeffs = [lau.get(p, Fr(0)) for p in range(0, NMAX + 1)]
        coeffs[0] -= ctmap.get(0, Fr(0))
        macl[label] = [str(x) for x in coeffs]
    with open("maclaurin.json", "w") as f:
        json.dump(macl, f, indent=0, sort_keys=True)
    print("maclaurin.json:", len(macl), "constants; all singular parts verified")

    mp.mp.dps = 30
    kvals = {}
    for name, spec in DK.items():
        num = mp.mpf(0)
        for jj, p in spec["polys"].items():
            poly = mp.mpf(0)
            for coeff in reversed(p):
                poly = poly + mp.mpf(Fr(coeff).numerator) / mp.mpf(Fr(coeff).denominator)
            num += poly * mp.exp(4 * int(jj))
        kvals[name] = mp.nstr(mp.exp(spec["c"]) * num / mp.expm1(4) ** spec["d"], 22)
    with open("kernel_at1.json", "w") as f:
        json.dump(kvals, f, indent=0, sort_keys=True)
    print("kernel_at1.json written")


if __name__ == "__main__":
    main()
