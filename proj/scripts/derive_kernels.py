"""Derive the outer-expansion kernels of all 24 series.

With m = n*eta held fixed, the series terms become

  T_M(k eta):  H(m,eta) = (2m+eta)^M e^{k(2m+eta)} / (e^{2(2m+eta)} - 1)^2
  U_M(k eta):  H(m,eta) = (2m+eta)^M e^{k(2m+eta)}
                          / ((e^{2(2m+eta)} - 1)(e^{2(2m+3 eta)} - 1))

and kernel_j(m) = (-1)^{j-1} [eta^{j-1}] (eta^M H), matching the alternating
Euler-Maclaurin splitting  f_o = sum_j (-1)^{j-1} eta^{-(M+1-j)} Sum_m f_j(m) dm.

Every coefficient is expanded exactly over Q with A = e^{4m}, giving the
uniform schema  kernel = e^{c m} sum_j P_j(m) A^j / (A - 1)^d.

Output: derived_kernels.json.
"""

import json

import sympy as sp

m, A = sp.symbols("m A", positive=True)


def inv_pow_series(mult, power, nord):
    """eta-series of 1/(A*w - 1)^power with w = e^{mult*eta}."""
    wm1 = [sp.Rational(0)] + [sp.Rational(mult) ** i / sp.factorial(i) for i in range(1, nord + 1)]
    z = [c * A / (A - 1) for c in wm1]
    out = [sp.Rational(0)] * (nord + 1)
    out[0] = sp.Rational(1)
    zp = [sp.Rational(1)] + [sp.Rational(0)] * nord
    for p in range(1, nord + 1):
        new = [sp.Rational(0)] * (nord + 1)
        for i in range(nord + 1):
            if zp[i] == 0:
                continue
            for jj in range(1, nord + 1 - i):
                new[i + jj] += zp[i] * z[jj]
        zp = new
        coef = sp.binomial(-power, p)
        for i in range(nord + 1):
            out[i] += coef * zp[i]
    return [sp.cancel(c / (A - 1) ** power) for c in out]


def mul_series(a, b, nord):
    out = [sp.Rational(0)] * (nord + 1)
    for i in range(nord + 1):
        if a[i] == 0:
            continue
        for j in range(nord + 1 - i):
            out[i + j] += a[i] * b[j]
    return out


def derive(fam, M, k):
    nord = M + 1
    poly = [sp.binomial(M, i) * (2 * m) ** (M - i) for i in range(M + 1)] + \
        [sp.Rational(0)] * (nord - M)
    ek = [sp.Rational(k) ** i / sp.factorial(i) for i in range(nord + 1)]
    H = mul_series(poly, ek, nord)
    if fam == "T":
        D = inv_pow_series(2, 2, nord)
    else:
        D = mul_series(inv_pow_series(2, 1, nord), inv_pow_series(6, 1, nord), nord)
    H = mul_series(H, D, nord)
    return [sp.cancel((-1) ** j * H[j]) for j in range(nord + 1)]


def to_schema(expr, c, name):
    num, den = sp.fraction(sp.cancel(sp.together(expr)))
    dpoly = sp.Poly(den, A)
    d = dpoly.degree()
    lead = dpoly.LC()
    if sp.expand(den - lead * (A - 1) ** d) != 0:
        raise RuntimeError("unexpected denominator for " + name + ": " + str(den))
    num = sp.expand(num / lead)
    polys = {}
    for jj, coeff in enumerate(reversed(sp.Poly(num, A).all_coeffs())):
        if coeff == 0:
            continue
        polys[jj] = [str(sp.Rational(x)) for x in sp.Poly(coeff, m).all_coeffs()[::-1]]
    return {"c": c, "d": d, "polys": {str(jj): p for jj, p in polys.items()}}


def main():
    out = {}
    for fam in ("T", "U"):
        for M in range(4):
            for k in (1, 2, 3):
                for j, kexpr in enumerate(derive(fam, M, k)):
                    name = "%s%dk%d.%s%d" % (fam, M, k, "f" if fam == "T" else "g", j + 1)
                    out[name] = to_schema(kexpr, 2 * k, name)
    with open("derived_kernels.json", "w") as f:
        json.dump(out, f, indent=0, sort_keys=True)
    print("derived", len(out), "kernels -> derived_kernels.json")


if __name__ == "__main__":
    main()
