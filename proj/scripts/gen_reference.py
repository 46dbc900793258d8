"""Emit ../tests/reference_gen.hpp: frozen oracle values.

Kernel values at m = 1, direct sums at assorted points (mpmath), force
coefficients from the independent stress-tensor solver, and near-contact
coefficient values from the recipe formulas evaluated with high-precision
direct sums.
"""

import json

import mpmath as mp

import registry
import twosphere_solver as ts
from hp_series import direct_sum

mp.mp.dps = 30

OUT = "../tests/reference_gen.hpp"

GAMMA = mp.mpf("0.577215664901533")


def form_value(key, eta):
    """Closed form with the published constants (see registry.FORMS)."""
    eta = mp.mpf(eta)
    G = GAMMA + mp.log(4 / eta)
    tot = mp.mpf(0)
    for t in registry.FORMS[key]:
        if t[0] == "rat":
            tot += mp.mpf(t[1].numerator) / mp.mpf(t[1].denominator) * eta ** t[2]
        elif t[0] == "pi2":
            tot += mp.mpf(t[1].numerator) / mp.mpf(t[1].denominator) * mp.pi**2 * eta ** t[2]
        elif t[0] == "gam":
            tot += mp.mpf(t[1].numerator) / mp.mpf(t[1].denominator) * eta ** t[2] * (G - t[3])
        else:
            val = registry.CONSTS[t[1]][3] if t[1] in registry.CONSTS else registry.AGGS[t[1]][1]
            tot += t[2] * mp.mpf(repr(val)) * eta ** t[3]
    return tot


def T(mm, k, u):
    return direct_sum("T%dk%d" % (mm, k), u)


def U(mm, k, u):
    return direct_sum("U%dk%d" % (mm, k), u)


def recipes(u):
    """Ten force coefficients from the series basis (see data/recipes.json)."""
    u = mp.mpf(u)
    b0 = 1 / mp.expm1(2 * u)
    e4 = mp.expm1(4 * u)
    V0 = (e4 * U(1, 2, u) + b0) / 2
    V1 = V0 + (e4 * U(2, 2, u) - b0) / 4
    V2 = (e4 * U(3, 2, u) + b0 - 8 * V0 + 12 * V1) / 6
    S = [T(mm, 3, u) - T(mm, 1, u) for mm in range(3)]
    W = [S[mm] + [V0, V1, V2][mm] for mm in range(3)]
    Y = [S[mm] - [V0, V1, V2][mm] for mm in range(3)]
    Wp = [-(T(mm + 1, 1, u) + 2 * T(mm + 1, 2, u) + T(mm + 1, 3, u)) for mm in range(3)]
    Yp = [-(T(mm + 1, 1, u) - 2 * T(mm + 1, 2, u) + T(mm + 1, 3, u)) for mm in range(3)]
    c, ch = mp.sinh(u), mp.cosh(u)

    aL = 4 * c**3 * (W[2] - W[1] ** 2 / W[0])
    daL = 12 * c**2 * ch * (W[2] - W[1] ** 2 / W[0]) + \
        4 * c**3 * (Wp[2] - (2 * W[1] * Wp[1] * W[0] - W[1] ** 2 * Wp[0]) / W[0] ** 2)
    aT = 2 * c**3 * (Y[2] - Y[0])
    daT = 6 * c**2 * ch * (Y[2] - Y[0]) + 2 * c**3 * (Yp[2] - Yp[0])

    F = {}
    F[1] = -daL / (4 * c)
    F[2] = -daT / (4 * c)
    F[8] = -(aL - aT) / (4 * ch)
    sig, dlt = 2 * c * Y[0], 2 * c * W[0]
    sigp = 2 * ch * Y[0] + 2 * c * Yp[0]
    dltp = 2 * ch * W[0] + 2 * c * Wp[0]
    F[5] = F[7] = -(sigp / sig**2 + dltp / dlt**2) / (8 * c)
    F[6] = -(sigp / sig**2 - dltp / dlt**2) / (4 * c)
    r = W[1] / W[0]
    rp = (Wp[1] * W[0] - W[1] * Wp[0]) / W[0] ** 2
    F[4] = (ch * r + c * rp - c) / (2 * c)
    F[3] = -F[4]
    F[10] = (c * r - ch) / (2 * ch)
    F[9] = -F[10]
    return F


def main():
    lines = []
    w = lines.append
    w("// Generated by scripts/gen_reference.py -- frozen reference values computed")
    w("// with an independent high-precision evaluator.  Do not edit by hand.")
    w("#pragma once")
    w("")
    w("namespace refdata {")
    w("")

    with open("kernel_at1.json") as f:
        K1 = json.load(f)
    w("struct KernelRef { const char* name; double at_one; };")
    w("inline constexpr KernelRef kKernelAtOne[] = {")
    for name in sorted(K1):
        w('    {"%s", %s},' % (name, repr(float(mp.mpf(K1[name])))))
    w("};")
    w("")

    probe_etas = ["0.01", "0.0316227766016838", "0.1", "0.5", "1.0"]
    probe_ids = ["T0k1", "T1k2", "T2k3", "T3k1", "U0k1", "U1k3", "U2k2", "U3k3", "U0k2"]
    w("struct SeriesRef { const char* id; double eta1; double value; };")
    w("inline constexpr SeriesRef kDirectValues[] = {")
    for pid in probe_ids:
        for es in probe_etas:
            w('    {"%s", %s, %s},' % (pid, es, repr(float(direct_sum(pid, mp.mpf(es))))))
    w("};")
    w("")

    w("// percentage errors 100 |direct - closed| / direct at xi = 1e-3, 1e-2,")
    w("// from an independent high-precision evaluation of both paths")
    w("struct PctRef { const char* id; double at_1e3; double at_1e2; };")
    w("inline constexpr PctRef kPctReference[] = {")
    for key in registry.ALL_IDS:
        pcts = []
        for xi in ("1e-3", "1e-2"):
            eta = mp.sqrt(mp.mpf(xi))
            d = direct_sum(key, eta)
            a = form_value(key, eta)
            pcts.append(float(100 * abs(d - a) / abs(d)))
        w('    {"%s", %s, %s},' % (key, repr(pcts[0]), repr(pcts[1])))
    w("};")
    w("")

    ts._check_translations()
    w("struct ForceRef { double u; double F[10]; };")
    w("inline constexpr ForceRef kForceCoefficients[] = {")
    for u in (0.8, 1.2):
        F = ts.coefficients(u)
        w("    {%s, {%s}}," % (u, ", ".join(repr(float(F[i])) for i in range(1, 11))))
    w("};")
    w("")
    w("inline constexpr ForceRef kForceNearContact[] = {")
    for xi in ("1e-6", "1e-4", "1e-2"):
        u = mp.sqrt(mp.mpf(xi))
        F = recipes(u)
        w("    {%s, {%s}},  // xi = %s"
          % (mp.nstr(u, 17), ", ".join(repr(float(F[i])) for i in range(1, 11)), xi))
    w("};")
    w("")
    w("}  // namespace refdata")

    with open(OUT, "w") as f:
        f.write("\n".join(lines) + "\n")
    print("wrote", OUT)


if __name__ == "__main__":
    main()
