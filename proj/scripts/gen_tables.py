"""Emit ../src/tables_gen.cpp from the registry and the derived kernel data.

Run scripts/derive_kernels.py and scripts/maclaurin.py first.
"""

import json
from fractions import Fraction as Fr

import registry

OUT = "../src/tables_gen.cpp"

with open("derived_kernels.json") as f:
    DK = json.load(f)
with open("maclaurin.json") as f:
    MAC = json.load(f)


def fnum(x):
    if isinstance(x, Fr):
        x = float(x)
    return repr(float(x))


def print_tol(printed):
    """max(5e-6, half ulp of the printed decimal string)"""
    s = repr(printed)
    if "e" in s or "E" in s:
        mant, ex = s.split("e")
        ex = int(ex)
    else:
        mant, ex = s, 0
    dec = len(mant.split(".")[1]) if "." in mant else 0
    return max(5e-6, 0.5 * 10.0 ** (ex - dec) * (1 + 1e-9))


def main():
    kern_names = sorted(DK.keys())
    kidx = {n: i for i, n in enumerate(kern_names)}
    lines = []
    w = lines.append
    w("// Generated by scripts/gen_tables.py -- do not edit by hand.")
    w('#include "tables.hpp"')
    w("#include <cstring>")
    w("")
    w("namespace bisphere::detail {")
    w("")
    w("static const KernelSpec kKernels[] = {")
    for name in kern_names:
        spec = DK[name]
        polys = []
        for j in sorted(spec["polys"], key=int):
            cs = [Fr(x) for x in spec["polys"][j]]
            cs += [Fr(0)] * (4 - len(cs))
            polys.append("{%s, {%s}}" % (j, ", ".join(fnum(c) for c in cs)))
        w('    {"%s", %d, %d, %d, {%s}},' % (name, spec["c"], spec["d"], len(polys),
                                             ", ".join(polys)))
    w("};")
    w("")
    w("static const ConstantSpec kConstants[] = {")
    for label in registry.CONSTS:
        kern, dom, cts, printed = registry.CONSTS[label]
        domc = {"01": "kDom01", "1inf": "kDom1Inf", "0inf": "kDom0Inf"}[dom]
        ctss = ", ".join("{%s, %d}" % (fnum(c), p) for c, p in cts) or "{0.0, 0}"
        mac = MAC.get(label)
        macs = ", ".join(fnum(Fr(x)) for x in mac) if mac else ", ".join(["0.0"] * 17)
        w('    {"%s", %d, %s, %d, {%s}, {%s}, %s, %s, %s},'
          % (label, kidx[kern], domc, len(cts), ctss, macs, fnum(printed),
             fnum(print_tol(printed)),
             "true" if label in registry.KNOWN_ANOMALOUS else "false"))
    w("};")
    w("")
    w("static const AggregateSpec kAggregates[] = {")
    for label, (parts, printed) in registry.AGGS.items():
        w('    {"%s", "%s", "%s", %s, %s, %s},'
          % (label, parts[0], parts[1], fnum(printed), fnum(print_tol(printed)),
             "true" if label in registry.KNOWN_ANOMALOUS else "false"))
    w("};")
    w("")
    w("static const FormSpec kForms[] = {")
    for key in registry.ALL_IDS:
        terms = []
        for t in registry.FORMS[key]:
            if t[0] == "rat":
                terms.append("{kFtRat, %s, %d, 0, nullptr}" % (fnum(t[1]), t[2]))
            elif t[0] == "pi2":
                terms.append("{kFtPi2, %s, %d, 0, nullptr}" % (fnum(t[1]), t[2]))
            elif t[0] == "gam":
                terms.append("{kFtGamma, %s, %d, %d, nullptr}" % (fnum(t[1]), t[2], t[3]))
            else:
                terms.append('{kFtConst, %s, %d, 0, "%s"}' % (fnum(t[2]), t[3], t[1]))
        w('    {"%s", %d,' % (key, len(terms)))
        w("     {%s}}," % ",\n      ".join(terms))
    w("};")
    w("")
    w("static const PctRow kPct[] = {")
    for key in registry.ALL_IDS:
        p3, p2, cat = registry.PCT_TABLE[key]
        w('    {"%s", %s, %s, %d},' % (key, repr(p3), repr(p2), cat))
    w("};")
    w("")
    w("const KernelSpec* kernels(std::size_t* n) { *n = sizeof(kKernels) / sizeof(kKernels[0]); return kKernels; }")
    w("const ConstantSpec* constants(std::size_t* n) { *n = sizeof(kConstants) / sizeof(kConstants[0]); return kConstants; }")
    w("const AggregateSpec* aggregates(std::size_t* n) { *n = sizeof(kAggregates) / sizeof(kAggregates[0]); return kAggregates; }")
    w("const FormSpec* forms(std::size_t* n) { *n = sizeof(kForms) / sizeof(kForms[0]); return kForms; }")
    w("const PctRow* pct_table(std::size_t* n) { *n = sizeof(kPct) / sizeof(kPct[0]); return kPct; }")
    w("")
    w("int kernel_index(const char* name) {")
    w("    std::size_t n; const KernelSpec* ks = kernels(&n);")
    w("    for (std::size_t i = 0; i < n; ++i)")
    w("        if (std::strcmp(ks[i].name, name) == 0) return static_cast<int>(i);")
    w("    return -1;")
    w("}")
    w("")
    w("}  // namespace bisphere::detail")
    with open(OUT, "w") as f:
        f.write("\n".join(lines) + "\n")
    print("wrote", OUT)

    for label, (kern, dom, cts, printed) in registry.CONSTS.items():
        for c, p in cts:
            if dom != "01" and p < 2:
                raise SystemExit("non-integrable counterterm tail: " + label)


if __name__ == "__main__":
    main()
