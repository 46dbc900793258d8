"""Emit ../data/recipes.json (force-coefficient transcription, kappa = 1) and
the embedded copy ../src/recipes_embedded.cpp.

The trees encode the equal-sphere energy-route reduction validated against
scripts/twosphere_solver.py; see also gen_reference.recipes()."""

import json

ETA = "eta1"


def n(x):
    return float(x)


def S(key):
    return ["S", key]


def add(*a):
    return ["add"] + list(a)


def sub(a, b):
    return ["sub", a, b]


def mul(*a):
    return ["mul"] + list(a)


def div(a, b):
    return ["div", a, b]


def neg(a):
    return ["neg", a]


def pow_(a, k):
    return ["pow", a, k]


def build():
    sh = ["sinh", ETA]
    ch = ["cosh", ETA]
    b0 = div(1.0, ["expm1", mul(2.0, ETA)])
    e4 = ["expm1", mul(4.0, ETA)]
    V0 = mul(0.5, add(mul(e4, S("U1k2")), b0))
    V1 = add(V0, mul(0.25, sub(mul(e4, S("U2k2")), b0)))
    V2 = div(add(mul(e4, S("U3k2")), b0, mul(-8.0, V0), mul(12.0, V1)), 6.0)
    V = [V0, V1, V2]
    Sm = [sub(S("T%dk3" % m), S("T%dk1" % m)) for m in range(3)]
    W = [add(Sm[m], V[m]) for m in range(3)]
    Y = [sub(Sm[m], V[m]) for m in range(3)]
    Wp = [neg(add(S("T%dk1" % (m + 1)), mul(2.0, S("T%dk2" % (m + 1))), S("T%dk3" % (m + 1))))
          for m in range(3)]
    Yp = [neg(add(S("T%dk1" % (m + 1)), mul(-2.0, S("T%dk2" % (m + 1))), S("T%dk3" % (m + 1))))
          for m in range(3)]

    WL = sub(W[2], div(pow_(W[1], 2), W[0]))  # W2 - W1^2/W0
    aL = mul(4.0, pow_(sh, 3), WL)
    daL = add(mul(12.0, pow_(sh, 2), ch, WL),
              mul(4.0, pow_(sh, 3),
                  sub(Wp[2], div(sub(mul(2.0, W[1], Wp[1], W[0]), mul(pow_(W[1], 2), Wp[0])),
                                 pow_(W[0], 2)))))
    aT = mul(2.0, pow_(sh, 3), sub(Y[2], Y[0]))
    daT = add(mul(6.0, pow_(sh, 2), ch, sub(Y[2], Y[0])),
              mul(2.0, pow_(sh, 3), sub(Yp[2], Yp[0])))

    F1 = neg(div(daL, mul(4.0, sh)))
    F2 = neg(div(daT, mul(4.0, sh)))
    F8 = neg(div(sub(aL, aT), mul(4.0, ch)))

    sig = mul(2.0, sh, Y[0])
    dlt = mul(2.0, sh, W[0])
    sigp = add(mul(2.0, ch, Y[0]), mul(2.0, sh, Yp[0]))
    dltp = add(mul(2.0, ch, W[0]), mul(2.0, sh, Wp[0]))
    F5 = neg(div(add(div(sigp, pow_(sig, 2)), div(dltp, pow_(dlt, 2))), mul(8.0, sh)))
    F6 = neg(div(sub(div(sigp, pow_(sig, 2)), div(dltp, pow_(dlt, 2))), mul(4.0, sh)))
    F7 = F5

    r = div(W[1], W[0])
    rp = div(sub(mul(Wp[1], W[0]), mul(W[1], Wp[0])), pow_(W[0], 2))
    F4 = div(add(mul(ch, r), mul(sh, rp), neg(sh)), mul(2.0, sh))
    F3 = neg(F4)
    F10 = div(sub(mul(sh, r), ch), mul(2.0, ch))
    F9 = neg(F10)

    notes = {
        1: "field^2, cos^2: half-gradient of the pair longitudinal polarizability",
        2: "field^2, sin^2: half-gradient of the pair transverse polarizability",
        3: "field-charge cross term, q1 (Z); equals -F4 for equal spheres",
        4: "field-charge cross term, q2 (Z): gradient of the induced floating potential",
        5: "charge^2 term, q1^2: capacitance-matrix gradient, symmetric/antisymmetric split",
        6: "charge cross term, q1 q2",
        7: "charge^2 term, q2^2; equals F5 for equal spheres",
        8: "field^2 transverse: alignment couple (aL - aT)/(2h)",
        9: "field-charge cross term, q1 (X); equals -F10 for equal spheres",
        10: "field-charge cross term, q2 (X): induced potential over h",
    }
    exprs = {1: F1, 2: F2, 3: F3, 4: F4, 5: F5, 6: F6, 7: F7, 8: F8, 9: F9, 10: F10}
    coefficients = [{"id": i, "note": notes[i], "expr": exprs[i]} for i in range(1, 11)]
    return coefficients


def fnv1a64(data: bytes) -> int:
    h = 0xcbf29ce484222325
    for b in data:
        h ^= b
        h = (h * 0x100000001b3) & 0xFFFFFFFFFFFFFFFF
    return h


def main():
    coefficients = build()
    # canonical serialization matches nlohmann::json dump(): compact, keys in
    # sorted order, shortest round-trip number formatting
    canon = json.dumps(coefficients, sort_keys=True, separators=(",", ":"))
    checksum = "%016x" % fnv1a64(canon.encode())
    doc = {
        "format": "bisphere force-coefficient recipes",
        "source": "Davis (1964), Q. J. Mech. Appl. Math. 17, 499; equal spheres "
                  "(kappa = 1), energy-route reduction to the T/U series basis",
        "version": 1,
        "checksum": checksum,
        "coefficients": coefficients,
    }
    text = json.dumps(doc, indent=1)
    with open("../data/recipes.json", "w") as f:
        f.write(text + "\n")
    with open("../src/recipes_embedded.cpp", "w") as f:
        f.write("// Generated from data/recipes.json -- do not edit by hand.\n")
        f.write("namespace bisphere::detail_recipes {\n")
        f.write("const char* embedded_recipes_json() {\n")
        f.write("    return R\"json(%s)json\";\n" % text)
        f.write("}\n}  // namespace bisphere::detail_recipes\n")
    print("recipes.json checksum", checksum)


if __name__ == "__main__":
    main()
