"""Independent two-sphere electrostatics solver (unit radii, Gaussian units).

Spheres centered at c1 = +d z, c2 = -d z, d = cosh(u).  External uniform field
E = E (cos(t) z + sin(t) x), sphere charges q1, q2.  Solves by twin multipole
expansions + z-axis translation, then integrates the Maxwell stress over a
sphere around sphere 2.  This is the reference oracle for F_1..F_10.
"""

import numpy as np
from scipy.special import lpmv, eval_legendre
from math import comb

L = 80


def translate_m0(R):
    """RH[l,k]: P_l(cos th_src)/r_src^{l+1} = sum_k RH[l,k] r_tgt^k P_k(cos th_tgt),
    target center BELOW source by R (c_tgt = c_src - R z)."""
    M = np.zeros((L + 1, L + 1))
    for l in range(L + 1):
        for k in range(L + 1):
            M[l, k] = (-1.0) ** l * comb(l + k, k) / R ** (l + k + 1)
    return M


def translate_m0_up(R):
    """target center ABOVE source by R."""
    M = np.zeros((L + 1, L + 1))
    for l in range(L + 1):
        for k in range(L + 1):
            M[l, k] = (-1.0) ** k * comb(l + k, k) / R ** (l + k + 1)
    return M


def translate_m1(R, up):
    """P_l^1/r^{l+1} -> r^k P_k^1 for z-axis shifts."""
    M = np.zeros((L + 1, L + 1))
    for l in range(1, L + 1):
        for k in range(1, L + 1):
            s = (-1.0) ** (k + 1) if up else (-1.0) ** (l + 1)
            M[l, k] = s * comb(l + k, l - 1) / R ** (l + k + 1)
    return M


def _check_translations():
    """Verify translation matrices against direct evaluation."""
    R = 2.9
    rng = np.random.default_rng(0)
    for up in (False, True):
        Tm0 = translate_m0_up(R) if up else translate_m0(R)
        Tm1 = translate_m1(R, up)
        czs = R if up else -R  # target center rel source
        for trial in range(4):
            l = rng.integers(1, 6)
            # random point near target center, radius <0.9
            rt = 0.3 + 0.5 * rng.random()
            tht = rng.random() * np.pi
            x, z2 = rt * np.sin(tht), rt * np.cos(tht)
            z = z2 + czs  # source-frame z
            rs = np.hypot(x, z)
            ths = np.arctan2(x, z)
            lhs0 = eval_legendre(l, np.cos(ths)) / rs ** (l + 1)
            rhs0 = sum(Tm0[l, k] * rt**k * eval_legendre(k, np.cos(tht)) for k in range(L + 1))
            lhs1 = lpmv(1, l, np.cos(ths)) / rs ** (l + 1)
            rhs1 = sum(Tm1[l, k] * rt**k * lpmv(1, k, np.cos(tht)) for k in range(1, L + 1))
            assert abs(lhs0 - rhs0) < 1e-10 * max(1, abs(lhs0)), (up, l, lhs0, rhs0)
            assert abs(lhs1 - rhs1) < 1e-9 * max(1, abs(lhs1)), (up, l, lhs1, rhs1)


def solve_m0(u, V1, V2, EL):
    """Axisymmetric problem: sphere potentials V1,V2, field EL z.
    Returns (A, B, q1, q2): multipoles of spheres 1 (upper) and 2 (lower)."""
    d = np.cosh(u)
    R = 2 * d
    Tdown = translate_m0(R)   # sphere-1 multipoles expressed at sphere 2
    Tup = translate_m0_up(R)  # sphere-2 multipoles at sphere 1
    # Regular external coefficients in each frame: Phi_ext = -EL z
    # frame1 (center +d): -EL z1 - EL d ; frame2: -EL z2 + EL d
    c_ext1 = np.zeros(L + 1); c_ext1[0] = -EL * d; c_ext1[1] = -EL
    c_ext2 = np.zeros(L + 1); c_ext2[0] = +EL * d; c_ext2[1] = -EL
    # unknown X = [A; B]; BC on sphere i:  A_k + (regular at i)_k = V_i delta_k0
    # regular at 1 = c_ext1 + Tup^T B ; at 2 = c_ext2 + Tdown^T A
    I = np.eye(L + 1)
    Z = np.zeros((L + 1, L + 1))
    top = np.hstack([I, Tup.T])
    bot = np.hstack([Tdown.T, I])
    Mat = np.vstack([top, bot])
    rhs = np.concatenate([np.eye(1, L + 1, 0).ravel() * V1 - c_ext1,
                          np.eye(1, L + 1, 0).ravel() * V2 - c_ext2])
    X = np.linalg.solve(Mat, rhs)
    A, B = X[: L + 1], X[L + 1:]
    return A, B, A[0], B[0]


def solve_m1(u, ET):
    """Transverse field ET x, conductors grounded for the m=1 component."""
    d = np.cosh(u)
    R = 2 * d
    T1d = translate_m1(R, up=False)
    T1u = translate_m1(R, up=True)
    # Phi_ext = -ET x = +ET r P_1^1(cos th) cos phi  (P_1^1 = -sin th)
    c_ext = np.zeros(L + 1); c_ext[1] = ET
    I = np.eye(L + 1)
    Mat = np.vstack([np.hstack([I, T1u.T]), np.hstack([T1d.T, I])])
    rhs = np.concatenate([-c_ext, -c_ext])
    X = np.linalg.solve(Mat, rhs)
    return X[: L + 1], X[L + 1:]


def field_cyl(A_irr, c_reg, r, th, m):
    """Cylindrical field components (E_s, E_z[, E_phi-coef]) at (r, th) in a frame,
    from irregular multipoles A and regular coefficients c (m=0 or 1 sector)."""
    mu = np.cos(th)
    st = np.sin(th)
    ks = np.arange(L + 1)
    if m == 0:
        P = np.array([eval_legendre(k, mu) for k in ks])
        dP = np.array([k * (mu * eval_legendre(k, mu) - (eval_legendre(k - 1, mu) if k else 0)) / (mu * mu - 1) if k else 0.0 for k in ks])
    else:
        P = np.array([lpmv(1, k, mu) for k in ks])
        dP = np.array([(k * mu * lpmv(1, k, mu) - (k + 1) * lpmv(1, k - 1, mu)) / (mu * mu - 1) if k >= 1 else 0.0 for k in ks])
    dPdth = -st * dP
    Er = np.sum((ks + 1) * A_irr * P / r ** (ks + 2)) - np.sum(ks * c_reg * P * r ** (ks - 1))
    Eth = -(np.sum(A_irr * dPdth / r ** (ks + 2)) + np.sum(c_reg * dPdth * r ** (ks - 1)))
    Es = Er * st + Eth * mu
    Ez = Er * mu - Eth * st
    if m == 0:
        return Es, Ez, 0.0
    Ephi = np.sum(A_irr * P / r ** (ks + 2)) / st + np.sum(c_reg * P * r ** (ks - 1)) / st
    return Es, Ez, Ephi


def stress_force(u, q1, q2, E0, theta, nint=600, rho=None):
    """Force (Fz, Fx) on sphere 2 from the Maxwell stress tensor."""
    d = np.cosh(u)
    R = 2 * d
    EL, ET = E0 * np.cos(theta), E0 * np.sin(theta)
    # basis m=0 solutions
    A1, B1, q11, q21 = solve_m0(u, 1.0, 0.0, 0.0)
    A2, B2, q12, q22 = solve_m0(u, 0.0, 1.0, 0.0)
    AE, BE, q1E, q2E = solve_m0(u, 0.0, 0.0, EL)
    C = np.array([[q11, q12], [q21, q22]])
    ab = np.linalg.solve(C, [q1 - q1E, q2 - q2E])
    A = ab[0] * A1 + ab[1] * A2 + AE
    B = ab[0] * B1 + ab[1] * B2 + BE
    A1m, B1m = solve_m1(u, ET)

    rho = rho or (1.0 + (R - 2.0) / 2.0 + 0.35)  # between the spheres' surfaces
    rho = min(rho, R - 1.02)
    xs, ws = np.polynomial.legendre.leggauss(nint)
    th2 = np.arccos(xs)  # theta in frame 2

    Fz = 0.0
    Fx = 0.0
    for t2, w in zip(th2, ws):
        s, z2 = rho * np.sin(t2), rho * np.cos(t2)
        # frame-1 coordinates of the point (frame1 center at +R relative to c2)
        z1 = z2 - R
        r1 = np.hypot(s, z1)
        t1 = np.arctan2(s, z1)
        # m=0 field: external + both frames
        Es0 = 0.0; Ez0 = EL
        e = field_cyl(B, np.zeros(L + 1), rho, t2, 0); Es0 += e[0]; Ez0 += e[1]
        e = field_cyl(A, np.zeros(L + 1), r1, t1, 0); Es0 += e[0]; Ez0 += e[1]
        # m=1 sector
        Es1 = 0.0; Ez1 = 0.0; Ep1 = 0.0
        e = field_cyl(B1m, np.zeros(L + 1), rho, t2, 1); Es1 += e[0]; Ez1 += e[1]; Ep1 += e[2]
        e = field_cyl(A1m, np.zeros(L + 1), r1, t1, 1); Es1 += e[0]; Ez1 += e[1]; Ep1 += e[2]
        Es1 += ET; Ep1 += -ET  # external transverse: E_s = ET cos, E_phi = -ET sin
        st, ct = np.sin(t2), np.cos(t2)
        a = Es0 * st + Ez0 * ct
        c = Es0 * ct - Ez0 * st
        b = Es1 * st + Ez1 * ct
        dd = Es1 * ct - Ez1 * st
        ee = Ep1
        integrand_z = ct * ((a * a - c * c) / 2 + (b * b - dd * dd - ee * ee) / 4) - st * (a * c + b * dd / 2)
        integrand_x = (a * b - c * dd) * st / 1 + (c * b + a * dd) * ct - ee * a
        Fz += w * integrand_z
        Fx += w * integrand_x
    # dtheta weights: int f(th) sin th dth = int f d(-cos th) -> leggauss in x=cos th
    Fz *= rho * rho / 2.0
    Fx *= rho * rho / 4.0
    return Fz, Fx


def coefficients(u):
    """Extract F1..F10 by probing."""
    F = {}
    F[1] = stress_force(u, 0, 0, 1.0, 0.0)[0]
    F[2] = stress_force(u, 0, 0, 1.0, np.pi / 2)[0]
    F[8] = stress_force(u, 0, 0, 1.0, np.pi / 4)[1]
    F[5] = stress_force(u, 1, 0, 0.0, 0.0)[0]
    F[7] = stress_force(u, 0, 1, 0.0, 0.0)[0]
    F[6] = stress_force(u, 1, 1, 0.0, 0.0)[0] - F[5] - F[7]
    F[3] = stress_force(u, 1, 0, 1.0, 0.0)[0] - F[1] - F[5]
    F[4] = stress_force(u, 0, 1, 1.0, 0.0)[0] - F[1] - F[7] - 1.0
    F[9] = stress_force(u, 1, 0, 1.0, np.pi / 2)[1]
    F[10] = stress_force(u, 0, 1, 1.0, np.pi / 2)[1] - 1.0
    return F


if __name__ == "__main__":
    _check_translations()
    print("translation matrices verified")
    # sanity: far-separation limits
    for u in (3.0,):
        F = coefficients(u)
        h = 2 * np.cosh(u)
        print("u=%g h=%g" % (u, h))
        print("  F6=%.6g  vs -1/h^2=%.6g" % (F[6], -1 / h**2))
        print("  F4=%.6g  vs 2/h^3=%.6g" % (F[4], 2 / h**3))
        print("  F10=%.6g vs -1/h^3=%.6g" % (F[10], -1 / h**3))
        print("  F1=%.6g  vs +6/h^4=%.6g" % (F[1], 6 / h**4))
        print("  F2=%.6g  vs -3/h^4=%.6g" % (F[2], -3 / h**4))
        print("  F5=%.6g F7=%.6g (expect ~ -1/h^3 x q^2 image..)" % (F[5], F[7]))
        print("  F3=%.6g F9=%.6g F8=%.6g" % (F[3], F[9], F[8]))
