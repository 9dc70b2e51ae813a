#!/usr/bin/env python3
"""Symbolic derivation of the 3-link disc-biped dynamics.

Derives the pinned-model matrices D, C (Christoffel), G, B, the extended
(unpinned, hip-augmented) inertia matrix used by the impact solver, and the
swing-foot kinematics. Prints the simplified closed forms that are hard-coded
in include/discwalk/dynamics.hpp and include/discwalk/impact.hpp, and can emit
a header of frozen numeric test vectors (tests/frozen_dynamics.hpp).

Conventions (see README):
  q = (q_d, q_r, q_N); q_N absolute stance-leg angle from vertical, CCW+;
  q_r = swing-leg angle minus stance-leg angle; q_d disc angle relative to
  the stance-leg-fixed hip frame. Stance foot at the origin, x right, y up;
  unit vector along a leg (foot -> hip) at absolute angle a is
  u(a) = (-sin a, cos a).

Usage:
  python3 scripts/derive_dynamics.py           # print closed forms
  python3 scripts/derive_dynamics.py --emit-header > tests/frozen_dynamics.hpp
"""

import sys
import sympy as sp


def pinned_model():
    t = sp.symbols("t")
    L, ml, lc, Il, mh, Jd, g = sp.symbols("L m_l l_c I_l m_h J_d g", positive=True)
    qd = sp.Function("q_d")(t)
    qr = sp.Function("q_r")(t)
    qN = sp.Function("q_N")(t)
    q = sp.Matrix([qd, qr, qN])
    qdot = q.diff(t)

    def u(a):
        return sp.Matrix([-sp.sin(a), sp.cos(a)])

    hip = L * u(qN)
    com_stance = (L - lc) * u(qN)
    com_swing = hip - lc * u(qN + qr)

    v_stance = com_stance.diff(t)
    v_swing = com_swing.diff(t)
    v_hip = hip.diff(t)

    T = (
        sp.Rational(1, 2) * ml * (v_stance.T * v_stance)[0]
        + sp.Rational(1, 2) * Il * qN.diff(t) ** 2
        + sp.Rational(1, 2) * ml * (v_swing.T * v_swing)[0]
        + sp.Rational(1, 2) * Il * (qN.diff(t) + qr.diff(t)) ** 2
        + sp.Rational(1, 2) * mh * (v_hip.T * v_hip)[0]
        + sp.Rational(1, 2) * Jd * (qN.diff(t) + qd.diff(t)) ** 2
    )
    V = g * (ml * com_stance[1] + ml * com_swing[1] + mh * hip[1])

    D = sp.trigsimp(sp.simplify(sp.hessian(T, qdot)))
    G = sp.Matrix([sp.trigsimp(sp.diff(V, qi)) for qi in q])

    # Christoffel-symbol Coriolis matrix: C[k,j] = sum_i c_{ijk} qdot_i
    C = sp.zeros(3, 3)
    for k in range(3):
        for j in range(3):
            acc = 0
            for i in range(3):
                cijk = (
                    sp.diff(D[k, j], q[i]) + sp.diff(D[k, i], q[j]) - sp.diff(D[i, j], q[k])
                ) / 2
                acc += cijk * qdot[i]
            C[k, j] = sp.trigsimp(sp.simplify(acc))

    E = sp.simplify(T + V)
    return dict(t=t, params=(L, ml, lc, Il, mh, Jd, g), q=q, qdot=qdot, D=D, C=C, G=G, T=T, V=V, E=E)


def extended_model():
    """Floating model with hip Cartesian coordinates, for the impact solve.

    q_e = (q_d, q_r, q_N, x_h, y_h). Angles keep the pinned-model meaning
    (q_N still names the OLD stance leg during the impact instant).
    """
    t = sp.symbols("t")
    L, ml, lc, Il, mh, Jd, g = sp.symbols("L m_l l_c I_l m_h J_d g", positive=True)
    qd = sp.Function("q_d")(t)
    qr = sp.Function("q_r")(t)
    qN = sp.Function("q_N")(t)
    xh = sp.Function("x_h")(t)
    yh = sp.Function("y_h")(t)
    qe = sp.Matrix([qd, qr, qN, xh, yh])
    qedot = qe.diff(t)

    def u(a):
        return sp.Matrix([-sp.sin(a), sp.cos(a)])

    hip = sp.Matrix([xh, yh])
    com_stance = hip - lc * u(qN)
    com_swing = hip - lc * u(qN + qr)
    foot_swing = hip - L * u(qN + qr)

    v_st = com_stance.diff(t)
    v_sw = com_swing.diff(t)
    v_h = hip.diff(t)

    T = (
        sp.Rational(1, 2) * ml * (v_st.T * v_st)[0]
        + sp.Rational(1, 2) * Il * qN.diff(t) ** 2
        + sp.Rational(1, 2) * ml * (v_sw.T * v_sw)[0]
        + sp.Rational(1, 2) * Il * (qN.diff(t) + qr.diff(t)) ** 2
        + sp.Rational(1, 2) * mh * (v_h.T * v_h)[0]
        + sp.Rational(1, 2) * Jd * (qN.diff(t) + qd.diff(t)) ** 2
    )
    De = sp.trigsimp(sp.simplify(sp.hessian(T, qedot)))

    Jsw = foot_swing.jacobian(qe)
    Jsw = sp.simplify(Jsw)
    return dict(De=De, Jsw=Jsw, foot_swing=foot_swing)


def print_forms():
    m = pinned_model()
    sp.init_printing(use_unicode=True, wrap_line=False)
    print("== D(q_r) ==")
    sp.pprint(m["D"])
    print("== C(q_r, qdot) ==")
    sp.pprint(m["C"])
    print("== G(q_r, q_N) ==")
    sp.pprint(m["G"])
    print("== potential V ==")
    sp.pprint(sp.simplify(m["V"]))
    e = extended_model()
    print("== extended D_e ==")
    sp.pprint(e["De"])
    print("== swing-foot Jacobian (extended coords) ==")
    sp.pprint(e["Jsw"])


def emit_header():
    import mpmath

    mpmath.mp.dps = 30
    m = pinned_model()
    t = m["t"]
    L, ml, lc, Il, mh, Jd, g = m["params"]
    defaults = {L: sp.Rational(1), ml: sp.Rational(5), lc: sp.Rational(1, 2),
                Il: sp.Rational(5, 12), mh: sp.Rational(10), Jd: sp.Rational(1, 2),
                g: sp.Rational(981, 100)}

    qd, qr, qN = m["q"]
    vd, vr, vN = m["qdot"]

    cases = [
        # (q_d, q_r, q_N, qd_d, qd_r, qd_N)
        (0, 0, 0, 0, 0, 0),
        (sp.Rational(3, 10), -sp.Rational(1, 2), sp.Rational(1, 5),
         sp.Rational(7, 10), -sp.Rational(2, 5), sp.Rational(3, 5)),
        (-sp.Rational(11, 10), sp.Rational(4, 5), -sp.Rational(1, 4),
         -sp.Rational(3, 2), sp.Rational(1, 10), -sp.Rational(9, 10)),
        (sp.Rational(21, 10), -sp.Rational(13, 20), sp.Rational(2, 5),
         sp.Rational(1, 4), sp.Rational(11, 10), sp.Rational(1, 2)),
    ]

    def fmt(x):
        return mpmath.nstr(mpmath.mpf(str(sp.N(x, 25))), 17, strip_zeros=False)

    rows = []
    for c in cases:
        subs = dict(defaults)
        subs.update({qd: c[0], qr: c[1], qN: c[2], vd: c[3], vr: c[4], vN: c[5]})
        D = m["D"].subs(subs)
        C = m["C"].subs(subs)
        G = m["G"].subs(subs)
        E = m["E"].subs(subs)
        sigma = (m["D"][2, :] * m["qdot"]).subs(subs)[0]
        entry = {
            "q": [c[0], c[1], c[2]],
            "v": [c[3], c[4], c[5]],
            "D": [D[i, j] for i in range(3) for j in range(3)],
            "C": [C[i, j] for i in range(3) for j in range(3)],
            "G": [G[i] for i in range(3)],
            "E": E,
            "sigma": sigma,
        }
        rows.append(entry)

    out = []
    out.append("// Generated by scripts/derive_dynamics.py --emit-header. Do not edit.")
    out.append("#pragma once")
    out.append("#include <array>")
    out.append("")
    out.append("namespace frozen {")
    out.append("")
    out.append("struct DynCase {")
    out.append("  std::array<double, 3> q;")
    out.append("  std::array<double, 3> v;")
    out.append("  std::array<double, 9> D;   // row major")
    out.append("  std::array<double, 9> C;   // row major")
    out.append("  std::array<double, 3> G;")
    out.append("  double energy;")
    out.append("  double sigma_N;")
    out.append("};")
    out.append("")
    out.append("// Default parameters: L=1, m_l=5, l_c=1/2, I_l=5/12, m_h=10, J_d=1/2, g=9.81")
    out.append("inline constexpr std::array<DynCase, %d> kDynCases{{" % len(rows))
    for r in rows:
        out.append("    DynCase{")
        out.append("        {%s}," % ", ".join(fmt(x) for x in r["q"]))
        out.append("        {%s}," % ", ".join(fmt(x) for x in r["v"]))
        out.append("        {%s}," % ", ".join(fmt(x) for x in r["D"]))
        out.append("        {%s}," % ", ".join(fmt(x) for x in r["C"]))
        out.append("        {%s}," % ", ".join(fmt(x) for x in r["G"]))
        out.append("        %s," % fmt(r["E"]))
        out.append("        %s," % fmt(r["sigma"]))
        out.append("    },")
    out.append("}};")
    out.append("")
    out.append("}  // namespace frozen")
    print("\n".join(out))


if __name__ == "__main__":
    if "--emit-header" in sys.argv:
        emit_header()
    else:
        print_forms()
