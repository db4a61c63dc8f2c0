#!/usr/bin/env python3
"""Independent symbolic oracle for the frozen expected values in the C++ tests.

Every closed form below is typed in exactly as printed (no simplification),
differentiated with sympy and evaluated at 30 digits. The output is a C++
header, tests/oracles/frozen_values.hpp, which the unit tests include.

Regenerate with:  python3 tests/oracles/derive_expected.py > tests/oracles/frozen_values.hpp
"""
import sympy as sp

s, c = sp.symbols("s c", real=True)
DIGITS = 30


def branch_forms(cv, reflect=False):
    cv = sp.nsimplify(cv)
    if cv == 0 and not reflect:
        return 2 * sp.atan(sp.exp(s)), sp.log(sp.exp(s) + sp.exp(-s))
    if cv == 1:
        return 2 * sp.atan(s) - s, sp.log(1 + s**2)
    if cv == -1:
        return -2 * sp.atan(s) + s, sp.log(1 + s**2)
    if abs(cv) < 1:
        w = sp.sqrt(1 - cv**2)
        if not reflect:
            x = 2 * sp.atan((sp.exp(w * s) - cv) / w) - cv * s
            y = sp.log(sp.exp(w * s) + sp.exp(-w * s) - 2 * cv)
        else:
            x = -2 * sp.atan((sp.exp(w * s) + cv) / w) - cv * s
            y = sp.log(sp.exp(w * s) + sp.exp(-w * s) + 2 * cv)
        return x, y
    # |c| > 1: c<-1 carries the minus sign, c>1 the plus sign.
    m = sp.sqrt(cv**2 - 1)
    t = sp.tan(m / 2 * s)
    a = sp.sqrt((cv - 1) / (cv + 1))
    sign = 1 if cv > 1 else -1
    x = sign * 2 * sp.atan(a * t) - cv * s
    y = -sp.log((t**2 + 1) / ((cv - 1) / (cv + 1) * t**2 + 1))
    return x, y


def ev(expr, sv):
    return sp.N(expr.subs(s, sp.nsimplify(sv)), DIGITS)


def fmt(v):
    return sp.sstr(sp.Float(v, DIGITS), full_prec=False) if v != 0 else "0.0"


def main():
    out = []
    out.append("// Generated by tests/oracles/derive_expected.py (sympy). Do not edit.")
    out.append("#pragma once\n")
    out.append("namespace wcc::frozen {\n")
    out.append("struct BranchPoint {\n  double c;\n  bool reflect;\n  double s;\n"
               "  double x, y, xp, yp, xpp, ypp, kf;\n};\n")
    out.append("// Positions and derivatives of the printed closed forms, "
               "differentiated symbolically.")
    out.append("inline constexpr BranchPoint kBranchPoints[] = {")
    grid = [(-3, False), (-1.5, False), (-1, False), (-0.5, False), (0, False),
            (0.5, False), (1, False), (1.5, False), (3, False),
            (-0.5, True), (0, True), (0.5, True), (0.9, True)]
    for cv, refl in grid:
        x, y = branch_forms(cv, refl)
        xp, yp = sp.diff(x, s), sp.diff(y, s)
        xpp, ypp = sp.diff(xp, s), sp.diff(yp, s)
        kf = xp * ypp - xpp * yp - xp
        if abs(cv) > 1:
            edge = float(sp.pi / sp.sqrt(sp.nsimplify(cv) ** 2 - 1))
            ss = [0, 0.3 * edge, -0.71 * edge, 0.95 * edge, -0.999 * edge]
        else:
            ss = [0, 0.7, -1.3, 2.9, -4.4]
        for sv in ss:
            vals = [ev(e, sv) for e in (x, y, xp, yp, xpp, ypp, kf)]
            out.append("    {%s, %s, %s, %s}," % (
                repr(float(cv)), "true" if refl else "false", repr(float(sv)),
                ", ".join(fmt(v) for v in vals)))
    out.append("};\n")

    gr_x, gr_y = branch_forms(0)
    c1_x, c1_y = branch_forms(1)
    k_c1 = sp.simplify(sp.diff(c1_x, s) * sp.diff(c1_y, s, 2)
                       - sp.diff(c1_x, s, 2) * sp.diff(c1_y, s))
    scalars = {
        "kEuclideanCurvatureC1AtZero": k_c1.subs(s, 0),
        "kEuclideanCurvatureC1AtOne": k_c1.subs(s, 1),
        "kGrimReaperWeightedLengthUnit": sp.integrate(sp.exp(gr_y), (s, 0, 1)),
        "kVerticalWeightedLengthUnit": sp.integrate(sp.exp(s), (s, 0, 1)),
        "kVerticalWeightedLengthFive": sp.integrate(sp.exp(s), (s, 0, 5)),
        "kVerticalWeightedLengthTwo": sp.integrate(sp.exp(s), (s, 0, 2)),
        "kGrimReaperXAtMinusOne": gr_x.subs(s, -1),
        "kGrimReaperXAtPlusOne": gr_x.subs(s, 1),
        "kGrimReaperYAtOne": gr_y.subs(s, 1),
        "kHalfOpenXAtZero": branch_forms(0.5)[0].subs(s, 0),
        "kSuperTwoDomainEdge": sp.pi / sp.sqrt(3),
    }
    # Rescaled curvature, printed form, |c|>1.
    for cv, sv, name in [(2, 0, "kRescaledC2AtZero")]:
        m = sp.sqrt(cv**2 - 1)
        expr = ((-cv * sp.cos(m * s) - 1) / (cv + sp.cos(m * s)) + cv) / m
        scalars[name] = expr.subs(s, sv)
    m2 = sp.sqrt(3)
    expr2 = ((-2 * sp.cos(m2 * s) - 1) / (2 + sp.cos(m2 * s)) + 2) / m2
    scalars["kRescaledC2AtEdge"] = sp.limit(expr2, s, sp.pi / m2)
    for cv in (10, 100, 1000):
        m = sp.sqrt(cv**2 - 1)
        th = sp.symbols("th", real=True)
        r = ((-cv * sp.cos(th) - 1) / (cv + sp.cos(th)) + cv) / m
        # extreme over a period: cos(th) = -1 gives the max deviation
        sup = sp.Max(sp.Abs(r.subs(th, sp.pi) - 1), sp.Abs(r.subs(th, 0) - 1))
        scalars["kSupDevC%d" % cv] = sup
    for name, v in scalars.items():
        out.append("inline constexpr double %s = %s;" % (name, fmt(sp.N(v, DIGITS))))
    out.append("\n}  // namespace wcc::frozen")
    print("\n".join(out))


if __name__ == "__main__":
    main()
