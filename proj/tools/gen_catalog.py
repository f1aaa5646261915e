#!/usr/bin/env python3
"""Regenerate data/catalog.json from the printed solution formulas.

Each formula is kept here in readable form. The script splits every
function into the a(s) + b(s)*u normal form over the curve u^2 = f(s)
and writes numerator/denominator coefficient lists (lowest degree first,
coefficients as "p/q" strings) for the C++ loader.

    python3 tools/gen_catalog.py                 # writes data/catalog.json
    python3 tools/gen_catalog.py --numeric-check # also spot-checks PVI numerically
"""

import argparse
import json
import pathlib
import sys

import sympy as sp

s, u, y_, t_ = sp.symbols("s u y t")

T29 = "(s+2)*(2*s^2+3*s+3)^2*s^5/((2*s+1)*(3*s^2+3*s+2)^2)"
T22 = "432*s/((s+5)*(s-4)^2*(s+1)^3)"
T24 = "s^5*(s+4)^3/(4*(s-1)*(s^2+4)^2*(s+1)^3)"
T34 = "1/2-(8*s^6+20*s^3-15*s^2+66*s-15)/(2*(8*s^2-5*s+5)*u)"
T38 = ("1/2-3*(500*s^7+925*s^6+1164*s^5+830*s^4+340*s^3+105*s^2+20*s+4)"
       "/(2*(s+2)^2*(5*s+1)*u^3)")
T39 = ("1/2-(2*s^7+10*s^6-90*s^4-135*s^3+297*s^2+945*s+675)*u"
       "/(18*(4*s^2+15*s+15)^2*(s^2-5))")
TC = ("1/2+(s+1)*(32*(s^8+1)-320*(s^7+s)+1112*(s^6+s^2)-2420*(s^5+s^3)+3167*s^4)"
      "/(54*u^3*s*(s-1))")
P42 = "(8*s^10+100*s^7-135*s^6+834*s^5-1205*s^4+2280*s^3-1365*s^2+890*s+321)"
T42 = f"1/2-(s+3)*{P42}/(2*(s^2+1)^2*u^3)"

F33 = """
(15524784*t^2-5373216*t+1350000)*y^12
-(128381760*t^2-13366080*t)*y^11
+(5425704*t^3+496677744*t^2-30539160*t)*y^10
-(14929920*t^4+41364000*t^3+866759680*t^2-2928160*t)*y^9
+(107546535*t^4-508275750*t^3+747613335*t^2-1837080*t)*y^8
-(24385536*t^5-285548724*t^4-2437066824*t^3+74927724*t^2+944784*t)*y^7
+(58212000*t^5-2865570750*t^4-4456260900*t^3+17631810*t^2)*y^6
-(49787136*t^6-904003584*t^5-7215732804*t^4-2130570936*t^3-12872196*t^2)*y^5
-(413500320*t^6+3724484160*t^5+4839581265*t^4+162430110*t^3+3750705*t^2)*y^4
+(3001304640*t^6+74794560*t^5+2710584000*t^4-380946240*t^3)*y^3
-(940800000*t^7+977540640*t^6-726801696*t^5+939255264*t^4-72013536*t^3)*y^2
+(1176000000*t^7-1481095680*t^6+765158400*t^5)*y
-(1920800000*t^8-7212800000*t^7+10522980864*t^6-6913299456*t^5+1728324864*t^4)
"""

ENTRIES = [
    dict(id="sqrt_t", anchor="y = +-sqrt(t) when theta2 = theta3 and theta1 + theta4 = 1",
         theta="1/3,1/5,1/5,2/3",
         family=["1/3,2/5,2/5,2/3", "1/5,2/5,2/5,4/5", "2/7,3/7,3/7,5/7"],
         y="s", t="s^2"),
    dict(id="hittet", anchor="three-branch tetrahedral family on theta1/2 = theta2 = theta3, theta4 = 2/3",
         theta="2/5,1/5,1/5,2/3",
         family=["4/5,2/5,2/5,2/3", "2/3,1/3,1/3,2/3"],
         y="(s-1)*(s+2)/(s*(s+1))", t="(s-1)^2*(s+2)/((s+1)^2*(s-2))"),
    dict(id="dih", anchor="four-branch dihedral family on theta1 = theta2 = theta3, theta4 = 1/2",
         theta="1/5,1/5,1/5,1/2",
         family=["2/5,2/5,2/5,1/2", "1/7,1/7,1/7,1/2"],
         y="s^2*(s+2)/(s^2+s+1)", t="s^3*(s+2)/(2*s+1)"),
    dict(id="hitoct", anchor="four-branch octahedral family on theta1 = theta2 = theta3, theta4 = 1 -+ 3 theta1",
         theta="1/5,1/5,1/5,2/5",
         family=["2/5,2/5,2/5,11/5", "1/7,1/7,1/7,4/7"],
         y="(s-1)^2/(s*(s-2))", t="(s+1)*(s-1)^3/(s^3*(s-2))",
         implicit="3*y^4-(4*t+4)*y^3+6*t*y^2-t^2"),
    dict(id="sol19", anchor="solution 19 at (2,2,2,1)/5",
         theta="2/5,2/5,2/5,1/5",
         y="(7+22*s+7*s^2)/(8*(1+s+s^2)*s*(s+2))", t="(1+2*s)/(s^3*(s+2))"),
    dict(id="sol20", anchor="solution 20, genus 0, 5 branches",
         theta="2/5,1/3,1/5,2/3",
         y="2*(s^2+s+7)*(5*s-2)/(s*(s+5)*(4*s^2-5*s+10))",
         t="27*(5*s-2)^2/((s+5)*(4*s^2-5*s+10)^2)"),
    dict(id="sol22", anchor="solution 22, genus 0, 6 branches",
         theta="1/5,1/5,2/5,1/3",
         y="-54*s*(s-7)/((s^4-20*s^2-35)*(s+1)*(s-4))", t=T22,
         leading=dict(s0="0")),
    dict(id="sol23", anchor="solution 23, genus 0, 6 branches",
         theta="2/5,2/5,1/5,2/3",
         y="18*s*(s-3)/((s-4)*(s+1)*(s^2+5))", t=T22,
         leading=dict(s0="0")),
    dict(id="sol24", anchor="solution 24, genus 0, 8 branches",
         theta="1/2,2/5,1/5,4/5",
         y="s*(s+4)*(3*s^4-2*s^3-2*s^2+8*s+8)/(8*(s-1)*(s^2+4)*(s+1)^2)", t=T24),
    dict(id="sol25", anchor="solution 25, genus 0, 8 branches",
         theta="2/5,2/5,1/2,4/5",
         y="s^2*(5*s^3+2*s^2-4*s-8)*(s+4)^2/(4*(s+1)^2*(s^2+4)*(s-1)*(s^2+3*s+6))", t=T24),
    dict(id="sol27", anchor="solution 27, genus 1, 9 branches",
         theta="2/5,2/5,2/5,2/3", printed_theta="2/5,2/5,2/3,2/5",
         note="the printed header swaps theta3 and theta4; the formulas solve PVI at (2/5,2/5,2/5,2/3)",
         f="s*(8*s+1)*(5*s+4)",
         y="1/2+(350*s^3+63*s^2-6*s-2)/(30*(2*s+1)*s*u)",
         t="1/2+(25*s^4+170*s^3+42*s^2+8*s-2)*u/(54*(5*s+4)^2*s^3)",
         leading=dict(s0="1/10", u0="9/10")),
    dict(id="sol28", anchor="solution 28, genus 0, 10 branches",
         theta="1/2,1/2,1/5,3/5",
         y="(s^5+5*s^4-20*s^3+75*s+75)*(s^2-5)*(s^2+5)/((s+1)^2*(s^2-4*s+5)*(s+5)*(s^4+6*s^2-75))",
         t="2*(s^2+5)^3*(s^2-5)^2/((s+5)^3*(s^2-4*s+5)^2*(s+1)^3)"),
    dict(id="sol29", anchor="solution 29, genus 0, 10 branches",
         theta="1/3,1/3,1/3,4/5",
         y="(s+2)*(s^2+1)*(2*s^2+3*s+3)*s^2/(2*(s^2+s+1)*(3*s^2+3*s+2))", t=T29,
         leading=dict(s0="-2")),
    dict(id="sol30", anchor="solution 30, genus 0, 10 branches",
         theta="1/3,1/3,1/3,2/5",
         y="(s+2)*(2*s^2+3*s+3)*(7*s^2+10*s+7)*s^4/((3*s^2+3*s+2)*(4*s^6+12*s^5+15*s^4+10*s^3+15*s^2+12*s+4))",
         t=T29, leading=dict(s0="-2")),
    dict(id="sol33", alias="thmB", anchor="generic solution, 12 branches, on no affine F4 hyperplane",
         theta="2/5,1/2,1/3,4/5",
         y="-9*s*(s^2+1)*(3*s-4)*(15*s^4-5*s^3+3*s^2-3*s+2)/((2*s-1)^2*(9*s^2+4)*(9*s^2+3*s+10))",
         t="27*s^5*(s^2+1)^2*(3*s-4)^3/(4*(2*s-1)^3*(9*s^2+4)^2)",
         implicit=F33),
    dict(id="sol34", anchor="solution 34, genus 1, 12 branches",
         theta="1/5,1/3,1/5,1/2", f="(3*s+5)*(8*s^2-5*s+5)",
         y="1/2+(3*s+5)*(8*s^4-10*s^3+12*s^2-13*s+11)/(2*(2*s^3-15*s+5)*u)", t=T34),
    dict(id="sol35", anchor="solution 35, genus 1, 12 branches",
         theta="2/5,1/3,2/5,1/2", f="(3*s+5)*(8*s^2-5*s+5)",
         y="1/2-(3*s+5)*(16*s^5-8*s^4+18*s^3-8*s^2+115*s+3)/(2*(26*s^3+60*s^2+15*s+35)*u)",
         printed_y="1/2+(3*s+5)*(16*s^5-8*s^4+18*s^3-8*s^2+115*s+3)/(2*(26*s^3+60*s^2+15*s+35)*u)",
         note="the sign of the u-term is flipped relative to the printed formula", t=T34),
    dict(id="sol36", anchor="solution 36, genus 1, 12 branches",
         theta="1/3,1/5,1/3,2/5", f="3*(5*s+1)*(8*s^2-9*s+3)",
         y="1/2+(140*s^6+1029*s^5-1023*s^4+360*s^3-288*s^2+27*s+27)/(18*u*(s+1)*(7*s^3-3*s^2-s+1))",
         t="1/2+(40*s^6+540*s^5-765*s^4+540*s^3-270*s^2+27)/(6*u*(8*s^2-9*s+3)*(s+1)^2)"),
    dict(id="sol37", anchor="Valentiner solution 37, genus 1, 15 branches",
         theta="1/3,1/3,1/3,1/5", f="(4*s^2+s+1)*(5*s+1)",
         y="1/2-(1000*s^8+2425*s^7+4171*s^6+3805*s^5+1999*s^4+874*s^3+244*s^2+58*s+4)"
           "/(4*(s+2)*(25*s^6+135*s^5+111*s^4+91*s^3+36*s^2+6*s+1)*u)",
         t=T38),
    dict(id="sol38", anchor="Valentiner solution 38, genus 1, 15 branches",
         theta="1/3,1/3,1/3,3/5", f="(4*s^2+s+1)*(5*s+1)",
         y="1/2-(250*s^6+500*s^5+518*s^4+261*s^3+76*s^2+13*s+2)/(2*(s+2)*(5*s+1)*(5*s^3+6*s^2+3*s+1)*u)",
         t=T38),
    dict(id="sol39", anchor="solution 39, genus 1, 15 branches",
         theta="1/3,4/5,1/3,4/5", f="3*(s+5)*(4*s^2+15*s+15)",
         y="1/2+(14*s^5+61*s^4-66*s^3-660*s^2-900*s-225)/(6*(s+1)*(s^2-5)*u)", t=T39),
    dict(id="sol40", anchor="solution 40, genus 1, 15 branches",
         theta="3/5,2/3,3/5,2/3", f="3*(s+5)*(4*s^2+15*s+15)",
         y="1/2-(2*s^9+20*s^8+53*s^7-89*s^6-605*s^5-851*s^4-1389*s^3-5775*s^2-10125*s-5625)"
           "/(2*(s^2-5)*(s^2-6*s-15)*(s^2+4*s+5)*u)",
         t=T39),
    dict(id="thmC", anchor="elliptic solution with all theta = 1/3 (row 41 class)",
         theta="1/3,1/3,1/3,1/3", f="s*(8*s^2-11*s+8)",
         y="1/2-(8*s^7-28*s^6+75*s^5+31*s^4-269*s^3+318*s^2-166*s+56)/(18*u*(s-1)*(3*s^3-4*s^2+4*s+2))",
         t=TC),
    dict(id="dm41", anchor="row 41 class at theta = (0,0,0,-2/3), same t,u,s as thmC",
         theta="0,0,0,-2/3", f="s*(8*s^2-11*s+8)",
         y="1/2+(128*s^18-2496*s^17+19728*s^16+4605216*s^15-53030400*s^14+229874976*s^13"
           "-600089472*s^12+968994816*s^11-823777848*s^10-88169600*s^9+1204313064*s^8"
           "-1658437668*s^7+1282505784*s^6-632776452*s^5+199216125*s^4-36900918*s^3"
           "+3168636*s^2+134172*s-38416)"
           "/(6*u*(5776*s^15-85440*s^14+482880*s^13-1490080*s^12+13986240*s^11-58604928*s^10"
           "+133381480*s^9-186525360*s^8+162484560*s^7-80442380*s^6+11088528*s^5"
           "+12426960*s^4-9203395*s^3+3037020*s^2-496860*s+33124))",
         t=TC),
    dict(id="sol42", anchor="solution 42, genus 1, 20 branches",
         theta="1/3,1/2,1/3,4/5", f="3*(s+3)*(8*s^2-13*s+17)",
         y="1/2+(8*s^6-28*s^5+85*s^4-196*s^3+214*s^2-196*s+41)*(s+3)/(6*(s^2+1)*(3*s^2-4*s+5)*u)",
         t=T42),
    dict(id="sol43", anchor="solution 43, genus 1, 20 branches",
         theta="1/3,1/2,1/3,2/5", f="3*(s+3)*(8*s^2-13*s+17)",
         y="1/2+(s+3)*(28*s^9-235*s^8+556*s^7-1334*s^6+2174*s^5-3854*s^4+4360*s^3-4738*s^2+2362*s-1047)"
           "/(18*(s^2+1)*(s^6-7*s^4+42*s^3-45*s^2+34*s+7)*u)",
         t=T42),
    dict(id="sol46", anchor="Valentiner solution 46, genus 1, 24 branches",
         theta="1/3,1/3,1/3,1/2", f="(8*s^2-7*s+2)*(s+2)",
         y="1/2-(16*s^11+72*s^10+50*s^9-242*s^8-3143*s^7+6562*s^6-8312*s^5+9760*s^4-9836*s^3"
           "+6216*s^2-2288*s+416)/(2*(3*s^2-2*s+2)"
           "*(26*s^6+18*s^5-75*s^4+50*s^3+270*s^2-312*s+104)*u)",
         t="1/2+(s^2+4*s-2)*(8*s^10+16*s^9+24*s^8-84*s^7+429*s^6-312*s^5+258*s^4-288*s^3"
           "+288*s^2-128*s+32)/(2*(s+2)*(3*s^2-2*s+2)^2*u^3)"),
]


def parse(expr):
    return sp.sympify(expr.replace("^", "**"), locals={"s": s, "u": u, "y": y_, "t": t_})


def coeffs(poly_expr):
    p = sp.Poly(sp.expand(poly_expr), s)
    out = [sp.Rational(c) for c in reversed(p.all_coeffs())]
    while out and out[-1] == 0:
        out.pop()
    return [f"{c.p}/{c.q}" for c in out]


def ratfunc(expr):
    num, den = sp.fraction(sp.cancel(sp.together(expr)))
    lc = sp.Poly(den, s).LC()
    return {"num": coeffs(num / lc), "den": coeffs(den / lc)}


def split(expr, f):
    """Write expr as a(s) + b(s)*u with u^2 = f."""
    if f is None:
        return {"a": ratfunc(expr), "b": {"num": [], "den": ["1/1"]}}
    root = sp.sqrt(f)
    even = sp.cancel(((expr + expr.subs(u, -u)) / 2).subs(u, root))
    odd = sp.cancel(((expr - expr.subs(u, -u)) / (2 * u)).subs(u, root))
    return {"a": ratfunc(even), "b": ratfunc(odd)}


def implicit_terms(expr):
    p = sp.Poly(sp.expand(expr), y_, t_)
    return [{"y": int(i), "t": int(j), "c": f"{sp.Rational(c).p}/{sp.Rational(c).q}"}
            for (i, j), c in sorted(p.terms())]


def numeric_check(entry, fexpr):
    """Finite-precision PVI residual at a sample point, for transcription sanity only."""
    import mpmath as mp
    mp.mp.dps = 60
    y = parse(entry["y"])
    t = parse(entry["t"])
    th = [sp.Rational(x) for x in entry["theta"].split(",")]
    al = (th[3] - 1) ** 2 / 2
    be = -th[0] ** 2 / 2
    ga = th[2] ** 2 / 2
    de = (1 - th[1] ** 2) / 2
    if fexpr is not None:
        # du/ds = f'/(2u)
        def d(e):
            return sp.diff(e, s) + sp.diff(e, u) * sp.diff(fexpr, s) / (2 * u)
    else:
        def d(e):
            return sp.diff(e, s)
    dt = d(t)
    y1 = d(y) / dt
    y2 = d(y1) / dt
    rhs = (sp.Rational(1, 2) * (1 / y + 1 / (y - 1) + 1 / (y - t)) * y1 ** 2
           - (1 / t + 1 / (t - 1) + 1 / (y - t)) * y1
           + y * (y - 1) * (y - t) / (t ** 2 * (t - 1) ** 2)
           * (al + be * t / y ** 2 + ga * (t - 1) / (y - 1) ** 2 + de * t * (t - 1) / (y - t) ** 2))
    res = y2 - rhs
    s0 = mp.mpf("0.3712")
    subs = {s: s0}
    if fexpr is not None:
        subs[u] = mp.sqrt(fexpr.subs(s, s0).evalf(60))
    val = complex(sp.N(res.subs(subs), 50))
    scale = abs(complex(sp.N(y2.subs(subs), 50))) + 1
    return abs(val) / scale


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--out", default=str(pathlib.Path(__file__).resolve().parent.parent / "data" / "catalog.json"))
    ap.add_argument("--numeric-check", action="store_true")
    args = ap.parse_args()

    out = {"version": 1, "entries": []}
    for e in ENTRIES:
        fexpr = parse(e["f"]) if "f" in e else None
        rec = {
            "id": e["id"],
            "anchor": e["anchor"],
            "theta": e["theta"].split(","),
            "family": [x.split(",") for x in e.get("family", [])],
            "modulus": coeffs(fexpr) if fexpr is not None else None,
            "y": split(parse(e["y"]), fexpr),
            "t": split(parse(e["t"]), fexpr),
            "source": {"y": e["y"], "t": e["t"], "f": e.get("f")},
        }
        if "alias" in e:
            rec["alias"] = e["alias"]
        if "implicit" in e:
            rec["implicit"] = implicit_terms(parse(e["implicit"]))
        if "leading" in e:
            rec["leading"] = e["leading"]
        if "note" in e:
            rec["note"] = e["note"]
        # As-printed variants that do not solve PVI; kept for negative tests.
        if "printed_theta" in e:
            rec["printed"] = {"theta": e["printed_theta"].split(",")}
        if "printed_y" in e:
            rec["printed"] = {"y": split(parse(e["printed_y"]), fexpr)}
        out["entries"].append(rec)
        if args.numeric_check:
            err = numeric_check(e, fexpr)
            flag = "ok" if err < 1e-20 else "SUSPECT"
            print(f"{e['id']:8s} relative residual {err:.3e} {flag}", file=sys.stderr)

    pathlib.Path(args.out).write_text(json.dumps(out, indent=1) + "\n")


if __name__ == "__main__":
    main()
