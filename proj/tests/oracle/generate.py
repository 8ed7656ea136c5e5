"""Independent reference values for the C++ tests.

Uses sympy/mpmath only; nothing here calls into the C++ library.
Run: python3 tests/oracle/generate.py > tests/oracle_values.hpp
"""
import mpmath as mp
import sympy as sp

mp.mp.dps = 40
out = []


def emit(name, value):
    out.append(f"inline constexpr double {name} = {mp.nstr(value, 25)};")


def emit_str(name, value):
    out.append(f'inline constexpr const char* {name} = "{value}";')


def emit_int(name, value):
    out.append(f"inline constexpr long {name} = {value};")


# profile parameters
def params(d):
    E = sp.sqrt((46 * d * d - 291 * d - 49) * (d - 1)) + 7 * (d - 1)
    a = sp.sqrt(sp.Rational(d) / E)
    b = 1 + sp.Rational(d, 2) - 7 * d * (d - 1) / E
    return sp.nsimplify(E), a, sp.simplify(b)


for d in (8, 9, 12, 20):
    E, a, b = params(d)
    emit(f"E_{d}", mp.mpf(sp.N(E, 40)))
    emit(f"a_{d}", mp.mpf(sp.N(a, 40)))
    emit(f"b_{d}", mp.mpf(sp.N(b, 40)))
E7, a7, b7 = params(7)
emit("b_7", mp.mpf(sp.N(b7, 40)))

r = sp.symbols("r")
E9, a9, b9 = params(9)
phi9 = a9 * r / sp.sqrt(b9 - r**2)
for i, rho in enumerate(["0.1", "0.5", "0.9", "1"]):
    emit(f"phi9_{i}", mp.mpf(sp.N(phi9.subs(r, sp.Rational(rho)), 40)))
    emit(f"dphi9_{i}", mp.mpf(sp.N(sp.diff(phi9, r).subs(r, sp.Rational(rho)), 40)))
out.append("inline constexpr double phi9_rho[] = {0.1, 0.5, 0.9, 1.0};")

# potential V = 8 n'(phi0)/rho^2 with n(x) = 14x^3 - 111x^5
x = sp.symbols("x")
n = 14 * x**3 - 111 * x**5
V = sp.simplify(8 * sp.diff(n, x).subs(x, phi9) / r**2)
emit_str("V9_at_0", sp.nsimplify(sp.limit(V, r, 0)))
emit_str("V9_at_1", sp.nsimplify(sp.simplify(V.subs(r, 1))))

# sectional curvatures from g(u) = u sqrt(1 + 7u^2 - (23d-170)u^4)
u = sp.symbols("u", positive=True)


def curvatures(d, uu):
    g = u * sp.sqrt(1 + 7 * u**2 - (23 * d - 170) * u**4)
    k1 = -sp.diff(g, u, 2) / g
    k2 = (1 - sp.diff(g, u) ** 2) / g**2
    return mp.mpf(sp.N(k1.subs(u, uu), 40)), mp.mpf(sp.N(k2.subs(u, uu), 40))


for d in (9, 12):
    for j, uu in enumerate([sp.Rational(1, 20), sp.Rational(1, 10), sp.Rational(1, 5)]):
        k1, k2 = curvatures(d, uu)
        emit(f"K1_{d}_{j}", k1)
        emit(f"K2_{d}_{j}", k2)
out.append("inline constexpr double K_u[] = {0.05, 0.1, 0.2};")

# first u beyond phi0(1) where a curvature or g^2 stops being admissible, d = 9
g9 = u * sp.sqrt(1 + 7 * u**2 - (23 * 9 - 170) * u**4)
k1f = sp.lambdify(u, -sp.diff(g9, u, 2) / g9, "mpmath")
k2f = sp.lambdify(u, (1 - sp.diff(g9, u) ** 2) / g9**2, "mpmath")
G9 = sp.lambdify(u, 1 + 7 * u**2 - 37 * u**4, "mpmath")
u_edge = mp.mpf(sp.N(phi9.subs(r, 1), 40))


def bad(v):
    if G9(v) <= 0:
        return True
    return max(k1f(v), k2f(v)) >= 0


lo = u_edge
step = mp.mpf("1e-4")
while not bad(lo + step):
    lo += step
hi = lo + step
for _ in range(80):
    mid = (lo + hi) / 2
    if bad(mid):
        hi = mid
    else:
        lo = mid
emit("eps_margin_9", lo - u_edge)

# Heun recurrence, exact
lam = sp.Rational(1, 2) + sp.I / 3


def A(k, l):
    return (155 * l * (l + 4 * k + 9) + 2 * (458 * k * k + 2357 * k + 2727)) / sp.Integer(310 * (2 * k + 15) * (k + 2))


def B(k, l):
    return sp.Rational(-37, 155) * (l + 2 * k + 3) * (l + 2 * k) / ((2 * k + 15) * (k + 2))


a = [sp.Integer(1), A(-1, lam)]
for k in range(0, 40):
    a.append(sp.expand(A(k, lam) * a[-1] + B(k, lam) * a[-2]))
for k in (5, 20, 40):
    v = complex(sp.N(a[k], 30))
    emit(f"a{k}_re", mp.mpf(v.real))
    emit(f"a{k}_im", mp.mpf(v.imag))

l = sp.symbols("l")
rr = A(-1, l)
for k in range(0, 7):
    rr = sp.cancel(A(k, l) + B(k, l) / rr)
rt7 = l**2 / (4 * 49 + 28 * 7 + 27) + l / 14 + sp.Rational(26, 37)
d7 = sp.cancel(rr / rt7 - 1)
num, den = sp.fraction(d7)
emit_int("delta7_num_degree", sp.degree(num, l))
emit_int("delta7_den_degree", sp.degree(den, l))
v = complex(sp.N(d7.subs(l, sp.I), 30))
emit("delta7_at_i_re", mp.mpf(v.real))
emit("delta7_at_i_im", mp.mpf(v.imag))

t = sp.symbols("t", real=True)
for tag, sub in (("shifted", (t + 4) * sp.I), ("compressed", 4 * t * sp.I / (t + 1))):
    nn, dn1 = sp.fraction(sp.together(sp.expand(num.subs(l, sub))))
    dd, dn2 = sp.fraction(sp.together(sp.expand(den.subs(l, sub))))
    nr, ni = sp.expand(sp.re(nn)), sp.expand(sp.im(nn))
    dr, di = sp.expand(sp.re(dd)), sp.expand(sp.im(dd))
    q1 = sp.expand((nr**2 + ni**2) * dn2**2)
    q2 = sp.expand((dr**2 + di**2) * dn1**2)
    gg = sp.gcd(q1, q2)
    q1, q2 = sp.cancel(q1 / gg), sp.cancel(q2 / gg)
    P1, P2 = sp.Poly(q1, t), sp.Poly(q2, t)
    # jointly primitive integer scaling
    den_l = sp.ilcm(*[sp.fraction(c)[1] for c in P1.all_coeffs() + P2.all_coeffs()])
    c1 = [int(c * den_l) for c in P1.all_coeffs()]
    c2 = [int(c * den_l) for c in P2.all_coeffs()]
    g0 = sp.igcd(*(c1 + c2))
    c1 = [c // g0 for c in c1]
    c2 = [c // g0 for c in c2]
    if c2[0] < 0:
        c1 = [-c for c in c1]
        c2 = [-c for c in c2]
    emit_int(f"Q1_{tag}_degree", P1.degree())
    emit_int(f"Q2_{tag}_degree", P2.degree())
    emit_str(f"Q1_{tag}_lc", c1[0])
    emit_str(f"Q2_{tag}_lc", c2[0])
    emit_str(f"Q1_{tag}_c0", c1[-1])
    emit_str(f"Q2_{tag}_c0", c2[-1])

# eigenvalue by two Frobenius expansions matched at rho = 0.6, all in mpmath
def eig_coeffs(lv):
    rho = sp.symbols("rho")
    w = 155 - 74 * rho**2
    P2 = sp.expand(rho * (1 - rho**2) * w**2)
    P1 = sp.expand((10 - 2 * (lv + 2) * rho**2) * w**2)
    P0 = sp.expand(-(rho * ((lv + 1) * (lv + 2) * w**2 - 54 * (3737 * rho**2 - 4340))))
    return rho, P2, P1, P0


L = sp.symbols("L")
rho_s, P2s, P1s, P0s = eig_coeffs(L)
xs = sp.symbols("xs")
shift = [sp.expand(p.subs(rho_s, 1 - xs)) for p in (P2s, P1s, P0s)]
shift[1] = -shift[1]
at0 = [sp.Poly(p, rho_s) for p in (P2s, P1s, P0s)]
at1 = [sp.Poly(p, xs) for p in shift]


def coeff_funcs(polys, var):
    # f_e(s) = P2[e+2] s(s-1) + P1[e+1] s + P0[e] with lambda left symbolic
    def c(p, k):
        return p.coeff_monomial(var**k) if k >= 0 else 0
    degs = max(polys[0].degree() - 2, polys[1].degree() - 1, polys[2].degree())
    emin = -2
    while all(sp.simplify(c(polys[0], emin + 2)) == 0 and sp.simplify(c(polys[1], emin + 1)) == 0 and sp.simplify(c(polys[2], emin)) == 0 for _ in [0]):
        emin += 1
    table = []
    for e in range(emin, degs + 1):
        table.append([sp.lambdify(L, c(polys[0], e + 2), "mpmath"),
                      sp.lambdify(L, c(polys[1], e + 1), "mpmath"),
                      sp.lambdify(L, c(polys[2], e), "mpmath")])
    return table


T0 = coeff_funcs(at0, rho_s)
T1 = coeff_funcs(at1, xs)


def series(table, lv, order, z):
    f = [[fn(lv) for fn in row] for row in table]
    def fe(k, s):
        p2, p1, p0 = f[k]
        return p2 * s * (s - 1) + p1 * s + p0
    c = [mp.mpc(1)]
    for m in range(1, order + 1):
        acc = 0
        for k in range(max(0, m - len(f) + 1), m):
            acc += c[k] * fe(m - k, k)
        c.append(-acc / fe(0, m))
    val = sum(ck * z**k for k, ck in enumerate(c))
    der = sum(k * ck * z ** (k - 1) for k, ck in enumerate(c) if k > 0)
    return val, der


def wronskian(lv):
    u0, du0 = series(T0, lv, 250, mp.mpf("0.6"))
    u1, dx1 = series(T1, lv, 1200, mp.mpf("0.4"))
    return u0 * (-dx1) - du0 * u1


for k, guess in enumerate([mp.mpc("-0.98", "3.76"), mp.mpc("-2.70", "4.47")]):
    root = mp.findroot(wronskian, guess, tol=mp.mpf("1e-25"))
    emit(f"eig{k}_re", root.real)
    emit(f"eig{k}_im", root.imag)

print("#pragma once")
print("// Generated by tests/oracle/generate.py (sympy/mpmath); do not edit.")
print("namespace oracle {")
for line in out:
    print(line)
print("}  // namespace oracle")
