#include "blowup/geometry/metric.hpp"

#include "blowup/exactmath/positivity.hpp"
#include "blowup/profile/profile.hpp"

#include <cmath>
#include <functional>
#include <optional>
#include <sstream>
#include <stdexcept>

namespace blowup::geometry {

using exact::BiPoly;
using exact::Certificate;
using exact::Rational;
using exact::RatPoly;

namespace {

RatPoly E(std::initializer_list<long> c) { return exact::rat_poly(c, "e"); }
RatPoly Ec(const Rational& v) { return RatPoly::constant(v, "e"); }

BiPoly bi(std::vector<RatPoly> c, const char* var = "u") { return BiPoly(std::move(c), var); }

double c_of(int d) { return 23.0 * d - 170.0; }
double h_of(int d, double u) { const double s = u * u; return 1 + 7 * s - c_of(d) * s * s; }

double N_of(int d, double u) {
    const double c = c_of(d), s = u * u;
    return ((6 * c * c * s - 63 * c) * s - 2 * (115.0 * d - 899.0)) * s + 21;
}

// g'^2 - 1 has the sign of G'^2 - 4G where G = g^2
double gprime_excess(int d, double u) {
    const double c = c_of(d), s = u * u;
    const double G = s + 7 * s * s - c * s * s * s;
    const double Gp = 2 * u + 28 * u * s - 6 * c * u * s * s;
    return Gp * Gp - 4 * G;
}

std::string str(const RatPoly& p) {
    std::ostringstream os;
    os << p;
    return os.str();
}

}  // namespace

MetricFamily metric_family(int d) {
    MetricFamily m;
    m.d = d;
    m.e = d - 8;
    m.g_squared = RatPoly({Rational(0), Rational(0), Rational(1), Rational(0), Rational(7), Rational(0),
                           Rational(170 - 23L * d)}, "u");
    return m;
}

double metric_g(int d, double u) {
    const double h = h_of(d, u);
    if (h < 0) throw std::domain_error("metric_g: negative radicand");
    return u * std::sqrt(h);
}

CurvaturePair sectional_curvatures(int d, double u) {
    const double h = h_of(d, u);
    if (!(h > 0)) throw std::domain_error("sectional_curvatures: g vanishes or is not real");
    const double c = c_of(d), s = u * u;
    CurvaturePair k;
    k.type1 = -N_of(d, u) / (h * h);
    const double t = 14 - 4 * c * s;
    k.type2 = (4 * h * (-21 + 5 * c * s) - s * t * t) / (4 * h * h);
    return k;
}

RatPoly c_poly() { return E({14, 23}); }

BiPoly N_poly() {
    RatPoly c = c_poly();
    return bi({Ec(21), Ec(0), E({-42, -230}), Ec(0), c * Rational(-63), Ec(0), c * c * Rational(6)});
}

BiPoly N_from_metric() {
    RatPoly c = c_poly();
    BiPoly G = bi({Ec(0), Ec(0), Ec(1), Ec(0), Ec(7), Ec(0), -c});
    BiPoly G1 = G.derivative(), G2 = G1.derivative();
    BiPoly num = G * G2 * BiPoly::constant(Ec(2), "u") - G1 * G1;
    // divide by 4u^4; the low coefficients vanish identically
    std::vector<RatPoly> out;
    for (std::size_t k = 0; k < num.coeffs().size(); ++k) {
        if (k < 4) {
            if (!num[k].is_zero()) throw std::logic_error("N_from_metric: u^4 does not divide");
            continue;
        }
        out.push_back(num[k] * Rational(1, 4));
    }
    return bi(std::move(out));
}

RatPoly P_poly() { return E({17094, 11500, 1831, 69}) * Rational(7); }
RatPoly Q_poly() { return E({7, 1}) * E({567, 445, 46}); }
RatPoly R_poly() { return E({7537866, 8566502, 3077307, 433338, 20723}); }
RatPoly S_poly() {
    return E({22614480, 15651132, -30567884, 11046366, 12402439, 2979735, 289189, 10143});
}

SurdForm reduce_mod_square(const BiPoly& p, const RatPoly& Q) {
    std::vector<RatPoly> c(p.coeffs().begin(), p.coeffs().end());
    for (std::size_t k = c.size(); k-- > 2;) {
        c[k - 2] = c[k - 2] + c[k] * Q;
        c[k] = RatPoly("e");
    }
    SurdForm f;
    f.rest = c.size() > 0 ? c[0] : RatPoly("e");
    f.coeff_s = c.size() > 1 ? c[1] : RatPoly("e");
    return f;
}

SurdForm N_at_edge_times_cube() {
    // u^2 = 2/D, D = s - 7(e+7); N(u) D^3 = sum_j n_j 2^j D^(3-j) over even u-powers 2j
    BiPoly N = N_poly();
    BiPoly D = BiPoly({E({-49, -7}), Ec(1)}, "s");
    BiPoly acc("s");
    for (int j = 0; j <= 3; ++j) {
        RatPoly nj = N[static_cast<std::size_t>(2 * j)];
        acc = acc + D.pow(static_cast<unsigned>(3 - j)) * (nj * Rational(1L << j));
    }
    return reduce_mod_square(acc, Q_poly());
}

namespace {

Certificate chain(std::optional<long> e0) {
    const bool symbolic = !e0.has_value();
    Certificate cert(symbolic ? "negative sectional curvature, all d >= 8 (e = d - 8 >= 0)"
                              : "negative sectional curvature, d = " + std::to_string(*e0 + 8));
    auto inst = [&](const RatPoly& p) { return symbolic ? p : Ec(p(Rational(*e0))); };
    auto pos = [&](const RatPoly& p) { return exact::positive_on_halfline(inst(p)); };

    const RatPoly c = c_poly(), Q = Q_poly(), P = P_poly(), R = R_poly(), S = S_poly();
    const RatPoly k = E({49, 7});  // 7(e+7)

    // Profile precondition: b > 1 <=> sqrt(Q) > 7(e+7)
    {
        RatPoly d = E({8, 1});
        RatPoly X = (d * d * Rational(46) - d * Rational(291) - Ec(49)) * (d - Ec(1));
        cert.add("E(d) radicand (46d^2-291d-49)(d-1) equals Q(e)", X == Q, str(Q));
        Certificate b = exact::sqrt_compare(Ec(1), inst(Q), inst(k));
        cert.absorb(b, "profile precondition b > 1 (sqrt(Q) > 7(e+7))");
        if (!b.pass()) return cert;
    }

    // N as derived from g
    BiPoly N = N_poly();
    cert.add("N(e,u) = (2 G G'' - G'^2)/(4u^4) with G = g^2", N_from_metric() == N, "");

    // (i) N(e,0) = 21
    cert.add("N(e,0) = 21 > 0", N[0] == Ec(21), str(N[0]));

    // (iii) d2N(e,0) < 0 and d3N <= 0 on I
    BiPoly N2 = N.derivative(2), N3 = N.derivative(3), N5 = N.derivative(5);
    BiPoly N2_printed = bi({E({-84, -460}), Ec(0), c * Rational(-756), Ec(0), c * c * Rational(180)});
    BiPoly N3_printed = bi({Ec(0), c * Rational(-1512), Ec(0), c * c * Rational(720)});
    BiPoly N5_printed = bi({Ec(0), c * c * Rational(4320)});
    cert.add("d2N = 4[45c^2u^4 - 189cu^2 - 115e - 21]", N2 == N2_printed, "");
    cert.add("d3N = 72cu(10cu^2 - 21)", N3 == N3_printed, "");
    cert.add("d5N = 4320 u c^2", N5 == N5_printed, "");
    cert.absorb(pos(E({21, 115}) * Rational(4)), "d2N(e,0) = -4(115e+21) < 0");
    cert.add("d3N(e,0) = 0", N3[0].is_zero(), "");
    cert.absorb(pos(c * c * Rational(4320)), "d5N >= 0 for u >= 0, so d3N convex on I");

    // phi0(1)^2 = 2/(sqrt(Q) - 7(e+7))
    {
        // polynomials in the formal symbol E: 2E(b-1) = d(E - 14(d-1)), and
        // E - 14(d-1) = sqrt(Q) + 7(d-1) - 14(d-1) = sqrt(Q) - 7(e+7)
        RatPoly d = E({8, 1}), dm1 = E({7, 1});
        BiPoly Eb = BiPoly({d * dm1 * Rational(-7), Ec(1) + d * Rational(1, 2)}, "E");
        BiPoly twoEbm1 = (Eb - BiPoly({Ec(0), Ec(1)}, "E")) * BiPoly::constant(Ec(2), "E");
        BiPoly rhs = BiPoly({d * dm1 * Rational(-14), d}, "E");
        bool ok = twoEbm1 == rhs && dm1 * Rational(7) - dm1 * Rational(14) == -k;
        std::string w = "2E(b-1) = d(E - 14(d-1))";
        if (!symbolic) {
            if (auto ex = profile::exact_profile_params(static_cast<int>(*e0 + 8))) {
                Rational sq;
                Rational q0 = Q(Rational(*e0));
                if (exact::exact_sqrt(q0, sq)) {
                    Rational lhs = ex->a_squared / (ex->b - Rational(1));
                    Rational r = Rational(2) / (sq - k(Rational(*e0)));
                    ok = ok && lhs == r;
                    w += "; exact value " + lhs.str();
                }
            }
        }
        cert.add("phi0(1)^2 = a^2/(b-1) = 2/(sqrt(Q) - 7(e+7))", ok, w);
    }

    // d3N(e, phi0(1)) <= 0  <=>  21 sqrt(Q) - (607e+1309) > 0
    {
        RatPoly Rr = E({1309, 607});
        RatPoly lhs = Q * Rational(441) - Rr * Rr;
        RatPoly f = E({1316, -925, 441});
        cert.add("441Q - (607e+1309)^2 = 2(23e+14)(441e^2 - 925e + 1316)", lhs == c * f * Rational(2), str(lhs));
        cert.absorb(exact::sqrt_compare(Ec(21), inst(Q), inst(Rr)),
                    "10(23e+14)phi0(1)^2 - 21 < 0");
        cert.absorb(pos(f), "441e^2 - 925e + 1316 > 0");
    }

    // (ii) N(e, phi0(1)) > 0
    {
        SurdForm f = N_at_edge_times_cube();
        cert.add("N(e,phi0(1)) (sqrt(Q) - 7(e+7))^3 = 2(P sqrt(Q) - R)",
                 f.coeff_s == P * Rational(2) && f.rest == R * Rational(-2),
                 "coefficient of sqrt(Q): " + str(f.coeff_s));
        RatPoly lhs = P * P * Q - R * R;
        cert.add("P^2 Q - R^2 = 2(23e+14)^2 S(e)", lhs == c * c * S * Rational(2), str(lhs));
        cert.absorb(exact::sqrt_compare(inst(P), inst(Q), inst(R)), "numerator P sqrt(Q) - R > 0");
        cert.absorb(pos(S), "S(e) > 0");
        RatPoly den = Q - k * k;
        cert.add("Q - 49(e+7)^2 = 2(e+8)(e+7)(23e+14)", den == E({8, 1}) * E({7, 1}) * c * Rational(2), str(den));
        cert.absorb(exact::sqrt_compare(Ec(1), inst(Q), inst(k)), "denominator (sqrt(Q) - 7(e+7))^3 > 0");
    }

    // g real and nonzero on (0, phi0(1)]: h(s) = 1 + 7s - c s^2 concave with h(0) = 1,
    // so it suffices that h(phi0(1)^2) > 0, i.e. h D^2 = A - 14(e+6) sqrt(Q) > 0
    {
        RatPoly A = Q + k * k - k * Rational(14) - c * Rational(4);
        RatPoly B = E({6, 1}) * Rational(14);
        cert.absorb(exact::surd_positive(inst(A), inst(B), inst(Q)), "h(phi0(1)^2) > 0");
    }

    // type (ii): g''/g = N/h^2 > 0 on I and g'(0) = 1 give g' > 1, hence (1 - g'^2)/g^2 < 0
    {
        bool prior = cert.pass();
        cert.add("type (ii) negative on (0, phi0(1)]: g'' > 0 and g'(0) = 1 imply g' > 1", prior,
                 prior ? "follows from N > 0 on I and h > 0 on I" : "a prerequisite step failed");
        Rational lim(-21);
        cert.add("type (ii) limit at u = 0 is -21", lim.sign() < 0, "(1 - g'(0)^2)/g(0)^2 -> -21");
    }
    return cert;
}

}  // namespace

Certificate certify_negative_curvature_all() { return chain(std::nullopt); }

Certificate certify_negative_curvature(int d) { return chain(static_cast<long>(d) - 8); }

double epsilon_margin(int d) {
    if (d < 8) throw std::domain_error("epsilon_margin: requires d >= 8");
    const double u0 = profile::phi0(profile::profile_params(d), 1.0);
    const double c = c_of(d);
    // h vanishes at s = (7 + sqrt(49 + 4c))/(2c); beyond that g is not real
    const double uh = std::sqrt((7 + std::sqrt(49 + 4 * c)) / (2 * c));
    auto bad = [&](double u) {
        return !(h_of(d, u) > 0) || !(N_of(d, u) > 0) || !(gprime_excess(d, u) > 0);
    };
    if (bad(u0)) throw std::domain_error("epsilon_margin: curvature not negative at phi0(1)");
    const int steps = 20000;
    double lo = u0, hi = uh;
    for (int i = 1; i <= steps; ++i) {
        double u = u0 + (uh - u0) * i / steps;
        if (bad(u)) {
            hi = u;
            break;
        }
        lo = u;
    }
    while (hi - lo > 1e-12) {
        double mid = 0.5 * (lo + hi);
        (bad(mid) ? hi : lo) = mid;
    }
    return lo - u0;
}

}  // namespace blowup::geometry
