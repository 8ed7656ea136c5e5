#include "blowup/spectral/recurrence.hpp"

#include <cmath>
#include <random>
#include <sstream>
#include <stdexcept>

namespace blowup::spectral {

using exact::ComplexRational;
using exact::Rational;

std::vector<cplx> ratio_sequence(cplx lam, int N) {
    std::vector<cplx> r;
    r.reserve(static_cast<std::size_t>(N));
    cplx cur = A_coef<cplx>(-1, lam);
    for (int n = 0; n < N; ++n) {
        r.push_back(cur);
        cur = A_coef<cplx>(n, lam) + B_coef<cplx>(n, lam) / cur;
    }
    return r;
}

SpectralSequence recurrence(cplx lam, int N) {
    if (N < 1) throw std::invalid_argument("recurrence: N must be >= 1");
    SpectralSequence s;
    s.lambda = lam;
    s.N = N;
    s.a.assign(static_cast<std::size_t>(N) + 1, cplx(0));
    s.a[0] = 1;
    cplx prev = 0;  // a_{-1}
    for (int n = -1; n + 2 <= N; ++n) {
        const cplx cur = s.a[static_cast<std::size_t>(n + 1)];
        s.a[static_cast<std::size_t>(n + 2)] = A_coef<cplx>(n, lam) * cur + B_coef<cplx>(n, lam) * prev;
        prev = cur;
    }
    s.r = ratio_sequence(lam, N);
    for (int n = 0; n <= N; ++n) s.r_tilde.push_back(r_tilde<cplx>(n, lam));
    for (int n = 0; n < N; ++n) {
        const cplx rt = s.r_tilde[static_cast<std::size_t>(n)], rt1 = s.r_tilde[static_cast<std::size_t>(n + 1)];
        s.delta.push_back(s.r[static_cast<std::size_t>(n)] / rt - 1.0);
        s.eps.push_back((A_coef<cplx>(n, lam) * rt + B_coef<cplx>(n, lam)) / (rt * rt1) - 1.0);
        s.C.push_back(B_coef<cplx>(n, lam) / (rt * rt1));
    }
    return s;
}

std::vector<ComplexRational> recurrence_exact(const ComplexRational& lam, int N) {
    if (N < 1) throw std::invalid_argument("recurrence_exact: N must be >= 1");
    std::vector<ComplexRational> a(static_cast<std::size_t>(N) + 1);
    a[0] = ComplexRational(1);
    ComplexRational prev(0);
    for (long n = -1; n + 2 <= N; ++n) {
        const ComplexRational cur = a[static_cast<std::size_t>(n + 1)];
        a[static_cast<std::size_t>(n + 2)] =
            A_coef<ComplexRational>(n, lam) * cur + B_coef<ComplexRational>(n, lam) * prev;
        prev = cur;
    }
    return a;
}

const char* to_string(LimitClass c) {
    switch (c) {
    case LimitClass::one: return "one";
    case LimitClass::seventyfour_over_155: return "seventyfour_over_155";
    case LimitClass::undecided: return "undecided";
    }
    return "undecided";
}

LimitEstimate classify_limit(cplx lam, int N, double tol) {
    if (N < 4) throw std::invalid_argument("classify_limit: N too small");
    auto r = ratio_sequence(lam, N);
    LimitEstimate out;
    out.r_last = r.back();
    // r_n = L + c/n + O(1/n^2): eliminate the 1/n term with the pair (n, n/2)
    const int n1 = N - 1, n2 = (N - 1) / 2;
    out.extrapolated = (double(n1) * r[static_cast<std::size_t>(n1)] - double(n2) * r[static_cast<std::size_t>(n2)])
                     / double(n1 - n2);
    const double d1 = std::abs(out.extrapolated - 1.0);
    const double d2 = std::abs(out.extrapolated - 74.0 / 155.0);
    if (d1 <= tol && d1 < d2) out.cls = LimitClass::one;
    else if (d2 <= tol && d2 < d1) out.cls = LimitClass::seventyfour_over_155;
    return out;
}

BoundReport verify_bounds(const std::vector<cplx>& samples, int n_max) {
    if (n_max < 7) throw std::invalid_argument("verify_bounds: n_max must be >= 7");
    BoundReport rep;
    for (const cplx& lam : samples) {
        if (lam.real() < 0) throw std::invalid_argument("verify_bounds: sample outside the closed right half plane");
        auto r = ratio_sequence(lam, 8);
        const cplx d7 = r[7] / r_tilde<cplx>(7, lam) - 1.0;
        rep.max_delta7 = std::max(rep.max_delta7, std::abs(d7));
        if (std::abs(d7) > 1.0 / 3.0) rep.violations.push_back({lam, 7, "delta7", std::abs(d7)});
        cplx delta = d7;
        for (int n = 7; n <= n_max; ++n) {
            const cplx rt = r_tilde<cplx>(n, lam), rt1 = r_tilde<cplx>(n + 1, lam);
            const cplx Bn = B_coef<cplx>(n, lam);
            const cplx e = (A_coef<cplx>(n, lam) * rt + Bn) / (rt * rt1) - 1.0;
            const cplx C = Bn / (rt * rt1);
            rep.max_eps = std::max(rep.max_eps, std::abs(e));
            rep.max_C = std::max(rep.max_C, std::abs(C));
            rep.max_delta_induction = std::max(rep.max_delta_induction, std::abs(delta));
            if (std::abs(e) > 1.0 / 12.0) rep.violations.push_back({lam, n, "eps", std::abs(e)});
            if (std::abs(C) > 0.5) rep.violations.push_back({lam, n, "C", std::abs(C)});
            if (std::abs(delta) > 1.0 / 3.0) rep.violations.push_back({lam, n, "delta", std::abs(delta)});
            delta = e - C * delta / (1.0 + delta);
        }
    }
    auto first = [&](const char* which) {
        for (const auto& v : rep.violations)
            if (std::string(v.which) == which) {
                std::ostringstream os;
                os << "first violation at lambda = " << v.lambda << ", n = " << v.n << ": " << v.value;
                return os.str();
            }
        return std::string();
    };
    auto mx = [](double v) {
        std::ostringstream os;
        os.precision(6);
        os << "max " << v;
        return os.str();
    };
    std::ostringstream hdr;
    hdr << samples.size() << " samples, 7 <= n <= " << n_max << " (sampled)";
    rep.cert = exact::Certificate("quasi-solution bounds: " + hdr.str());
    rep.cert.add("|delta_7| <= 1/3", rep.max_delta7 <= 1.0 / 3.0, mx(rep.max_delta7) + " " + first("delta7"));
    rep.cert.add("|eps_n| <= 1/12", rep.max_eps <= 1.0 / 12.0, mx(rep.max_eps) + " " + first("eps"));
    rep.cert.add("|C_n| <= 1/2", rep.max_C <= 0.5, mx(rep.max_C) + " " + first("C"));
    const Rational step = Rational(1, 12) + Rational(1, 2) * (Rational(1, 3) / Rational(2, 3));
    rep.cert.add("induction closes: 1/12 + (1/2)(1/3)/(2/3) = 1/3 (exact)", step == Rational(1, 3), step.str());
    rep.cert.add("|delta_n| <= 1/3 along the delta recurrence", rep.max_delta_induction <= 1.0 / 3.0,
                 mx(rep.max_delta_induction) + " " + first("delta"));
    return rep;
}

std::vector<cplx> half_plane_samples(int count_axis, int count_interior, double R, std::uint64_t seed) {
    std::vector<cplx> out;
    out.reserve(static_cast<std::size_t>(count_axis + count_interior));
    for (int i = 0; i < count_axis; ++i) {
        const double t = count_axis == 1 ? 0.0 : -R + 2 * R * i / (count_axis - 1);
        out.emplace_back(0.0, t);
    }
    std::mt19937_64 gen(seed);
    std::uniform_real_distribution<double> radius(0.0, 1.0), angle(-M_PI / 2, M_PI / 2);
    for (int i = 0; i < count_interior; ++i) {
        const double rr = R * std::sqrt(radius(gen));
        out.push_back(std::polar(rr, angle(gen)));
    }
    return out;
}

}  // namespace blowup::spectral
