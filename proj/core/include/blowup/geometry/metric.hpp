#pragma once

#include "blowup/exactmath/certificate.hpp"
#include "blowup/exactmath/poly.hpp"

namespace blowup::geometry {

// g(u)^2 = u^2 + 7u^4 - (23d-170)u^6, written in e = d - 8.
struct MetricFamily {
    int d = 0;
    int e = 0;
    exact::RatPoly g_squared;  // in u
};
MetricFamily metric_family(int d);

// u * sqrt(1 + 7u^2 - (23d-170)u^4)
double metric_g(int d, double u);

struct CurvaturePair {
    double type1 = 0;  // -g''/g
    double type2 = 0;  // (1 - g'^2)/g^2
};
CurvaturePair sectional_curvatures(int d, double u);

// Exact polynomials of the curvature argument, variable "e" (d = e + 8).
exact::RatPoly c_poly();                 // 23e + 14
exact::BiPoly N_poly();                  // numerator of g''/g, outer variable u
exact::BiPoly N_from_metric();           // (2 G G'' - G'^2)/(4u^4), G = g^2
exact::RatPoly P_poly();
exact::RatPoly Q_poly();
exact::RatPoly R_poly();
exact::RatPoly S_poly();
// X = Y*s + Z with s^2 = Q
struct SurdForm {
    exact::RatPoly coeff_s;
    exact::RatPoly rest;
};
SurdForm reduce_mod_square(const exact::BiPoly& p, const exact::RatPoly& Q);
// N(e, phi0(1)) * (sqrt(Q) - 7(e+7))^3 reduced modulo s^2 = Q
SurdForm N_at_edge_times_cube();

// Certificate covering every d >= 8 at once (symbolic in e over [0, inf)).
exact::Certificate certify_negative_curvature_all();
// Same chain with e = d - 8 substituted.
exact::Certificate certify_negative_curvature(int d);

// Largest eps (bisection tolerance 1e-9) with both curvatures negative on [0, phi0(1) + eps).
double epsilon_margin(int d);

}  // namespace blowup::geometry
