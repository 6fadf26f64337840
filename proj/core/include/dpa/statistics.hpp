#pragma once

#include "dpa/ermakov.hpp"

namespace dpa {

struct QuadratureVariances {
    double sigma_p, sigma_q, sigma_pq;
};

QuadratureVariances quadrature_variances(const ErmakovState& s, int n);

// Compact form (n + 1/2) A / (2w) + B / (2w) - 1/2.
double mean_photon_number(const SlowInvariants& inv, int n, double omega);

// The same quantity written out in the Ermakov parameters.
double mean_photon_number(const ErmakovState& s, int n, double omega);

double photon_number_variance(const SlowInvariants& inv, int n, double omega);

// 1 + (var - mean) / mean^2; DomainError for mean = 0.
double g2(double mean_n, double var_n);

struct QuadratureMeans {
    double mean_q, mean_p;
};

QuadratureMeans mean_qp(const InitialData& init, double t, const ModelParams& params);

struct PositionMomentumVariances {
    double sigma_q, sigma_p;
};

PositionMomentumVariances qp_variances_closed(const InitialData& init, double t,
                                              const ModelParams& params, int n);

struct StatisticsReport {
    double sigma_p, sigma_q, sigma_pq;
    double mean_n, var_n, g2;  // g2 is NaN when mean_n = 0
    double mean_q, mean_p;
};

StatisticsReport statistics_report(const InitialData& init, double t, const ModelParams& params);

}  // namespace dpa
