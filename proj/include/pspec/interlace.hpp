#pragma once

#include "pspec/passivity.hpp"

#include <optional>

namespace pspec {

enum class ZipOrientation { ZerosBeforePoles, PolesBeforeZeros, None };

struct InterlacingReport {
    OrderedReals poles;
    OrderedReals zeros;
    OrderedReals stable_spectral;  // empty when produced by zip_check alone
    ZipOrientation orientation = ZipOrientation::None;
    bool strict = false;
    bool zip = false;                 // poles and zeros strictly interlaced
    std::vector<bool> sandwich;       // per index: spectral zero inside its pole/zero pair
    std::vector<double> margins;      // per index slack (negative on violation)
    bool full_chain = false;          // strict chain including the spectral zeros
};

struct ZipConditionReport {
    double nu_min = 0;
    double lambda_max = 0;  // largest eigenvalue of B D^{-1} B^T
    bool condition = false;
    int sign = 0;           // +1: zeros before poles implied; -1: reversed
    bool pbh_controllable = false;
    double pbh_margin = 0;  // min_i ||B^T x_i|| over eigenvectors of A
};

struct EtaScanRow {
    double eta = 0;
    OrderedReals zeros;
    OrderedReals stable_spectral;
    OrderedReals poles;
    bool zip = false;
    bool full_interlace = false;
    bool verge = false;
    std::string remark;  // "not interlaced" | "verge-of interlaced" | "after interlaced"
};

struct EtaScanResult {
    std::vector<EtaScanRow> rows;
    std::optional<double> eta_star;  // smallest eta with strict ZIP, refined by bisection
};

struct WeylReport {
    Vector lambda_p;
    Vector lambda_pm;
    bool gap_condition = false;  // lambda_max(M) <= nu_min(P)
    bool interlaced = false;
    bool strict = false;
};

Realization inverse_system(const Realization& R);

// Poles of G(s)^{-1}, i.e. eigenvalues of A - B D^{-1} C.
Spectrum system_zeros(const Realization& R);

InterlacingReport zip_check(const OrderedReals& poles, const OrderedReals& zeros);

InterlacingReport spectral_interlace_check(const Realization& R);

ZipConditionReport zip_sufficient_condition(const Realization& R);

EtaScanRow eta_scan_row(const Realization& R, const Matrix& D0, double eta);

EtaScanResult eta_scan(const Realization& R, const Matrix& D0,
                       const std::vector<double>& etas,
                       bool refine_threshold = true);

WeylReport weyl_interlace_bounds(const Matrix& P, const Matrix& M);

}  // namespace pspec
