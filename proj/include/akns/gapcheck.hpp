#pragma once

#include <optional>
#include <string>
#include <vector>

#include "akns/hierarchy.hpp"
#include "akns/series/laurent.hpp"

namespace akns {

/// Laurent coefficients a_{-2}, a_{-1}, a_0, ..., a_K of a potential u at
/// one pole. a_{-2} must be nonzero.
class PotentialPoleData {
 public:
  explicit PotentialPoleData(LaurentData u);

  const LaurentData& series() const { return u_; }
  GaussRat at(int k) const { return u_[k]; }
  int depth() const { return u_.max_order(); }

 private:
  LaurentData u_;
};

// Failure condition codes.
inline constexpr const char* kLeadingNotTriangular = "leading_not_n(n+1)";
inline constexpr const char* kOddCoefficient = "odd_coefficient_nonzero";
inline constexpr const char* kPoleClassification = "pole_classification";
inline constexpr const char* kIndexMismatch = "n_mismatch";
inline constexpr const char* kStationaryResidual = "stationary_residual";

struct GapFailure {
  std::string stage;  // "classification", "stationarity" or "finite_gap"
  std::string condition;
  int index = 0;
  std::string detail;
  std::string pole;
};

struct PoleGapEntry {
  std::string label;
  std::optional<long> n;
  bool stationary = false;
  bool finite_gap = false;
  LaurentData u;
};

struct GapReport {
  bool finite_gap = false;
  std::optional<long> n;
  std::optional<GapFailure> first_failure;
  int checked_through = -1;
  // Pipeline only.
  std::optional<int> m;
  std::vector<PoleGapEntry> poles;
  std::vector<std::string> attestations;
};

/// ((n+1)/n) p q. Throws DepthError when p and q are truncated at different
/// orders and std::invalid_argument for n < 1.
LaurentData build_potential(const LaurentData& p, const LaurentData& q, long n);

/// a_{-2} = n(n+1) for a positive integer n, a_{-1} = 0 and a_{2t-1} = 0 for
/// 1 <= 2t-1 <= 2n-1. Throws DepthError when u stops before 2n-1.
GapReport finite_gap_check(const PotentialPoleData& u);

struct PoleSeries {
  std::string label;
  LaurentData p;
  LaurentData q;
};

/// Classification, stationarity of f_{m+1} = g_{m+1} = 0 through x^through
/// and the finite-gap criterion for u = ((n+1)/n) p q, pole by pole and in
/// that order. All poles must share one n, which must match expected_n when
/// given. The first failing stage ends the run.
GapReport theorem4_pipeline(const std::vector<PoleSeries>& poles, int m, const ConstantVector& c, int through,
                            std::optional<long> expected_n = std::nullopt,
                            std::vector<std::string> attestations = {});

GapReport theorem4_pipeline(const LaurentData& p, const LaurentData& q, int m, const ConstantVector& c,
                            int through);

}  // namespace akns
