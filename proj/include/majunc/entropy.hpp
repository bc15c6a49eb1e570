// Renyi, Tsallis and Shannon entropies and the entropic lower bounds that
// follow from the majorization relations.
#pragma once

#include <optional>
#include <span>
#include <vector>

#include "majunc/channels.hpp"
#include "majunc/majorization.hpp"

namespace majunc {

enum class LogBase { Natural, Two };
enum class EntropyFamily { Renyi, Tsallis };

// Orders within this distance of 1 are evaluated as the Shannon limit.
inline constexpr double kShannonWindow = 1e-9;
// Probabilities at or below this contribute nothing to any entropy sum.
inline constexpr double kZeroProbability = 1e-15;

struct EntropyQuery {
  double alpha = 1.0;
  EntropyFamily family = EntropyFamily::Renyi;
  LogBase base = LogBase::Natural;
};

bool is_shannon_order(double alpha);

// Converts a value in nats to the requested base.
double in_base(double nats, LogBase base);

double shannon(std::span<const double> p, LogBase base = LogBase::Natural);
double renyi(std::span<const double> p, double alpha, LogBase base = LogBase::Natural);
// Tsallis entropy; its alpha -> 1 limit is the natural-log Shannon entropy.
double tsallis(std::span<const double> p, double alpha);

// (2 / (1 - alpha)) log(1/2 + 1/2 sum_i omega_i^alpha), the bound that
// replaces H_alpha(omega) for alpha > 1.
double renyi_direct_sum_gt1(std::span<const double> omega, double alpha,
                            LogBase base = LogBase::Natural);

// max_ij ||sqrt(P_i) sqrt(Q_j)||
double mu_fbar(std::span<const ComplexMatrix> p, std::span<const ComplexMatrix> q);

// -2 log f-bar; valid for equal orders 0 < alpha <= 1.
double mu_bound(std::span<const ComplexMatrix> p, std::span<const ComplexMatrix> q,
                LogBase base = LogBase::Natural);

// Mixed-order form H_alpha(P) + H_beta(Q) >= -2 log f-bar with
// 1/alpha + 1/beta = 2. Requires alpha > 1/2.
struct MixedOrderBound {
  double alpha = 1.0;
  double beta = 1.0;
  double bound = 0.0;
};

double conjugate_order(double alpha);

MixedOrderBound mu_mixed_order_bound(std::span<const ComplexMatrix> p,
                                     std::span<const ComplexMatrix> q, double alpha,
                                     LogBase base = LogBase::Natural);

struct BoundReport {
  EntropyQuery query;
  NormSequence c_sequence;
  MajorizingVector omega;
  MajorizingVector omega_prime;
  std::optional<double> renyi_direct_sum;             // alpha <= 1 only
  std::optional<double> renyi_direct_sum_alpha_gt1;   // alpha > 1 only
  double renyi_tensor = 0.0;
  double tsallis_direct_sum = 0.0;
  double mu_bound = 0.0;
  double best_applicable = 0.0;
};

BoundReport bound_report(const KrausSet& a, const KrausSet& b, const EntropyQuery& query);

}  // namespace majunc
