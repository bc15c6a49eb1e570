#include "majunc/entropy.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace majunc {

namespace {

void require_positive_order(double alpha, const char* what) {
  if (!(alpha > 0.0) || !std::isfinite(alpha)) {
    throw InvalidInput(std::string(what) + ": order must be a positive finite number");
  }
}

double power_sum(std::span<const double> p, double alpha) {
  double sum = 0.0;
  for (const double v : p) {
    if (v > kZeroProbability) {
      sum += std::pow(v, alpha);
    }
  }
  return sum;
}

void require_povm(std::span<const ComplexMatrix> e, const char* what) {
  if (e.empty()) {
    throw InvalidInput(std::string(what) + ": empty POVM");
  }
  const auto d = e.front().rows();
  ComplexMatrix sum = ComplexMatrix::Zero(d, d);
  for (const auto& m : e) {
    require_valid(m, what);
    if (m.rows() != d || m.cols() != d) {
      throw InvalidInput(std::string(what) + ": POVM elements differ in shape");
    }
    if (hermitian_eig(m).values.back() < -kPsdClampTolerance) {
      throw InvalidInput(std::string(what) + ": POVM element is not positive");
    }
    sum += m;
  }
  if ((sum - ComplexMatrix::Identity(d, d)).cwiseAbs().maxCoeff() > kTpcpTolerance) {
    throw InvalidInput(std::string(what) + ": POVM elements do not sum to identity");
  }
}

}  // namespace

bool is_shannon_order(double alpha) { return std::abs(alpha - 1.0) <= kShannonWindow; }

double in_base(double nats, LogBase base) {
  return base == LogBase::Two ? nats / std::numbers::ln2 : nats;
}

double shannon(std::span<const double> p, LogBase base) {
  double h = 0.0;
  for (const double v : p) {
    if (v > kZeroProbability) {
      h -= v * std::log(v);
    }
  }
  return in_base(std::max(h, 0.0), base);
}

double renyi(std::span<const double> p, double alpha, LogBase base) {
  require_positive_order(alpha, "renyi");
  if (is_shannon_order(alpha)) {
    return shannon(p, base);
  }
  const double h = std::log(power_sum(p, alpha)) / (1.0 - alpha);
  return in_base(std::max(h, 0.0), base);
}

double tsallis(std::span<const double> p, double alpha) {
  require_positive_order(alpha, "tsallis");
  if (is_shannon_order(alpha)) {
    return shannon(p, LogBase::Natural);
  }
  return std::max((power_sum(p, alpha) - 1.0) / (1.0 - alpha), 0.0);
}

double renyi_direct_sum_gt1(std::span<const double> omega, double alpha, LogBase base) {
  require_positive_order(alpha, "renyi_direct_sum_gt1");
  if (alpha <= 1.0 + kShannonWindow) {
    throw InvalidInput("renyi_direct_sum_gt1: order must exceed 1");
  }
  const double h =
      2.0 / (1.0 - alpha) * std::log(0.5 + 0.5 * power_sum(omega, alpha));
  return in_base(std::max(h, 0.0), base);
}

double mu_fbar(std::span<const ComplexMatrix> p, std::span<const ComplexMatrix> q) {
  require_povm(p, "mu_fbar");
  require_povm(q, "mu_fbar");
  if (p.front().rows() != q.front().rows()) {
    throw InvalidInput("mu_fbar: POVMs act on different dimensions");
  }
  std::vector<ComplexMatrix> root_q;
  root_q.reserve(q.size());
  for (const auto& m : q) {
    root_q.push_back(psd_sqrt(m));
  }
  double best = 0.0;
  for (const auto& m : p) {
    const ComplexMatrix root_p = psd_sqrt(m);
    for (const auto& rq : root_q) {
      best = std::max(best, spectral_norm(root_p * rq));
    }
  }
  return best;
}

double mu_bound(std::span<const ComplexMatrix> p, std::span<const ComplexMatrix> q,
                LogBase base) {
  const double f = mu_fbar(p, q);
  return in_base(std::max(-2.0 * std::log(f), 0.0), base);
}

double conjugate_order(double alpha) {
  if (!(alpha > 0.5) || !std::isfinite(alpha)) {
    throw InvalidInput("conjugate_order: order must exceed 1/2");
  }
  return alpha / (2.0 * alpha - 1.0);
}

MixedOrderBound mu_mixed_order_bound(std::span<const ComplexMatrix> p,
                                     std::span<const ComplexMatrix> q, double alpha,
                                     LogBase base) {
  return MixedOrderBound{alpha, conjugate_order(alpha), mu_bound(p, q, base)};
}

BoundReport bound_report(const KrausSet& a, const KrausSet& b, const EntropyQuery& query) {
  require_positive_order(query.alpha, "bound_report");
  const CrossGram gram = cross_gram(a, b);

  BoundReport r;
  r.query = query;
  r.c_sequence = ck_sequence(gram.matrix, gram.index);
  r.omega = direct_sum_omega(r.c_sequence);
  r.omega_prime = tensor_omega(r.c_sequence);

  const double alpha = query.alpha;
  const bool up_to_one = alpha <= 1.0 + kShannonWindow;
  if (up_to_one) {
    r.renyi_direct_sum = renyi(r.omega.entries, alpha, query.base);
  } else {
    r.renyi_direct_sum_alpha_gt1 = renyi_direct_sum_gt1(r.omega.entries, alpha, query.base);
  }
  r.renyi_tensor = renyi(r.omega_prime.entries, alpha, query.base);
  r.tsallis_direct_sum = tsallis(r.omega.entries, alpha);
  r.mu_bound = mu_bound(povm(a), povm(b), query.base);

  if (query.family == EntropyFamily::Tsallis) {
    r.best_applicable = r.tsallis_direct_sum;
  } else if (up_to_one) {
    r.best_applicable = std::max({*r.renyi_direct_sum, r.renyi_tensor, r.mu_bound});
  } else {
    r.best_applicable = std::max(r.renyi_tensor, *r.renyi_direct_sum_alpha_gt1);
  }
  return r;
}

}  // namespace majunc
