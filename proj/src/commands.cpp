#include "majunc/commands.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <limits>
#include <numbers>
#include <ostream>
#include <random>
#include <vector>

#include "majunc/io.hpp"
#include "majunc/majorization.hpp"
#include "majunc/qubit.hpp"

namespace majunc::cli {

namespace {

using io::json;

constexpr double kVerifyTolerance = 1e-9;
constexpr double kEquivalenceTolerance = 1e-9;
constexpr double kVerifyOrders[] = {0.2, 0.5, 1.0, 2.0};

// Maps library exceptions onto exit codes.
int guarded(std::ostream& err, const std::function<int()>& body) {
  try {
    return body();
  } catch (const io::ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kParseFailure;
  } catch (const io::IoError& e) {
    err << "I/O error: " << e.what() << '\n';
    return kIoFailure;
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << '\n';
    return kDomainViolation;
  }
}

KrausSet load_channel(const std::string& path, double tol) {
  const KrausSet k = io::channel_from_json(io::read_json_file(path));
  const TpcpReport report = validate_tpcp(k, tol);
  if (!report.pass) {
    throw InvalidInput(path + ": not trace preserving (max deviation " +
                       fixed(report.max_deviation, 12) + ")");
  }
  return k;
}

const char* base_name(LogBase base) { return base == LogBase::Two ? "2" : "e"; }
const char* family_name(EntropyFamily f) { return f == EntropyFamily::Renyi ? "renyi" : "tsallis"; }

std::string join_fixed(const std::vector<double>& values, int decimals) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i != 0) {
      out += ", ";
    }
    out += fixed(values[i], decimals);
  }
  return out;
}

std::vector<std::size_t> indices_of(std::uint32_t mask) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; mask != 0; ++i, mask >>= 1U) {
    if ((mask & 1U) != 0U) {
      out.push_back(i);
    }
  }
  return out;
}

std::vector<double> concat(const std::vector<double>& a, const std::vector<double>& b) {
  std::vector<double> out(a);
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

std::vector<double> outer(const std::vector<double>& a, const std::vector<double>& b) {
  std::vector<double> out;
  out.reserve(a.size() * b.size());
  for (const double x : a) {
    for (const double y : b) {
      out.push_back(x * y);
    }
  }
  return out;
}

// Combined slack of a majorization check: partial-sum slack, minus any
// mismatch of the totals.
double relation_slack(const MajorizationCheck& check) {
  return std::min(check.min_slack, -check.total_difference);
}

}  // namespace

double parse_angle(std::string_view text) {
  auto to_number = [&](std::string_view s) {
    double v = 0.0;
    const auto* end = s.data() + s.size();
    const auto [ptr, ec] = std::from_chars(s.data(), end, v);
    if (ec != std::errc() || ptr != end || s.empty()) {
      throw InvalidInput("cannot parse angle \"" + std::string(text) + "\"");
    }
    return v;
  };
  const auto pi_pos = text.find("pi");
  if (pi_pos == std::string_view::npos) {
    return to_number(text);
  }
  double factor = 1.0;
  if (pi_pos > 0) {
    std::string_view head = text.substr(0, pi_pos);
    if (head.back() != '*') {
      throw InvalidInput("cannot parse angle \"" + std::string(text) + "\"");
    }
    factor = to_number(head.substr(0, head.size() - 1));
  }
  std::string_view tail = text.substr(pi_pos + 2);
  double divisor = 1.0;
  if (!tail.empty()) {
    if (tail.front() != '/') {
      throw InvalidInput("cannot parse angle \"" + std::string(text) + "\"");
    }
    divisor = to_number(tail.substr(1));
    if (divisor == 0.0) {
      throw InvalidInput("angle divisor must be nonzero");
    }
  }
  return factor * std::numbers::pi / divisor;
}

std::string fixed(double value, int decimals) {
  if (std::abs(value) < 0.5 * std::pow(10.0, -decimals)) {
    value = 0.0;  // no "-0.000000"
  }
  char buf[64];
  const auto [ptr, ec] =
      std::to_chars(buf, buf + sizeof(buf), value, std::chars_format::fixed, decimals);
  if (ec != std::errc()) {
    return "nan";
  }
  return std::string(buf, ptr);
}

int cmd_validate(const std::string& path, std::ostream& out, std::ostream& err, double tol) {
  return guarded(err, [&] {
    const KrausSet k = io::channel_from_json(io::read_json_file(path));
    const TpcpReport report = validate_tpcp(k, tol);
    out << path << ": " << k.count() << " Kraus operator(s), dimension " << k.dim() << '\n';
    out << "max deviation |sum A^dagger A - I| = " << fixed(report.max_deviation, 12) << '\n';
    if (!report.pass) {
      out << "FAIL: not trace preserving at tolerance " << tol << '\n';
      return static_cast<int>(kDomainViolation);
    }
    out << "PASS\n";
    return static_cast<int>(kSuccess);
  });
}

int cmd_bounds(const BoundsOptions& opts, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const KrausSet a = load_channel(opts.a_path, opts.tpcp_tolerance);
    const KrausSet b = load_channel(opts.b_path, opts.tpcp_tolerance);
    if (a.dim() != b.dim()) {
      throw InvalidInput("channels act on different dimensions");
    }
    const EntropyQuery query{opts.alpha, opts.family, opts.base};
    const BoundReport r = bound_report(a, b, query);

    // Saturation gaps over every subset pair of the padded sets.
    const std::size_t n = std::max(a.count(), b.count());
    const KrausSet pa = pad(a, n);
    const KrausSet pb = pad(b, n);
    double gap_min = std::numeric_limits<double>::infinity();
    double gap_max = -std::numeric_limits<double>::infinity();
    for (std::uint32_t rm = 1; rm < (1U << n); ++rm) {
      for (std::uint32_t cm = 1; cm < (1U << n); ++cm) {
        const ExtremumReport e = partial_sum_extremum(pa, pb, indices_of(rm), indices_of(cm));
        gap_min = std::min(gap_min, e.saturation_gap);
        gap_max = std::max(gap_max, e.saturation_gap);
      }
    }

    if (opts.json) {
      json bounds = json::object();
      bounds["renyi_direct_sum"] =
          r.renyi_direct_sum ? json(*r.renyi_direct_sum) : json(nullptr);
      bounds["renyi_direct_sum_alpha_gt1"] =
          r.renyi_direct_sum_alpha_gt1 ? json(*r.renyi_direct_sum_alpha_gt1) : json(nullptr);
      if (!r.renyi_direct_sum) {
        bounds.erase("renyi_direct_sum");
      }
      if (!r.renyi_direct_sum_alpha_gt1) {
        bounds.erase("renyi_direct_sum_alpha_gt1");
      }
      bounds["renyi_tensor"] = r.renyi_tensor;
      bounds["tsallis_direct_sum"] = r.tsallis_direct_sum;
      bounds["mu_bound"] = r.mu_bound;
      bounds["best_applicable"] = r.best_applicable;
      bounds["units"] = opts.base == LogBase::Two ? "bits" : "nats";
      json doc = {
          {"schema_version", kSchemaVersion},
          {"inputs",
           {{"a", opts.a_path},
            {"b", opts.b_path},
            {"alpha", opts.alpha},
            {"family", family_name(opts.family)},
            {"base", base_name(opts.base)}}},
          {"c_sequence", r.c_sequence.values},
          {"omega", r.omega.entries},
          {"omega_prime", r.omega_prime.entries},
          {"bounds", bounds},
          {"diagnostics",
           {{"saturation_gap_min", gap_min},
            {"saturation_gap_max", gap_max},
            {"subset_pairs", ((1U << n) - 1U) * ((1U << n) - 1U)}}},
      };
      out << doc.dump(2) << '\n';
      return static_cast<int>(kSuccess);
    }

    const char* units = opts.base == LogBase::Two ? "bits" : "nats";
    out << "alpha = " << fixed(opts.alpha, 6) << ", family = " << family_name(opts.family)
        << ", units = " << units << '\n';
    out << "c_k          : " << join_fixed(r.c_sequence.values, 7) << '\n';
    out << "omega        : " << join_fixed(r.omega.entries, 7) << '\n';
    out << "omega'       : " << join_fixed(r.omega_prime.entries, 7) << '\n';
    if (r.renyi_direct_sum) {
      out << "renyi direct sum           " << fixed(*r.renyi_direct_sum, 7) << '\n';
    }
    if (r.renyi_direct_sum_alpha_gt1) {
      out << "renyi direct sum (a > 1)   " << fixed(*r.renyi_direct_sum_alpha_gt1, 7) << '\n';
    }
    out << "renyi tensor               " << fixed(r.renyi_tensor, 7) << '\n';
    out << "tsallis direct sum         " << fixed(r.tsallis_direct_sum, 7) << '\n';
    out << "maassen-uffink             " << fixed(r.mu_bound, 7) << '\n';
    out << "best applicable            " << fixed(r.best_applicable, 7) << '\n';
    out << "saturation gap min/max     " << fixed(gap_min, 7) << " / " << fixed(gap_max, 7)
        << '\n';
    return static_cast<int>(kSuccess);
  });
}

int cmd_curve(const CurveOptions& opts, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (opts.grid < 2) {
      throw InvalidInput("grid needs at least two points");
    }
    if (!(opts.alpha > 0.0)) {
      throw InvalidInput("alpha must be positive");
    }
    const auto rows = qubit::figure_curve(opts.angle, opts.alpha, qubit::uniform_grid(opts.grid));
    std::ofstream file(opts.out_path, std::ios::binary | std::ios::trunc);
    if (!file) {
      throw io::IoError("cannot write " + opts.out_path);
    }
    file << "b,majorization_bound,mu_bound\n";
    for (const auto& row : rows) {
      file << fixed(row.b, 6) << ',' << fixed(row.majorization_bound, 6) << ','
           << fixed(row.mu_bound, 6) << '\n';
    }
    file.close();
    if (!file) {
      throw io::IoError("failed writing " + opts.out_path);
    }
    out << "wrote " << rows.size() << " rows to " << opts.out_path << '\n';
    return static_cast<int>(kSuccess);
  });
}

namespace {

struct Violation {
  std::string check;
  std::size_t sample = 0;
  double slack = 0.0;
  ComplexMatrix state;
};

int finish_verify(json doc, const std::optional<Violation>& violation, std::ostream& out) {
  if (violation) {
    doc["status"] = "violation";
    doc["violation"] = {{"check", violation->check},
                        {"sample", violation->sample},
                        {"slack", violation->slack},
                        {"state", io::matrix_to_json(violation->state)}};
    out << doc.dump(2) << '\n';
    return kPropertyViolation;
  }
  doc["status"] = "ok";
  out << doc.dump(2) << '\n';
  return kSuccess;
}

int verify_single(const VerifyOptions& opts, const KrausSet& a, std::ostream& out) {
  const MajorizingVector omega = single_op_omega(a);
  std::mt19937_64 master(opts.seed);
  double min_majorization = std::numeric_limits<double>::infinity();
  double min_renyi = std::numeric_limits<double>::infinity();
  double min_tsallis = std::numeric_limits<double>::infinity();
  std::optional<Violation> violation;

  for (std::size_t s = 0; s < opts.samples && !violation; ++s) {
    const DensityMatrix rho = random_density(a.dim(), master());
    const ProbVector p = probabilities(a, rho);
    auto note = [&](const char* check, double slack, double& minimum) {
      minimum = std::min(minimum, slack);
      if (slack < -kVerifyTolerance && !violation) {
        violation = Violation{check, s, slack, rho.matrix()};
      }
    };
    note("single_majorization", relation_slack(majorizes(omega.entries, p, kVerifyTolerance)),
         min_majorization);
    for (const double alpha : kVerifyOrders) {
      note("single_renyi", renyi(p, alpha) - renyi(omega.entries, alpha), min_renyi);
      note("single_tsallis", tsallis(p, alpha) - tsallis(omega.entries, alpha), min_tsallis);
    }
  }

  json doc = {
      {"schema_version", kSchemaVersion},
      {"mode", "single"},
      {"inputs", {{"a", opts.a_path}, {"samples", opts.samples}, {"seed", opts.seed}}},
      {"c_tilde", single_op_ck(a).values},
      {"omega_tilde", omega.entries},
      {"min_majorization_slack", min_majorization},
      {"min_renyi_slack", min_renyi},
      {"min_tsallis_slack", min_tsallis},
  };
  return finish_verify(std::move(doc), violation, out);
}

int verify_pair(const VerifyOptions& opts, const KrausSet& a0, const KrausSet& b0,
                std::ostream& out) {
  if (a0.dim() != b0.dim()) {
    throw InvalidInput("channels act on different dimensions");
  }
  const std::size_t n = std::max(a0.count(), b0.count());
  const KrausSet a = pad(a0, n);
  const KrausSet b = pad(b0, n);

  std::vector<BoundReport> reports;
  for (const double alpha : kVerifyOrders) {
    reports.push_back(bound_report(a, b, EntropyQuery{alpha, EntropyFamily::Renyi,
                                                      LogBase::Natural}));
  }
  const MajorizingVector& omega = reports.front().omega;
  const MajorizingVector& omega_prime = reports.front().omega_prime;
  std::vector<double> one_plus_omega{1.0};
  one_plus_omega.insert(one_plus_omega.end(), omega.entries.begin(), omega.entries.end());

  std::mt19937_64 master(opts.seed);
  std::uniform_int_distribution<std::uint32_t> subset(1U, (1U << n) - 1U);
  double min_direct = std::numeric_limits<double>::infinity();
  double min_tensor = std::numeric_limits<double>::infinity();
  double min_renyi = std::numeric_limits<double>::infinity();
  double min_tsallis = std::numeric_limits<double>::infinity();
  double min_partial = std::numeric_limits<double>::infinity();
  double gap_min = std::numeric_limits<double>::infinity();
  double gap_max = -std::numeric_limits<double>::infinity();
  std::optional<Violation> violation;

  for (std::size_t s = 0; s < opts.samples && !violation; ++s) {
    const DensityMatrix rho = random_density(a.dim(), master());
    const std::uint32_t row_mask = subset(master);
    const std::uint32_t col_mask = subset(master);
    const ProbVector p = probabilities(a, rho);
    const ProbVector q = probabilities(b, rho);
    auto note = [&](const char* check, double slack, double& minimum) {
      minimum = std::min(minimum, slack);
      if (slack < -kVerifyTolerance && !violation) {
        violation = Violation{check, s, slack, rho.matrix()};
      }
    };

    note("direct_sum_majorization",
         relation_slack(majorizes(one_plus_omega, concat(p, q), kVerifyTolerance)), min_direct);
    note("tensor_majorization",
         relation_slack(majorizes(omega_prime.entries, outer(p, q), kVerifyTolerance)),
         min_tensor);

    for (std::size_t i = 0; i < reports.size(); ++i) {
      const double alpha = kVerifyOrders[i];
      const BoundReport& r = reports[i];
      const double renyi_sum = renyi(p, alpha) + renyi(q, alpha);
      note("renyi_tensor", renyi_sum - r.renyi_tensor, min_renyi);
      if (r.renyi_direct_sum) {
        note("renyi_direct_sum", renyi_sum - *r.renyi_direct_sum, min_renyi);
        note("maassen_uffink", renyi_sum - r.mu_bound, min_renyi);
      }
      if (r.renyi_direct_sum_alpha_gt1) {
        note("renyi_direct_sum_alpha_gt1", renyi_sum - *r.renyi_direct_sum_alpha_gt1, min_renyi);
      }
      note("tsallis_direct_sum", tsallis(p, alpha) + tsallis(q, alpha) - r.tsallis_direct_sum,
           min_tsallis);
    }

    const auto rows = indices_of(row_mask);
    const auto cols = indices_of(col_mask);
    const ExtremumReport e = partial_sum_extremum(a, b, rows, cols);
    gap_min = std::min(gap_min, e.saturation_gap);
    gap_max = std::max(gap_max, e.saturation_gap);
    note("partial_sum_extremum", e.saturation_gap, min_partial);
    double partial = 0.0;
    for (const std::size_t i : rows) {
      partial += p[i];
    }
    for (const std::size_t j : cols) {
      partial += q[j];
    }
    note("partial_sum_bound", e.bound - partial, min_partial);
  }

  json doc = {
      {"schema_version", kSchemaVersion},
      {"mode", "pair"},
      {"inputs",
       {{"a", opts.a_path}, {"b", *opts.b_path}, {"samples", opts.samples}, {"seed", opts.seed}}},
      {"c_sequence", reports.front().c_sequence.values},
      {"omega", omega.entries},
      {"omega_prime", omega_prime.entries},
      {"min_direct_sum_slack", min_direct},
      {"min_tensor_slack", min_tensor},
      {"min_renyi_slack", min_renyi},
      {"min_tsallis_slack", min_tsallis},
      {"min_partial_sum_slack", min_partial},
      {"saturation_gap_min", gap_min},
      {"saturation_gap_max", gap_max},
  };
  return finish_verify(std::move(doc), violation, out);
}

}  // namespace

int cmd_verify(const VerifyOptions& opts, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (opts.samples == 0) {
      throw InvalidInput("samples must be positive");
    }
    const KrausSet a = load_channel(opts.a_path, opts.tpcp_tolerance);
    if (!opts.b_path) {
      return verify_single(opts, a, out);
    }
    const KrausSet b = load_channel(*opts.b_path, opts.tpcp_tolerance);
    return verify_pair(opts, a, b, out);
  });
}

int cmd_equivalence(const EquivalenceOptions& opts, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    ComplexMatrix e;
    ComplexMatrix f;
    if (opts.unitary_path) {
      const ComplexMatrix w = io::unitary_from_json(io::read_json_file(*opts.unitary_path));
      const double defect = unitarity_defect(w);
      if (defect > 1e-9) {
        throw InvalidInput("matrix is not unitary (defect " + fixed(defect, 12) + ")");
      }
      e = ComplexMatrix::Identity(w.rows(), w.cols());
      f = w;
    } else {
      if (!opts.dim || *opts.dim < 2 || *opts.dim > 6) {
        throw InvalidInput("--dim must lie in [2, 6]");
      }
      std::mt19937_64 master(opts.seed);
      const std::uint64_t seed_e = master();
      const std::uint64_t seed_f = master();
      e = random_unitary(*opts.dim, seed_e);
      f = random_unitary(*opts.dim, seed_f);
    }
    const CrossGram gram = cross_gram(projectors_from_basis(e), projectors_from_basis(f));
    const NormSequence c = truncated(ck_sequence(gram.matrix, gram.index));
    const NormSequence s = unitary_sk(overlap_unitary(e, f));

    const std::size_t len = std::max(c.values.size(), s.values.size());
    double max_diff = 0.0;
    out << " k            c_k            s_k\n";
    for (std::size_t k = 0; k < len; ++k) {
      // Past truncation both sequences are 1.
      const double ck = k < c.values.size() ? c.values[k] : 1.0;
      const double sk = k < s.values.size() ? s.values[k] : 1.0;
      max_diff = std::max(max_diff, std::abs(ck - sk));
      std::string idx = std::to_string(k + 1);
      out << std::string(2 - std::min<std::size_t>(idx.size(), 2), ' ') << idx << "   "
          << fixed(ck, 12) << "   " << fixed(sk, 12) << '\n';
    }
    out << "max |c_k - s_k| = " << max_diff << '\n';
    if (max_diff > kEquivalenceTolerance) {
      out << "MISMATCH\n";
      return static_cast<int>(kPropertyViolation);
    }
    out << "MATCH\n";
    return static_cast<int>(kSuccess);
  });
}

int cmd_single(const SingleOptions& opts, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (!(opts.alpha > 0.0)) {
      throw InvalidInput("alpha must be positive");
    }
    const KrausSet a = load_channel(opts.a_path, opts.tpcp_tolerance);
    const NormSequence c = single_op_ck(a);
    const NormSequence literal = single_op_ck_blocks(a);
    const MajorizingVector omega = single_op_omega(a);
    out << "c~_k (subset sums)   : " << join_fixed(c.values, 7) << '\n';
    out << "c~_k (block variant) : " << join_fixed(literal.values, 7) << '\n';
    out << "omega~               : " << join_fixed(omega.entries, 7) << '\n';
    out << "renyi bound  (nats)  : " << fixed(renyi(omega.entries, opts.alpha), 7) << '\n';
    out << "tsallis bound        : " << fixed(tsallis(omega.entries, opts.alpha), 7) << '\n';
    return static_cast<int>(kSuccess);
  });
}

}  // namespace majunc::cli
