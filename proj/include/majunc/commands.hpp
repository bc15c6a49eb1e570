// Implementations of the `maj` subcommands. Each returns the process exit
// code and writes only to the streams it is given.
#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include "majunc/entropy.hpp"

namespace majunc::cli {

enum ExitCode : int {
  kSuccess = 0,
  kDomainViolation = 2,
  kParseFailure = 3,
  kIoFailure = 4,
  kPropertyViolation = 5,
};

inline constexpr const char* kSchemaVersion = "1";

struct BoundsOptions {
  std::string a_path;
  std::string b_path;
  double alpha = 1.0;
  EntropyFamily family = EntropyFamily::Renyi;
  LogBase base = LogBase::Two;
  bool json = false;
  double tpcp_tolerance = kTpcpTolerance;
};

struct CurveOptions {
  double angle = 0.0;
  double alpha = 1.0;
  std::size_t grid = 101;
  std::string out_path;
};

struct VerifyOptions {
  std::string a_path;
  std::optional<std::string> b_path;
  std::size_t samples = 1000;
  std::uint64_t seed = 0;
  double tpcp_tolerance = kTpcpTolerance;
};

struct EquivalenceOptions {
  std::optional<std::size_t> dim;
  std::uint64_t seed = 0;
  std::optional<std::string> unitary_path;
};

struct SingleOptions {
  std::string a_path;
  double alpha = 1.0;
  double tpcp_tolerance = kTpcpTolerance;
};

// Accepts plain radians or "pi", "pi/N", "K*pi/N" style literals.
double parse_angle(std::string_view text);

// Fixed-point text with `decimals` digits; independent of the C++ locale.
std::string fixed(double value, int decimals);

int cmd_validate(const std::string& path, std::ostream& out, std::ostream& err,
                 double tol = kTpcpTolerance);
int cmd_bounds(const BoundsOptions& opts, std::ostream& out, std::ostream& err);
int cmd_curve(const CurveOptions& opts, std::ostream& out, std::ostream& err);
int cmd_verify(const VerifyOptions& opts, std::ostream& out, std::ostream& err);
int cmd_equivalence(const EquivalenceOptions& opts, std::ostream& out, std::ostream& err);
int cmd_single(const SingleOptions& opts, std::ostream& out, std::ostream& err);

}  // namespace majunc::cli
