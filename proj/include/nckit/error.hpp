#pragma once

#include <cstddef>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <vector>

namespace nckit {

/// Malformed arguments: bad partitions, mismatched sizes, out-of-range indices.
class invalid_input : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A computation was refused because its size exceeds a configured cap.
class resource_limit : public std::runtime_error {
 public:
  resource_limit(const std::string& what, std::size_t requested, std::size_t cap)
      : std::runtime_error(what + ": requested " + std::to_string(requested) +
                           " exceeds cap " + std::to_string(cap)),
        requested_(requested),
        cap_(cap) {}

  std::size_t requested() const noexcept { return requested_; }
  std::size_t cap() const noexcept { return cap_; }

 private:
  std::size_t requested_;
  std::size_t cap_;
};

/// An iterative method did not reach its tolerance; carries the last iterate.
class numerical_failure : public std::runtime_error {
 public:
  numerical_failure(const std::string& what, double last_estimate, std::vector<double> last_iterate)
      : std::runtime_error(what), last_estimate_(last_estimate), last_iterate_(std::move(last_iterate)) {}

  double last_estimate() const noexcept { return last_estimate_; }
  const std::vector<double>& last_iterate() const noexcept { return last_iterate_; }

 private:
  double last_estimate_;
  std::vector<double> last_iterate_;
};

// Default size caps. Every capped operation takes its cap as a trailing
// argument so callers (and the CLI's --cap / NCKIT_CAP) can override them.
namespace caps {
inline constexpr std::size_t enumerate_nc = 12;
inline constexpr std::size_t set_partitions = 9;
inline constexpr std::size_t interval_partitions = 16;
inline constexpr std::size_t mobius_oracle = 7;
inline constexpr std::size_t incidence_matrix = 9;
inline constexpr std::size_t determinant = 8;
inline constexpr std::size_t meet_matrix = 6;
inline constexpr std::size_t spectral = 8;
inline constexpr std::size_t product_arity = 4;
inline constexpr std::size_t product_order = 6;
inline constexpr std::size_t product_order_boolean = 10;
}  // namespace caps

inline void check_cap(const char* what, std::size_t requested, std::size_t cap) {
  if (requested > cap) throw resource_limit(what, requested, cap);
}

}  // namespace nckit
