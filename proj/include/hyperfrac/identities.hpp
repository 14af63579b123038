#pragma once

#include <string>
#include <vector>

namespace hyperfrac {

/// One exact-arithmetic check; failed checks carry a short detail string.
struct IdentityCheck {
  std::string name;
  bool ok = true;
  std::string detail;
};

/// Runs the whole exact rational suite (zero tolerance):
///   - moment sums: vanishing below order 2m and the top value
///   - the one-sided weight sum
///   - partial-fraction a- and b-coefficient reconstructions at rational
///     probes
///   - the odd-power hypergeometric-style sum for j > n
///   - the difference-operator recursion on random rational polynomials
std::vector<IdentityCheck> run_exact_identity_suite();

}  // namespace hyperfrac
