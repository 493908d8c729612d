#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mukai_lab/mukai.hpp"
#include "mukai_lab/walls.hpp"

namespace mukai_lab {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;  // first failure, or a short summary
};

struct CheckOptions {
  long r_max = 8;
  long n_max = 10;
  long k_max = 60;
  long recursion_r_max = 12;
  long recursion_n_max = 8;
};

// Deterministic 64-bit generator (splitmix64); gives the suite the same
// sample set on every run and platform.
class SplitMix64 {
public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next();
  // Uniform-ish integer in [lo, hi] (inclusive); fine for test sampling.
  long range(long lo, long hi);

private:
  std::uint64_t state_;
};

// Exhaustive (x, y) box scan with primitivity, the pairing bound and the
// cone filter applied one by one; independent of the enumeration kernel.
std::vector<WallClass> brute_force_walls(const Rat& k);

// The nine acceptance checks, in order, on the built-in elliptic surface.
std::vector<CheckResult> run_all_checks(const CheckOptions& opt);

CheckResult check_theta_isometry(const CheckOptions& opt);
CheckResult check_theta_recursion(const CheckOptions& opt);
CheckResult check_wall_enumeration(const CheckOptions& opt);
CheckResult check_suitability_criterion(const CheckOptions& opt);
CheckResult check_twist_invariance(const CheckOptions& opt);
CheckResult check_discriminant_identity(const CheckOptions& opt);
CheckResult check_donaldson_closed_form(const CheckOptions& opt);
CheckResult check_beauville_lattice(const CheckOptions& opt);
CheckResult check_perpendicularity(const CheckOptions& opt);

}  // namespace mukai_lab
