#include "k3count/numsg.hpp"

#include <algorithm>
#include <numeric>

#include "k3count/error.hpp"

namespace k3count {
namespace {

// Sieve size cap; the bound is min*max of the generators.
constexpr long long kMaxSieve = 100'000'000;

}  // namespace

NumericalSemigroup NumericalSemigroup::from_generators(std::vector<int> gens) {
  if (gens.empty()) throw InvalidArgument("empty generator set");
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  if (gens.front() < 1) {
    throw InvalidArgument("generators must be positive integers");
  }
  int g = 0;
  for (int x : gens) g = std::gcd(g, x);
  if (g != 1) {
    throw InfiniteComplement("generators have gcd " + std::to_string(g) +
                             ", complement is infinite");
  }

  const long long bound =
      static_cast<long long>(gens.front()) * static_cast<long long>(gens.back());
  if (bound > kMaxSieve) {
    throw InvalidArgument("semigroup too large to sieve");
  }
  // Schur: frobenius <= (min-1)(max-1)-1 < min*max, so [0, bound] is enough.
  std::vector<char> reachable(static_cast<std::size_t>(bound) + 1, 0);
  reachable[0] = 1;
  std::vector<int> gaps;
  for (long long n = 1; n <= bound; ++n) {
    for (int x : gens) {
      if (x > n) break;
      if (reachable[n - x]) {
        reachable[n] = 1;
        break;
      }
    }
    if (!reachable[n]) gaps.push_back(static_cast<int>(n));
  }
  return NumericalSemigroup(std::move(gens), std::move(gaps));
}

bool NumericalSemigroup::contains(long long n) const {
  if (n < 0) return false;
  if (n > frobenius()) return true;
  return !std::binary_search(gaps_.begin(), gaps_.end(), static_cast<int>(n));
}

std::string NumericalSemigroup::to_string() const {
  std::string out = "⟨";
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(generators_[i]);
  }
  return out + "⟩";
}

}  // namespace k3count
