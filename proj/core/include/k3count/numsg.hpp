#pragma once

#include <string>
#include <vector>

namespace k3count {

/// A submonoid of N with finite complement, stored through its gap set.
class NumericalSemigroup {
 public:
  /// Builds the semigroup spanned by `gens`. Duplicates are dropped and the
  /// rest is kept sorted but otherwise unchanged (minimality not required).
  ///
  /// Throws InvalidArgument for an empty set or a generator < 1, and
  /// InfiniteComplement when gcd(gens) != 1.
  static NumericalSemigroup from_generators(std::vector<int> gens);

  const std::vector<int>& generators() const { return generators_; }
  const std::vector<int>& gaps() const { return gaps_; }
  // Largest gap, -1 when the semigroup is all of N.
  int frobenius() const { return gaps_.empty() ? -1 : gaps_.back(); }
  int genus() const { return static_cast<int>(gaps_.size()); }
  // Smallest positive element.
  int smallest_positive() const { return generators_.front(); }

  bool contains(long long n) const;

  // "⟨3,5⟩"
  std::string to_string() const;

  // Two semigroups are equal when they have the same elements.
  friend bool operator==(const NumericalSemigroup& a,
                         const NumericalSemigroup& b) {
    return a.gaps_ == b.gaps_;
  }

 private:
  NumericalSemigroup(std::vector<int> gens, std::vector<int> gaps)
      : generators_(std::move(gens)), gaps_(std::move(gaps)) {}

  std::vector<int> generators_;
  std::vector<int> gaps_;
};

/// Membership test, free-function form.
inline bool membership(const NumericalSemigroup& s, long long n) {
  return s.contains(n);
}

}  // namespace k3count
