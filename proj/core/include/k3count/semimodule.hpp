#pragma once

#include <span>
#include <vector>

#include "k3count/bigint.hpp"
#include "k3count/numsg.hpp"

namespace k3count {

/// A subset Delta of N with Gamma + Delta ⊆ Delta and
/// |N \ Delta| = |N \ Gamma|, stored through its (finite) gap set.
///
/// The constructor validates both conditions and throws InvalidModule if
/// either fails, so every GammaModule value is a genuine Delta-set.
class GammaModule {
 public:
  GammaModule(NumericalSemigroup semigroup, std::vector<int> gaps);

  const NumericalSemigroup& semigroup() const { return semigroup_; }
  const std::vector<int>& gaps() const { return gaps_; }
  int min_element() const;
  int max_gap() const { return gaps_.empty() ? -1 : gaps_.back(); }
  bool contains(long long n) const;

  friend bool operator==(const GammaModule&, const GammaModule&) = default;

 private:
  NumericalSemigroup semigroup_;
  std::vector<int> gaps_;
};

/// Every Delta-set of `s`, sorted lexicographically by gap set.
///
/// Depth-first over the positions 0 .. frobenius + genus, which bound every
/// gap: the minimum m of Delta is at most genus, and m + Gamma ⊆ Delta.
std::vector<GammaModule> enumerate_delta_sets(const NumericalSemigroup& s);

/// Width of the window enumerate_delta_sets searches (frobenius + genus + 1).
int enumeration_window(const NumericalSemigroup& s);

/// The unique translate n + Delta' ⊆ N with the cogenus of `s`, where
/// Delta' = N \ raw_gaps. Throws InvalidModule if Delta' is not
/// Gamma-stable, InvalidArgument if raw_gaps has negative entries.
GammaModule normalize_translate(std::span<const int> raw_gaps,
                                const NumericalSemigroup& s);

/// Smallest G with Delta = ∪_{g∈G} (g + Gamma).
std::vector<int> minimal_generators(const GammaModule& m);

/// Minimum element of Delta in each residue class mod `modulus`, indexed by
/// residue. Delta = ∪ (offsets[r] + modulus·N) whenever modulus ∈ Gamma.
std::vector<int> residue_offsets(const GammaModule& m, int modulus);

/// A p-subset of {1..p+q} up to rotation, with the walk a(1..p+q) that
/// satisfies a(i+1) = a(i) + q for i in S, a(i) - p otherwise (cyclically).
struct NecklaceProfile {
  int p = 0;
  int q = 0;
  // 1-based, sorted; the rotation whose characteristic word is
  // lexicographically smallest.
  std::vector<int> members;
  std::vector<int> a_seq;

  friend bool operator==(const NecklaceProfile&,
                         const NecklaceProfile&) = default;
};

/// Canonical rotation of a p-subset of {1..n} (1-based), n = p + q.
std::vector<int> canonical_rotation(std::span<const int> subset, int n);

/// Delta_S = ∪_{s∈S} (a_S(s) + pN), normalized to the cogenus of ⟨p,q⟩.
/// Throws InvalidArgument unless gcd(p,q) = 1 and S is a p-subset of
/// {1..p+q}.
GammaModule necklace_to_delta(std::span<const int> subset, int p, int q);

/// Inverse of necklace_to_delta. `m` must be a module over ⟨p,q⟩.
NecklaceProfile delta_to_necklace(const GammaModule& m, int p, int q);

/// C(p+q, p) / (p+q), the number of p-subsets of Z/(p+q) up to rotation.
BigInt count_necklaces(int p, int q);

}  // namespace k3count
