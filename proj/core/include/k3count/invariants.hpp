#pragma once

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "k3count/bigint.hpp"
#include "k3count/numsg.hpp"

namespace k3count {

enum class AdeFamily { A, D, E };

/// A simple plane curve singularity: A_n (n >= 1), D_n (n >= 4), E_6..E_8.
struct AdeLabel {
  AdeFamily family;
  int index;

  // Throws InvalidArgument for labels outside the ADE list.
  void validate() const;
  std::string to_string() const;

  friend bool operator==(const AdeLabel&, const AdeLabel&) = default;
};

class SingularityDescriptor;

struct PlanarPQ {
  int p;
  int q;
  friend bool operator==(const PlanarPQ&, const PlanarPQ&) = default;
};

struct SemigroupSingularity {
  NumericalSemigroup semigroup;
  friend bool operator==(const SemigroupSingularity&,
                         const SemigroupSingularity&) = default;
};

struct MultiBranch {
  std::vector<SingularityDescriptor> branches;
  friend bool operator==(const MultiBranch&, const MultiBranch&) = default;
};

/// A singular point together with its epsilon invariant.
///
/// epsilon is evaluated once at construction: the ADE table for ADE
/// labels, C(p+q,p)/(p+q) for C[[u,v]]/(u^p - v^q), Delta-set enumeration for
/// an explicit semigroup ring, and the product over branches otherwise.
class SingularityDescriptor {
 public:
  using Kind = std::variant<AdeLabel, PlanarPQ, SemigroupSingularity,
                            MultiBranch>;

  static SingularityDescriptor ade(AdeFamily family, int index);
  static SingularityDescriptor planar_pq(int p, int q);
  static SingularityDescriptor semigroup(NumericalSemigroup s);
  static SingularityDescriptor branches(std::vector<SingularityDescriptor> bs);
  // pq(1,1)
  static SingularityDescriptor smooth();
  // Two transversal smooth branches.
  static SingularityDescriptor node();

  const Kind& kind() const { return kind_; }
  const BigInt& epsilon() const { return epsilon_; }
  // Local delta invariant; unknown for multi-branch points.
  std::optional<int> delta() const { return delta_; }

  // Canonical mini-language rendering, e.g. "E8", "pq(3,5)",
  // "branches[pq(1,1);pq(1,1)]".
  std::string to_string() const;

  friend bool operator==(const SingularityDescriptor& a,
                         const SingularityDescriptor& b) {
    return a.kind_ == b.kind_;
  }

 private:
  SingularityDescriptor(Kind kind, BigInt epsilon, std::optional<int> delta)
      : kind_(std::move(kind)),
        epsilon_(std::move(epsilon)),
        delta_(delta) {}

  Kind kind_;
  BigInt epsilon_;
  std::optional<int> delta_;
};

/// A rational curve, described by its singular points.
class CurveRecord {
 public:
  CurveRecord(std::string label, std::vector<SingularityDescriptor> points);

  const std::string& label() const { return label_; }
  const std::vector<SingularityDescriptor>& singularities() const {
    return singularities_;
  }
  // Product of the epsilons of all listed points; 1 for a smooth curve.
  const BigInt& multiplicity() const { return multiplicity_; }

 private:
  std::string label_;
  std::vector<SingularityDescriptor> singularities_;
  BigInt multiplicity_;
};

/// C(p+q, p) / (p+q) for coprime p, q >= 1.
BigInt epsilon_pq(int p, int q);

/// Number of Delta-sets of `s`.
BigInt epsilon_semigroup(const NumericalSemigroup& s);

/// Table value: A_{2l} -> l+1, A_{2l+1} -> 1, D_{2l} -> 1, D_{2l+1} -> l,
/// E6 -> 5, E7 -> 2, E8 -> 7.
BigInt epsilon_ade(const AdeLabel& label);

/// Branch decomposition of an ADE point, flattened to PlanarPQ leaves
/// (a smooth branch is pq(1,1)). A unibranch point yields one leaf.
std::vector<SingularityDescriptor> branches_of_ade(const AdeLabel& label);

/// Unibranch leaves of a descriptor: ADE labels go through
/// branches_of_ade, MultiBranch is flattened recursively.
std::vector<SingularityDescriptor> unibranch_leaves(
    const SingularityDescriptor& d);

BigInt multiplicity(const CurveRecord& c);

struct GenusSumReport {
  BigInt sum;
  BigInt expected;
  bool equal = false;
};

/// Compares the summed multiplicities of the given rational curves against
/// e(g). A mismatch is reported, not thrown.
GenusSumReport check_genus_sum(std::span<const CurveRecord> curves,
                               std::size_t g);

}  // namespace k3count
