#include "k3count/invariants.hpp"

#include <numeric>

#include "k3count/error.hpp"
#include "k3count/qseries.hpp"
#include "k3count/semimodule.hpp"

namespace k3count {
namespace {

// Milnor: mu = 2*delta - r + 1, with mu the index and r the branch count.
int ade_delta(const AdeLabel& label) {
  const int n = label.index;
  switch (label.family) {
    case AdeFamily::A:
      return (n + 1) / 2;
    case AdeFamily::D:
      return (n + 2) / 2;
    case AdeFamily::E:
      return n == 6 ? 3 : 4;
  }
  return 0;
}

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

}  // namespace

void AdeLabel::validate() const {
  bool ok = false;
  switch (family) {
    case AdeFamily::A:
      ok = index >= 1;
      break;
    case AdeFamily::D:
      ok = index >= 4;
      break;
    case AdeFamily::E:
      ok = index >= 6 && index <= 8;
      break;
  }
  if (!ok) throw InvalidArgument("not an ADE label: " + to_string());
}

std::string AdeLabel::to_string() const {
  const char letter = family == AdeFamily::A   ? 'A'
                      : family == AdeFamily::D ? 'D'
                                               : 'E';
  return letter + std::to_string(index);
}

BigInt epsilon_pq(int p, int q) {
  if (p < 1 || q < 1) throw InvalidArgument("p and q must be positive");
  if (std::gcd(p, q) != 1) {
    throw InvalidArgument("pq(" + std::to_string(p) + "," + std::to_string(q) +
                          ") is not unibranch: gcd != 1");
  }
  return binomial(p + q, p) / (p + q);
}

BigInt epsilon_semigroup(const NumericalSemigroup& s) {
  return BigInt(enumerate_delta_sets(s).size());
}

BigInt epsilon_ade(const AdeLabel& label) {
  label.validate();
  const int n = label.index;
  switch (label.family) {
    case AdeFamily::A:
      return n % 2 == 0 ? n / 2 + 1 : 1;
    case AdeFamily::D:
      return n % 2 == 0 ? 1 : (n - 1) / 2;
    case AdeFamily::E:
      return n == 6 ? 5 : n == 7 ? 2 : 7;
  }
  return 0;
}

std::vector<SingularityDescriptor> branches_of_ade(const AdeLabel& label) {
  label.validate();
  const int n = label.index;
  switch (label.family) {
    case AdeFamily::A:
      if (n % 2 == 0) return {SingularityDescriptor::planar_pq(2, n + 1)};
      return {SingularityDescriptor::smooth(), SingularityDescriptor::smooth()};
    case AdeFamily::D: {
      // an A_{n-3} point plus a transversal line
      auto out = branches_of_ade({AdeFamily::A, n - 3});
      out.push_back(SingularityDescriptor::smooth());
      return out;
    }
    case AdeFamily::E:
      if (n == 6) return {SingularityDescriptor::planar_pq(3, 4)};
      if (n == 7) {
        // cusp and its tangent line
        return {SingularityDescriptor::planar_pq(2, 3),
                SingularityDescriptor::smooth()};
      }
      return {SingularityDescriptor::planar_pq(3, 5)};
  }
  return {};
}

std::vector<SingularityDescriptor> unibranch_leaves(
    const SingularityDescriptor& d) {
  return std::visit(
      Overloaded{
          [](const AdeLabel& l) { return branches_of_ade(l); },
          [&](const PlanarPQ&) {
            return std::vector<SingularityDescriptor>{d};
          },
          [&](const SemigroupSingularity&) {
            return std::vector<SingularityDescriptor>{d};
          },
          [](const MultiBranch& m) {
            std::vector<SingularityDescriptor> out;
            for (const auto& b : m.branches) {
              auto sub = unibranch_leaves(b);
              out.insert(out.end(), sub.begin(), sub.end());
            }
            return out;
          },
      },
      d.kind());
}

SingularityDescriptor SingularityDescriptor::ade(AdeFamily family, int index) {
  AdeLabel label{family, index};
  BigInt eps = epsilon_ade(label);
  return SingularityDescriptor(label, std::move(eps), ade_delta(label));
}

SingularityDescriptor SingularityDescriptor::planar_pq(int p, int q) {
  BigInt eps = epsilon_pq(p, q);
  return SingularityDescriptor(PlanarPQ{p, q}, std::move(eps),
                               (p - 1) * (q - 1) / 2);
}

SingularityDescriptor SingularityDescriptor::semigroup(NumericalSemigroup s) {
  BigInt eps = epsilon_semigroup(s);
  const int genus = s.genus();
  return SingularityDescriptor(SemigroupSingularity{std::move(s)},
                               std::move(eps), genus);
}

SingularityDescriptor SingularityDescriptor::branches(
    std::vector<SingularityDescriptor> bs) {
  if (bs.empty()) throw InvalidArgument("a point needs at least one branch");
  BigInt eps = 1;
  for (const auto& b : bs) eps *= b.epsilon();
  return SingularityDescriptor(MultiBranch{std::move(bs)}, std::move(eps),
                               std::nullopt);
}

SingularityDescriptor SingularityDescriptor::smooth() {
  return planar_pq(1, 1);
}

SingularityDescriptor SingularityDescriptor::node() {
  return branches({smooth(), smooth()});
}

std::string SingularityDescriptor::to_string() const {
  return std::visit(
      Overloaded{
          [](const AdeLabel& l) { return l.to_string(); },
          [](const PlanarPQ& pq) {
            return "pq(" + std::to_string(pq.p) + "," + std::to_string(pq.q) +
                   ")";
          },
          [](const SemigroupSingularity& s) {
            std::string out = "sg(";
            const auto& gens = s.semigroup.generators();
            for (std::size_t i = 0; i < gens.size(); ++i) {
              if (i) out += ',';
              out += std::to_string(gens[i]);
            }
            return out + ")";
          },
          [](const MultiBranch& m) {
            std::string out = "branches[";
            for (std::size_t i = 0; i < m.branches.size(); ++i) {
              if (i) out += ';';
              out += m.branches[i].to_string();
            }
            return out + "]";
          },
      },
      kind_);
}

CurveRecord::CurveRecord(std::string label,
                         std::vector<SingularityDescriptor> points)
    : label_(std::move(label)),
      singularities_(std::move(points)),
      multiplicity_(1) {
  for (const auto& s : singularities_) multiplicity_ *= s.epsilon();
}

BigInt multiplicity(const CurveRecord& c) { return c.multiplicity(); }

GenusSumReport check_genus_sum(std::span<const CurveRecord> curves,
                               std::size_t g) {
  GenusSumReport report;
  report.sum = 0;
  for (const auto& c : curves) report.sum += c.multiplicity();
  report.expected = yau_zaslow_coefficients(g)[g];
  report.equal = report.sum == report.expected;
  return report;
}

}  // namespace k3count
