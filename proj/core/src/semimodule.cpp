#include "k3count/semimodule.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "k3count/error.hpp"

namespace k3count {
namespace {

std::vector<int> sorted_unique(std::span<const int> xs) {
  std::vector<int> v(xs.begin(), xs.end());
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

bool is_gap(const std::vector<int>& gaps, long long n) {
  return n < 0 || std::binary_search(gaps.begin(), gaps.end(), n);
}

// Gamma + Delta ⊆ Delta, where Delta = N \ gaps. Only members up to the
// largest gap can land on a gap.
bool is_stable(const std::vector<int>& gaps, const NumericalSemigroup& s) {
  if (gaps.empty()) return true;
  for (int d = 0; d < gaps.back(); ++d) {
    if (is_gap(gaps, d)) continue;
    for (int g : s.generators()) {
      if (d + g > gaps.back()) break;
      if (is_gap(gaps, d + g)) return false;
    }
  }
  return true;
}

void require_coprime(int p, int q) {
  if (p < 1 || q < 1) throw InvalidArgument("p and q must be positive");
  if (std::gcd(p, q) != 1) {
    throw InvalidArgument("p=" + std::to_string(p) + " and q=" +
                          std::to_string(q) + " are not coprime");
  }
}

struct SearchState {
  const NumericalSemigroup& semigroup;
  int window;
  int target;
  std::vector<char> member;
  std::vector<int> gaps;
  std::vector<GammaModule>& out;

  void run(int n) {
    const int used = static_cast<int>(gaps.size());
    if (used > target || used + (window - n) < target) return;
    if (n == window) {
      out.emplace_back(semigroup, gaps);
      return;
    }
    bool forced = false;
    for (int g : semigroup.generators()) {
      if (g > n) break;
      if (member[n - g]) {
        forced = true;
        break;
      }
    }
    if (!forced) {
      member[n] = 0;
      gaps.push_back(n);
      run(n + 1);
      gaps.pop_back();
    }
    member[n] = 1;
    run(n + 1);
  }
};

}  // namespace

GammaModule::GammaModule(NumericalSemigroup semigroup, std::vector<int> gaps)
    : semigroup_(std::move(semigroup)), gaps_(sorted_unique(gaps)) {
  if (!gaps_.empty() && gaps_.front() < 0) {
    throw InvalidModule("gap set contains a negative integer");
  }
  if (!is_stable(gaps_, semigroup_)) {
    throw InvalidModule("subset is not stable under " +
                        semigroup_.to_string());
  }
  if (static_cast<int>(gaps_.size()) != semigroup_.genus()) {
    throw InvalidModule("cogenus " + std::to_string(gaps_.size()) +
                        " differs from genus " +
                        std::to_string(semigroup_.genus()));
  }
}

int GammaModule::min_element() const {
  int n = 0;
  while (n < static_cast<int>(gaps_.size()) && gaps_[n] == n) ++n;
  return n;
}

bool GammaModule::contains(long long n) const { return !is_gap(gaps_, n); }

int enumeration_window(const NumericalSemigroup& s) {
  return s.frobenius() + s.genus() + 1;
}

std::vector<GammaModule> enumerate_delta_sets(const NumericalSemigroup& s) {
  std::vector<GammaModule> out;
  const int window = enumeration_window(s);
  SearchState state{s, window, s.genus(),
                    std::vector<char>(static_cast<std::size_t>(window), 0),
                    {}, out};
  state.run(0);
  std::sort(out.begin(), out.end(),
            [](const GammaModule& a, const GammaModule& b) {
              return a.gaps() < b.gaps();
            });
  return out;
}

GammaModule normalize_translate(std::span<const int> raw_gaps,
                                const NumericalSemigroup& s) {
  std::vector<int> gaps = sorted_unique(raw_gaps);
  if (!gaps.empty() && gaps.front() < 0) {
    throw InvalidArgument("gap set contains a negative integer");
  }
  if (!is_stable(gaps, s)) {
    throw InvalidModule("subset is not stable under " + s.to_string());
  }
  const int shift = s.genus() - static_cast<int>(gaps.size());
  std::vector<int> shifted;
  if (shift >= 0) {
    for (int n = 0; n < shift; ++n) shifted.push_back(n);
    for (int g : gaps) shifted.push_back(g + shift);
  } else {
    // The integers below min(Delta') are gaps and there are at least
    // -shift of them, so dropping the first -shift keeps the rest valid.
    for (int g : gaps) {
      if (g >= -shift) shifted.push_back(g + shift);
    }
  }
  return GammaModule(s, std::move(shifted));
}

std::vector<int> minimal_generators(const GammaModule& m) {
  std::vector<int> out;
  const auto& gens = m.semigroup().generators();
  const int limit = m.max_gap() + m.semigroup().smallest_positive();
  for (int d = 0; d <= limit; ++d) {
    if (!m.contains(d)) continue;
    bool reducible = false;
    for (int g : gens) {
      if (g > d) break;
      if (m.contains(d - g)) {
        reducible = true;
        break;
      }
    }
    if (!reducible) out.push_back(d);
  }
  return out;
}

std::vector<int> residue_offsets(const GammaModule& m, int modulus) {
  if (modulus < 1) throw InvalidArgument("modulus must be positive");
  std::vector<int> offsets(static_cast<std::size_t>(modulus));
  for (int r = 0; r < modulus; ++r) {
    int n = r;
    while (!m.contains(n)) n += modulus;
    offsets[r] = n;
  }
  return offsets;
}

std::vector<int> canonical_rotation(std::span<const int> subset, int n) {
  std::vector<char> word(static_cast<std::size_t>(n), 0);
  for (int s : subset) {
    if (s < 1 || s > n) {
      throw InvalidArgument("subset element " + std::to_string(s) +
                            " outside [1," + std::to_string(n) + "]");
    }
    word[s - 1] = 1;
  }
  int best = 0;
  auto at = [&](int start, int i) { return word[(start + i) % n]; };
  for (int start = 1; start < n; ++start) {
    for (int i = 0; i < n; ++i) {
      if (at(start, i) != at(best, i)) {
        if (at(start, i) < at(best, i)) best = start;
        break;
      }
    }
  }
  std::vector<int> out;
  for (int i = 0; i < n; ++i) {
    if (at(best, i)) out.push_back(i + 1);
  }
  return out;
}

GammaModule necklace_to_delta(std::span<const int> subset, int p, int q) {
  require_coprime(p, q);
  const int n = p + q;
  std::vector<int> s = sorted_unique(subset);
  if (static_cast<int>(s.size()) != p ||
      static_cast<int>(subset.size()) != p) {
    throw InvalidArgument("subset must have exactly p=" + std::to_string(p) +
                          " distinct elements");
  }
  if (s.front() < 1 || s.back() > n) {
    throw InvalidArgument("subset must lie in [1," + std::to_string(n) + "]");
  }
  std::vector<char> in_s(static_cast<std::size_t>(n) + 1, 0);
  for (int x : s) in_s[x] = 1;

  // a(1) = pq keeps every a(i) >= 0: along the walk a(i) = pq + alpha*q -
  // beta*p with alpha <= p, beta <= q.
  std::vector<long long> a(static_cast<std::size_t>(n) + 1);
  a[1] = static_cast<long long>(p) * q;
  for (int i = 1; i < n; ++i) a[i + 1] = in_s[i] ? a[i] + q : a[i] - p;

  std::vector<long long> starts;
  std::vector<char> residue_seen(static_cast<std::size_t>(p), 0);
  for (int x : s) {
    starts.push_back(a[x]);
    auto& seen = residue_seen[a[x] % p];
    if (seen) throw std::logic_error("necklace walk repeated a residue");
    seen = 1;
  }
  const long long top = *std::max_element(starts.begin(), starts.end());
  std::vector<int> gaps;
  for (long long v = 0; v < top; ++v) {
    bool member = false;
    for (long long st : starts) {
      if (v >= st && (v - st) % p == 0) {
        member = true;
        break;
      }
    }
    if (!member) gaps.push_back(static_cast<int>(v));
  }
  return normalize_translate(gaps, NumericalSemigroup::from_generators({p, q}));
}

NecklaceProfile delta_to_necklace(const GammaModule& m, int p, int q) {
  require_coprime(p, q);
  if (!(m.semigroup() == NumericalSemigroup::from_generators({p, q}))) {
    throw InvalidArgument("module is not over ⟨" + std::to_string(p) + "," +
                          std::to_string(q) + "⟩");
  }
  const int n = p + q;
  const std::vector<int> by_p = residue_offsets(m, p);
  const std::vector<int> by_q = residue_offsets(m, q);

  // Values a(i) for i <= p are the mod-p offsets; the other q values are the
  // mod-q offsets shifted by p. They are pairwise distinct.
  std::vector<std::pair<int, bool>> values;  // (value, steps by +q)
  for (int v : by_p) values.emplace_back(v, true);
  for (int v : by_q) values.emplace_back(v + p, false);
  std::sort(values.begin(), values.end());
  for (std::size_t i = 1; i < values.size(); ++i) {
    if (values[i].first == values[i - 1].first) {
      throw std::logic_error("residue offsets are not distinct");
    }
  }
  auto lookup = [&](int v) {
    auto it = std::lower_bound(values.begin(), values.end(),
                               std::make_pair(v, false));
    if (it == values.end() || it->first != v) {
      throw std::logic_error("necklace walk left the offset set");
    }
    return it->second;
  };

  // The map v -> v+q (mod-p offsets), v -> v-p (others) is one n-cycle.
  std::vector<int> walk;
  std::vector<int> word;
  int v = values.front().first;
  for (int i = 0; i < n; ++i) {
    const bool up = lookup(v);
    walk.push_back(v);
    word.push_back(up ? 1 : 0);
    v = up ? v + q : v - p;
  }
  if (v != walk.front()) throw std::logic_error("necklace walk did not close");

  std::vector<int> raw;
  for (int i = 0; i < n; ++i) {
    if (word[i]) raw.push_back(i + 1);
  }
  NecklaceProfile out;
  out.p = p;
  out.q = q;
  out.members = canonical_rotation(raw, n);
  // Rotation taking raw to canonical: find the offset where they agree.
  for (int shift = 0; shift < n; ++shift) {
    std::vector<int> rotated;
    for (int i = 0; i < n; ++i) {
      if (word[(i + shift) % n]) rotated.push_back(i + 1);
    }
    if (rotated == out.members) {
      for (int i = 0; i < n; ++i) out.a_seq.push_back(walk[(i + shift) % n]);
      break;
    }
  }
  return out;
}

BigInt count_necklaces(int p, int q) {
  require_coprime(p, q);
  return binomial(p + q, p) / (p + q);
}

}  // namespace k3count
