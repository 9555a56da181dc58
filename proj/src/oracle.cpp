#include "altruns/oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <future>
#include <numeric>
#include <span>
#include <string>

namespace altruns {
namespace {

unsigned runs_of(std::span<const unsigned> v) {
  unsigned changes = 0;
  for (std::size_t i = 1; i + 1 < v.size(); ++i) {
    const bool peak = v[i - 1] < v[i] && v[i] > v[i + 1];
    const bool valley = v[i - 1] > v[i] && v[i] < v[i + 1];
    if (peak || valley) ++changes;
  }
  return changes + 1;
}

unsigned descents_of(std::span<const unsigned> v) {
  unsigned d = 0;
  for (std::size_t i = 0; i + 1 < v.size(); ++i)
    if (v[i] > v[i + 1]) ++d;
  return d;
}

/// Histogram of statistic(π) over S_n. Buckets are keyed by π(1) and
/// enumerated independently, then merged.
template <typename Statistic>
std::vector<std::uint64_t> histogram(unsigned n, Statistic statistic) {
  auto bucket = [n, statistic](unsigned first) {
    std::vector<std::uint64_t> counts(n + 1, 0);
    std::vector<unsigned> perm(n);
    perm[0] = first;
    unsigned next = 1;
    for (std::size_t i = 1; i < n; ++i, ++next) {
      if (next == first) ++next;
      perm[i] = next;
    }
    do {
      ++counts[statistic(std::span<const unsigned>(perm))];
    } while (std::next_permutation(perm.begin() + 1, perm.end()));
    return counts;
  };

  std::vector<std::future<std::vector<std::uint64_t>>> jobs;
  const auto policy = n >= 8 ? std::launch::async : std::launch::deferred;
  for (unsigned first = 1; first <= n; ++first) jobs.push_back(std::async(policy, bucket, first));

  std::vector<std::uint64_t> total(n + 1, 0);
  for (auto& job : jobs) {
    const auto counts = job.get();
    for (std::size_t i = 0; i < total.size(); ++i) total[i] += counts[i];
  }
  return total;
}

void check_cap(unsigned n_max, unsigned cap) {
  if (n_max > cap) throw CapExceeded(n_max, cap);
}

}  // namespace

Permutation::Permutation(std::vector<unsigned> values) : values_(std::move(values)) {
  if (values_.empty()) throw DomainError("Permutation: length must be >= 1");
  std::vector<bool> seen(values_.size() + 1, false);
  for (unsigned v : values_) {
    if (v < 1 || v > values_.size() || seen[v])
      throw DomainError("Permutation: values must be each of 1.." + std::to_string(values_.size()) + " exactly once");
    seen[v] = true;
  }
}

Permutation Permutation::reversed() const {
  std::vector<unsigned> out(values_.rbegin(), values_.rend());
  return Permutation(std::move(out));
}

Permutation Permutation::complemented() const {
  const auto n = static_cast<unsigned>(values_.size());
  std::vector<unsigned> out(values_.size());
  std::transform(values_.begin(), values_.end(), out.begin(), [n](unsigned v) { return n + 1 - v; });
  return Permutation(std::move(out));
}

unsigned count_runs(const Permutation& p) {
  if (p.size() < 2) throw DomainError("count_runs: permutation length must be >= 2");
  return runs_of(p.values());
}

unsigned count_descents(const Permutation& p) { return descents_of(p.values()); }

TriangularTable runs_triangle_oracle(unsigned n_max, unsigned cap) {
  if (n_max < 2) throw DomainError("runs_triangle_oracle: n_max must be >= 2");
  check_cap(n_max, cap);
  TriangularTable table(2, 1);
  for (unsigned n = 2; n <= n_max; ++n) {
    const auto counts = histogram(n, runs_of);
    std::vector<BigInt> row;
    for (unsigned k = 1; k <= n - 1; ++k) row.emplace_back(static_cast<unsigned long>(counts[k]));
    table.push_row(std::move(row));
  }
  return table;
}

TriangularTable eulerian_triangle_oracle(unsigned n_max, unsigned cap) {
  if (n_max < 1) throw DomainError("eulerian_triangle_oracle: n_max must be >= 1");
  check_cap(n_max, cap);
  TriangularTable table(1, 1);
  for (unsigned n = 1; n <= n_max; ++n) {
    const auto counts = histogram(n, descents_of);
    std::vector<BigInt> row;
    for (unsigned k = 1; k <= n; ++k) row.emplace_back(static_cast<unsigned long>(counts[k - 1]));
    table.push_row(std::move(row));
  }
  return table;
}

}  // namespace altruns
