#include "floorcount/oracles.hpp"

#include <omp.h>

#include <algorithm>
#include <array>
#include <numeric>
#include <random>
#include <utility>

#include "floorcount/diagram.hpp"
#include "floorcount/error.hpp"
#include "floorcount/floor_diagrams.hpp"

namespace floorcount {

namespace {

constexpr int kMaxMonodromyDegree = 5;
constexpr int kMaxTuple = 2 * kMaxMonodromyDegree - 2;

using Perm = std::array<int, kMaxMonodromyDegree>;

class TranspositionTuples {
 public:
  explicit TranspositionTuples(int d) : d_(d), length_(2 * d - 2) {
    for (int i = 0; i < d; ++i) {
      for (int j = i + 1; j < d; ++j) swaps_.emplace_back(i, j);
    }
  }

  int swap_count() const { return static_cast<int>(swaps_.size()); }
  int length() const { return length_; }

  Perm identity() const {
    Perm p{};
    std::iota(p.begin(), p.begin() + d_, 0);
    return p;
  }

  /// Counts completions of a tuple whose first `depth` entries are fixed.
  long count_from(std::array<int, kMaxTuple>& tuple, int depth, const Perm& product) const {
    if (depth == length_ - 1) {
      // The last factor must undo the product, so the product has to be a
      // transposition itself.
      int a = -1, b = -1, moved = 0;
      for (int x = 0; x < d_; ++x) {
        if (product[x] != x) {
          (moved++ == 0 ? a : b) = x;
        }
      }
      if (moved != 2) return 0;
      tuple[depth] = index_of(a, b);
      return transitive(tuple) ? 1 : 0;
    }
    long total = 0;
    for (int t = 0; t < swap_count(); ++t) {
      tuple[depth] = t;
      total += count_from(tuple, depth + 1, compose(product, t));
    }
    return total;
  }

  Perm compose(const Perm& p, int t) const {
    Perm r = p;
    const auto [i, j] = swaps_[t];
    // Right multiplication by (i j): apply the swap first.
    std::swap(r[i], r[j]);
    return r;
  }

 private:
  int index_of(int a, int b) const {
    for (int t = 0; t < swap_count(); ++t) {
      if (swaps_[t] == std::make_pair(a, b)) return t;
    }
    return -1;
  }

  bool transitive(const std::array<int, kMaxTuple>& tuple) const {
    std::array<int, kMaxMonodromyDegree> parent{};
    std::iota(parent.begin(), parent.begin() + d_, 0);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x];
      return x;
    };
    for (int k = 0; k < length_; ++k) {
      const auto [i, j] = swaps_[tuple[k]];
      parent[find(i)] = find(j);
    }
    const int r = find(0);
    for (int x = 1; x < d_; ++x) {
      if (find(x) != r) return false;
    }
    return true;
  }

  int d_;
  int length_;
  std::vector<std::pair<int, int>> swaps_;
};

void check_monodromy_degree(int d) {
  if (d < 1) throw Error(Errc::InvalidDegree, "degree must be positive", d);
  if (d > kMaxMonodromyDegree) {
    throw Error(Errc::DegreeTooLarge, "monodromy oracle supports d <= 5", d);
  }
}

}  // namespace

Rational monodromy_hurwitz_serial(int d) {
  check_monodromy_degree(d);
  if (d == 1) return Rational(1);
  const TranspositionTuples tuples(d);
  std::array<int, kMaxTuple> tuple{};
  const long count = tuples.count_from(tuple, 0, tuples.identity());
  return Rational(BigInt(count), factorial(static_cast<unsigned>(d)));
}

Rational monodromy_hurwitz(int d) {
  check_monodromy_degree(d);
  if (d == 1) return Rational(1);
  const TranspositionTuples tuples(d);
  const int t = tuples.swap_count();
  // Fix the first two factors per task; every degree >= 2 has length >= 2.
  const int fixed = std::min(2, tuples.length() - 1);
  const long tasks = fixed == 2 ? static_cast<long>(t) * t : t;
  long count = 0;
#pragma omp parallel for schedule(dynamic, 1) reduction(+ : count)
  for (long task = 0; task < tasks; ++task) {
    std::array<int, kMaxTuple> tuple{};
    Perm product = tuples.identity();
    if (fixed == 2) {
      tuple[0] = static_cast<int>(task / t);
      tuple[1] = static_cast<int>(task % t);
      product = tuples.compose(tuples.compose(product, tuple[0]), tuple[1]);
    } else {
      tuple[0] = static_cast<int>(task);
      product = tuples.compose(product, tuple[0]);
    }
    count += tuples.count_from(tuple, fixed, product);
  }
  return Rational(BigInt(count), factorial(static_cast<unsigned>(d)));
}

BigInt kontsevich_gw(int d) {
  if (d < 1) throw Error(Errc::InvalidDegree, "degree must be positive", d);
  std::vector<BigInt> n(d + 1);
  n[1] = 1;
  for (int e = 2; e <= d; ++e) {
    BigInt sum = 0;
    for (int a = 1; a < e; ++a) {
      const int b = e - a;
      const unsigned top = 3 * e - 4;
      const BigInt bracket = BigInt(b) * binomial(top, 3 * a - 2) -
                             BigInt(a) * binomial(top, 3 * a - 1);
      sum += n[a] * n[b] * a * a * b * bracket;
    }
    n[e] = sum;
  }
  return n[d];
}

AuditReport invariance_audit(int d, int cardinality, int trials, std::uint64_t seed) {
  if (d < 1) throw Error(Errc::InvalidDegree, "degree must be positive", d);
  const int labels = 3 * d - 1;
  if (cardinality < 0 || cardinality > labels) {
    throw Error(Errc::InvalidLabels, "cardinality outside 0..3d-1", cardinality);
  }
  AuditReport report;
  report.degree = d;
  report.cardinality = cardinality;

  std::vector<std::vector<int>> subsets;
  const BigInt how_many = binomial(static_cast<unsigned>(labels),
                                   static_cast<unsigned>(cardinality));
  if (how_many <= 200) {
    report.exhaustive = true;
    std::vector<bool> pick(labels, false);
    std::fill(pick.begin(), pick.begin() + cardinality, true);
    do {
      std::vector<int> s;
      for (int i = 0; i < labels; ++i) {
        if (pick[i]) s.push_back(i + 1);
      }
      subsets.push_back(std::move(s));
    } while (std::prev_permutation(pick.begin(), pick.end()));
  } else {
    std::mt19937_64 rng(seed);
    std::vector<int> all(labels);
    std::iota(all.begin(), all.end(), 1);
    for (int t = 0; t < trials; ++t) {
      std::shuffle(all.begin(), all.end(), rng);
      std::vector<int> s(all.begin(), all.begin() + cardinality);
      std::sort(s.begin(), s.end());
      subsets.push_back(std::move(s));
    }
  }

  for (const auto& s : subsets) {
    const Rational value = count_fd(d, LabelPartition::for_degree(d, s));
    if (report.subsets_checked++ == 0) {
      report.value = value;
    } else if (value != report.value && !report.counterexample) {
      report.pass = false;
      report.counterexample = s;
      report.counterexample_value = value;
    }
  }
  return report;
}

}  // namespace floorcount
