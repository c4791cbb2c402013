#include "floorcount/hurwitz.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <random>
#include <shared_mutex>

#include "floorcount/error.hpp"

namespace floorcount {

const char* event_kind_name(CoverEventKind k) {
  switch (k) {
    case CoverEventKind::Split: return "split";
    case CoverEventKind::Merge: return "merge";
    case CoverEventKind::BoundaryOpen: return "boundary_open";
    case CoverEventKind::BoundaryClose: return "boundary_close";
  }
  return "unknown";
}

Rational closed_hurwitz(int d) {
  if (d < 1) throw Error(Errc::InvalidDegree, "closed_hurwitz needs d >= 1", d);
  BigInt power;
  mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(d),
                static_cast<unsigned long>(std::abs(d - 3)));
  const BigInt num = factorial(2 * d - 2);
  const BigInt den = factorial(d);
  if (d >= 3) return Rational(power * num, den);
  return Rational(num, power * den);
}

bool HurwitzProblem::feasible() const {
  if (delta.empty() || delta.size() != branch.size()) return false;
  const int s = circles();
  if (std::any_of(delta.begin(), delta.end(), [](int x) { return x < 0; }) ||
      std::any_of(branch.begin(), branch.end(), [](int x) { return x < 0; })) {
    return false;
  }
  for (int i = 1; i <= s; ++i) {
    if (delta[i] == delta[i - 1]) return false;
  }
  const long total = std::accumulate(branch.begin(), branch.end(), 0L);
  return total == static_cast<long>(delta.front()) + delta.back() + s - 2;
}

std::string TropicalCover::key() const {
  std::string k;
  for (const auto& e : edges) {
    k += e.from == CoverEdge::kMinusInfinity ? "-inf" : std::to_string(e.from);
    k += '>';
    k += e.to == CoverEdge::kPlusInfinity ? "+inf" : std::to_string(e.to);
    k += ':';
    k += std::to_string(e.weight);
    k += ';';
  }
  return k;
}

namespace {

struct Slot {
  bool boundary;
  int chamber;  // chamber of a branch point, circle index of a boundary
};

struct ActiveEdge {
  int weight;
  int from;
  int component;
};

struct SweepState {
  std::vector<ActiveEdge> active;
  std::vector<CoverEdge> edges;
  std::vector<CoverEvent> events;
  std::vector<int> component_parent;

  int root(int c) const {
    while (component_parent[c] != c) c = component_parent[c];
    return c;
  }
  int new_component() {
    component_parent.push_back(static_cast<int>(component_parent.size()));
    return component_parent.back();
  }
};

struct Move {
  bool split;
  int first;   // active index
  int second;  // split: part a; merge: second active index
};

class CoverSweep {
 public:
  CoverSweep(const HurwitzProblem& p, const CoverSearchOptions& options)
      : problem_(p), rng_(options.shuffle_seed), shuffle_(options.shuffle_seed != 0) {
    for (int i = 0; i <= p.circles(); ++i) {
      for (int b = 0; b < p.branch[i]; ++b) slots_.push_back({false, i});
      if (i < p.circles()) slots_.push_back({true, i + 1});
    }
  }

  std::map<std::string, TropicalCover> run() {
    SweepState start;
    for (int i = 0; i < problem_.delta.front(); ++i) {
      start.active.push_back({1, CoverEdge::kMinusInfinity, start.new_component()});
    }
    step(0, start);
    return std::move(found_);
  }

 private:
  void step(std::size_t pos, SweepState& st) {
    if (pos == slots_.size()) {
      finish(st);
      return;
    }
    const int at = static_cast<int>(pos);
    const Slot slot = slots_[pos];
    if (slot.boundary) {
      const int jump = problem_.delta[slot.chamber] - problem_.delta[slot.chamber - 1];
      if (jump > 0) {
        SweepState next = st;
        next.active.push_back({jump, at, next.new_component()});
        next.events.push_back({at, CoverEventKind::BoundaryOpen, slot.chamber, {jump}});
        step(pos + 1, next);
        return;
      }
      for (std::size_t j = 0; j < st.active.size(); ++j) {
        if (st.active[j].weight != -jump) continue;
        SweepState next = st;
        const ActiveEdge e = next.active[j];
        next.active.erase(next.active.begin() + static_cast<long>(j));
        next.edges.push_back({e.from, at, e.weight});
        next.events.push_back({at, CoverEventKind::BoundaryClose, slot.chamber, {e.weight}});
        step(pos + 1, next);
      }
      return;
    }

    std::vector<Move> moves;
    const int n = static_cast<int>(st.active.size());
    for (int j = 0; j < n; ++j) {
      for (int a = 1; 2 * a <= st.active[j].weight; ++a) moves.push_back({true, j, a});
    }
    for (int j = 0; j < n; ++j) {
      for (int k = j + 1; k < n; ++k) {
        // Gluing two edges of one component would close a cycle.
        if (st.root(st.active[j].component) == st.root(st.active[k].component)) continue;
        moves.push_back({false, j, k});
      }
    }
    if (shuffle_) std::shuffle(moves.begin(), moves.end(), rng_);

    for (const Move& mv : moves) {
      SweepState next = st;
      if (mv.split) {
        const ActiveEdge e = next.active[mv.first];
        const int a = mv.second, b = e.weight - mv.second;
        next.active.erase(next.active.begin() + mv.first);
        next.edges.push_back({e.from, at, e.weight});
        next.active.push_back({a, at, e.component});
        next.active.push_back({b, at, e.component});
        next.events.push_back({at, CoverEventKind::Split, slot.chamber, {e.weight, a, b}});
      } else {
        const ActiveEdge x = next.active[mv.first];
        const ActiveEdge y = next.active[mv.second];
        next.active.erase(next.active.begin() + mv.second);
        next.active.erase(next.active.begin() + mv.first);
        next.edges.push_back({x.from, at, x.weight});
        next.edges.push_back({y.from, at, y.weight});
        const int rx = next.root(x.component), ry = next.root(y.component);
        next.component_parent[rx] = ry;
        next.active.push_back({x.weight + y.weight, at, ry});
        next.events.push_back({at, CoverEventKind::Merge, slot.chamber,
                               {x.weight, y.weight, x.weight + y.weight}});
      }
      step(pos + 1, next);
    }
  }

  void finish(SweepState& st) {
    for (const auto& e : st.active) {
      if (e.weight != 1) return;
    }
    if (st.component_parent.empty()) return;
    const int r = st.root(0);
    for (int c = 0; c < static_cast<int>(st.component_parent.size()); ++c) {
      if (st.root(c) != r) return;
    }
    TropicalCover cover;
    cover.events = st.events;
    cover.edges = st.edges;
    for (const auto& e : st.active) {
      cover.edges.push_back({e.from, CoverEdge::kPlusInfinity, e.weight});
    }
    std::sort(cover.edges.begin(), cover.edges.end());

    Rational mu(1);
    for (const auto& e : cover.edges) {
      mu *= Rational(e.weight);
      if (is_boundary(e.from)) mu /= Rational(e.weight);
      if (is_boundary(e.to)) mu /= Rational(e.weight);
    }
    cover.mu = mu;
    int twins = 0;
    for (std::size_t i = 1; i < cover.edges.size(); ++i) {
      const auto& e = cover.edges[i];
      if (e.is_end() && e.weight == 1 && e == cover.edges[i - 1]) ++twins;
    }
    cover.aut_order = 1 << twins;
    std::string key = cover.key();
    found_.emplace(std::move(key), std::move(cover));
  }

  bool is_boundary(int position) const {
    return position >= 0 && position != CoverEdge::kPlusInfinity &&
           slots_[position].boundary;
  }

  const HurwitzProblem& problem_;
  std::vector<Slot> slots_;
  std::mt19937_64 rng_;
  bool shuffle_;
  std::map<std::string, TropicalCover> found_;
};

struct HurwitzCache {
  std::shared_mutex mutex;
  std::map<HurwitzProblem, Rational> values;
};

HurwitzCache& cache() {
  static HurwitzCache c;
  return c;
}

}  // namespace

std::vector<TropicalCover> enumerate_tropical_covers(
    const HurwitzProblem& problem, const CoverSearchOptions& options) {
  if (!problem.feasible()) {
    throw Error(Errc::InfeasibleProblem, "open Hurwitz problem is infeasible");
  }
  auto found = CoverSweep(problem, options).run();
  std::vector<TropicalCover> out;
  out.reserve(found.size());
  for (auto& [key, cover] : found) out.push_back(std::move(cover));
  return out;
}

Rational open_hurwitz_uncached(const HurwitzProblem& problem,
                               const CoverSearchOptions& options) {
  if (!problem.feasible()) return Rational(0);
  Rational total(0);
  for (const auto& c : enumerate_tropical_covers(problem, options)) {
    total += c.mu / Rational(c.aut_order);
  }
  return total;
}

Rational open_hurwitz(const HurwitzProblem& problem) {
  if (!problem.feasible()) return Rational(0);
  auto& c = cache();
  {
    std::shared_lock lock(c.mutex);
    if (auto it = c.values.find(problem); it != c.values.end()) return it->second;
  }
  Rational value = open_hurwitz_uncached(problem);
  std::unique_lock lock(c.mutex);
  c.values.emplace(problem, value);
  return value;
}

std::size_t hurwitz_cache_size() {
  auto& c = cache();
  std::shared_lock lock(c.mutex);
  return c.values.size();
}

}  // namespace floorcount
