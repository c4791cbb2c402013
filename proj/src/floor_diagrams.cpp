#include "floorcount/floor_diagrams.hpp"

#include <omp.h>

#include <algorithm>
#include <exception>
#include <map>
#include <memory>
#include <mutex>
#include <set>
#include <unordered_map>

#include "floorcount/error.hpp"
#include "tree_code.hpp"

namespace floorcount {

const char* black_case_name(BlackCase c) {
  switch (c) {
    case BlackCase::Point: return "point";
    case BlackCase::Top: return "top";
    case BlackCase::Generic: return "generic";
  }
  return "unknown";
}

// ---------------------------------------------------------------------------
// Diagram enumeration

namespace {

// All unlabeled trees with 2..max_vertices vertices, grown leaf by leaf.
std::vector<detail::Adjacency> free_trees(int max_vertices) {
  std::vector<detail::Adjacency> all;
  std::vector<detail::Adjacency> level{detail::Adjacency(1)};
  for (int n = 1; n < max_vertices; ++n) {
    std::map<std::string, detail::Adjacency> next;
    const std::vector<std::string> blank(n + 1);
    for (const auto& tree : level) {
      for (int v = 0; v < n; ++v) {
        detail::Adjacency grown = tree;
        grown.emplace_back();
        grown[v].push_back(n);
        grown[n].push_back(v);
        next.emplace(detail::free_tree_code(grown, blank), std::move(grown));
      }
    }
    level.clear();
    for (auto& [code, tree] : next) level.push_back(std::move(tree));
    all.insert(all.end(), level.begin(), level.end());
  }
  return all;
}

// Calls visit for every sequence of `parts` integers in [lo, hi] summing to
// `total`, where lo/hi may differ per slot.
void bounded_compositions(const std::vector<int>& lo, const std::vector<int>& hi,
                          int total, std::vector<int>& out, std::size_t i,
                          const std::function<void()>& visit) {
  if (i == lo.size()) {
    if (total == 0) visit();
    return;
  }
  long rest_lo = 0, rest_hi = 0;
  for (std::size_t j = i + 1; j < lo.size(); ++j) {
    rest_lo += lo[j];
    rest_hi += hi[j];
  }
  for (int x = lo[i]; x <= hi[i]; ++x) {
    const long rest = total - x;
    if (rest < rest_lo) break;
    if (rest > rest_hi) continue;
    out[i] = x;
    bounded_compositions(lo, hi, static_cast<int>(rest), out, i + 1, visit);
  }
}

struct RootedTree {
  std::vector<int> order;
  std::vector<int> parent;
};

RootedTree root_at_zero(const detail::Adjacency& adj) {
  const int n = static_cast<int>(adj.size());
  RootedTree t{{0}, std::vector<int>(n, -1)};
  std::vector<bool> seen(n, false);
  seen[0] = true;
  for (std::size_t i = 0; i < t.order.size(); ++i) {
    for (int u : adj[t.order[i]]) {
      if (!seen[u]) {
        seen[u] = true;
        t.parent[u] = t.order[i];
        t.order.push_back(u);
      }
    }
  }
  return t;
}

bool every_cut_nonzero(const RootedTree& t, const std::vector<int>& div) {
  std::vector<long> sum(div.begin(), div.end());
  for (auto it = t.order.rbegin(); it != t.order.rend(); ++it) {
    const int v = *it;
    if (t.parent[v] < 0) continue;
    if (sum[v] == 0) return false;
    sum[t.parent[v]] += sum[v];
  }
  return true;
}

std::vector<FloorDiagram> build_diagrams(int d) {
  std::map<std::string, FloorDiagram> found;
  for (const auto& tree : free_trees(3 * d - 1)) {
    const int n = static_cast<int>(tree.size());
    const RootedTree rooted = root_at_zero(tree);
    std::vector<int> side(n, 0);
    for (int v : rooted.order) {
      if (rooted.parent[v] >= 0) side[v] = 1 - side[rooted.parent[v]];
    }
    for (int flip = 0; flip < 2; ++flip) {
      std::vector<int> whites, blacks;
      for (int v = 0; v < n; ++v) (side[v] == flip ? whites : blacks).push_back(v);
      const int nw = static_cast<int>(whites.size());
      const int nb = static_cast<int>(blacks.size());
      if (nw < 1 || nb < 1 || nw > d || nb > 2 * d - 1) continue;

      std::vector<int> white_lo(nw, 1), white_hi(nw, d);
      // A black leaf with div 0 would leave its edge without flow.
      std::vector<int> black_lo(nb, 0), black_hi(nb, d);
      for (int i = 0; i < nb; ++i) {
        if (tree[blacks[i]].size() == 1) black_lo[i] = 1;
      }
      std::vector<int> wdiv(nw), bdiv(nb), div(n);
      bounded_compositions(white_lo, white_hi, d, wdiv, 0, [&] {
        bounded_compositions(black_lo, black_hi, d, bdiv, 0, [&] {
          for (int i = 0; i < nw; ++i) div[whites[i]] = wdiv[i];
          for (int i = 0; i < nb; ++i) div[blacks[i]] = -bdiv[i];
          if (!every_cut_nonzero(rooted, div)) return;
          std::vector<Vertex> vertices(n);
          for (int v = 0; v < n; ++v) {
            vertices[v] = {side[v] == flip ? Color::White : Color::Black, div[v]};
          }
          std::vector<DiagramEdge> edges;
          for (int v = 0; v < n; ++v) {
            const int p = rooted.parent[v];
            if (p < 0) continue;
            edges.push_back(vertices[v].color == Color::White ? DiagramEdge{v, p}
                                                              : DiagramEdge{p, v});
          }
          FloorDiagram diagram(std::move(vertices), std::move(edges));
          std::string key = canonical_key(diagram);
          found.emplace(std::move(key), std::move(diagram));
        });
      });
    }
  }
  std::vector<FloorDiagram> out;
  out.reserve(found.size());
  for (auto& [key, diagram] : found) out.push_back(std::move(diagram));
  return out;
}

const std::vector<FloorDiagram>& diagrams_of_degree(int d) {
  static std::mutex mutex;
  static std::map<int, std::shared_ptr<const std::vector<FloorDiagram>>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[d];
  if (!slot) slot = std::make_shared<const std::vector<FloorDiagram>>(build_diagrams(d));
  return *slot;
}

}  // namespace

std::vector<FloorDiagram> enumerate_diagrams(int d) {
  if (d < 1) throw Error(Errc::InvalidDegree, "degree must be positive", d);
  return diagrams_of_degree(d);
}

// ---------------------------------------------------------------------------
// Marking search

namespace {

// Labels are placed in increasing order, so a vertex's first label is its
// minimum and a label on a black vertex is "large" exactly when every
// adjacent white already has its minimum.
struct SearchState {
  int next_label = 1;
  std::vector<int> assignment;
  std::vector<int> remaining;
  std::vector<int> first_label;
  std::vector<char> has_point;
  std::vector<char> has_large;
  std::vector<int> pending;  // black: adjacent whites without a label yet
};

class MarkingSearch {
 public:
  MarkingSearch(const FloorDiagram& d, const LabelPartition& labels)
      : d_(d), labels_(labels), n_(d.vertex_count()), last_(d.label_count()) {
    if (labels.label_count() != d.label_count()) {
      throw Error(Errc::InvalidLabels, "label partition does not match degree");
    }
  }

  SearchState initial() const {
    SearchState s;
    s.assignment.assign(last_, -1);
    s.remaining.resize(n_);
    s.first_label.assign(n_, 0);
    s.has_point.assign(n_, 0);
    s.has_large.assign(n_, 0);
    s.pending.assign(n_, 0);
    for (int v = 0; v < n_; ++v) {
      s.remaining[v] = d_.preimage_size(v);
      if (d_.vertex(v).color == Color::Black) s.pending[v] = d_.valence(v);
    }
    return s;
  }

  /// Runs the search from `s` until label `stop` is placed; visit receives
  /// the state after each complete prefix.
  template <class Visit>
  void run(SearchState& s, int stop, Visit&& visit) const {
    if (s.next_label > stop) {
      visit(s);
      return;
    }
    const int l = s.next_label;
    for (int v = 0; v < n_; ++v) {
      if (!admissible(s, l, v)) continue;
      const bool large = place(s, l, v);
      run(s, stop, visit);
      unplace(s, l, v, large);
    }
  }

  int last_label() const { return last_; }

 private:
  bool admissible(const SearchState& s, int l, int v) const {
    if (s.remaining[v] == 0) return false;
    const bool point = labels_.is_point(l);
    if (point && s.has_point[v]) return false;
    if (d_.vertex(v).color == Color::White) {
      if (point && s.first_label[v] != 0) return false;
      if (s.first_label[v] == 0) {
        // Whites' minima decide which black labels are large.
        for (const auto& inc : d_.incident(v)) {
          const int b = inc.neighbor;
          if (s.pending[b] != 1) continue;
          if (s.remaining[b] >= 2) return false;
          if (s.remaining[b] == 1 && s.has_point[b]) return false;
        }
      }
      return true;
    }
    const bool large = s.pending[v] == 0;
    if (large && (s.has_large[v] || point || s.has_point[v])) return false;
    if (point && s.has_large[v]) return false;
    return true;
  }

  bool place(SearchState& s, int l, int v) const {
    const bool large =
        d_.vertex(v).color == Color::Black && s.pending[v] == 0;
    s.assignment[l - 1] = v;
    --s.remaining[v];
    if (s.first_label[v] == 0) {
      s.first_label[v] = l;
      if (d_.vertex(v).color == Color::White) {
        for (const auto& inc : d_.incident(v)) --s.pending[inc.neighbor];
      }
    }
    if (labels_.is_point(l)) s.has_point[v] = 1;
    if (large) s.has_large[v] = 1;
    ++s.next_label;
    return large;
  }

  void unplace(SearchState& s, int l, int v, bool large) const {
    --s.next_label;
    if (large) s.has_large[v] = 0;
    if (labels_.is_point(l)) s.has_point[v] = 0;
    if (s.first_label[v] == l) {
      s.first_label[v] = 0;
      if (d_.vertex(v).color == Color::White) {
        for (const auto& inc : d_.incident(v)) ++s.pending[inc.neighbor];
      }
    }
    ++s.remaining[v];
    s.assignment[l - 1] = -1;
  }

  const FloorDiagram& d_;
  const LabelPartition& labels_;
  int n_;
  int last_;
};

// Aut(D) acts freely on surjective markings; keeping the lexicographically
// least assignment of each orbit picks one marking per isomorphism class.
bool orbit_minimal(const std::vector<int>& assignment,
                   const std::vector<Permutation>& automorphisms) {
  for (std::size_t g = 1; g < automorphisms.size(); ++g) {
    const Permutation& perm = automorphisms[g];
    for (int v : assignment) {
      const int w = perm[v];
      if (w < v) return false;
      if (w > v) break;
    }
  }
  return true;
}

// Shared evaluation of marked multiplicities from per-vertex preimages.
// Vertex factors are memoized: a white factor depends only on whether its
// minimum is a point, a black factor only on its local signature (neighbor
// order, labels per chamber, point chamber).
class Evaluator {
 public:
  Evaluator(const FloorDiagram& d, const LabelPartition& labels)
      : d_(d), labels_(labels), pre_(d.vertex_count()),
        white_cache_(2 * d.vertex_count()), black_cache_(d.vertex_count()) {
    for (int k = 1; k <= d.degree(); ++k) closed_.push_back(closed_hurwitz(k));
    for (int v = 0; v < d.vertex_count(); ++v) {
      if (d.vertex(v).color != Color::White) continue;
      const int div = d.vertex(v).div;
      white_cache_[2 * v] = white_formula(div, d.valence(v), false, closed_[div - 1]);
      white_cache_[2 * v + 1] = white_formula(div, d.valence(v), true, closed_[div - 1]);
    }
  }

  void load(const std::vector<int>& assignment) {
    for (auto& p : pre_) p.clear();
    for (int l = 1; l <= static_cast<int>(assignment.size()); ++l) {
      pre_[assignment[l - 1]].push_back(l);
    }
  }

  Rational white(int v) const {
    return white_cache_[2 * v + (labels_.is_point(pre_[v].front()) ? 1 : 0)];
  }

  static Rational white_formula(int div, int val, bool point, const Rational& h) {
    BigInt power;
    mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(div),
                  static_cast<unsigned long>(point ? val + 1 : val));
    Rational r(power);
    if (!point) r *= Rational(div - 2 + val);
    return r * h;
  }

  BlackProfile profile(int v) const {
    BlackProfile p;
    p.valence = d_.valence(v);
    std::vector<std::pair<int, int>> whites;  // (min label, incidence index)
    const auto inc = d_.incident(v);
    for (int i = 0; i < static_cast<int>(inc.size()); ++i) {
      whites.emplace_back(pre_[inc[i].neighbor].front(), i);
    }
    std::sort(whites.begin(), whites.end());
    const int s = p.valence;
    p.delta.push_back(-d_.vertex(v).div);
    for (const auto& [min_label, i] : whites) {
      const auto& edge_flow = d_.flows()[inc[i].edge];
      const int eps = edge_flow.toward_white ? -1 : 1;
      p.ordered_whites.push_back(inc[i].neighbor);
      p.eps.push_back(eps);
      p.delta.push_back(p.delta.back() + eps * edge_flow.weight);
    }
    if (p.delta.back() != 0) {
      throw Error(Errc::IntegralityFailure,
                  "black profile does not return to chamber degree 0", v);
    }
    p.ntilde.assign(s + 1, 0);
    const int largest_min = whites.back().first;
    bool has_large = false;
    for (int j : pre_[v]) {
      int chamber = 0;
      while (chamber < s && whites[chamber].first < j) ++chamber;
      ++p.ntilde[chamber];
      if (labels_.is_point(j) && p.point_chamber < 0) {
        p.point_label = j;
        p.point_chamber = chamber;
      }
      has_large |= j > largest_min;
    }
    int acc = 0;
    for (int x : p.ntilde) p.ncum.push_back(acc += x);
    p.kind = p.point_chamber >= 0 ? BlackCase::Point
                                  : (has_large ? BlackCase::Top : BlackCase::Generic);
    return p;
  }

  Rational black(int v) {
    // Signature: incidence order by neighbor minimum, then for each label of
    // v its chamber, tagged when it is a point.
    const auto inc = d_.incident(v);
    order_.clear();
    for (int i = 0; i < static_cast<int>(inc.size()); ++i) {
      order_.emplace_back(pre_[inc[i].neighbor].front(), i);
    }
    std::sort(order_.begin(), order_.end());
    key_.clear();
    for (const auto& entry : order_) key_ += static_cast<char>(entry.second);
    key_ += '|';
    for (int j : pre_[v]) {
      int chamber = 0;
      while (chamber < static_cast<int>(order_.size()) && order_[chamber].first < j) ++chamber;
      key_ += static_cast<char>(labels_.is_point(j) ? 64 + chamber : chamber);
    }
    auto& cache = black_cache_[v];
    if (auto it = cache.find(key_); it != cache.end()) return it->second;
    const BlackProfile p = profile(v);
    ++profiles_built_;
    Rational value = black_from_profile(p, d_.vertex(v).div);
    cache.emplace(key_, value);
    return value;
  }

  static Rational black_from_profile(const BlackProfile& p, int div) {
    const int s = p.valence;
    switch (p.kind) {
      case BlackCase::Point:
        return Rational(p.delta[p.point_chamber]) *
               open_hurwitz(p.problem_without(p.point_chamber));
      case BlackCase::Top:
        return Rational(2 * s - 2) * open_hurwitz(p.problem_without(s));
      case BlackCase::Generic:
        break;
    }
    Rational sum(0);
    for (int i = 0; i <= s; ++i) {
      if (p.ntilde[i] == 0) continue;
      const long bracket = 2L * p.delta[i] + 2L * i + p.ncum[i] +
                           p.ncum_before(i) - 1 + 2L * div;
      if (bracket == 0) continue;
      sum += Rational(static_cast<long>(p.ntilde[i]) * bracket) *
             open_hurwitz(p.problem_without(i));
    }
    return sum / Rational(2);
  }

  Rational total() {
    Rational mu(d_.edge_weight_product());
    for (int v = 0; v < d_.vertex_count() && mu.sign() != 0; ++v) {
      mu *= d_.vertex(v).color == Color::White ? white(v) : black(v);
    }
    return mu;
  }

  /// Distinct black profiles evaluated so far (each one checked delta(s)).
  long profiles_built() const { return profiles_built_; }

 private:
  const FloorDiagram& d_;
  const LabelPartition& labels_;
  std::vector<std::vector<int>> pre_;
  std::vector<Rational> closed_;
  std::vector<Rational> white_cache_;
  std::vector<std::unordered_map<std::string, Rational>> black_cache_;
  std::vector<std::pair<int, int>> order_;
  std::string key_;
  long profiles_built_ = 0;
};

Evaluator loaded_evaluator(const FloorDiagram& d, const Marking& m,
                           const LabelPartition& labels) {
  if (static_cast<int>(m.assignment.size()) != d.label_count()) {
    throw Error(Errc::InvalidLabels, "marking must assign labels 1..3d-1");
  }
  Evaluator e(d, labels);
  e.load(m.assignment);
  return e;
}

}  // namespace

HurwitzProblem BlackProfile::problem_without(int i) const {
  HurwitzProblem p{delta, ntilde};
  --p.branch[i];
  return p;
}

void for_each_valid_marking(const FloorDiagram& d, const LabelPartition& labels,
                            const std::function<void(const Marking&)>& visit) {
  MarkingSearch search(d, labels);
  SearchState s = search.initial();
  Marking m;
  search.run(s, search.last_label(), [&](const SearchState& done) {
    m.assignment = done.assignment;
    visit(m);
  });
}

std::vector<Marking> enumerate_markings(const FloorDiagram& d,
                                        const LabelPartition& labels) {
  std::map<std::string, Marking> classes;
  for_each_valid_marking(d, labels, [&](const Marking& m) {
    classes.emplace(canonical_key(d, &m), m);
  });
  std::vector<Marking> out;
  out.reserve(classes.size());
  for (auto& [key, m] : classes) out.push_back(std::move(m));
  return out;
}

Rational white_vertex_multiplicity(int div, int valence, bool point_is_min) {
  return Evaluator::white_formula(div, valence, point_is_min, closed_hurwitz(div));
}

Rational white_multiplicity(const FloorDiagram& d, const Marking& m, int v,
                            const LabelPartition& labels) {
  return loaded_evaluator(d, m, labels).white(v);
}

BlackProfile black_profile(const FloorDiagram& d, const Marking& m, int v,
                           const LabelPartition& labels) {
  return loaded_evaluator(d, m, labels).profile(v);
}

Rational black_multiplicity(const FloorDiagram& d, const Marking& m, int v,
                            const LabelPartition& labels) {
  return loaded_evaluator(d, m, labels).black(v);
}

Rational marked_multiplicity(const FloorDiagram& d, const Marking& m,
                             const LabelPartition& labels) {
  return loaded_evaluator(d, m, labels).total();
}

// ---------------------------------------------------------------------------
// Sums

Rational count_fd_serial(int d, const LabelPartition& labels) {
  if (d < 1) throw Error(Errc::InvalidDegree, "degree must be positive", d);
  Rational total(0);
  for (const FloorDiagram& diagram : diagrams_of_degree(d)) {
    const auto aut = automorphisms(diagram);
    MarkingSearch search(diagram, labels);
    Evaluator eval(diagram, labels);
    SearchState s = search.initial();
    search.run(s, search.last_label(), [&](const SearchState& done) {
      if (!orbit_minimal(done.assignment, aut)) return;
      eval.load(done.assignment);
      total += eval.total();
    });
  }
  return total;
}

Rational count_fd(int d, const LabelPartition& labels) {
  if (d < 1) throw Error(Errc::InvalidDegree, "degree must be positive", d);
  const auto& diagrams = diagrams_of_degree(d);

  struct Task {
    int diagram;
    SearchState state;
  };
  std::vector<std::vector<Permutation>> auts;
  std::vector<Task> tasks;
  for (int i = 0; i < static_cast<int>(diagrams.size()); ++i) {
    auts.push_back(automorphisms(diagrams[i]));
    MarkingSearch search(diagrams[i], labels);
    SearchState s = search.initial();
    const int depth = std::min(3, search.last_label());
    search.run(s, depth, [&](const SearchState& prefix) {
      tasks.push_back({i, prefix});
    });
  }

  Rational total(0);
  std::exception_ptr failure;
#pragma omp parallel
  {
    Rational local(0);
    // Per-thread evaluators keep their vertex memo across tasks.
    std::vector<std::unique_ptr<Evaluator>> evaluators(diagrams.size());
#pragma omp for schedule(dynamic, 1)
    for (long t = 0; t < static_cast<long>(tasks.size()); ++t) {
      try {
        const FloorDiagram& diagram = diagrams[tasks[t].diagram];
        const auto& aut = auts[tasks[t].diagram];
        MarkingSearch search(diagram, labels);
        auto& slot = evaluators[tasks[t].diagram];
        if (!slot) slot = std::make_unique<Evaluator>(diagram, labels);
        Evaluator& eval = *slot;
        SearchState s = tasks[t].state;
        search.run(s, search.last_label(), [&](const SearchState& done) {
          if (!orbit_minimal(done.assignment, aut)) return;
          eval.load(done.assignment);
          local += eval.total();
        });
      } catch (...) {
#pragma omp critical(floorcount_failure)
        if (!failure) failure = std::current_exception();
      }
    }
#pragma omp critical(floorcount_sum)
    total += local;
  }
  if (failure) std::rethrow_exception(failure);
  return total;
}

std::vector<DiagramTerms> marked_diagrams(int d, const LabelPartition& labels) {
  if (d < 1) throw Error(Errc::InvalidDegree, "degree must be positive", d);
  const auto& diagrams = diagrams_of_degree(d);
  std::vector<DiagramTerms> out(diagrams.size(), DiagramTerms{diagrams.front(), {}});
  std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic, 1)
  for (long i = 0; i < static_cast<long>(diagrams.size()); ++i) {
    try {
      DiagramTerms terms{diagrams[i], {}};
      for (auto& m : enumerate_markings(diagrams[i], labels)) {
        Rational mu = marked_multiplicity(diagrams[i], m, labels);
        terms.markings.push_back({std::move(m), std::move(mu)});
      }
      out[i] = std::move(terms);
    } catch (...) {
#pragma omp critical(floorcount_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return out;
}

MultiplicityAudit audit_multiplicities(int d, const LabelPartition& labels) {
  if (d < 1) throw Error(Errc::InvalidDegree, "degree must be positive", d);
  MultiplicityAudit audit;
  audit.total = Rational(0);
  for (const FloorDiagram& diagram : diagrams_of_degree(d)) {
    const long aut_order = static_cast<long>(automorphisms(diagram).size());
    Evaluator eval(diagram, labels);
    Rational labeled_sum(0);
    MarkingSearch search(diagram, labels);
    SearchState s = search.initial();
    search.run(s, search.last_label(), [&](const SearchState& done) {
      eval.load(done.assignment);
      // Every black factor is evaluated, even after a zero factor.
      Rational mu(diagram.edge_weight_product());
      for (int v = 0; v < diagram.vertex_count(); ++v) {
        mu *= diagram.vertex(v).color == Color::White ? eval.white(v) : eval.black(v);
      }
      ++audit.markings;
      if (mu.sign() < 0) ++audit.negative;
      labeled_sum += mu;
    });
    audit.black_profiles += eval.profiles_built();
    audit.total += labeled_sum / Rational(aut_order);
  }
  return audit;
}

}  // namespace floorcount
