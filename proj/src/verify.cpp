#include "floorcount/verify.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "floorcount/charnum.hpp"
#include "floorcount/diagram.hpp"
#include "floorcount/error.hpp"
#include "floorcount/floor_diagrams.hpp"
#include "floorcount/hurwitz.hpp"
#include "floorcount/oracles.hpp"

namespace floorcount {

namespace {

class Checks {
 public:
  template <class A, class B>
  void equal(std::string name, const A& expected, const B& computed) {
    out_.push_back({std::move(name), expected == computed, str(expected), str(computed)});
  }
  void truth(std::string name, bool ok, std::string detail = {}) {
    out_.push_back({std::move(name), ok, "true", ok ? "true" : "false " + detail});
  }
  std::vector<CheckResult> take() { return std::move(out_); }

 private:
  static std::string str(const Rational& r) { return r.to_string(); }
  static std::string str(const BigInt& r) { return r.get_str(); }
  static std::string str(long v) { return std::to_string(v); }
  static std::string str(int v) { return std::to_string(v); }
  static std::string str(std::size_t v) { return std::to_string(v); }
  static std::string str(const std::string& s) { return s; }

  std::vector<CheckResult> out_;
};

std::vector<int> range_labels(int lo, int hi) {
  std::vector<int> r;
  for (int l = lo; l <= hi; ++l) r.push_back(l);
  return r;
}

Rational fd(int d, const std::vector<int>& lines) {
  return count_fd(d, LabelPartition::for_degree(d, lines));
}

BigInt charnum(int d, int k, std::vector<int> t) {
  return characteristic_number({d, k, std::move(t)});
}

void reference_values_suite(Checks& c) {
  const Rational closed[] = {Rational(1), Rational(1, 2), Rational(4), Rational(120), Rational(8400)};
  for (int d = 1; d <= 5; ++d) {
    c.equal("closed_hurwitz(" + std::to_string(d) + ")", closed[d - 1], closed_hurwitz(d));
  }
  c.equal("H((2,0),(1,0))", Rational(1, 2), open_hurwitz({{2, 0}, {1, 0}}));
  c.equal("H((1,2,0),(0,1,0))", Rational(1), open_hurwitz({{1, 2, 0}, {0, 1, 0}}));
  c.equal("H((3,0),(2,0))", Rational(1), open_hurwitz({{3, 0}, {2, 0}}));
  for (int d = 1; d <= 6; ++d) {
    c.equal("H((0," + std::to_string(d) + ",0),0)", Rational(1, d), open_hurwitz({{0, d, 0}, {0, 0, 0}}));
  }
  c.equal("degree-2 diagram count", std::size_t{5}, enumerate_diagrams(2).size());

  const int conic[] = {1, 2, 4, 4, 2, 1};
  for (int size = 0; size <= 5; ++size) {
    c.equal("N2 lines {" + std::to_string(6 - size) + "..5}", Rational(conic[size]),
            fd(2, range_labels(6 - size, 5)));
    c.equal("N2 lines {1.." + std::to_string(size) + "}", Rational(conic[size]),
            fd(2, range_labels(1, size)));
  }
  const int cubic[] = {400, 600, 756, 712, 480, 240, 100, 36, 12};
  for (int k = 0; k <= 8; ++k) {
    c.equal("N3(" + std::to_string(k) + ";1^" + std::to_string(8 - k) + ")", Rational(cubic[k]),
            fd(3, default_lines(3, k)));
  }
  c.equal("N3 lines {2..8}", Rational(600), fd(3, range_labels(2, 8)));
  c.equal("N3 lines {1,2,3,4,6}", Rational(712), fd(3, {1, 2, 3, 4, 6}));

  const long tangent_conics[] = {3264, 816, 184, 36, 6};
  for (int k = 0; k <= 4; ++k) {
    c.equal("N2(" + std::to_string(k) + ";2^" + std::to_string(5 - k) + ")",
            BigInt(tangent_conics[k]), charnum(2, k, std::vector<int>(5 - k, 2)));
  }
  c.equal("N2(3;1,1)", BigInt(4), charnum(2, 3, {1, 1}));
  c.equal("N3(8)", BigInt(12), charnum(3, 8, {}));
  c.equal("N1(2)", BigInt(1), charnum(1, 2, {}));

  c.equal("white div1 val3 point", Rational(1), white_vertex_multiplicity(1, 3, true));
  c.equal("white div1 val3 line", Rational(2), white_vertex_multiplicity(1, 3, false));
  c.equal("white div3 val3 point", Rational(324), white_vertex_multiplicity(3, 3, true));
  c.equal("white div3 val3 line", Rational(432), white_vertex_multiplicity(3, 3, false));
  c.equal("white div1 val1 line", Rational(0), white_vertex_multiplicity(1, 1, false));
  for (int d = 2; d <= 5; ++d) {
    // d^(d-1) (2d-2)! / d!
    BigInt p;
    mpz_ui_pow_ui(p.get_mpz_t(), d, d - 1);
    c.equal("white div" + std::to_string(d) + " val1 point",
            Rational(p * factorial(2 * d - 2), factorial(d)), white_vertex_multiplicity(d, 1, true));
  }
}

void oracle_suite(Checks& c) {
  for (int d = 1; d <= 4; ++d) {
    const std::string tag = "(" + std::to_string(d) + ")";
    const Rational closed = closed_hurwitz(d);
    c.equal("monodromy_hurwitz" + tag, closed, monodromy_hurwitz(d));
    c.equal("open_hurwitz s=0" + tag, closed, open_hurwitz(HurwitzProblem::closed(d)));
  }
  c.equal("open_hurwitz s=0 (5)", closed_hurwitz(5), open_hurwitz(HurwitzProblem::closed(5)));
  for (int d = 1; d <= 3; ++d) {
    c.equal("kontsevich_gw vs count_fd(" + std::to_string(d) + ", {})", Rational(kontsevich_gw(d)),
            fd(d, {}));
  }
  c.equal("kontsevich_gw(4)", BigInt(620), kontsevich_gw(4));
  c.equal("monodromy serial == parallel (4)", monodromy_hurwitz_serial(4), monodromy_hurwitz(4));
  c.equal("count_fd serial == parallel (3, {5..8})", count_fd_serial(3, LabelPartition::for_degree(3, range_labels(5, 8))),
          fd(3, range_labels(5, 8)));
}

// Value of the degeneration recursion where every branch is re-expanded with
// every admissible (constraint, split) choice; returns false on disagreement.
bool recursion_consistent(const CharProblem& p, Rational& value) {
  const bool lines_only = std::all_of(p.tangencies.begin(), p.tangencies.end(), [](int t) { return t == 1; });
  if (lines_only) {
    value = Rational(characteristic_number(p));
    return true;
  }
  bool first = true;
  for (std::size_t i = 0; i < p.tangencies.size(); ++i) {
    const int degree = p.tangencies[i];
    for (int a = 1; a < degree; ++a) {
      Rational v(0);
      for (const auto& term : expand_step(p, i, a, degree - a)) {
        Rational sub;
        if (!recursion_consistent(term.problem, sub)) return false;
        v += Rational(term.coefficient) * sub;
      }
      if (first) {
        value = v;
        first = false;
      } else if (v != value) {
        return false;
      }
    }
  }
  return true;
}

void invariance_suite(Checks& c) {
  for (int d = 1; d <= 3; ++d) {
    for (int size = 0; size <= 3 * d - 1; ++size) {
      const AuditReport r = invariance_audit(d, size);
      c.truth("lcomb choice invariance d=" + std::to_string(d) + " |L|=" + std::to_string(size),
              r.pass && r.exhaustive,
              r.counterexample ? "counterexample value " + r.counterexample_value.to_string() : "");
    }
  }

  std::mt19937_64 rng(7);
  for (int d = 1; d <= 3; ++d) {
    bool ok = true;
    for (const auto& diagram : enumerate_diagrams(d)) {
      const std::string key = canonical_key(diagram);
      Permutation perm(diagram.vertex_count());
      std::iota(perm.begin(), perm.end(), 0);
      for (int t = 0; t < 100 && ok; ++t) {
        std::shuffle(perm.begin(), perm.end(), rng);
        ok = canonical_key(relabel(diagram, perm)) == key;
      }
    }
    c.truth("canonical key relabeling invariance d=" + std::to_string(d), ok);
  }

  {
    const LabelPartition none = LabelPartition::for_degree(2, std::vector<int>{});
    Rational contribution(0);
    long labeled_nonzero = 0;
    for (const auto& diagram : enumerate_diagrams(2)) {
      if (diagram.vertex_count() != 5) continue;
      for (const auto& m : enumerate_markings(diagram, none)) {
        contribution += marked_multiplicity(diagram, m, none);
      }
      for_each_valid_marking(diagram, none, [&](const Marking& m) {
        if (marked_multiplicity(diagram, m, none).sign() != 0) ++labeled_nonzero;
      });
    }
    c.equal("5-vertex degree-2 diagram contributes to N2(5)", Rational(1), contribution);
    c.equal("its labeled markings before dedup", 2L, labeled_nonzero);
  }

  for (int k = 0; k <= 4; ++k) {
    CharProblem p{2, k, std::vector<int>(5 - k, 2)};
    Rational v;
    const bool ok = recursion_consistent(p, v);
    c.truth("split and choice invariance N2(" + std::to_string(k) + ";2^" + std::to_string(5 - k) + ")",
            ok && v == Rational(characteristic_number(p)));
  }
  {
    CharProblem p{2, 2, {3, 2, 1}};
    Rational v;
    c.truth("split and choice invariance N2(2;3,2,1)", recursion_consistent(p, v));
  }

  bool mirror = true;
  std::mt19937_64 hrng(11);
  std::uniform_int_distribution<int> small(0, 4);
  for (int trial = 0; trial < 200 && mirror; ++trial) {
    const int s = trial % 4;
    HurwitzProblem p;
    for (int i = 0; i <= s; ++i) p.delta.push_back(small(hrng));
    p.branch.assign(s + 1, 0);
    const long total = static_cast<long>(p.delta.front()) + p.delta.back() + s - 2;
    if (total < 0) continue;
    for (long b = 0; b < total; ++b) ++p.branch[static_cast<std::size_t>(hrng() % (s + 1))];
    HurwitzProblem q{{p.delta.rbegin(), p.delta.rend()}, {p.branch.rbegin(), p.branch.rend()}};
    mirror = open_hurwitz(p) == open_hurwitz(q);
  }
  c.truth("open Hurwitz mirror symmetry", mirror);
  c.equal("H zero: negative delta", Rational(0), open_hurwitz({{-1, 1, 0}, {0, 1, 0}}));
  c.equal("H zero: negative branch", Rational(0), open_hurwitz({{2, 0}, {-1, 2}}));
  c.equal("H zero: wrong branch total", Rational(0), open_hurwitz({{2, 0}, {2, 0}}));
  c.equal("H zero: equal consecutive degrees", Rational(0), open_hurwitz({{1, 1, 0}, {0, 0, 0}}));

  for (int d = 1; d <= 3; ++d) {
    long negatives = 0, profiles = 0;
    const int labels = 3 * d - 1;
    for (unsigned mask = 0; mask < (1u << labels); ++mask) {
      std::vector<int> lines;
      for (int l = 1; l <= labels; ++l) {
        if (mask & (1u << (l - 1))) lines.push_back(l);
      }
      const auto audit = audit_multiplicities(d, LabelPartition::for_degree(d, lines));
      negatives += audit.negative;
      profiles += audit.black_profiles;
    }
    c.equal("negative marked multiplicities d=" + std::to_string(d), 0L, negatives);
    c.truth("black profiles close at delta(s)=0 d=" + std::to_string(d), profiles > 0);
  }

  // N_{1,0}(1;1) = 0 for both placements of the line: an invalid marking
  // plus a zero black factor (label 1), zero factors only (label 2).
  for (int line : {1, 2}) {
    const LabelPartition labels = LabelPartition::for_degree(1, std::vector<int>{line});
    const FloorDiagram diagram = enumerate_diagrams(1).front();
    Rational sum(0);
    for (const auto& m : enumerate_markings(diagram, labels)) sum += marked_multiplicity(diagram, m, labels);
    c.equal("N1(1;1) with line label " + std::to_string(line), Rational(0), sum);
  }
}

}  // namespace

std::vector<CheckResult> run_suite(Suite suite) {
  Checks c;
  switch (suite) {
    case Suite::Paper: reference_values_suite(c); break;
    case Suite::Oracles: oracle_suite(c); break;
    case Suite::Invariance: invariance_suite(c); break;
  }
  return c.take();
}

}  // namespace floorcount
