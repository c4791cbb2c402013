// fdcount: characteristic numbers of the plane via floor diagrams.
//
//   fdcount charnum  -d 3 -k 1 --tangencies 1^7
//   fdcount diagrams -d 2 --lcomb 4,5 --format dot
//   fdcount hurwitz  --delta 2,0 --branch 1,0 --covers
//   fdcount verify   --suite paper --jobs 4
//
// Exit codes: 0 success, 1 verification failure, 2 usage error,
// 3 internal inconsistency.

#include <omp.h>

#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "floorcount/charnum.hpp"
#include "floorcount/error.hpp"
#include "floorcount/floor_diagrams.hpp"
#include "floorcount/hurwitz.hpp"
#include "floorcount/io.hpp"
#include "floorcount/verify.hpp"

namespace fc = floorcount;
using nlohmann::json;

namespace {

constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInternal = 3;

void apply_jobs(int jobs) {
  if (jobs > 0) omp_set_num_threads(jobs);
}

int run_charnum(int degree, int points, const std::string& tangencies, const std::string& format) {
  fc::CharProblem p{degree, points, fc::io::parse_multiset(tangencies)};
  const fc::BigInt value = fc::characteristic_number(p);
  if (format == "json") {
    json doc = {{"schema", fc::io::kSchemaVersion},
                {"request", {{"command", "charnum"}, {"degree", degree}, {"points", points},
                             {"tangencies", p.normalized().tangencies}}},
                {"result", value.get_str()}};
    std::cout << doc.dump(2) << '\n';
  } else {
    std::cout << value.get_str() << '\n';
  }
  return 0;
}

int run_diagrams(int degree, const std::string& lcomb, const std::string& format) {
  const auto lines = fc::io::parse_int_list(lcomb);
  const auto labels = fc::LabelPartition::for_degree(degree, lines);
  const auto terms = fc::marked_diagrams(degree, labels);
  if (format == "json") {
    json request = {{"command", "diagrams"}, {"degree", degree}, {"lcomb", labels.lines()}};
    std::cout << fc::io::diagrams_document(request, degree, labels, terms).dump(2) << '\n';
  } else if (format == "dot") {
    std::cout << fc::io::diagrams_dot(terms);
  } else {
    std::cout << fc::io::diagrams_text(degree, labels, terms);
  }
  return 0;
}

int run_hurwitz(int closed, const std::string& delta, const std::string& branch, bool covers,
                const std::string& format) {
  fc::HurwitzProblem p;
  if (closed > 0) {
    p = fc::HurwitzProblem::closed(closed);
  } else {
    p = {fc::io::parse_int_list(delta), fc::io::parse_int_list(branch)};
    if (p.delta.empty() || p.delta.size() != p.branch.size()) {
      throw fc::Error(fc::Errc::ParseError, "--delta and --branch need the same non-zero length");
    }
  }
  const fc::Rational value = closed > 0 ? fc::closed_hurwitz(closed) : fc::open_hurwitz(p);
  std::vector<fc::TropicalCover> list;
  if (covers && p.feasible()) list = fc::enumerate_tropical_covers(p);

  if (format == "json") {
    json doc = {{"schema", fc::io::kSchemaVersion},
                {"request", {{"command", "hurwitz"}, {"delta", p.delta}, {"branch", p.branch}}},
                {"value", value.to_string()}};
    if (covers) {
      json arr = json::array();
      for (const auto& c : list) arr.push_back(fc::io::cover_to_json(c));
      doc["covers"] = std::move(arr);
    }
    std::cout << doc.dump(2) << '\n';
    return 0;
  }
  std::cout << value << '\n';
  for (const auto& c : list) {
    std::cout << "cover mu=" << c.mu << " aut=" << c.aut_order << " edges:";
    for (const auto& e : c.edges) {
      std::cout << ' '
                << (e.from == fc::CoverEdge::kMinusInfinity ? std::string("-inf") : std::to_string(e.from))
                << "->"
                << (e.to == fc::CoverEdge::kPlusInfinity ? std::string("+inf") : std::to_string(e.to))
                << ":" << e.weight;
    }
    std::cout << '\n';
  }
  return 0;
}

int run_verify(const std::string& suite) {
  std::vector<std::pair<std::string, fc::Suite>> suites;
  if (suite == "paper" || suite == "all") suites.emplace_back("paper", fc::Suite::Paper);
  if (suite == "oracles" || suite == "all") suites.emplace_back("oracles", fc::Suite::Oracles);
  if (suite == "invariance" || suite == "all") suites.emplace_back("invariance", fc::Suite::Invariance);

  bool ok = true;
  for (const auto& [name, s] : suites) {
    const auto results = fc::run_suite(s);
    std::size_t passed = 0;
    for (const auto& r : results) {
      if (r.pass) {
        ++passed;
      } else if (ok) {
        std::cout << "FAIL " << name << ": " << r.name << ": expected " << r.expected
                  << ", computed " << r.computed << '\n';
        ok = false;
      }
    }
    std::cout << name << ": " << passed << "/" << results.size() << " checks passed\n";
  }
  return ok ? 0 : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Genus-0 characteristic numbers of the plane via floor diagrams"};
  app.require_subcommand(1);
  int jobs = 0;
  app.add_option("-j,--jobs", jobs, "Worker threads (0 = OpenMP default)")->check(CLI::NonNegativeNumber);

  int degree = 1, points = 0, closed = 0;
  std::string tangencies, lcomb, delta, branch, format = "text", suite = "all";
  bool covers = false;

  auto* charnum = app.add_subcommand("charnum", "N_{d,0}(k; d_1, ..., d_m)");
  charnum->add_option("-d,--degree", degree, "Curve degree")->required();
  charnum->add_option("-k,--points", points, "Point constraints");
  charnum->add_option("--tangencies", tangencies, "Tangency degrees, e.g. 2^5 or 1,1,2")->expected(0, 1);
  charnum->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
  charnum->add_option("-j,--jobs", jobs)->check(CLI::NonNegativeNumber);

  auto* diagrams = app.add_subcommand("diagrams", "List marked floor diagrams and their multiplicities");
  diagrams->add_option("-d,--degree", degree, "Diagram degree")->required();
  diagrams->add_option("--lcomb", lcomb, "Line labels, e.g. 4,5")->expected(0, 1);
  diagrams->add_option("--format", format)->check(CLI::IsMember({"text", "json", "dot"}));
  diagrams->add_option("-j,--jobs", jobs)->check(CLI::NonNegativeNumber);

  auto* hurwitz = app.add_subcommand("hurwitz", "Closed or open Hurwitz numbers");
  auto* closed_opt = hurwitz->add_option("--closed", closed, "Degree of a closed Hurwitz number")
                         ->check(CLI::PositiveNumber);
  auto* delta_opt = hurwitz->add_option("--delta", delta, "Chamber degrees, e.g. 2,0");
  auto* branch_opt = hurwitz->add_option("--branch", branch, "Branch points per chamber, e.g. 1,0");
  delta_opt->needs(branch_opt);
  branch_opt->needs(delta_opt);
  closed_opt->excludes(delta_opt);
  hurwitz->add_flag("--covers", covers, "Also list the tropical covers");
  hurwitz->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  auto* verify = app.add_subcommand("verify", "Run the built-in verification suites");
  verify->add_option("--suite", suite)->check(CLI::IsMember({"paper", "oracles", "invariance", "all"}));
  verify->add_option("-j,--jobs", jobs)->check(CLI::NonNegativeNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }
  if (hurwitz->parsed() && closed == 0 && delta_opt->count() == 0) {
    std::cerr << "hurwitz: give --closed d or --delta/--branch\n";
    return kExitUsage;
  }

  apply_jobs(jobs);
  try {
    if (charnum->parsed()) return run_charnum(degree, points, tangencies, format);
    if (diagrams->parsed()) return run_diagrams(degree, lcomb, format);
    if (hurwitz->parsed()) return run_hurwitz(closed, delta, branch, covers, format);
    return run_verify(suite);
  } catch (const fc::Error& e) {
    std::cerr << e.what() << '\n';
    return e.code() == fc::Errc::IntegralityFailure ? kExitInternal : kExitUsage;
  }
}
