#include "floorcount/io.hpp"

#include <charconv>
#include <sstream>

#include "floorcount/error.hpp"

namespace floorcount::io {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

int parse_int(std::string_view s) {
  s = trim(s);
  int value = 0;
  const auto* end = s.data() + s.size();
  const auto [ptr, ec] = std::from_chars(s.data(), end, value);
  if (s.empty() || ec != std::errc() || ptr != end) {
    throw Error(Errc::ParseError, "not an integer: '" + std::string(s) + "'");
  }
  return value;
}

std::vector<std::string_view> split_commas(std::string_view text) {
  std::vector<std::string_view> parts;
  if (trim(text).empty()) return parts;
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    parts.push_back(text.substr(start, comma - start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return parts;
}

const char* color_name(Color c) { return c == Color::White ? "white" : "black"; }

}  // namespace

std::vector<int> parse_int_list(std::string_view text) {
  std::vector<int> out;
  for (auto part : split_commas(text)) out.push_back(parse_int(part));
  return out;
}

std::vector<int> parse_multiset(std::string_view text) {
  std::vector<int> out;
  for (auto part : split_commas(text)) {
    const auto caret = part.find('^');
    const int value = parse_int(part.substr(0, caret));
    const int times = caret == std::string_view::npos ? 1 : parse_int(part.substr(caret + 1));
    if (times < 0) throw Error(Errc::ParseError, "negative multiplicity in '" + std::string(part) + "'");
    out.insert(out.end(), static_cast<std::size_t>(times), value);
  }
  return out;
}

nlohmann::json diagram_to_json(const FloorDiagram& d) {
  nlohmann::json vertices = nlohmann::json::array();
  for (int v = 0; v < d.vertex_count(); ++v) {
    vertices.push_back({{"id", v}, {"color", color_name(d.vertex(v).color)}, {"div", d.vertex(v).div}});
  }
  nlohmann::json edges = nlohmann::json::array();
  for (std::size_t e = 0; e < d.edges().size(); ++e) {
    edges.push_back({{"white", d.edges()[e].white},
                     {"black", d.edges()[e].black},
                     {"weight", d.flows()[e].weight},
                     {"orientation", d.flows()[e].toward_white ? "toward_white" : "toward_black"}});
  }
  return {{"vertices", vertices}, {"edges", edges}};
}

FloorDiagram diagram_from_json(const nlohmann::json& j) {
  try {
    std::vector<Vertex> vertices(j.at("vertices").size());
    for (const auto& v : j.at("vertices")) {
      const int id = v.at("id").get<int>();
      if (id < 0 || id >= static_cast<int>(vertices.size())) {
        throw Error(Errc::ParseError, "vertex id out of range", id);
      }
      const std::string color = v.at("color").get<std::string>();
      if (color != "white" && color != "black") {
        throw Error(Errc::ParseError, "unknown color '" + color + "'");
      }
      vertices[id] = {color == "white" ? Color::White : Color::Black, v.at("div").get<int>()};
    }
    std::vector<DiagramEdge> edges;
    for (const auto& e : j.at("edges")) {
      edges.push_back({e.at("white").get<int>(), e.at("black").get<int>()});
    }
    FloorDiagram d(std::move(vertices), std::move(edges));
    const auto& stored = j.at("edges");
    for (std::size_t e = 0; e < stored.size(); ++e) {
      const bool toward_white = stored[e].at("orientation").get<std::string>() == "toward_white";
      if (stored[e].at("weight").get<int>() != d.flows()[e].weight ||
          toward_white != d.flows()[e].toward_white) {
        throw Error(Errc::ParseError, "stored weight disagrees with divergences", static_cast<long>(e));
      }
    }
    return d;
  } catch (const nlohmann::json::exception& ex) {
    throw Error(Errc::ParseError, ex.what());
  }
}

nlohmann::json cover_to_json(const TropicalCover& c) {
  nlohmann::json events = nlohmann::json::array();
  for (const auto& e : c.events) {
    events.push_back({{"position", e.position},
                      {"kind", event_kind_name(e.kind)},
                      {"chamber", e.chamber},
                      {"weights", e.weights}});
  }
  auto endpoint = [](int x) -> nlohmann::json {
    if (x == CoverEdge::kMinusInfinity) return "-inf";
    if (x == CoverEdge::kPlusInfinity) return "+inf";
    return x;
  };
  nlohmann::json edges = nlohmann::json::array();
  for (const auto& e : c.edges) {
    edges.push_back({{"from", endpoint(e.from)}, {"to", endpoint(e.to)}, {"weight", e.weight}});
  }
  return {{"events", events},
          {"edges", edges},
          {"mu", c.mu.to_string()},
          {"aut_order", c.aut_order}};
}

Rational total_of(const std::vector<DiagramTerms>& terms) {
  Rational total(0);
  for (const auto& t : terms) {
    for (const auto& m : t.markings) total += m.multiplicity;
  }
  return total;
}

nlohmann::json diagrams_document(const nlohmann::json& request, int degree,
                                 const LabelPartition& labels,
                                 const std::vector<DiagramTerms>& terms) {
  nlohmann::json diagrams = nlohmann::json::array();
  for (const auto& t : terms) {
    nlohmann::json dj = diagram_to_json(t.diagram);
    nlohmann::json markings = nlohmann::json::array();
    for (const auto& m : t.markings) {
      markings.push_back({{"assignment", m.marking.assignment},
                          {"multiplicity", m.multiplicity.to_string()}});
    }
    dj["markings"] = std::move(markings);
    diagrams.push_back(std::move(dj));
  }
  return {{"schema", kSchemaVersion},
          {"request", request},
          {"degree", degree},
          {"lcomb", labels.lines()},
          {"diagrams", std::move(diagrams)},
          {"total", total_of(terms).to_string()}};
}

std::string diagrams_text(int degree, const LabelPartition& labels,
                          const std::vector<DiagramTerms>& terms) {
  std::ostringstream out;
  out << "degree " << degree << ", lines {";
  for (std::size_t i = 0; i < labels.lines().size(); ++i) {
    out << (i ? "," : "") << labels.lines()[i];
  }
  out << "}, " << terms.size() << " diagrams\n";
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const auto& d = terms[i].diagram;
    out << "diagram " << i + 1 << ":";
    for (int v = 0; v < d.vertex_count(); ++v) {
      out << ' ' << (d.vertex(v).color == Color::White ? 'W' : 'B') << v << '(' << d.vertex(v).div << ')';
    }
    out << "\n  edges:";
    for (std::size_t e = 0; e < d.edges().size(); ++e) {
      const auto& edge = d.edges()[e];
      const auto& f = d.flows()[e];
      const int tail = f.toward_white ? edge.black : edge.white;
      const int head = f.toward_white ? edge.white : edge.black;
      out << ' ' << tail << "->" << head;
      if (f.weight != 1) out << " [w=" << f.weight << ']';
    }
    out << '\n';
    for (const auto& m : terms[i].markings) {
      out << "  marking";
      for (int v = 0; v < d.vertex_count(); ++v) {
        out << ' ' << v << ":{";
        const auto pre = m.marking.preimage(v);
        for (std::size_t k = 0; k < pre.size(); ++k) out << (k ? "," : "") << pre[k];
        out << '}';
      }
      out << "  mu=" << m.multiplicity << '\n';
    }
  }
  out << "total " << total_of(terms) << '\n';
  return out.str();
}

std::string to_dot(const FloorDiagram& d, const Marking* marking, const std::string& name) {
  std::ostringstream out;
  out << "digraph " << name << " {\n";
  for (int v = 0; v < d.vertex_count(); ++v) {
    out << "  v" << v;
    if (d.vertex(v).color == Color::White) {
      out << " [shape=circle, style=solid, fillcolor=white";
    } else {
      out << " [shape=circle, style=filled, fillcolor=black, fixedsize=true, width=0.2";
    }
    std::string label;
    if (marking != nullptr) {
      const auto pre = marking->preimage(v);
      for (std::size_t k = 0; k < pre.size(); ++k) label += (k ? "," : "") + std::to_string(pre[k]);
    }
    out << ", label=\"\", xlabel=\"" << label << "\"];\n";
  }
  for (std::size_t e = 0; e < d.edges().size(); ++e) {
    const auto& edge = d.edges()[e];
    const auto& f = d.flows()[e];
    const int tail = f.toward_white ? edge.black : edge.white;
    const int head = f.toward_white ? edge.white : edge.black;
    out << "  v" << tail << " -> v" << head;
    if (f.weight != 1) out << " [label=\"" << f.weight << "\"]";
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

std::string diagrams_dot(const std::vector<DiagramTerms>& terms) {
  std::string out;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const auto& t = terms[i];
    if (t.markings.empty()) {
      out += to_dot(t.diagram, nullptr, "D" + std::to_string(i + 1));
      continue;
    }
    for (std::size_t k = 0; k < t.markings.size(); ++k) {
      out += "// multiplicity " + t.markings[k].multiplicity.to_string() + "\n";
      out += to_dot(t.diagram, &t.markings[k].marking,
                    "D" + std::to_string(i + 1) + "_m" + std::to_string(k + 1));
    }
  }
  return out;
}

}  // namespace floorcount::io
