#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "dilat/digraph.hpp"
#include "dilat/errors.hpp"

namespace dilat {
namespace {

MultiDigraph parse_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("digraph json: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("vertices") || !doc["vertices"].is_number_integer())
    throw ParseError("digraph json: missing integer field \"vertices\"");
  const auto m = doc["vertices"].get<long long>();
  if (m < 1 || m > 100000) throw ParseError("digraph json: bad vertex count");
  MultiDigraph d(static_cast<int>(m));
  if (doc.contains("edges")) {
    if (!doc["edges"].is_array()) throw ParseError("digraph json: \"edges\" must be a list");
    for (const auto& e : doc["edges"]) {
      if (!e.is_array() || e.size() < 2 || e.size() > 3)
        throw ParseError("digraph json: each edge must be [i, j] or [i, j, k]");
      for (const auto& x : e)
        if (!x.is_number_integer()) throw ParseError("digraph json: non-integer edge entry");
      const auto i = e[0].get<long long>();
      const auto j = e[1].get<long long>();
      const auto k = e.size() == 3 ? e[2].get<long long>() : 1;
      if (i < 1 || i > m || j < 1 || j > m || k < 0)
        throw ParseError("digraph json: edge out of range");
      d.add_edge(static_cast<int>(i - 1), static_cast<int>(j - 1), k);
    }
  }
  return d;
}

}  // namespace

MultiDigraph parse_digraph(std::string_view text) {
  auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') return parse_json(text);

  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  long long m = -1;
  std::vector<Edge> edges;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::vector<long long> values;
    std::string tok;
    while (fields >> tok) {
      try {
        std::size_t used = 0;
        long long v = std::stoll(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
        values.push_back(v);
      } catch (const std::exception&) {
        throw ParseError("digraph line " + std::to_string(line_no) + ": bad token \"" + tok + "\"");
      }
    }
    if (values.empty()) continue;
    if (m < 0) {
      if (values.size() != 1 || values[0] < 1)
        throw ParseError("digraph line " + std::to_string(line_no) +
                         ": expected a positive vertex count");
      m = values[0];
      continue;
    }
    if (values.size() < 2 || values.size() > 3)
      throw ParseError("digraph line " + std::to_string(line_no) + ": expected `i j [k]`");
    const long long k = values.size() == 3 ? values[2] : 1;
    if (values[0] < 1 || values[0] > m || values[1] < 1 || values[1] > m || k < 0)
      throw ParseError("digraph line " + std::to_string(line_no) + ": edge out of range");
    edges.push_back({static_cast<int>(values[0] - 1), static_cast<int>(values[1] - 1), k});
  }
  if (m < 0) throw ParseError("digraph: missing vertex count");
  return MultiDigraph(static_cast<int>(m), edges);
}

MultiDigraph read_digraph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open digraph file \"" + path + "\"");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_digraph(buf.str());
}

std::string format_digraph(const MultiDigraph& d, const std::vector<std::string>& header) {
  std::string out;
  for (const auto& h : header) out += "# " + h + "\n";
  out += std::to_string(d.vertex_count()) + "\n";
  for (const auto& e : d.edges()) {
    out += std::to_string(e.from + 1) + " " + std::to_string(e.to + 1);
    if (e.multiplicity != 1) out += " " + std::to_string(e.multiplicity);
    out += "\n";
  }
  return out;
}

std::string format_digraph_json(const MultiDigraph& d) {
  nlohmann::json doc;
  doc["vertices"] = d.vertex_count();
  doc["edges"] = nlohmann::json::array();
  for (const auto& e : d.edges()) doc["edges"].push_back({e.from + 1, e.to + 1, e.multiplicity});
  return doc.dump();
}

}  // namespace dilat
