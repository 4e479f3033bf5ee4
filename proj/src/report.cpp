#include <iomanip>
#include <sstream>

#include "json.hpp"

#include "dilat/search.hpp"

namespace dilat {

std::string report_json(const SearchReport& r) {
  nlohmann::ordered_json j;
  j["name"] = r.name;
  j["parameters"] = r.parameters;
  j["total"] = r.total;
  j["surviving_classes"] = r.surviving_classes;
  j["eliminated"] = r.eliminated;
  j["balanced"] = r.balanced();
  auto survivors = nlohmann::ordered_json::array();
  for (const auto& s : r.survivors) {
    nlohmann::ordered_json e;
    e["polynomial"] = to_string(s.polynomial);
    e["coefficients"] = to_coefficient_list(s.polynomial);
    e["family"] = s.family;
    e["shape"] = s.shape;
    e["vertices"] = s.vertex_count;
    e["complexity"] = s.complexity;
    e["classes"] = s.classes;
    e["primitive"] = s.primitive;
    if (s.lambda) {
      e["lambda"] = s.lambda->decimal(10);
      e["lambda_lo"] = s.lambda->lo.str();
      e["lambda_hi"] = s.lambda->hi.str();
    }
    if (!s.status.empty()) e["status"] = s.status;
    e["representative"] = nlohmann::json::parse(format_digraph_json(s.representative));
    survivors.push_back(std::move(e));
  }
  j["survivors"] = std::move(survivors);
  j["tallies"] = r.tallies;
  j["counterexamples"] = r.counterexamples;
  j["notes"] = r.notes;
  return j.dump(2) + "\n";
}

std::string report_table(const SearchReport& r) {
  std::ostringstream out;
  out << r.name << "\n";
  for (const auto& [k, v] : r.parameters) out << "  " << k << " = " << v << "\n";
  out << "candidates: " << r.total << "\n";
  out << "surviving classes: " << r.surviving_classes << "\n";
  out << "eliminated: " << r.eliminated_total() << (r.balanced() ? "" : "  (UNBALANCED)") << "\n";
  for (const auto& [reason, count] : r.eliminated)
    out << "  " << std::left << std::setw(44) << reason << std::right << std::setw(10) << count << "\n";
  for (const auto& [name, hist] : r.tallies) {
    out << name << ":\n";
    for (const auto& [k, v] : hist)
      out << "  " << std::left << std::setw(44) << k << std::right << std::setw(10) << v << "\n";
  }
  out << "survivors: " << r.survivors.size() << "\n";
  for (const auto& s : r.survivors) {
    out << "  m=" << s.vertex_count << " c=" << s.complexity << " " << s.shape << " " << s.family;
    if (s.lambda) out << " lambda=" << s.lambda->decimal(8);
    if (!s.status.empty()) out << " [" << s.status << "]";
    if (s.classes > 1) out << " classes=" << s.classes;
    if (!s.primitive) out << " imprimitive";
    out << "\n    " << to_string(s.polynomial) << "\n";
  }
  out << "counterexamples: " << r.counterexamples.size() << "\n";
  for (const auto& c : r.counterexamples) out << "  " << c << "\n";
  for (const auto& n : r.notes) out << "note: " << n << "\n";
  return out.str();
}

}  // namespace dilat
