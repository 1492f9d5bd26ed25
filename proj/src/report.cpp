#include "pruferlab/report.hpp"

#include <sstream>

namespace pruferlab {

nlohmann::ordered_json to_json(const PropertyReport& r, bool with_timings) {
  nlohmann::ordered_json j;
  j["schema"] = report_schema_version;
  j["spec"] = r.spec;
  j["order"] = r.order;
  j["is_local"] = r.is_local;
  j["local_factors"] = r.local_factors;
  auto& flags = j["flags"];
  for (const auto& name : flag_names()) {
    if (name == "wdim_infinite_certified" && !r.wdim_infinite_certified) flags[name] = nullptr;
    else flags[name] = flag_value(r, name);
  }
  j["witnesses"] = nlohmann::ordered_json::object();
  for (const auto& [flag, w] : r.witnesses)
    j["witnesses"][flag] = {{"kind", w.kind}, {"items", w.items}, {"description", w.description}};
  j["certificates"] = nlohmann::ordered_json::object();
  for (const auto& [flag, c] : r.certificates) j["certificates"][flag] = c;
  j["oracles"] = r.oracles;
  j["notes"] = r.notes;
  if (with_timings) {
    j["timings_ms"] = nlohmann::ordered_json::object();
    for (const auto& [k, v] : r.timings_ms) j["timings_ms"][k] = v;
  }
  return j;
}

std::string render_text(const PropertyReport& r) {
  std::ostringstream out;
  out << r.spec << "  (order " << r.order << ", " << (r.is_local ? "local" : "not local") << ", "
      << r.local_factors << " local factor(s))\n";
  for (const auto& name : flag_names()) {
    out << "  " << name << ": ";
    if (name == "wdim_infinite_certified" && !r.wdim_infinite_certified) out << "not certified";
    else out << (flag_value(r, name) ? "true" : "false");
    out << "\n";
    if (auto w = r.witnesses.find(name); w != r.witnesses.end()) out << "      witness: " << w->second.description << "\n";
    else if (auto c = r.certificates.find(name); c != r.certificates.end())
      out << "      certificate: " << c->second << "\n";
  }
  if (auto w = r.witnesses.find("gaussian_polynomials"); w != r.witnesses.end())
    out << "  polynomial witness: " << w->second.description << "\n";
  if (!r.oracles.empty()) {
    out << "  cross-checks:";
    for (const auto& o : r.oracles) out << " [" << o << "]";
    out << "\n";
  }
  for (const auto& n : r.notes) out << "  note: " << n << "\n";
  return out.str();
}

std::vector<std::string> csv_header() {
  std::vector<std::string> h{"spec", "order", "is_local", "local_factors"};
  for (const auto& f : flag_names()) h.push_back(f);
  h.push_back("error");
  return h;
}

std::vector<std::string> csv_row(const PropertyReport& r) {
  std::vector<std::string> row{r.spec, std::to_string(r.order), r.is_local ? "true" : "false",
                               std::to_string(r.local_factors)};
  for (const auto& f : flag_names()) {
    if (f == "wdim_infinite_certified" && !r.wdim_infinite_certified) row.emplace_back("");
    else row.emplace_back(flag_value(r, f) ? "true" : "false");
  }
  row.emplace_back("");
  return row;
}

std::string csv_line(const std::vector<std::string>& fields) {
  std::string out;
  for (std::size_t k = 0; k < fields.size(); ++k) {
    if (k) out += ',';
    const auto& f = fields[k];
    if (f.find_first_of(",\"\n") == std::string::npos) {
      out += f;
      continue;
    }
    out += '"';
    for (char c : f) {
      if (c == '"') out += '"';
      out += c;
    }
    out += '"';
  }
  return out;
}

}  // namespace pruferlab
