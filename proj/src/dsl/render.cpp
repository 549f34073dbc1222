#include <algorithm>
#include <sstream>

#include "syzlab/dsl.hpp"

namespace syzlab::dsl {

namespace {

Json provenance_json(const Provenance& p) {
  return Json{{"prime", p.prime},         {"order", p.order},           {"res_bound", p.res_bound},
              {"hom_bound", p.hom_bound}, {"degree_bound", p.degree_bound}, {"degree_cap", p.degree_cap},
              {"eta_bound", p.eta_bound}, {"seed", p.seed}};
}

Provenance provenance_from(const Json& j) {
  Provenance p;
  p.prime = j.at("prime").get<std::uint32_t>();
  p.order = j.at("order").get<std::string>();
  p.res_bound = j.at("res_bound").get<int>();
  p.hom_bound = j.at("hom_bound").get<int>();
  p.degree_bound = j.at("degree_bound").get<int>();
  p.degree_cap = j.at("degree_cap").get<int>();
  p.eta_bound = j.at("eta_bound").get<int>();
  p.seed = j.at("seed").get<std::uint64_t>();
  return p;
}

std::string scalar_text(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "-";
  return v.dump();
}

// Rows are j - i, columns are i up to the last nonzero total; zero cells
// print as ".".
std::string betti_grid(const Json& betti) {
  std::map<std::pair<int, int>, std::int64_t> cells;
  int lo = 0, hi = 0;
  bool any = false;
  for (const auto& e : betti.at("entries")) {
    int i = e[0].get<int>(), j = e[1].get<int>();
    std::int64_t b = e[2].get<std::int64_t>();
    if (b == 0) continue;
    cells[{j - i, i}] = b;
    lo = any ? std::min(lo, j - i) : j - i;
    hi = any ? std::max(hi, j - i) : j - i;
    any = true;
  }
  std::vector<std::int64_t> totals = betti.at("totals").get<std::vector<std::int64_t>>();
  while (totals.size() > 1 && totals.back() == 0) totals.pop_back();
  int length = static_cast<int>(totals.size()) - 1;
  std::size_t width = 1;
  for (auto t : totals) width = std::max(width, std::to_string(t).size());
  std::size_t label = 1;
  for (int r = lo; any && r <= hi; ++r) label = std::max(label, std::to_string(r).size());
  auto pad = [](const std::string& s, std::size_t w) { return std::string(w > s.size() ? w - s.size() : 0, ' ') + s; };

  std::ostringstream out;
  for (int r = lo; any && r <= hi; ++r) {
    out << pad(std::to_string(r), label) << ":";
    for (int i = 0; i <= length; ++i) {
      auto it = cells.find({r, i});
      out << ' ' << pad(it == cells.end() ? "." : std::to_string(it->second), width);
    }
    out << '\n';
  }
  out << "total:";
  for (auto t : totals) out << ' ' << pad(std::to_string(t), width);
  out << '\n';
  return out.str();
}

// One Tor/Ext module: zero, finite length, or its Hilbert series.
std::string homology_line(const Json& m) {
  std::string head = std::to_string(m.at("index").get<int>()) + ": ";
  if (m.at("zero").get<bool>()) return head + "0";
  if (!m.at("length").is_null()) return head + "length " + m["length"].dump();
  const Json& s = m.at("hilbert").at("series");
  return head + "dimension " + s.at("dimension").dump() + ", series numerator " + s.at("numerator").dump() +
         " shifted by " + s.at("offset").dump();
}

bool is_betti(const Json& v) { return v.is_object() && v.contains("entries") && v.contains("totals"); }

std::string text(const Report& r) {
  std::ostringstream out;
  out << "# " << r.command << "  (line " << r.span.line << ")\n";
  if (!r.result.is_object()) {
    out << scalar_text(r.result) << '\n';
    return out.str();
  }
  for (const auto& [key, value] : r.result.items()) {
    if (key == "modules" && value.is_array()) {
      out << "modules:\n";
      for (const auto& m : value) out << "  " << homology_line(m) << '\n';
    } else if (is_betti(value)) {
      out << key << ":\n" << betti_grid(value);
    } else if (value.is_structured()) {
      out << key << ": " << value.dump() << '\n';
    } else {
      out << key << ": " << scalar_text(value) << '\n';
    }
  }
  return out.str();
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + "\"";
}

std::string csv(const Report& r) {
  std::ostringstream out;
  if (r.result.is_object() && r.result.contains("betti") && is_betti(r.result["betti"])) {
    out << "i,j,beta\n";
    for (const auto& e : r.result["betti"]["entries"]) out << e[0] << ',' << e[1] << ',' << e[2] << '\n';
    return out.str();
  }
  out << "path,value\n";
  Json flat = r.result.flatten();
  for (const auto& [path, value] : flat.items()) {
    out << csv_field(path) << ',' << csv_field(scalar_text(value)) << '\n';
  }
  return out.str();
}

}  // namespace

Json Report::to_json(bool include_volatile) const {
  Json j{{"command", command},
         {"kind", kind},
         {"line", span.line},
         {"column", span.column},
         {"result", result},
         {"provenance", provenance_json(provenance)}};
  if (include_volatile) {
    j["cache_hits"] = cache_hits;
    j["wall_time_ms"] = wall_time_ms;
  }
  return j;
}

Report Report::from_json(const Json& j) {
  Report r;
  r.command = j.at("command").get<std::string>();
  r.kind = j.at("kind").get<std::string>();
  r.span.line = j.at("line").get<int>();
  r.span.column = j.at("column").get<int>();
  r.result = j.at("result");
  r.provenance = provenance_from(j.at("provenance"));
  if (j.contains("cache_hits")) r.cache_hits = j["cache_hits"].get<std::uint64_t>();
  if (j.contains("wall_time_ms")) r.wall_time_ms = j["wall_time_ms"].get<double>();
  return r;
}

bool Report::operator==(const Report& other) const {
  return command == other.command && kind == other.kind && span.line == other.span.line &&
         span.column == other.span.column && result == other.result && provenance == other.provenance;
}

std::optional<Format> parse_format(const std::string& name) {
  if (name == "text") return Format::Text;
  if (name == "json") return Format::Json;
  if (name == "csv") return Format::Csv;
  return std::nullopt;
}

std::string render(const Report& report, Format format) {
  switch (format) {
    case Format::Text: return text(report);
    case Format::Json: return report.to_json().dump(2) + "\n";
    case Format::Csv: return csv(report);
  }
  return {};
}

std::string render_all(const std::vector<Report>& reports, Format format, bool include_volatile) {
  if (format == Format::Json) {
    Json all = Json::array();
    for (const auto& r : reports) all.push_back(r.to_json(include_volatile));
    return all.dump(2) + "\n";
  }
  std::string out;
  for (std::size_t i = 0; i < reports.size(); ++i) {
    if (i > 0) out += '\n';
    out += render(reports[i], format);
  }
  return out;
}

}  // namespace syzlab::dsl
