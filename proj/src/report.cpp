#include "toric/report.hpp"

#include <charconv>
#include <limits>
#include <sstream>

namespace toric {
namespace {

using nlohmann::json;

std::int64_t parse_int(std::string_view text, std::string_view context) {
  std::int64_t v = 0;
  const auto* first = text.data();
  const auto* last = text.data() + text.size();
  if (!text.empty() && text.front() == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc{} || ptr != last || first == last) {
    throw ModelError("cannot parse integer '" + std::string(text) + "' in " + std::string(context));
  }
  return v;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    const auto pos = text.find(sep, start);
    out.push_back(text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

json big_to_json(const BigInt& v) {
  if (v.fits_slong_p()) return json(static_cast<std::int64_t>(v.get_si()));
  return json(v.get_str());
}

const char* status_word(CheckStatus s) { return s == CheckStatus::kPass ? "PASS" : "FAIL"; }

}  // namespace

DivisorClass parse_class(std::string_view text) {
  DivisorClass alpha;
  for (auto part : split(text, ',')) alpha.coords.push_back(parse_int(part, "class"));
  return alpha;
}

std::vector<std::pair<std::int64_t, std::int64_t>> parse_box(std::string_view text) {
  std::vector<std::pair<std::int64_t, std::int64_t>> ranges;
  for (auto part : split(text, ',')) {
    const auto dots = part.find("..");
    if (dots == std::string_view::npos) {
      const auto v = parse_int(part, "box");
      ranges.emplace_back(v, v);
      continue;
    }
    const auto lo = parse_int(part.substr(0, dots), "box");
    const auto hi = parse_int(part.substr(dots + 2), "box");
    if (lo > hi) throw ModelError("empty box range '" + std::string(part) + "'");
    ranges.emplace_back(lo, hi);
  }
  return ranges;
}

std::string format_rationom(const DegreeVector& u, const std::vector<std::string>& names) {
  auto power = [&](std::size_t i, std::int64_t e) {
    return e == 1 ? names[i] : names[i] + "^" + std::to_string(e);
  };
  std::string num;
  std::string den;
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u[i] > 0) num += (num.empty() ? "" : "*") + power(i, u[i]);
    if (u[i] < 0) den += (den.empty() ? "" : "*") + power(i, -u[i]);
  }
  if (num.empty()) num = "1";
  return den.empty() ? num : num + "/(" + den + ")";
}

json result_to_json(const CohomologyResult& result, int vertex_count) {
  json row;
  row["alpha"] = result.alpha.coords;
  json h = json::array();
  for (const auto& v : result.dims) h.push_back(big_to_json(v));
  row["h"] = h;
  json breakdown = json::array();
  for (const auto& e : result.breakdown) {
    json item;
    item["degree"] = degree_bitstring(e.degree, vertex_count);
    item["count"] = e.count.is_infinite() ? json("inf") : big_to_json(e.count.value());
    json factors = json::object();
    for (const auto& [r, beta] : e.factors) factors[std::to_string(r)] = beta;
    item["factors"] = factors;
    json contrib = json::object();
    for (const auto& [i, c] : e.contributions) contrib[std::to_string(i)] = big_to_json(c);
    item["contrib"] = contrib;
    breakdown.push_back(item);
  }
  row["breakdown"] = breakdown;
  return row;
}

json row_to_json(const ReportRow& row, int vertex_count) {
  json out;
  if (row.entry.result) {
    out = result_to_json(*row.entry.result, vertex_count);
  } else {
    out["alpha"] = row.entry.alpha.coords;
    out["error"] = row.entry.error;
  }
  if (row.oracle != CheckStatus::kNotRun) out["oracle"] = status_word(row.oracle);
  if (row.serre != CheckStatus::kNotRun) out["serre"] = status_word(row.serre);
  return out;
}

std::vector<BigInt> dims_from_json(const nlohmann::json& row) {
  std::vector<BigInt> dims;
  for (const auto& v : row.at("h")) {
    dims.push_back(v.is_string() ? BigInt(v.get<std::string>()) : BigInt(static_cast<long>(v.get<std::int64_t>())));
  }
  return dims;
}

std::string csv_header(const ToricVarietyModel& model) {
  std::string out;
  for (int c = 0; c < model.class_rank(); ++c) out += "a" + std::to_string(c + 1) + ",";
  for (int i = 0; i <= model.d(); ++i) out += (i ? ",h" : "h") + std::to_string(i);
  return out;
}

std::string csv_row(const ReportRow& row) {
  std::string out;
  for (auto a : row.entry.alpha.coords) out += std::to_string(a) + ",";
  if (!row.entry.result) return out + "error";
  const auto& dims = row.entry.result->dims;
  for (std::size_t i = 0; i < dims.size(); ++i) out += (i ? "," : "") + dims[i].get_str();
  return out;
}

std::string table_row(const ReportRow& row, const ToricVarietyModel& model, bool verbose) {
  std::ostringstream out;
  out << format_class(row.entry.alpha) << ":";
  if (row.entry.result) {
    for (const auto& v : row.entry.result->dims) out << ' ' << v;
  } else {
    out << " error: " << row.entry.error;
  }
  if (row.oracle != CheckStatus::kNotRun) out << "  [oracle " << status_word(row.oracle) << "]";
  if (row.serre != CheckStatus::kNotRun) out << "  [serre " << status_word(row.serre) << "]";
  if (!row.check_note.empty()) out << "  " << row.check_note;
  out << '\n';
  if (verbose && row.entry.result) {
    for (const auto& e : row.entry.result->breakdown) {
      out << "    degree " << degree_bitstring(e.degree, model.n()) << "  |sigma|=" << e.support_size
          << "  count=" << e.count.to_string() << "  factors {";
      bool first = true;
      for (const auto& [r, beta] : e.factors) {
        out << (first ? "" : ", ") << r << ":" << beta;
        first = false;
      }
      out << "}  contrib";
      for (const auto& [i, c] : e.contributions) out << " h^" << i << "+=" << c;
      out << '\n';
      for (const auto& [deg, elems] : row.rationoms) {
        if (deg != e.degree) continue;
        out << "      rationoms:";
        for (const auto& u : elems) out << ' ' << format_rationom(u, model.coordinate_names());
        out << '\n';
      }
    }
  }
  return out.str();
}

}  // namespace toric
