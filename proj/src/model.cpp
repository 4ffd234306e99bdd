#include "toric/model.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace toric {
namespace {

using nlohmann::json;

std::vector<VertexSet> minimalize(std::vector<VertexSet> sets) {
  std::sort(sets.begin(), sets.end(),
            [](VertexSet a, VertexSet b) { return set_size(a) != set_size(b) ? set_size(a) < set_size(b) : a < b; });
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  std::vector<VertexSet> kept;
  for (VertexSet s : sets) {
    const bool redundant =
        std::any_of(kept.begin(), kept.end(), [s](VertexSet k) { return is_subset(k, s); });
    if (!redundant) kept.push_back(s);
  }
  sort_canonical(kept);
  return kept;
}

VertexSet parse_index_set(const json& j, int n, const std::string& what) {
  if (!j.is_array()) throw ModelError(what + ": expected an array of vertex indices");
  VertexSet s = 0;
  for (const auto& v : j) {
    if (!v.is_number_integer()) throw ModelError(what + ": vertex indices must be integers");
    const auto idx = v.get<std::int64_t>();
    if (idx < 1 || idx > n) {
      throw ModelError(what + ": vertex index " + std::to_string(idx) + " out of range 1.." +
                       std::to_string(n));
    }
    const VertexSet bit = VertexSet{1} << (idx - 1);
    if (s & bit) throw ModelError(what + ": repeated vertex index " + std::to_string(idx));
    s |= bit;
  }
  return s;
}

std::vector<VertexSet> parse_set_list(const json& j, int n, const std::string& what) {
  if (!j.is_array()) throw ModelError(what + ": expected an array of index lists");
  std::vector<VertexSet> out;
  for (std::size_t k = 0; k < j.size(); ++k) {
    out.push_back(parse_index_set(j[k], n, what + " entry " + std::to_string(k + 1)));
  }
  return out;
}

json set_to_json(VertexSet s) {
  json arr = json::array();
  for (int i : set_indices(s)) arr.push_back(i + 1);
  return arr;
}

}  // namespace

ToricVarietyModel::ToricVarietyModel(std::vector<std::string> coordinate_names, int dimension,
                                     std::vector<std::vector<std::int64_t>> charges,
                                     std::optional<std::vector<VertexSet>> sr_generators,
                                     std::optional<std::vector<VertexSet>> max_cones)
    : names_(std::move(coordinate_names)), dimension_(dimension), charges_(std::move(charges)) {
  const int count = n();
  if (count == 0) throw ModelError("no coordinates given");
  if (count > kMaxVertices) {
    throw ModelError("at most " + std::to_string(kMaxVertices) + " coordinates are supported, got " +
                     std::to_string(count));
  }
  if (dimension_ < 0 || dimension_ > count) {
    throw ModelError("dimension " + std::to_string(dimension_) + " outside 0.." + std::to_string(count));
  }
  if (charges_.size() != names_.size()) {
    throw ModelError("charge matrix has " + std::to_string(charges_.size()) + " rows, expected one per coordinate (" +
                     std::to_string(count) + ")");
  }
  const auto rank = static_cast<std::size_t>(class_rank());
  for (std::size_t i = 0; i < charges_.size(); ++i) {
    if (charges_[i].size() != rank) {
      throw ModelError("charge row " + std::to_string(i + 1) + " has " + std::to_string(charges_[i].size()) +
                       " entries, expected n - d = " + std::to_string(rank));
    }
  }
  IntMatrix q(static_cast<std::size_t>(count), rank);
  for (std::size_t i = 0; i < charges_.size(); ++i) {
    for (std::size_t c = 0; c < rank; ++c) q(i, c) = charges_[i][c];
  }
  if (exact_rank(q) != rank) {
    throw ModelError("charge matrix must have rank n - d = " + std::to_string(rank));
  }

  if (!sr_generators && !max_cones) {
    throw ModelError("at least one of sr_ideal / max_cones is required");
  }

  const VertexSet all = full_set(count);
  if (sr_generators) {
    for (VertexSet g : *sr_generators) {
      if (g == 0) throw ModelError("empty Stanley-Reisner generator");
      if (!is_subset(g, all)) throw ModelError("Stanley-Reisner generator out of range");
    }
    const auto& gens = *sr_generators;
    for (std::size_t a = 0; a < gens.size(); ++a) {
      for (std::size_t b = 0; b < gens.size(); ++b) {
        if (a != b && is_subset(gens[a], gens[b]) && (gens[a] != gens[b] || a < b)) {
          throw ModelError("non-minimal generating set: " + format_set(gens[a]) + " is contained in " +
                           format_set(gens[b]));
        }
      }
    }
    sr_ = gens;
    sort_canonical(sr_);
  }

  if (max_cones) {
    if (max_cones->empty()) throw ModelError("max_cones is empty");
    std::vector<VertexSet> cones = *max_cones;
    for (VertexSet c : cones) {
      if (!is_subset(c, all)) throw ModelError("maximal cone out of range");
      if (set_size(c) != dimension_) {
        throw ModelError("maximal cone " + format_set(c) + " has " + std::to_string(set_size(c)) +
                         " rays, expected d = " + std::to_string(dimension_));
      }
      for (VertexSet g : sr_) {
        if (is_subset(g, c)) {
          throw ModelError("maximal cone " + format_set(c) + " contains Stanley-Reisner generator " +
                           format_set(g));
        }
      }
    }
    sort_canonical(cones);
    if (cones.size() != max_cones->size()) throw ModelError("duplicate maximal cone");
    auto derived = sr_from_max_cones(cones, count);
    if (sr_generators) {
      if (derived != sr_) {
        throw ModelError("sr_ideal does not match the Stanley-Reisner ideal of max_cones");
      }
    } else {
      sr_ = std::move(derived);
    }
    cones_ = std::move(cones);
  }
}

void ToricVarietyModel::check_class(const DivisorClass& alpha) const {
  if (alpha.size() != static_cast<std::size_t>(class_rank())) {
    throw ModelError("divisor class " + format_class(alpha) + " has " + std::to_string(alpha.size()) +
                     " components, expected " + std::to_string(class_rank()));
  }
}

ToricVarietyModel parse_variety(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ModelError(std::string("malformed document: ") + e.what());
  }
  if (!doc.is_object()) throw ModelError("malformed document: top level must be an object");
  if (!doc.contains("coordinates") || !doc["coordinates"].is_array()) {
    throw ModelError("missing \"coordinates\" array");
  }
  std::vector<std::string> names;
  for (const auto& c : doc["coordinates"]) {
    if (!c.is_string()) throw ModelError("coordinate names must be strings");
    names.push_back(c.get<std::string>());
  }
  const int n = static_cast<int>(names.size());
  if (n > kMaxVertices) throw ModelError("at most 63 coordinates are supported");
  if (!doc.contains("dimension") || !doc["dimension"].is_number_integer()) {
    throw ModelError("missing integer \"dimension\"");
  }
  const int d = doc["dimension"].get<int>();
  if (!doc.contains("charges") || !doc["charges"].is_array()) throw ModelError("missing \"charges\" matrix");
  std::vector<std::vector<std::int64_t>> charges;
  for (const auto& row : doc["charges"]) {
    if (!row.is_array()) throw ModelError("charge rows must be arrays");
    std::vector<std::int64_t> r;
    for (const auto& v : row) {
      if (!v.is_number_integer()) throw ModelError("non-integer charge entry: " + v.dump());
      r.push_back(v.get<std::int64_t>());
    }
    charges.push_back(std::move(r));
  }
  std::optional<std::vector<VertexSet>> sr;
  std::optional<std::vector<VertexSet>> cones;
  if (doc.contains("sr_ideal")) sr = parse_set_list(doc["sr_ideal"], n, "sr_ideal");
  if (doc.contains("max_cones")) cones = parse_set_list(doc["max_cones"], n, "max_cones");
  return ToricVarietyModel(std::move(names), d, std::move(charges), std::move(sr), std::move(cones));
}

ToricVarietyModel load_variety(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ModelError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_variety(buf.str());
}

std::string variety_to_json(const ToricVarietyModel& model) {
  json doc;
  doc["coordinates"] = model.coordinate_names();
  doc["dimension"] = model.d();
  doc["charges"] = model.charges();
  json sr = json::array();
  for (VertexSet g : model.sr_generators()) sr.push_back(set_to_json(g));
  doc["sr_ideal"] = sr;
  if (model.max_cones()) {
    json cones = json::array();
    for (VertexSet c : *model.max_cones()) cones.push_back(set_to_json(c));
    doc["max_cones"] = cones;
  }
  return doc.dump();
}

std::vector<VertexSet> sr_from_max_cones(std::span<const VertexSet> max_cones, int n) {
  if (max_cones.empty()) throw ModelError("sr_from_max_cones: empty cone list");
  const VertexSet all = full_set(n);
  // Generators of the running intersection of the primes m^(complement).
  std::vector<VertexSet> current{0};
  bool first = true;
  for (VertexSet cone : max_cones) {
    const VertexSet complement = all & ~cone;
    std::vector<VertexSet> next;
    if (first) {
      for (int i : set_indices(complement)) next.push_back(VertexSet{1} << i);
      first = false;
    } else {
      // lcm closure of current generators with the prime's variables
      for (VertexSet g : current) {
        if (g & complement) {
          next.push_back(g);
          continue;
        }
        for (int i : set_indices(complement)) next.push_back(g | (VertexSet{1} << i));
      }
    }
    current = minimalize(std::move(next));
    if (current.empty()) break;
  }
  return current;
}

std::vector<VertexSet> max_cones_from_sr(std::span<const VertexSet> sr_generators, int n, int d) {
  if (n > 24) throw ResourceLimitError("max_cones_from_sr: too many coordinates to enumerate");
  std::vector<VertexSet> cones;
  const VertexSet limit = VertexSet{1} << n;
  for (VertexSet s = 0; s < limit; ++s) {
    if (set_size(s) != d) continue;
    const bool face = std::none_of(sr_generators.begin(), sr_generators.end(),
                                   [s](VertexSet g) { return is_subset(g, s); });
    if (face) cones.push_back(s);
  }
  sort_canonical(cones);
  return cones;
}

DivisorClass canonical_class(const ToricVarietyModel& model) {
  DivisorClass k{std::vector<std::int64_t>(static_cast<std::size_t>(model.class_rank()), 0)};
  for (const auto& row : model.charges()) {
    for (std::size_t c = 0; c < row.size(); ++c) k.coords[c] -= row[c];
  }
  return k;
}

std::optional<bool> appears_smooth(const ToricVarietyModel& model) {
  std::vector<VertexSet> cones;
  if (model.max_cones()) {
    cones = *model.max_cones();
  } else if (model.n() <= 24) {
    cones = max_cones_from_sr(model.sr_generators(), model.n(), model.d());
  } else {
    return std::nullopt;
  }
  const auto rank = static_cast<std::size_t>(model.class_rank());
  const VertexSet all = full_set(model.n());
  for (VertexSet cone : cones) {
    const auto outside = set_indices(all & ~cone);
    IntMatrix m(rank, rank);
    for (std::size_t r = 0; r < outside.size() && r < rank; ++r) {
      for (std::size_t c = 0; c < rank; ++c) m(r, c) = model.charge(outside[r])[c];
    }
    if (outside.size() != rank) return false;
    const BigInt det = exact_determinant(m);
    if (det != 1 && det != -1) return false;
  }
  return true;
}

}  // namespace toric
