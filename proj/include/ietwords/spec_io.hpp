/* Copyright 2026 The iet-words Authors. All Rights Reserved.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *    http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 * ========================================================================= */
 // JSON instance files and JSON renderings of every result type.
 //
 // Instance file:
 //   {
 //     "d": 5,                                   optional; inferred from sqrt(..)
 //     "map": {"pieces": [{"lo": s, "hi": s, "slope": 1|-1, "intercept": s}, ...]}
 //         or {"lengths": [s, ...], "permutation": [i, ...]},
 //     "subdivision": {"classes": {"A": [{"lo": s, "hi": s, "lo_in": b, "hi_in": b}, ...]}},
 //     "x0": s,                                  optional, default "0"
 //     "length": n                               optional, default 10000
 //   }
 // where every s is a scalar string (see scalar_text.hpp).

#ifndef IETWORDS_SPEC_IO_HPP
#define IETWORDS_SPEC_IO_HPP

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "ietwords/analysis.hpp"
#include "ietwords/coding.hpp"
#include "ietwords/errors.hpp"
#include "ietwords/exactnum.hpp"
#include "ietwords/interval_map.hpp"
#include "ietwords/scalar_text.hpp"
#include "ietwords/subdivision.hpp"

namespace ietwords {

using Json = nlohmann::ordered_json;

inline constexpr std::size_t kDefaultLength = 10000;

struct InstanceSpec {
  std::int64_t field_d = 0;
  PiecewiseMap map = identity_map();
  /// Present when the file described the map as an IET.
  std::optional<IET> iet;
  std::optional<Subdivision> subdivision;
  ExactScalar x0;
  std::size_t length = kDefaultLength;
};

namespace detail {

class SpecReader {
 public:
  explicit SpecReader(std::int64_t d) : d_(d) {}

  static const Json& member(const Json& obj, const std::string& key, const std::string& path) {
    if (!obj.is_object()) throw SchemaError(path, "expected an object");
    auto it = obj.find(key);
    if (it == obj.end()) throw SchemaError(path, "missing required key '" + key + "'");
    return *it;
  }

  static const Json& array(const Json& v, const std::string& path) {
    if (!v.is_array()) throw SchemaError(path, "expected an array");
    return v;
  }

  ExactScalar scalar(const Json& v, const std::string& path) const {
    if (!v.is_string()) throw SchemaError(path, "expected a scalar string such as \"1/2\"");
    const auto& text = v.get_ref<const std::string&>();
    try {
      return parse_scalar(text, d_);
    } catch (const SyntaxError& e) {
      throw e.located(path);
    } catch (const FieldMismatch& e) {
      throw FieldMismatch(path + ": " + e.what());
    } catch (const ZeroDenominator& e) {
      throw ZeroDenominator(path + ": " + e.what());
    } catch (const NonSquarefreeRadicand& e) {
      throw NonSquarefreeRadicand(path + ": " + e.what());
    }
  }

  static bool flag(const Json& obj, const std::string& key, bool fallback, const std::string& path) {
    auto it = obj.find(key);
    if (it == obj.end()) return fallback;
    if (!it->is_boolean()) throw SchemaError(path + "/" + key, "expected true or false");
    return it->get<bool>();
  }

  static std::size_t count(const Json& v, const std::string& path) {
    if (!v.is_number_integer() || v.get<std::int64_t>() < 0) {
      throw SchemaError(path, "expected a non-negative integer");
    }
    return v.get<std::size_t>();
  }

  PiecewiseMap pieces(const Json& list, const std::string& path) const {
    std::vector<AffinePiece> out;
    const auto& arr = array(list, path);
    for (std::size_t i = 0; i < arr.size(); ++i) {
      const std::string at = path + "/" + std::to_string(i);
      const Json& p = arr[i];
      auto lo = scalar(member(p, "lo", at), at + "/lo");
      auto hi = scalar(member(p, "hi", at), at + "/hi");
      const Json& slope = member(p, "slope", at);
      if (!slope.is_number_integer() || (slope.get<int>() != 1 && slope.get<int>() != -1)) {
        throw SchemaError(at + "/slope", "slope must be 1 or -1");
      }
      auto intercept = scalar(member(p, "intercept", at), at + "/intercept");
      try {
        out.push_back({HalfOpenInterval(std::move(lo), std::move(hi)),
                       slope.get<int>() == 1 ? Slope::plus : Slope::minus, std::move(intercept)});
      } catch (const InvalidInterval& e) {
        throw InvalidInterval(at + ": " + e.what());
      }
    }
    if (out.empty()) throw SchemaError(path, "a map needs at least one piece");
    try {
      return PiecewiseMap::checked(std::move(out));
    } catch (const InvalidMap& e) {
      throw InvalidMap(path + ": " + e.what());
    }
  }

  IET iet(const Json& obj, const std::string& path) const {
    const auto& lengths_json = array(member(obj, "lengths", path), path + "/lengths");
    const auto& perm_json = array(member(obj, "permutation", path), path + "/permutation");
    std::vector<ExactScalar> lengths;
    for (std::size_t i = 0; i < lengths_json.size(); ++i) {
      lengths.push_back(scalar(lengths_json[i], path + "/lengths/" + std::to_string(i)));
    }
    std::vector<std::size_t> perm;
    for (std::size_t i = 0; i < perm_json.size(); ++i) {
      perm.push_back(count(perm_json[i], path + "/permutation/" + std::to_string(i)));
    }
    try {
      return IET(std::move(lengths), std::move(perm));
    } catch (const InvalidIET& e) {
      throw InvalidIET(path + ": " + e.what());
    }
  }

  Subdivision subdivision(const Json& obj, const std::string& path) const {
    const Json& classes = member(obj, "classes", path);
    if (!classes.is_object() || classes.empty()) {
      throw SchemaError(path + "/classes", "expected a nonempty object of letter classes");
    }
    RawClasses raw;
    for (const auto& [letter, list] : classes.items()) {
      const std::string at = path + "/classes/" + letter;
      std::vector<Component> parts;
      const auto& arr = array(list, at);
      for (std::size_t i = 0; i < arr.size(); ++i) {
        const std::string cat = at + "/" + std::to_string(i);
        const Json& c = arr[i];
        parts.push_back({scalar(member(c, "lo", cat), cat + "/lo"), flag(c, "lo_in", true, cat),
                         scalar(member(c, "hi", cat), cat + "/hi"), flag(c, "hi_in", false, cat)});
      }
      raw.emplace_back(letter, std::move(parts));
    }
    try {
      return canonicalize(raw, d_);
    } catch (const OverlapError&) {
      throw;
    } catch (const CoverageGapError&) {
      throw;
    } catch (const InvalidSubdivision& e) {
      throw InvalidSubdivision(path + ": " + e.what());
    } catch (const InvalidInterval& e) {
      throw InvalidInterval(path + ": " + e.what());
    }
  }

 private:
  std::int64_t d_;
};

// Radicands of every sqrt(k) literal in the document, with a path to each.
inline void collect_radicands(const Json& v, const std::string& path,
                              std::vector<std::pair<std::int64_t, std::string>>& out) {
  if (v.is_string()) {
    const auto& s = v.get_ref<const std::string&>();
    const auto at = s.find("*sqrt(");
    if (at == std::string::npos) return;
    std::int64_t k = 0;
    for (std::size_t i = at + 6; i < s.size() && s[i] >= '0' && s[i] <= '9' && k < 1'000'000'000; ++i) {
      k = k * 10 + (s[i] - '0');
    }
    out.emplace_back(k, path);
  } else if (v.is_object()) {
    for (const auto& [key, child] : v.items()) collect_radicands(child, path + "/" + key, out);
  } else if (v.is_array()) {
    for (std::size_t i = 0; i < v.size(); ++i) collect_radicands(v[i], path + "/" + std::to_string(i), out);
  }
}

}  // namespace detail

/// Malformed JSON is reported at the zero-based offset of the last character
/// read, which is the end of the offending token.
inline Json parse_json(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw SyntaxError(std::string("malformed JSON: ") + e.what(), e.byte == 0 ? 0 : e.byte - 1);
  }
}

/// Parses and validates an instance file. Errors carry a JSON-pointer path
/// or a character position.
inline InstanceSpec parse_spec_json(const Json& doc) {
  if (!doc.is_object()) throw SchemaError("", "instance must be a JSON object");
  InstanceSpec spec;

  std::vector<std::pair<std::int64_t, std::string>> radicands;
  detail::collect_radicands(doc, "", radicands);
  if (auto it = doc.find("d"); it != doc.end()) {
    if (!it->is_number_integer() || it->get<std::int64_t>() < 0) {
      throw SchemaError("/d", "expected a non-negative integer radicand");
    }
    spec.field_d = it->get<std::int64_t>();
    ExactScalar::check_radicand(spec.field_d);
  } else if (!radicands.empty()) {
    spec.field_d = radicands.front().first;
  }
  for (const auto& [k, path] : radicands) {
    if (k != spec.field_d) {
      throw FieldMismatch(path + ": sqrt(" + std::to_string(k) + ") in a sqrt(" +
                          std::to_string(spec.field_d) + ") instance");
    }
  }

  const detail::SpecReader reader(spec.field_d);
  const Json& map = detail::SpecReader::member(doc, "map", "");
  if (map.is_object() && map.contains("pieces")) {
    spec.map = reader.pieces(map["pieces"], "/map/pieces");
  } else if (map.is_object() && map.contains("lengths")) {
    spec.iet = reader.iet(map, "/map");
    spec.map = iet_to_map(*spec.iet);
  } else {
    throw SchemaError("/map", "expected {\"pieces\": [...]} or {\"lengths\": [...], \"permutation\": [...]}");
  }

  if (auto it = doc.find("subdivision"); it != doc.end()) {
    spec.subdivision = reader.subdivision(*it, "/subdivision");
  }
  spec.x0 = ExactScalar::integer(0, spec.field_d);
  if (auto it = doc.find("x0"); it != doc.end()) {
    spec.x0 = reader.scalar(*it, "/x0");
    if (spec.x0.sign() < 0 || spec.x0 >= ExactScalar::integer(1, spec.field_d)) {
      throw PointOutsideDomain("/x0: starting point " + spec.x0.to_string() + " outside [0, 1)");
    }
  }
  if (auto it = doc.find("length"); it != doc.end()) {
    spec.length = detail::SpecReader::count(*it, "/length");
    if (spec.length == 0) throw SchemaError("/length", "length must be at least 1");
  }
  return spec;
}

inline InstanceSpec parse_spec(std::string_view text) { return parse_spec_json(parse_json(text)); }

// ---------------------------------------------------------------- rendering

inline Json to_json(const Component& c) {
  return Json{{"lo", c.lo.to_string()}, {"hi", c.hi.to_string()}, {"lo_in", c.lo_in}, {"hi_in", c.hi_in}};
}

inline Json to_json(const Subdivision& sub) {
  Json classes = Json::object();
  for (std::size_t i = 0; i < sub.alphabet().size(); ++i) {
    Json list = Json::array();
    for (const auto& c : sub.classes()[i].components()) list.push_back(to_json(c));
    classes[sub.alphabet()[i]] = std::move(list);
  }
  return Json{{"classes", std::move(classes)}};
}

inline Json to_json(const GluingMap& gluing) {
  Json out = Json::object();
  for (const auto& [from, to] : gluing.mapping()) out[from] = to;
  return out;
}

inline Json to_json(const IET& iet) {
  Json lengths = Json::array();
  for (const auto& l : iet.lengths()) lengths.push_back(l.to_string());
  return Json{{"lengths", std::move(lengths)}, {"permutation", iet.permutation()}};
}

inline Json to_json(const PiecewiseMap& map) {
  Json pieces = Json::array();
  for (const auto& p : map.pieces()) {
    pieces.push_back(Json{{"lo", p.domain.lo().to_string()},
                          {"hi", p.domain.hi().to_string()},
                          {"slope", static_cast<int>(p.slope)},
                          {"intercept", p.intercept.to_string()}});
  }
  return Json{{"pieces", std::move(pieces)}};
}

inline Json to_json(const SymbolicWord& word) {
  const auto& o = word.origin();
  Json origin{{"map", o.map_id},
              {"subdivision", o.subdivision_id},
              {"x0", o.x0 ? Json(o.x0->to_string()) : Json(nullptr)},
              {"length", o.length},
              {"projected", o.projected}};
  return Json{{"letters", word.letters()}, {"origin", std::move(origin)}};
}

inline Json to_json(const ComplexityProfile& profile) {
  Json out = Json::array();
  for (const auto& [n, p] : profile.values) out.push_back(Json::array({n, p}));
  return out;
}

inline Json to_json(const RecurrenceProfile& profile) {
  Json out = Json::array();
  for (const auto& [n, w] : profile.values) {
    out.push_back(Json::array({n, w ? Json(*w) : Json("NOT_RECURRENT_AT_SCALE")}));
  }
  return out;
}

inline Json to_json(const std::optional<Periodicity>& period) {
  if (!period) return Json("APERIODIC_AT_SCALE");
  return Json{{"preperiod", period->preperiod}, {"period", period->period}};
}

inline Json to_json(const GoodnessViolation& v) {
  Json out{{"condition", v.condition}, {"letter", v.letter}};
  if (v.condition == 1) {
    out["components"] = v.components;
  } else {
    out["discontinuity"] = v.discontinuity->to_string();
    out["witness"] = Json::array({v.witness->first.to_string(), v.witness->second.to_string()});
    out["shared_color"] = v.shared_color;
  }
  return out;
}

}  // namespace ietwords

#endif  // IETWORDS_SPEC_IO_HPP
