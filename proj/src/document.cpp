// Copyright 2026 The hyperideal Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "hyperideal/document.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>
#include <unordered_map>

#include "hyperideal/tuples.hpp"
#include "json.hpp"

namespace hyperideal {

namespace {

using nlohmann::json;

bool valid_name(const std::string& s) {
  if (s.empty()) {
    return false;
  }
  return std::none_of(s.begin(), s.end(), [](unsigned char c) {
    return c == ',' || c == '"' || c == '\\' || std::isspace(c) || c < 0x20;
  });
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    out.emplace_back(s.substr(start, pos - start));
    if (pos == std::string_view::npos) {
      return out;
    }
    start = pos + 1;
  }
}

const json& field(const json& doc, const char* key) {
  auto it = doc.find(key);
  if (it == doc.end()) {
    throw Error(ErrorCode::MissingEntry, std::string("field '") + key + "'");
  }
  return *it;
}

std::size_t arity_field(const json& doc, const char* key) {
  const json& v = field(doc, key);
  if (!v.is_number_integer()) {
    throw Error(ErrorCode::MalformedDocument,
                std::string("field '") + key + "' must be an integer");
  }
  const auto a = v.get<long long>();
  if (a < 2 || a > 16) {
    throw Error(ErrorCode::ArityOutOfRange,
                std::string(key) + " = " + std::to_string(a) +
                    " (must be between 2 and 16)");
  }
  return static_cast<std::size_t>(a);
}

class NameTable {
 public:
  explicit NameTable(const std::vector<std::string>& names) {
    for (std::size_t i = 0; i < names.size(); ++i) {
      index_.emplace(names[i], i);
    }
  }
  std::size_t at(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end()) {
      throw Error(ErrorCode::UnknownElement, "'" + name + "'");
    }
    return it->second;
  }

 private:
  std::unordered_map<std::string, std::size_t> index_;
};

// Parses a table key into a sorted tuple and returns its multiset rank.
std::size_t key_rank(const std::string& key, std::size_t arity,
                     const NameTable& names, std::size_t order,
                     const char* table) {
  const auto parts = split(key, ',');
  if (parts.size() != arity) {
    throw Error(ErrorCode::ArityMismatch,
                std::string(table) + " key '" + key + "' has " +
                    std::to_string(parts.size()) + " names, expected " +
                    std::to_string(arity));
  }
  std::vector<Element> t;
  t.reserve(arity);
  for (const auto& p : parts) {
    t.emplace_back(names.at(p));
  }
  std::sort(t.begin(), t.end());
  return multiset_rank(t, order);
}

std::string key_of(const HyperRingSpec& spec, std::span<const Element> t) {
  std::string s;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i > 0) {
      s += ',';
    }
    s += spec.elements[t[i].index];
  }
  return s;
}

std::string quoted(const std::string& s) { return json(s).dump(); }

}  // namespace

HyperRingSpec parse_spec(std::string_view document) {
  // Track keys per open object so duplicate keys are reported rather than
  // silently overwritten.
  std::vector<std::set<std::string>> open;
  std::optional<std::string> duplicate;
  json::parser_callback_t cb = [&](int, json::parse_event_t event,
                                   json& parsed) {
    switch (event) {
      case json::parse_event_t::object_start:
        open.emplace_back();
        break;
      case json::parse_event_t::object_end:
        if (!open.empty()) {
          open.pop_back();
        }
        break;
      case json::parse_event_t::key:
        if (!open.empty() && !open.back().insert(parsed.get<std::string>()).second &&
            !duplicate) {
          duplicate = parsed.get<std::string>();
        }
        break;
      default:
        break;
    }
    return true;
  };

  json doc;
  try {
    doc = json::parse(document.begin(), document.end(), cb);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::MalformedDocument, e.what());
  }
  if (duplicate) {
    throw Error(ErrorCode::DuplicateEntry, "key '" + *duplicate + "'");
  }
  if (!doc.is_object()) {
    throw Error(ErrorCode::MalformedDocument, "top level must be an object");
  }

  HyperRingSpec spec;
  const json& name = field(doc, "name");
  if (!name.is_string()) {
    throw Error(ErrorCode::MalformedDocument, "field 'name' must be a string");
  }
  spec.name = name.get<std::string>();
  spec.m = arity_field(doc, "m");
  spec.n = arity_field(doc, "n");

  const json& elements = field(doc, "elements");
  if (!elements.is_array()) {
    throw Error(ErrorCode::MalformedDocument, "field 'elements' must be an array");
  }
  std::set<std::string> seen;
  for (const auto& e : elements) {
    if (!e.is_string() || !valid_name(e.get<std::string>())) {
      throw Error(ErrorCode::MalformedDocument,
                  "element names must be non-empty strings without commas or "
                  "whitespace: " + e.dump());
    }
    if (!seen.insert(e.get<std::string>()).second) {
      throw Error(ErrorCode::DuplicateEntry,
                  "element '" + e.get<std::string>() + "'");
    }
    spec.elements.push_back(e.get<std::string>());
  }
  if (spec.elements.size() < 2) {
    throw Error(ErrorCode::MalformedDocument, "at least two elements required");
  }
  if (spec.elements.size() > kMaxOrder) {
    throw Error(ErrorCode::OrderLimitExceeded,
                "order " + std::to_string(spec.elements.size()) + " exceeds " +
                    std::to_string(kMaxOrder));
  }
  const NameTable names(spec.elements);
  const std::size_t order = spec.elements.size();

  auto named = [&](const char* key) {
    const json& v = field(doc, key);
    if (!v.is_string()) {
      throw Error(ErrorCode::MalformedDocument,
                  std::string("field '") + key + "' must be an element name");
    }
    return names.at(v.get<std::string>());
  };
  spec.zero = named("zero");
  spec.one = named("one");
  if (spec.zero == spec.one) {
    throw Error(ErrorCode::MalformedDocument,
                "zero and one are both '" + spec.elements[spec.zero] + "'");
  }

  const json& f = field(doc, "f");
  const json& g = field(doc, "g");
  if (!f.is_object() || !g.is_object()) {
    throw Error(ErrorCode::MalformedDocument, "fields 'f' and 'g' must be objects");
  }

  const std::size_t f_size = multiset_count(order, spec.m);
  const std::size_t g_size = multiset_count(order, spec.n);
  if (f_size > (std::size_t{1} << 22) || g_size > (std::size_t{1} << 22)) {
    throw Error(ErrorCode::OrderLimitExceeded, "operation tables too large");
  }
  std::vector<std::optional<std::uint64_t>> f_table(f_size);
  std::vector<std::optional<std::uint8_t>> g_table(g_size);

  for (const auto& [key, value] : f.items()) {
    const std::size_t r = key_rank(key, spec.m, names, order, "f");
    if (f_table[r]) {
      throw Error(ErrorCode::DuplicateEntry, "f key '" + key + "'");
    }
    if (!value.is_array()) {
      throw Error(ErrorCode::MalformedDocument,
                  "f value at '" + key + "' must be an array of names");
    }
    if (value.empty()) {
      throw Error(ErrorCode::EmptyHyperValue, "f(" + key + ")");
    }
    std::uint64_t bits = 0;
    for (const auto& v : value) {
      if (!v.is_string()) {
        throw Error(ErrorCode::MalformedDocument,
                    "f value at '" + key + "' must be an array of names");
      }
      const std::uint64_t bit = std::uint64_t{1} << names.at(v.get<std::string>());
      if (bits & bit) {
        throw Error(ErrorCode::DuplicateEntry,
                    "'" + v.get<std::string>() + "' in f(" + key + ")");
      }
      bits |= bit;
    }
    f_table[r] = bits;
  }
  for (const auto& [key, value] : g.items()) {
    const std::size_t r = key_rank(key, spec.n, names, order, "g");
    if (g_table[r]) {
      throw Error(ErrorCode::DuplicateEntry, "g key '" + key + "'");
    }
    if (!value.is_string()) {
      throw Error(ErrorCode::MalformedDocument,
                  "g value at '" + key + "' must be a single name");
    }
    g_table[r] = static_cast<std::uint8_t>(names.at(value.get<std::string>()));
  }

  const auto f_keys = sorted_tuples(order, spec.m);
  spec.f_table.reserve(f_size);
  for (std::size_t i = 0; i < f_size; ++i) {
    if (!f_table[i]) {
      throw Error(ErrorCode::MissingEntry, "f key '" + key_of(spec, f_keys[i]) + "'");
    }
    spec.f_table.push_back(*f_table[i]);
  }
  std::size_t i = 0;
  spec.g_table.reserve(g_size);
  for_each_multiset(order, spec.n, [&](std::span<const Element> t) {
    if (!g_table[i]) {
      throw Error(ErrorCode::MissingEntry, "g key '" + key_of(spec, t) + "'");
    }
    spec.g_table.push_back(*g_table[i]);
    ++i;
  });
  return spec;
}

HyperRingSpec load_spec(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorCode::MalformedDocument, "cannot read '" + path.string() + "'");
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_spec(buf.str());
}

std::string serialize_spec(const HyperRingSpec& spec) {
  spec.validate_shape();
  std::string out;
  out += "{\n";
  out += "  \"name\": " + quoted(spec.name) + ",\n";
  out += "  \"m\": " + std::to_string(spec.m) + ",\n";
  out += "  \"n\": " + std::to_string(spec.n) + ",\n";
  out += "  \"elements\": [";
  for (std::size_t i = 0; i < spec.elements.size(); ++i) {
    out += (i > 0 ? ", " : "") + quoted(spec.elements[i]);
  }
  out += "],\n";
  out += "  \"zero\": " + quoted(spec.elements[spec.zero]) + ",\n";
  out += "  \"one\": " + quoted(spec.elements[spec.one]) + ",\n";

  out += "  \"f\": {\n";
  std::size_t i = 0;
  const std::size_t f_size = spec.f_table.size();
  for_each_multiset(spec.order(), spec.m, [&](std::span<const Element> t) {
    out += "    " + quoted(key_of(spec, t)) + ": [";
    bool first = true;
    for (auto e : SubsetMask(spec.f_table[i], 0).elements()) {
      out += (first ? "" : ", ") + quoted(spec.elements[e.index]);
      first = false;
    }
    out += ++i < f_size ? "],\n" : "]\n";
  });
  out += "  },\n";

  out += "  \"g\": {\n";
  i = 0;
  const std::size_t g_size = spec.g_table.size();
  for_each_multiset(spec.order(), spec.n, [&](std::span<const Element> t) {
    out += "    " + quoted(key_of(spec, t)) + ": " +
           quoted(spec.elements[spec.g_table[i]]);
    out += ++i < g_size ? ",\n" : "\n";
  });
  out += "  }\n";
  out += "}\n";
  return out;
}

SubsetMask parse_subset(const HyperRing& ring, std::string_view text) {
  if (text.empty()) {
    throw Error(ErrorCode::EmptySubset, "empty subset");
  }
  SubsetMask s = ring.empty_set();
  for (const auto& name : split(text, ',')) {
    if (name.empty() || !valid_name(name)) {
      throw Error(ErrorCode::UnknownElement,
                  "'" + name + "' in subset '" + std::string(text) + "'");
    }
    auto e = ring.find(name);
    if (!e) {
      throw Error(ErrorCode::UnknownElement, "'" + name + "'");
    }
    s.insert(*e);
  }
  return s;
}

std::string format_subset(const HyperRing& ring, SubsetMask s) {
  std::string out = "{";
  bool first = true;
  for (auto e : s.elements()) {
    out += (first ? "" : ",") + ring.element_name(e);
    first = false;
  }
  return out + "}";
}

std::string format_tuple(const HyperRing& ring, std::span<const Element> t) {
  std::string out = "(";
  for (std::size_t i = 0; i < t.size(); ++i) {
    out += (i > 0 ? "," : "") + ring.element_name(t[i]);
  }
  return out + ")";
}

}  // namespace hyperideal
