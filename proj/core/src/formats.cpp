#include "dissecta/formats.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "dissecta/error.hpp"
#include "json.hpp"

namespace dissecta {

using nlohmann::json;

namespace {

[[noreturn]] void parse_error(const std::string& what) { throw Error(Errc::parse_error, what); }

json parse_json(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    parse_error(std::string("invalid JSON: ") + e.what());
  }
}

void check_format_tag(const json& doc) {
  if (!doc.is_object()) return;
  auto it = doc.find("format");
  if (it == doc.end()) return;
  if (!it->is_string() || it->get<std::string>() != kFormatTag) {
    parse_error("unsupported format tag " + it->dump() + ", expected \"" +
                std::string(kFormatTag) + "\"");
  }
}

void allow_keys(const json& obj, std::initializer_list<std::string_view> keys, const char* where) {
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    if (std::find(keys.begin(), keys.end(), it.key()) == keys.end()) {
      parse_error(std::string("unexpected key \"") + it.key() + "\" in " + where);
    }
  }
}

const json& require(const json& obj, const char* key, const char* where) {
  auto it = obj.find(key);
  if (it == obj.end()) parse_error(std::string("missing \"") + key + "\" in " + where);
  return *it;
}

std::string as_id(const json& v, const char* where) {
  if (!v.is_string()) parse_error(std::string("ids in ") + where + " must be strings, got " + v.dump());
  return v.get<std::string>();
}

std::int64_t as_int(const json& v, const std::string& where) {
  if (!v.is_number_integer()) parse_error(where + " must be an integer, got " + v.dump());
  return v.get<std::int64_t>();
}

std::string quote(const std::string& s) { return json(s).dump(); }

std::string id_list(const std::vector<std::string>& ids) {
  std::string out = "[";
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (i) out += ", ";
    out += quote(ids[i]);
  }
  return out + "]";
}

void check_size(std::size_t n, const char* what) {
  if (n > max_elements()) {
    throw Error(Errc::too_large, std::string(what) + " has " + std::to_string(n) +
                                     " elements; the limit is " + std::to_string(max_elements()) +
                                     " (DISSECTA_MAX_ELEMENTS)");
  }
}

}  // namespace

std::size_t max_elements() {
  if (const char* env = std::getenv("DISSECTA_MAX_ELEMENTS")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return 4096;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) parse_error("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

PosetDocument parse_poset_document(std::string_view text) {
  const json doc = parse_json(text);
  if (!doc.is_object()) parse_error("poset document must be a JSON object");
  check_format_tag(doc);
  allow_keys(doc, {"format", "elements", "covers", "relation", "top", "hyperplanes", "attrs"},
             "poset document");

  const json& elements = require(doc, "elements", "poset document");
  if (!elements.is_array()) parse_error("\"elements\" must be an array");
  check_size(elements.size(), "poset");
  std::vector<std::string> ids;
  for (const auto& e : elements) ids.push_back(as_id(e, "\"elements\""));

  const bool has_covers = doc.contains("covers");
  const bool has_relation = doc.contains("relation");
  if (has_covers && has_relation) parse_error("give either \"covers\" or \"relation\", not both");
  std::vector<std::pair<std::string, std::string>> pairs;
  if (has_covers || has_relation) {
    const json& list = doc.at(has_covers ? "covers" : "relation");
    if (!list.is_array()) parse_error("pair list must be an array");
    for (const auto& p : list) {
      if (!p.is_array() || p.size() != 2) parse_error("each pair must be [a, b], got " + p.dump());
      pairs.emplace_back(as_id(p[0], "pairs"), as_id(p[1], "pairs"));
    }
  }

  PosetDocument out;
  out.poset = share(Poset::build(ids, pairs, has_relation ? PairMode::relation : PairMode::covers));
  const Poset& p = *out.poset;
  out.chi.assign(p.size(), std::nullopt);
  out.dim.assign(p.size(), std::nullopt);

  if (auto it = doc.find("top"); it != doc.end()) out.top = p.index(as_id(*it, "\"top\""));
  if (auto it = doc.find("hyperplanes"); it != doc.end()) {
    if (!it->is_array()) parse_error("\"hyperplanes\" must be an array");
    for (const auto& h : *it) out.hyperplanes.push_back(p.index(as_id(h, "\"hyperplanes\"")));
  }
  if (auto it = doc.find("attrs"); it != doc.end()) {
    if (!it->is_object()) parse_error("\"attrs\" must be an object");
    for (auto a = it->begin(); a != it->end(); ++a) {
      const Index x = p.index(a.key());
      if (!a->is_object()) parse_error("attributes of '" + a.key() + "' must be an object");
      allow_keys(*a, {"chi", "dim"}, "attrs");
      if (auto c = a->find("chi"); c != a->end()) out.chi[x] = as_int(*c, "chi of '" + a.key() + "'");
      if (auto d = a->find("dim"); d != a->end()) {
        out.dim[x] = static_cast<int>(as_int(*d, "dim of '" + a.key() + "'"));
      }
    }
  }
  return out;
}

Arrangement to_arrangement(const PosetDocument& doc) {
  return Arrangement::create(doc.poset, doc.chi, doc.dim, doc.top, doc.hyperplanes);
}

std::string canonical_poset_document(const PosetDocument& doc) {
  const Poset& p = *doc.poset;
  auto covers = p.cover_relation();
  std::sort(covers.begin(), covers.end());
  std::string out = "{\n";
  out += "  \"format\": " + quote(std::string(kFormatTag)) + ",\n";
  out += "  \"elements\": " + id_list(p.ids());
  out += ",\n  \"covers\": [";
  for (std::size_t i = 0; i < covers.size(); ++i) {
    if (i) out += ", ";
    out += "[" + quote(p.id(covers[i].first)) + ", " + quote(p.id(covers[i].second)) + "]";
  }
  out += "]";
  if (doc.top) out += ",\n  \"top\": " + quote(p.id(*doc.top));
  if (!doc.hyperplanes.empty()) {
    std::vector<std::string> hs;
    for (Index h : doc.hyperplanes) hs.push_back(p.id(h));
    out += ",\n  \"hyperplanes\": " + id_list(hs);
  }
  std::vector<std::string> attr_lines;
  for (Index a = 0; a < p.size(); ++a) {
    std::string fields;
    if (doc.chi[a]) fields += "\"chi\": " + std::to_string(*doc.chi[a]);
    if (doc.dim[a]) {
      if (!fields.empty()) fields += ", ";
      fields += "\"dim\": " + std::to_string(*doc.dim[a]);
    }
    if (!fields.empty()) attr_lines.push_back("    " + quote(p.id(a)) + ": {" + fields + "}");
  }
  if (!attr_lines.empty()) {
    out += ",\n  \"attrs\": {\n";
    for (std::size_t i = 0; i < attr_lines.size(); ++i) {
      out += attr_lines[i];
      out += i + 1 < attr_lines.size() ? ",\n" : "\n";
    }
    out += "  }";
  }
  out += "\n}\n";
  return out;
}

SetModelDocument parse_set_model(std::string_view text) {
  const json doc = parse_json(text);
  if (!doc.is_object()) parse_error("set model must be a JSON object");
  check_format_tag(doc);
  allow_keys(doc, {"format", "ground", "subspaces", "refinement", "chambers"}, "set model");

  SetModelDocument out;
  const json& ground = require(doc, "ground", "set model");
  if (!ground.is_array()) parse_error("\"ground\" must be an array");
  if (ground.size() > 64) {
    throw Error(Errc::too_large, "ground set has " + std::to_string(ground.size()) +
                                     " points; at most 64 are supported");
  }
  out.numeric_ground = !ground.empty() && ground.front().is_number_integer();
  for (const auto& g : ground) {
    if (out.numeric_ground != g.is_number_integer() || !(g.is_string() || g.is_number_integer())) {
      parse_error("ground points must be all strings or all integers");
    }
    out.model.ground.push_back(g.is_string() ? g.get<std::string>()
                                             : std::to_string(g.get<std::int64_t>()));
  }
  std::vector<std::string> sorted = out.model.ground;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw Error(Errc::duplicate_element, "ground set lists a point twice");
  }

  auto point = [&](const json& v) -> SetMask {
    std::string name;
    if (out.numeric_ground && v.is_number_integer()) {
      name = std::to_string(v.get<std::int64_t>());
    } else if (!out.numeric_ground && v.is_string()) {
      name = v.get<std::string>();
    } else {
      parse_error("point " + v.dump() + " does not match the ground set type");
    }
    auto it = std::find(out.model.ground.begin(), out.model.ground.end(), name);
    if (it == out.model.ground.end()) {
      throw Error(Errc::unknown_element, "point " + v.dump() + " is not in the ground set");
    }
    return SetMask{1} << (it - out.model.ground.begin());
  };
  auto family = [&](const char* key, bool required) {
    std::vector<SetMask> sets;
    auto it = doc.find(key);
    if (it == doc.end()) {
      if (required) parse_error(std::string("missing \"") + key + "\" in set model");
      return sets;
    }
    if (!it->is_array()) parse_error(std::string("\"") + key + "\" must be an array of sets");
    for (const auto& s : *it) {
      if (!s.is_array()) parse_error(std::string("\"") + key + "\" must be an array of sets");
      SetMask m = 0;
      for (const auto& v : s) m |= point(v);
      sets.push_back(m);
    }
    return sets;
  };
  out.model.subspaces = family("subspaces", false);
  out.model.refinement = family("refinement", false);
  out.model.chambers = family("chambers", true);
  if (!doc.contains("refinement")) {
    // Default refinement: the intersection poset of the subspaces, plus T.
    const SetModel& m = out.model;
    if (m.subspaces.size() > 20) throw Error(Errc::too_large, "at most 20 subspaces are supported");
    std::vector<SetMask> flats{m.full()};
    for (std::uint32_t mask = 1; mask < (1U << m.subspaces.size()); ++mask) {
      SetMask x = m.full();
      for (std::size_t i = 0; i < m.subspaces.size(); ++i) {
        if (mask >> i & 1U) x &= m.subspaces[i];
      }
      if (x != 0 && std::find(flats.begin(), flats.end(), x) == flats.end()) flats.push_back(x);
    }
    out.model.refinement = flats;
  }
  return out;
}

std::string canonical_set_model(const SetModelDocument& doc) {
  const SetModel& m = doc.model;
  auto point = [&](std::size_t i) { return doc.numeric_ground ? m.ground[i] : quote(m.ground[i]); };
  auto set = [&](SetMask s) {
    std::string out = "[";
    bool first = true;
    for (std::size_t i = 0; i < m.ground.size(); ++i) {
      if (!(s >> i & 1U)) continue;
      if (!first) out += ", ";
      out += point(i);
      first = false;
    }
    return out + "]";
  };
  auto family = [&](const std::vector<SetMask>& sets) {
    std::string out = "[";
    for (std::size_t i = 0; i < sets.size(); ++i) {
      if (i) out += ", ";
      out += set(sets[i]);
    }
    return out + "]";
  };
  std::string out = "{\n";
  out += "  \"format\": " + quote(std::string(kFormatTag)) + ",\n";
  out += "  \"ground\": [";
  for (std::size_t i = 0; i < m.ground.size(); ++i) {
    if (i) out += ", ";
    out += point(i);
  }
  out += "],\n";
  out += "  \"subspaces\": " + family(m.subspaces) + ",\n";
  out += "  \"refinement\": " + family(m.refinement) + ",\n";
  out += "  \"chambers\": " + family(m.chambers) + "\n}\n";
  return out;
}

FaceProfile parse_profile(std::string_view text) {
  const json doc = parse_json(text);
  if (!doc.is_object()) parse_error("profile must be a JSON object");
  check_format_tag(doc);
  allow_keys(doc, {"format", "chamber_chi", "flat_chi"}, "profile");
  auto table = [&](const char* key, std::map<int, std::int64_t>& into) {
    auto it = doc.find(key);
    if (it == doc.end()) return;
    if (!it->is_object()) parse_error(std::string("\"") + key + "\" must map dimensions to integers");
    for (auto e = it->begin(); e != it->end(); ++e) {
      const std::string& k = e.key();
      if (k.empty() || !std::all_of(k.begin(), k.end(), [](char c) { return c >= '0' && c <= '9'; })) {
        parse_error("dimension key \"" + k + "\" is not a nonnegative integer");
      }
      into[std::stoi(k)] = as_int(*e, std::string(key) + "[" + k + "]");
    }
  };
  FaceProfile out;
  table("chamber_chi", out.chamber_chi);
  table("flat_chi", out.flat_chi);
  if (out.chamber_chi.empty()) parse_error("profile needs a \"chamber_chi\" table");
  return out;
}

std::string canonical_profile(const FaceProfile& profile) {
  auto table = [](const std::map<int, std::int64_t>& t) {
    std::string out = "{";
    bool first = true;
    for (const auto& [d, v] : t) {
      if (!first) out += ", ";
      out += "\"" + std::to_string(d) + "\": " + std::to_string(v);
      first = false;
    }
    return out + "}";
  };
  std::string out = "{\n";
  out += "  \"format\": " + quote(std::string(kFormatTag)) + ",\n";
  out += "  \"chamber_chi\": " + table(profile.chamber_chi);
  if (!profile.flat_chi.empty()) out += ",\n  \"flat_chi\": " + table(profile.flat_chi);
  out += "\n}\n";
  return out;
}

std::vector<std::string> parse_subset(std::string_view text) {
  const json doc = parse_json(text);
  const json* list = &doc;
  if (doc.is_object()) {
    check_format_tag(doc);
    allow_keys(doc, {"format", "subset"}, "subset document");
    list = &require(doc, "subset", "subset document");
  }
  if (!list->is_array()) parse_error("subset must be an array of ids");
  std::vector<std::string> out;
  for (const auto& v : *list) out.push_back(as_id(v, "subset"));
  return out;
}

std::vector<std::int64_t> parse_weights(std::string_view text, const SetModel& model) {
  const json doc = parse_json(text);
  if (!doc.is_object()) parse_error("weights document must be a JSON object");
  check_format_tag(doc);
  allow_keys(doc, {"format", "weights"}, "weights document");
  const json& w = require(doc, "weights", "weights document");
  if (!w.is_object()) parse_error("\"weights\" must map points to integers");
  std::vector<std::int64_t> out(model.ground.size(), 0);
  for (auto e = w.begin(); e != w.end(); ++e) {
    auto it = std::find(model.ground.begin(), model.ground.end(), e.key());
    if (it == model.ground.end()) {
      throw Error(Errc::unknown_element, "point '" + e.key() + "' is not in the ground set");
    }
    out[static_cast<std::size_t>(it - model.ground.begin())] = as_int(*e, "weight of '" + e.key() + "'");
  }
  return out;
}

DocumentKind detect_kind(std::string_view text) {
  const json doc = parse_json(text);
  if (doc.is_array()) return DocumentKind::subset;
  if (!doc.is_object()) parse_error("unrecognized document");
  if (doc.contains("ground")) return DocumentKind::set_model;
  if (doc.contains("chamber_chi")) return DocumentKind::profile;
  if (doc.contains("elements")) return DocumentKind::poset;
  if (doc.contains("subset")) return DocumentKind::subset;
  parse_error("unrecognized document: expected a poset, set model, profile, or subset");
}

std::string canonicalize(std::string_view text) {
  switch (detect_kind(text)) {
    case DocumentKind::poset:
      return canonical_poset_document(parse_poset_document(text));
    case DocumentKind::set_model:
      return canonical_set_model(parse_set_model(text));
    case DocumentKind::profile:
      return canonical_profile(parse_profile(text));
    case DocumentKind::subset: {
      return "{\n  \"format\": " + quote(std::string(kFormatTag)) + ",\n  \"subset\": " +
             id_list(parse_subset(text)) + "\n}\n";
    }
  }
  parse_error("unrecognized document");
}

}  // namespace dissecta
