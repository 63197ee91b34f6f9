#include "cli.hpp"

#include <algorithm>
#include <filesystem>
#include <iomanip>
#include <optional>
#include <sstream>

#include <openssl/evp.h>

#include "CLI11.hpp"
#include "json.hpp"

#include "dissecta/dissection.hpp"
#include "dissecta/error.hpp"
#include "dissecta/formats.hpp"
#include "dissecta/incidence.hpp"
#include "dissecta/lattice.hpp"
#include "dissecta/set_model.hpp"
#include "dissecta/valuation.hpp"

namespace dissecta::cli {

namespace {

using Json = nlohmann::ordered_json;

std::string sha256_hex(const std::string& data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr);
  std::ostringstream out;
  for (unsigned int i = 0; i < len; ++i) {
    out << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(digest[i]);
  }
  return out.str();
}

struct Report {
  std::string command;
  Json inputs = Json::array();
  Json results = Json::object();
  std::vector<std::string> warnings;
  int exit_code = kOk;

  // Reads a file and records its basename and digest.
  std::string load(const std::string& path) {
    std::string text = read_file(path);
    inputs.push_back({{"file", std::filesystem::path(path).filename().string()},
                      {"sha256", sha256_hex(text)}});
    return text;
  }

  Json to_json() const {
    Json j;
    j["command"] = command;
    j["inputs"] = inputs;
    j["results"] = results;
    j["warnings"] = warnings;
    return j;
  }
};

std::string scalar_text(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

bool is_flat(const Json& v) {
  if (!v.is_array()) return !v.is_object();
  return std::all_of(v.begin(), v.end(), [](const Json& e) { return !e.is_structured(); });
}

std::string inline_text(const Json& v) {
  if (!v.is_structured()) return scalar_text(v);
  std::string out = v.is_array() ? "[" : "{";
  bool first = true;
  for (auto it = v.begin(); it != v.end(); ++it) {
    if (!first) out += ", ";
    if (v.is_object()) out += it.key() + ": ";
    out += inline_text(*it);
    first = false;
  }
  return out + (v.is_array() ? "]" : "}");
}

void render_text(const Json& obj, int indent, std::ostream& out) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    const Json& v = *it;
    if (v.is_object() && !v.empty()) {
      out << pad << it.key() << ":\n";
      render_text(v, indent + 2, out);
    } else if (v.is_array() && !is_flat(v)) {
      out << pad << it.key() << ":\n";
      for (const auto& e : v) out << pad << "  - " << inline_text(e) << "\n";
    } else {
      out << pad << it.key() << ": " << inline_text(v) << "\n";
    }
  }
}

void print_report(const Report& r, const std::string& format, std::ostream& out) {
  if (format == "json") {
    out << r.to_json().dump(2) << "\n";
    return;
  }
  out << "command: " << r.command << "\n";
  out << "inputs:\n";
  for (const auto& in : r.inputs) {
    out << "  - " << in["file"].get<std::string>() << " sha256:" << in["sha256"].get<std::string>()
        << "\n";
  }
  out << "results:\n";
  render_text(r.results, 2, out);
  out << "warnings:";
  if (r.warnings.empty()) out << " none";
  out << "\n";
  for (const auto& w : r.warnings) out << "  - " << w << "\n";
}

Json rational_json(const Rational& q) { return to_string(q); }

Json bigints(const std::vector<BigInt>& xs) {
  Json arr = Json::array();
  for (const auto& x : xs) {
    if (x.fits_slong_p()) {
      arr.push_back(x.get_si());
    } else {
      arr.push_back(x.get_str());
    }
  }
  return arr;
}

Json id_list(const Poset& p, const std::vector<Index>& xs) {
  Json arr = Json::array();
  for (Index x : xs) arr.push_back(p.id(x));
  return arr;
}

PosetDocument load_poset(Report& r, const std::string& path) {
  return parse_poset_document(r.load(path));
}

Arrangement load_arrangement(Report& r, const std::string& path) {
  return to_arrangement(load_poset(r, path));
}

FaceProfile profile_or_default(Report& r, const std::string& path, const Arrangement& ap) {
  if (!path.empty()) return parse_profile(r.load(path));
  r.warnings.push_back("no profile given; assuming chamber Euler characteristic (-1)^i in dimension i");
  return FaceProfile::alternating(ap.ambient_dim());
}

struct Options {
  std::string format = "text";
  std::string file;
  std::string from;
  std::string to;
  std::string zaslavsky_file;
  std::optional<std::int64_t> chamber_chi;
  std::string profile;
  std::string convention = "codim";
  std::string weights;
  std::string kind;
};

void cmd_mobius(const Options& o, Report& r) {
  const auto doc = load_poset(r, o.file);
  const Poset& p = *doc.poset;
  const IncidenceFunction mu = mobius(doc.poset);
  if (!o.from.empty() && !o.to.empty()) {
    const Index a = p.index(o.from);
    const Index b = p.index(o.to);
    if (!p.leq(a, b)) {
      r.warnings.push_back("'" + o.from + "' is not below '" + o.to + "'; the value is 0 by convention");
    }
    r.results["from"] = o.from;
    r.results["to"] = o.to;
    r.results["mu"] = mu(a, b);
    return;
  }
  Json table = Json::array();
  for (Index a : p.linear_extension()) {
    if (!o.from.empty() && p.id(a) != o.from) continue;
    for (Index b : p.up(a)) {
      if (!o.to.empty() && p.id(b) != o.to) continue;
      table.push_back(Json::array({p.id(a), p.id(b), mu(a, b)}));
    }
  }
  if (!o.from.empty()) p.index(o.from);
  if (!o.to.empty()) p.index(o.to);
  r.results["elements"] = p.size();
  r.results["mu"] = table;
}

void cmd_check(const Options& o, Report& r) {
  const auto doc = load_poset(r, o.file);
  const Extremes ex = doc.poset->extremes();
  r.results["elements"] = doc.poset->size();
  r.results["top"] = ex.top ? Json(doc.poset->id(*ex.top)) : Json(nullptr);
  r.results["bottom"] = ex.bottom ? Json(doc.poset->id(*ex.bottom)) : Json(nullptr);
  try {
    const Lattice l = Lattice::from_poset(doc.poset);
    const StructureFlags f = l.structure();
    r.results["lattice"] = true;
    r.results["distributive"] = f.distributive;
    r.results["modular"] = f.modular;
    r.results["cancellation"] = f.cancellation;
  } catch (const Error& e) {
    if (e.code() != Errc::not_a_lattice) throw;
    r.results["lattice"] = false;
    r.warnings.push_back(e.what());
  }
}

void cmd_ji(const Options& o, Report& r) {
  const auto doc = load_poset(r, o.file);
  const Lattice l = Lattice::from_poset(doc.poset);
  const auto ji = join_irreducibles(l);
  const Poset& p = *doc.poset;
  r.results["count"] = ji.elements.size();
  r.results["ji"] = id_list(p, ji.elements);
  Json covers = Json::object();
  for (Index a : ji.elements) {
    if (a == l.bottom()) continue;
    covers[p.id(a)] = p.id(ji.lower_cover.at(a));
  }
  r.results["lower_cover"] = covers;
}

void cmd_val(const Options& o, Report& r) {
  const auto doc = load_poset(r, o.file);
  const Lattice l = Lattice::from_poset(doc.poset);
  const NLPresentation nl(l);
  const ValInvariants inv = val_invariants(nl);
  const Poset& p = *doc.poset;
  r.results["relations"] = nl.rows().size();
  r.results["free_rank"] = inv.free_rank;
  r.results["torsion"] = bigints(inv.torsion);
  r.results["ji_count"] = inv.ji_count;
  r.results["distributive"] = inv.distributive;
  r.results["match"] = inv.match;
  if (!inv.match) r.exit_code = kIdentityFailed;
  if (auto w = injectivity_witness(nl)) {
    r.results["injective"] = false;
    r.results["collapsed_pair"] = Json::array({p.id(w->first), p.id(w->second)});
  } else {
    r.results["injective"] = true;
  }
  if (!o.zaslavsky_file.empty()) {
    std::vector<Index> m;
    for (const auto& id : parse_subset(r.load(o.zaslavsky_file))) m.push_back(p.index(id));
    const auto entries = zaslavsky_check(nl, m);
    Json members = Json::object();
    bool all = true;
    for (const auto& e : entries) {
      members[p.id(e.element)] = e.member;
      all = all && e.member;
    }
    r.results["zaslavsky"] = {{"checked", entries.size()}, {"all_in_N", all}, {"members", members}};
    if (!all) r.exit_code = kIdentityFailed;
  }
}

void cmd_dissect(const Options& o, Report& r) {
  const Arrangement ap = load_arrangement(r, o.file);
  const ChamberStatistic s = chamber_statistic(ap, o.chamber_chi);
  r.results["top"] = ap.poset()->id(ap.top());
  r.results["flats"] = ap.size();
  r.results["sum"] = s.sum;
  if (s.count) {
    r.results["chamber_chi"] = *o.chamber_chi;
    r.results["count"] = rational_json(*s.count);
    r.results["integral"] = s.integral;
    if (!s.integral) {
      r.warnings.push_back("chamber count " + to_string(*s.count) +
                           " is not an integer; the Euler characteristics look inconsistent");
    }
  }
}

void cmd_faces(const Options& o, Report& r) {
  const Arrangement ap = load_arrangement(r, o.file);
  const FaceProfile profile = parse_profile(r.load(o.profile));
  const FaceCounts fc = face_counts(ap, profile);
  Json by_dim = Json::object();
  for (const auto& [d, f] : fc.by_dim) by_dim[std::to_string(d)] = rational_json(f);
  r.results["f"] = by_dim;
  r.results["total"] = rational_json(fc.total);
  r.results["integral"] = fc.integral;
  if (!fc.integral) r.warnings.push_back("some face counts are not integers");
}

FConvention parse_convention(const std::string& s) {
  if (s == "dim") return FConvention::dim;
  if (s == "codim") return FConvention::codim;
  return FConvention::literal;
}

void cmd_fpoly(const Options& o, Report& r) {
  const Arrangement ap = load_arrangement(r, o.file);
  const FaceProfile profile = profile_or_default(r, o.profile, ap);
  const Polynomial f = f_polynomial(ap, profile, parse_convention(o.convention));
  r.results["convention"] = o.convention;
  r.results["n"] = ap.ambient_dim();
  r.results["f"] = f.to_string();
  r.results["f_at_1"] = rational_json(f.evaluate(1));
}

void cmd_mpoly(const Options& o, Report& r) {
  const Arrangement ap = load_arrangement(r, o.file);
  const Polynomial2 m = mobius_polynomial(ap);
  r.results["n"] = ap.ambient_dim();
  r.results["rank"] = ap.arrangement_rank();
  r.results["M"] = m.to_string();
}

void cmd_verify(const Options& o, Report& r) {
  const SetModelDocument doc = parse_set_model(r.load(o.file));
  std::optional<std::vector<std::int64_t>> weights;
  if (!o.weights.empty()) weights = parse_weights(r.load(o.weights), doc.model);
  const SetOracleReport s = set_oracle_check(doc.model, weights);
  r.results["valuation"] = weights ? "weights" : "cardinality";
  r.results["lhs"] = s.lhs;
  r.results["rhs"] = s.rhs;
  r.results["equal"] = s.equal;
  if (s.lattice_size) {
    r.results["lattice_size"] = *s.lattice_size;
    r.results["ji_contained"] = *s.ji_contained;
  } else {
    r.warnings.push_back("ground set too large to build the full lattice; checked the reduced form only");
  }
  if (!s.equal || (s.ji_contained && !*s.ji_contained)) r.exit_code = kIdentityFailed;
}

void cmd_identity(const Options& o, Report& r) {
  const Arrangement ap = load_arrangement(r, o.file);
  std::optional<FaceProfile> profile;
  if (!o.profile.empty()) profile = parse_profile(r.load(o.profile));
  const FaceIdentity which = o.kind == "sphere" ? FaceIdentity::sphere : FaceIdentity::alternating;
  const IdentityReport rep = identity_report(ap, which, profile);
  r.results["kind"] = o.kind;
  r.results["n"] = ap.ambient_dim();
  r.results["rank"] = ap.arrangement_rank();
  if (which == FaceIdentity::sphere) r.results["gamma"] = rep.gamma;
  r.results["lhs"] = rep.lhs.to_string();
  r.results["rhs"] = rep.rhs.to_string();
  r.results["equal"] = rep.equal;
  r.results["lhs_at_1"] = rational_json(rep.lhs_at_one);
  r.results["total_faces"] = rational_json(rep.total_faces);
  r.results["totals_agree"] = rep.totals_agree;
  if (!rep.equal || !rep.totals_agree) r.exit_code = kIdentityFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Möbius functions, lattice valuations and arrangement dissection", "dissecta"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--format", o.format, "Report rendering")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();

  auto file_arg = [&](CLI::App* sub, const char* what) {
    sub->add_option("file", o.file, what)->required();
    sub->fallthrough();
  };

  auto* mobius_cmd = app.add_subcommand("mobius", "Möbius function values");
  file_arg(mobius_cmd, "poset file");
  mobius_cmd->add_option("--from", o.from, "lower element");
  mobius_cmd->add_option("--to", o.to, "upper element");

  auto* check_cmd = app.add_subcommand("check", "lattice structure flags");
  file_arg(check_cmd, "poset file");

  auto* ji_cmd = app.add_subcommand("ji", "join-irreducible elements");
  file_arg(ji_cmd, "poset file");

  auto* val_cmd = app.add_subcommand("val", "valuation module rank, torsion and membership");
  file_arg(val_cmd, "poset file");
  val_cmd->add_option("--check-zaslavsky", o.zaslavsky_file, "subset file M containing ji(L)");

  auto* dissect_cmd = app.add_subcommand("dissect", "chamber statistic of an arrangement");
  file_arg(dissect_cmd, "arrangement file");
  dissect_cmd->add_option("--chamber-chi", o.chamber_chi, "common Euler characteristic of chambers");

  auto* faces_cmd = app.add_subcommand("faces", "face counts by dimension");
  file_arg(faces_cmd, "arrangement file");
  faces_cmd->add_option("--profile", o.profile, "face profile file")->required();

  auto* fpoly_cmd = app.add_subcommand("fpoly", "f-polynomial");
  file_arg(fpoly_cmd, "arrangement file");
  fpoly_cmd->add_option("--convention", o.convention, "exponent convention")
      ->check(CLI::IsMember({"dim", "codim", "literal"}))
      ->capture_default_str();
  fpoly_cmd->add_option("--profile", o.profile, "face profile file");

  auto* mpoly_cmd = app.add_subcommand("mpoly", "Möbius polynomial M(x,y)");
  file_arg(mpoly_cmd, "arrangement file");

  auto* verify_cmd = app.add_subcommand("verify", "dissection identity on a finite set model");
  file_arg(verify_cmd, "set model file");
  verify_cmd->add_option("--weights", o.weights, "point weights file (default: cardinality)");

  auto* identity_cmd = app.add_subcommand("identity", "face-polynomial identity check");
  file_arg(identity_cmd, "arrangement file");
  identity_cmd->add_option("--kind", o.kind, "which identity")
      ->check(CLI::IsMember({"alternating", "sphere"}))
      ->required();
  identity_cmd->add_option("--profile", o.profile, "face profile file");

  auto* canon_cmd = app.add_subcommand("canon", "print the canonical form of a document");
  file_arg(canon_cmd, "any supported document");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: ParseError: " << e.what() << "\n";
    return kInvalidInput;
  }

  CLI::App* sub = app.get_subcommands().front();
  Report report;
  report.command = sub->get_name();
  try {
    if (sub == canon_cmd) {
      out << canonicalize(read_file(o.file));
      return kOk;
    }
    if (sub == mobius_cmd) cmd_mobius(o, report);
    if (sub == check_cmd) cmd_check(o, report);
    if (sub == ji_cmd) cmd_ji(o, report);
    if (sub == val_cmd) cmd_val(o, report);
    if (sub == dissect_cmd) cmd_dissect(o, report);
    if (sub == faces_cmd) cmd_faces(o, report);
    if (sub == fpoly_cmd) cmd_fpoly(o, report);
    if (sub == mpoly_cmd) cmd_mpoly(o, report);
    if (sub == verify_cmd) cmd_verify(o, report);
    if (sub == identity_cmd) cmd_identity(o, report);
  } catch (const Error& e) {
    const std::string name(errc_name(e.code()));
    if (o.format == "json") {
      Json j;
      j["command"] = report.command;
      j["error"] = {{"code", name}, {"message", e.what()}};
      out << j.dump(2) << "\n";
    }
    err << "error: " << e.what() << "\n";
    return kInvalidInput;
  }
  print_report(report, o.format, out);
  if (report.exit_code == kIdentityFailed) err << "error: IdentityFailed\n";
  return report.exit_code;
}

}  // namespace dissecta::cli
