#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include "arrlab/at_infinity.hpp"
#include "arrlab/homology.hpp"
#include "arrlab/local_system.hpp"
#include "arrlab/oracles.hpp"
#include "arrlab/os_algebra.hpp"
#include "arrlab/poset.hpp"

namespace arrlab::cli {

namespace {

using nlohmann::json;

struct Options {
  std::string arrangement_path;
  std::string local_system_path;
  std::uint64_t seed = 0;
  std::string method = "both";
  std::string format = "text";
  std::optional<std::size_t> k;
  std::optional<std::size_t> oracle_bound;
};

// Raised when a command finishes with a negative verdict that is not an
// arrlab::Error (betti mismatch, failed oracle). Maps to exit 2.
struct VerdictFailure {
  std::string report;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::Io, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

template <typename T>
std::string tuple_str(const std::vector<T>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string s;
  for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? sep : "") + parts[i];
  return s;
}

json index_set_json(const IndexSet& s) {
  json a = json::array();
  for (auto i : s) a.push_back(i + 1);
  return a;
}

// Collects text lines and a JSON document side by side; emit() writes the
// one selected by --format.
struct Report {
  std::vector<std::string> lines;
  json doc = json::object();

  void line(std::string s) { lines.push_back(std::move(s)); }

  void emit(std::ostream& out, const std::string& format) const {
    if (format == "json") {
      json d = doc;
      d["summary"] = join(lines, "\n");
      out << d.dump(2) << "\n";
    } else {
      for (const auto& l : lines) out << l << "\n";
    }
  }
};

class Session {
 public:
  explicit Session(const Options& o) : opt_(o), a_(parse_arrangement(read_file(o.arrangement_path))) {}

  const Arrangement& arrangement() const { return a_; }

  LocalSystem local_system() const {
    if (opt_.local_system_path.empty())
      throw Error(ErrorKind::Io, "this command requires --local-system PATH");
    return parse_local_system(read_file(opt_.local_system_path), a_);
  }

  std::size_t oracle_bound() const { return opt_.oracle_bound.value_or(oracle_bound_from_env()); }

 private:
  const Options& opt_;
  Arrangement a_;
};

Report cmd_info(const Session& s) {
  const Arrangement& a = s.arrangement();
  const IntersectionPoset p = build(a);
  const CharPoly chi = char_poly(p);
  Report r;
  r.line("dimension: " + std::to_string(a.dim()));
  r.line("hyperplanes: " + std::to_string(a.size()));
  std::vector<std::string> labels;
  for (const auto& h : a.hyperplanes()) labels.push_back(h.label);
  r.line("labels: " + join(labels, ","));
  r.line(std::string("essential: ") + (is_essential(a) ? "true" : "false"));
  r.line("flats: " + std::to_string(p.size()));
  r.line("rank profile: " + tuple_str(p.rank_profile()));
  r.line("chi(t) = " + chi.str());
  r.doc = {{"dim", a.dim()},
           {"hyperplanes", a.size()},
           {"essential", is_essential(a)},
           {"flats", p.size()},
           {"rank_profile", p.rank_profile()},
           {"char_poly", chi.coeffs}};
  return r;
}

Report cmd_poset(const Session& s) {
  const IntersectionPoset p = build(s.arrangement());
  Report r;
  json flats = json::array();
  for (std::size_t i = 0; i < p.size(); ++i) {
    const Flat& f = p[i];
    r.line("rank " + std::to_string(f.rank) + "  set " + to_string(f.index_set) + "  dim " + std::to_string(f.dim) +
           "  mu " + std::to_string(p.moebius(i)));
    flats.push_back(
        {{"rank", f.rank}, {"index_set", index_set_json(f.index_set)}, {"dim", f.dim}, {"mu", p.moebius(i)}});
  }
  r.doc = {{"flats", flats}};
  return r;
}

Report cmd_charpoly(const Session& s) {
  const CharPoly chi = char_poly(s.arrangement());
  Report r;
  r.line("chi(t) = " + chi.str());
  r.line("coefficients: " + tuple_str(chi.coeffs));
  r.doc = {{"char_poly", chi.coeffs}, {"text", chi.str()}};
  return r;
}

Report cmd_betti(const Session& s, const std::string& method) {
  const Arrangement& a = s.arrangement();
  Report r;
  std::optional<std::vector<std::uint64_t>> moebius, nbc;
  if (method == "moebius" || method == "both") {
    moebius = betti_and_euler(a).betti;
    r.line("moebius: " + tuple_str(*moebius));
    r.doc["moebius"] = *moebius;
  }
  if (method == "nbc" || method == "both") {
    nbc = nbc_profile(a).counts;
    r.line("nbc: " + tuple_str(*nbc));
    r.doc["nbc"] = *nbc;
  }
  if (moebius && nbc) {
    const bool match = *moebius == *nbc;
    r.line(std::string("verdict: ") + (match ? "match" : "mismatch"));
    r.doc["verdict"] = match ? "match" : "mismatch";
    if (!match) throw VerdictFailure{join(r.lines, "\n")};
  }
  return r;
}

Report cmd_section(const Session& s, std::uint64_t seed) {
  const Arrangement& a = s.arrangement();
  const Hyperplane u = random_generic_hyperplane(a, seed);
  Report r;
  r.doc = json::parse(serialize(section(a, u)));
  return r;
}

Report cmd_dense_edges(const Session& s) {
  const Arrangement& a = s.arrangement();
  const ConedArrangement c = cone(a);
  Report r;
  json edges = json::array();
  for (const auto& e : dense_edges(a)) {
    const auto labels = edge_labels(c, e);
    r.line("edge {" + join(labels, ",") + "}  rank " + std::to_string(e.rank) + "  dense " +
           (e.dense ? "true" : "false"));
    edges.push_back({{"members", labels}, {"rank", e.rank}, {"dense", e.dense}});
  }
  r.doc = {{"edges", edges}};
  return r;
}

std::string violation_line(const ConedArrangement& c, const Violation& v) {
  return "violation: edge {" + join(edge_labels(c, v.edge), ",") + "}  channel " + std::to_string(v.channel + 1) +
         "  sum " + v.sum.str();
}

Report cmd_check_nonresonant(const Session& s) {
  const Arrangement& a = s.arrangement();
  const LocalSystem l = s.local_system();
  ResonanceVerdict v = nonresonance_check(a, l);
  if (!v.nonresonant) throw ResonantError(std::move(v));
  Report r;
  r.line("model: diagonal monodromy, rank " + std::to_string(l.rank) + " (channelwise exponents)");
  r.line("nonresonant: true");
  r.doc = {{"nonresonant", true}, {"rank", l.rank}, {"violations", json::array()}};
  return r;
}

json homology_json(const HomologyReport& h) {
  return {{"space", to_string(h.space)}, {"dims", h.dims}, {"rank", h.rank}, {"euler_used", h.euler_used}};
}

Report cmd_homology(const Session& s) {
  const Arrangement& a = s.arrangement();
  const LocalSystem l = s.local_system();
  const HomologyReport full = homology_dims(a, l);
  Report r;
  r.line("H_*(M, L): dims " + tuple_str(full.dims) + "  (rank " + std::to_string(full.rank) + ", euler " +
         std::to_string(full.euler_used) + ")");
  r.doc["full_complement"] = homology_json(full);
  if (a.dim() >= 2) {
    const HomologyReport sec = section_homology_dims(a, l);
    r.line("H_*(M cap U, L'): dims " + tuple_str(sec.dims) + "  (rank " + std::to_string(sec.rank) + ", euler " +
           std::to_string(sec.euler_used) + ")");
    r.doc["generic_section"] = homology_json(sec);
  }
  return r;
}

Report cmd_certify(const Session& s) {
  const Arrangement& a = s.arrangement();
  const LocalSystem l = s.local_system();
  const HurewiczCertificate c = hurewicz_certificate(a, l);
  Report r;
  r.line("top cells b_" + std::to_string(a.dim()) + ": " + std::to_string(c.top_cells));
  r.line("generators: " + std::to_string(c.generators));
  r.line("kernel dim H_" + std::to_string(a.dim()) + "(M, L): " + std::to_string(c.kernel_dim));
  r.line("image dim H_" + std::to_string(a.dim() - 1) + "(M cap U, L'): " + std::to_string(c.image_dim));
  r.line("generators " + std::to_string(c.generators) + " = " + std::to_string(c.kernel_dim) + " + " +
         std::to_string(c.image_dim));
  r.line(std::string("surjective: ") + (c.surjective ? "true" : "false"));
  for (const auto& w : c.warnings) r.line("warning: " + w);
  r.doc = {{"top_cells", c.top_cells},   {"generators", c.generators}, {"kernel_dim", c.kernel_dim},
           {"image_dim", c.image_dim},   {"surjective", c.surjective}, {"warnings", c.warnings},
           {"rank", l.rank}};
  return r;
}

Report cmd_euler_positivity(const Session& s) {
  const EulerPositivity e = euler_positivity(s.arrangement());
  Report r;
  r.line("(-1)^(l-1) chi(M cap U): " + std::to_string(e.value));
  r.line(std::string("positive: ") + (e.positive ? "true" : "false"));
  r.doc = {{"value", e.value}, {"positive", e.positive}};
  return r;
}

Report cmd_homotopy(const Session& s, std::optional<std::size_t> k) {
  const Arrangement& a = s.arrangement();
  std::vector<std::size_t> ks;
  if (k) {
    ks.push_back(*k);
  } else {
    for (std::size_t j = 2; j + 1 <= a.dim(); ++j) ks.push_back(j);
    if (ks.empty()) throw Error(ErrorKind::KOutOfRange, "no k with 2 <= k <= dim - 1");
  }
  Report r;
  json rows = json::array();
  for (auto j : ks) {
    const HomotopyWitness w = homotopy_nonvanishing(a, j);
    r.line("k " + std::to_string(j) + "  euler " + std::to_string(w.euler_k) + "  nonvanishing " +
           (w.nonvanishing ? "true" : "false"));
    rows.push_back({{"k", j}, {"euler_k", w.euler_k}, {"nonvanishing", w.nonvanishing}});
  }
  r.doc = {{"sections", rows}};
  return r;
}

Report cmd_oracle_check(const Session& s, std::uint64_t seed) {
  const Arrangement& a = s.arrangement();
  const IntersectionPoset p = build(a);
  const CharPoly chi = char_poly(p);
  Report r;
  bool all_pass = true;
  auto record = [&](const std::string& name, const std::string& status, const std::string& detail) {
    r.line(name + ": " + status + (detail.empty() ? "" : "  " + detail));
    r.doc["checks"][name] = {{"status", status}, {"detail", detail}};
    if (status == "fail") all_pass = false;
  };

  if (a.size() <= s.oracle_bound()) {
    const CharPoly w = char_poly_whitney(a, s.oracle_bound());
    record("whitney", w == chi ? "pass" : "fail", "chi(t) = " + chi.str());
  } else {
    record("whitney", "skipped", "size above oracle bound " + std::to_string(s.oracle_bound()));
  }

  if (a.size() <= kDefaultCircuitBound) {
    const auto nbc = nbc_profile(a).counts;
    const auto betti = betti_and_euler(chi).betti;
    record("nbc", nbc == betti ? "pass" : "fail", tuple_str(betti));
  } else {
    record("nbc", "skipped", "size above circuit bound");
  }

  bool dr_ok = true;
  for (std::size_t h = 0; h < a.size(); ++h) {
    const auto dr = delete_restrict(a, h);
    if (char_poly(dr.deleted) - char_poly(dr.restricted) != chi) dr_ok = false;
  }
  record("deletion_restriction", dr_ok ? "pass" : "fail", std::to_string(a.size()) + " hyperplanes");

  if (a.dim() >= 2) {
    const Hyperplane u = random_generic_hyperplane(a, seed);
    const bool iso = isomorphic_by_index(truncate(p), build(section(a, u)));
    record("truncation", iso ? "pass" : "fail", "seed " + std::to_string(seed));
  } else {
    record("truncation", "skipped", "dimension below 2");
  }

  if (is_essential(a)) {
    const ConedArrangement c = cone(a);
    std::size_t checked = 0;
    bool ok = true;
    for (const auto& e : dense_edges(a)) {
      if (e.flat_indices.size() > kMaxPartitionOracleSize) continue;
      std::vector<RatVector> sub;
      for (auto k : e.flat_indices) sub.push_back(c.homogenized_normals[k]);
      ok = ok && matroid_components(sub) == matroid_components_bruteforce(sub);
      ++checked;
    }
    record("matroid_partition", ok ? "pass" : "fail", std::to_string(checked) + " edges");
  } else {
    record("matroid_partition", "skipped", "arrangement not essential");
  }

  r.line(std::string("verdict: ") + (all_pass ? "pass" : "FAIL"));
  r.doc["verdict"] = all_pass ? "pass" : "fail";
  if (!all_pass) throw VerdictFailure{join(r.lines, "\n")};
  return r;
}

void report_error(std::ostream& err, const std::string& format, const Error& e,
                  const std::optional<Arrangement>& a) {
  json doc = {{"error", to_string(e.kind())}, {"message", e.what()}};
  std::vector<std::string> extra;
  if (const auto* ng = dynamic_cast<const NotGenericError*>(&e)) {
    doc["flat"] = index_set_json(ng->flat());
  }
  if (const auto* res = dynamic_cast<const ResonantError*>(&e); res && a) {
    const ConedArrangement c = cone(*a);
    json vs = json::array();
    for (const auto& v : res->verdict().violations) {
      extra.push_back(violation_line(c, v));
      vs.push_back({{"edge", edge_labels(c, v.edge)}, {"channel", v.channel + 1}, {"sum", v.sum.str()}});
    }
    doc["violations"] = vs;
  }
  if (format == "json") {
    err << doc.dump(2) << "\n";
  } else {
    err << "error: " << e.what() << "\n";
    for (const auto& l : extra) err << l << "\n";
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact invariants of complex hyperplane arrangement complements", "arrangement-lab"};
  app.require_subcommand(1);
  Options opt;

  struct Command {
    const char* name;
    const char* help;
    bool needs_local_system;
  };
  const Command commands[] = {
      {"info", "Dimension, essentiality, rank profile and characteristic polynomial", false},
      {"poset", "Intersection poset: one line per flat (rank, index set, dim, mu)", false},
      {"charpoly", "Characteristic polynomial", false},
      {"betti", "Betti numbers of the complement by Moebius and/or nbc counting", false},
      {"section", "Arrangement file of a verified generic hyperplane section", false},
      {"dense-edges", "Edges of the projective closure inside H_inf with density flags", false},
      {"check-nonresonant", "Nonresonance of a local system at the dense edges in H_inf", true},
      {"homology", "Twisted homology dimensions of the complement and a generic section", true},
      {"certify-hurewicz", "Dimension certificate for twisted Hurewicz surjectivity", true},
      {"euler-positivity", "Sign-normalized Euler characteristic of a generic section", false},
      {"homotopy", "Iterated-section Euler characteristics witnessing nontrivial homotopy", false},
      {"oracle-check", "Run every brute-force oracle against the production algorithms", false},
  };

  std::map<std::string, CLI::App*> subs;
  for (const auto& c : commands) {
    CLI::App* sub = app.add_subcommand(c.name, c.help);
    sub->add_option("arrangement", opt.arrangement_path, "Arrangement JSON file")->required();
    auto* ls = sub->add_option("--local-system", opt.local_system_path, "Local-system JSON file");
    if (c.needs_local_system) ls->required();
    sub->add_option("--seed", opt.seed, "Seed for generic hyperplane search")->capture_default_str();
    sub->add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--oracle-bound", opt.oracle_bound, "Size gate for the Whitney oracle");
    if (std::string(c.name) == "betti")
      sub->add_option("--method", opt.method, "Betti route")->check(CLI::IsMember({"moebius", "nbc", "both"}));
    if (std::string(c.name) == "homotopy") sub->add_option("--k", opt.k, "Section dimension");
    subs[c.name] = sub;
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  std::string command;
  for (const auto& [name, sub] : subs)
    if (sub->parsed()) command = name;

  std::optional<Arrangement> arrangement;
  try {
    Session s(opt);
    arrangement = s.arrangement();
    Report r;
    if (command == "info") r = cmd_info(s);
    else if (command == "poset") r = cmd_poset(s);
    else if (command == "charpoly") r = cmd_charpoly(s);
    else if (command == "betti") r = cmd_betti(s, opt.method);
    else if (command == "section") r = cmd_section(s, opt.seed);
    else if (command == "dense-edges") r = cmd_dense_edges(s);
    else if (command == "check-nonresonant") r = cmd_check_nonresonant(s);
    else if (command == "homology") r = cmd_homology(s);
    else if (command == "certify-hurewicz") r = cmd_certify(s);
    else if (command == "euler-positivity") r = cmd_euler_positivity(s);
    else if (command == "homotopy") r = cmd_homotopy(s, opt.k);
    else if (command == "oracle-check") r = cmd_oracle_check(s, opt.seed);

    if (command == "section")
      out << r.doc.dump(2) << "\n";
    else
      r.emit(out, opt.format);
    return 0;
  } catch (const Error& e) {
    report_error(err, opt.format, e, arrangement);
    return is_input_error(e.kind()) ? 1 : 2;
  } catch (const VerdictFailure& f) {
    err << f.report << "\n";
    return 2;
  }
}

}  // namespace arrlab::cli
