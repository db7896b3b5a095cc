// curvecert: batch verification front end.
//
// Exit codes: 0 every check passed, 1 some check failed, 2 bad input
// (unparsable file, unknown id, window too small, ...).

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <iostream>
#include <optional>
#include <random>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "curvecert/batch/batch.hpp"
#include "curvecert/catalog/catalog.hpp"
#include "curvecert/certify/certificate.hpp"
#include "curvecert/io/json_io.hpp"
#include "curvecert/modules/module.hpp"

namespace {

using namespace curvecert;
using nlohmann::json;

struct RunConfig {
  int precision = 40;
  int guard = 8;
  std::string n_spec = "1..6";
  std::vector<int> n_values;
  std::uint64_t seed = 0;
  std::string catalog_path;
  std::string format = "text";

  [[nodiscard]] algebra::Window window() const { return {precision, guard}; }
  [[nodiscard]] bool records() const { return format == "records"; }
};

std::vector<int> parse_n_list(const std::string& spec) {
  std::vector<int> out;
  std::smatch m;
  static const std::regex range(R"(\s*(\d+)\s*\.\.\s*(\d+)\s*)");
  if (std::regex_match(spec, m, range)) {
    for (int n = std::stoi(m[1]); n <= std::stoi(m[2]); ++n) out.push_back(n);
    return out;
  }
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty() || item.find_first_not_of(" 0123456789") != std::string::npos) {
      throw ParseError("bad --n value '" + spec + "'");
    }
    out.push_back(std::stoi(item));
  }
  if (out.empty()) throw ParseError("empty --n list");
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

/// n embedded in an id such as "AnL-odd(n=5)#2".
std::optional<int> n_of_id(const std::string& id) {
  std::smatch m;
  static const std::regex re(R"(\(n=(\d+)\))");
  if (std::regex_search(id, m, re)) return std::stoi(m[1]);
  return std::nullopt;
}

std::vector<int> with_n_of(std::vector<int> ns, const std::string& id) {
  if (auto n = n_of_id(id); n && std::find(ns.begin(), ns.end(), *n) == ns.end()) ns.push_back(*n);
  std::sort(ns.begin(), ns.end());
  return ns;
}

void emit(const RunConfig& cfg, const json& record, const std::string& text) {
  if (cfg.records()) {
    std::cout << record.dump() << "\n";
  } else {
    std::cout << text << "\n";
  }
}

catalog::Catalog make_catalog(const RunConfig& cfg, const std::vector<int>& ns) {
  catalog::Catalog base = catalog::Catalog::reference(ns, cfg.window());
  if (cfg.catalog_path.empty()) return base;
  auto file = io::parse_catalog(io::read_json_file(cfg.catalog_path));
  std::vector<catalog::CatalogEntry> entries = base.entries();
  for (auto& r : file.rings) {
    auto it = std::find_if(entries.begin(), entries.end(), [&](const auto& e) { return e.id == r.id; });
    if (it != entries.end()) {
      *it = r;
    } else {
      entries.push_back(r);
    }
  }
  return catalog::Catalog(std::move(entries), cfg.window());
}

std::vector<catalog::CatalogEntry> module_rows(const RunConfig& cfg, const std::vector<int>& ns) {
  if (!cfg.catalog_path.empty()) {
    auto file = io::parse_catalog(io::read_json_file(cfg.catalog_path));
    if (!file.modules.empty()) return file.modules;
  }
  return catalog::catalog_modules(ns);
}

algebra::RingPtr load_ring(const RunConfig& cfg, const std::string& path) {
  const auto e = io::parse_ring(io::read_json_file(path));
  return std::make_shared<const algebra::SubringRep>(
      algebra::SubringRep::span(e.branches, e.generators, cfg.window(), e.id));
}

/// The window must clear every catalog conductor plus every coefficient
/// index a built-in functional reads.
void validate(const RunConfig& cfg) {
  if (cfg.guard < 0 || cfg.precision <= cfg.guard) throw DomainError("need precision > guard >= 0");
  if (cfg.format != "text" && cfg.format != "records") throw ParseError("--format must be text or records");
  int max_c = 0;
  for (const auto& e : catalog::catalog_rings(cfg.n_values)) {
    const auto r = algebra::SubringRep::span(e.branches, e.generators, cfg.window(), e.id);
    for (int c : r.conductor()) max_c = std::max(max_c, c);
  }
  int reach = 0;
  for (const auto& c : certify::builtin_certificates(cfg.n_values)) {
    for (const auto& f : c.functional) {
      for (const auto& t : f) reach = std::max(reach, t.exp + 1);
    }
  }
  if (cfg.window().top() <= max_c + reach) {
    throw NoStabilization("window top " + std::to_string(cfg.window().top()) + " must exceed max conductor " +
                          std::to_string(max_c) + " + max functional index " + std::to_string(reach));
  }
}

// ---------------------------------------------------------------------------

int cmd_invariants(const RunConfig& cfg, const std::string& path) {
  const auto r = load_ring(cfg, path);
  const int delta = algebra::delta_invariant(*r);
  const int embdim = algebra::embedding_dimension(*r);
  const int cl = algebra::conductor_length(*r);
  const int e = modules::minimal_generators(modules::dualizing_module(r));
  const bool gorenstein = e == 1;
  json rec = {{"check", "invariants"}, {"ring", r->name()},       {"branches", r->branches()},
              {"delta", delta},        {"embdim", embdim},        {"conductor", r->conductor()},
              {"conductor_length", cl}, {"e", e},                 {"gorenstein", gorenstein},
              {"gorenstein_cross_check", (cl == 2 * delta) == gorenstein}};
  std::ostringstream t;
  t << "ring: " << r->name() << "\nbranches: " << r->branches() << "\ndelta: " << delta
    << "\nembedding dimension: " << embdim << "\nconductor:";
  for (int c : r->conductor()) t << " " << c;
  t << "\nconductor length: " << cl << "\ne (generators of omega): " << e
    << "\nGorenstein: " << (gorenstein ? "yes" : "no");
  emit(cfg, rec, t.str());
  return 0;
}

int cmd_classify(const RunConfig& cfg, const std::string& path) {
  const auto r = load_ring(cfg, path);
  const auto cat = make_catalog(cfg, cfg.n_values);
  const auto ids = cat.classify(*r);
  const std::string id = catalog::join_ids(ids);
  std::ostringstream t;
  t << r->name() << ": " << id;
  if (std::find(ids.begin(), ids.end(), "Unknown") == ids.end()) {
    for (const auto& f : catalog::fingerprint(*r)) t << "\n  " << catalog::to_string(f);
  }
  emit(cfg, {{"check", "classify"}, {"ring", r->name()}, {"id", id}, {"blocks", ids}}, t.str());
  return 0;
}

int cmd_components(const RunConfig& cfg, const std::string& arg) {
  std::string id = arg;
  std::vector<int> ns = with_n_of(cfg.n_values, arg);
  if (std::filesystem::is_regular_file(arg)) {
    const auto r = load_ring(cfg, arg);
    const auto ids = make_catalog(cfg, ns).classify(*r);
    id = catalog::join_ids(ids);
    if (id == "Unknown") throw NotApplicable(r->name() + " is not in the catalog");
  }
  const auto cat = make_catalog(cfg, ns);
  const auto rep = catalog::component_report(id, cat);
  std::ostringstream t;
  t << rep.id << ": " << rep.components << (rep.components == 1 ? " component: smoothable" : " components: smoothable");
  if (!rep.smoothable_only) t << "; " << rep.non_smoothable_description;
  emit(cfg,
       {{"check", "components"},
        {"id", rep.id},
        {"components", rep.components},
        {"smoothable_only", rep.smoothable_only},
        {"non_smoothable", rep.non_smoothable_description}},
       t.str());
  return 0;
}

int cmd_dualizing(const RunConfig& cfg, const std::string& path) {
  const auto r = load_ring(cfg, path);
  const auto omega = modules::dualizing_module(r);
  const auto gens = modules::minimal_generating_set(omega);
  std::mt19937_64 rng(cfg.seed);
  const auto iso = modules::is_isomorphic(omega, modules::ring_as_module(r, *r), rng);
  json gj = json::array();
  std::ostringstream t;
  t << "omega of " << r->name() << " (" << gens.size() << " generators):";
  for (const auto& g : gens) {
    const auto x = algebra::to_element(g, r->branches());
    gj.push_back(arith::to_string(x));
    t << "\n  " << arith::to_string(x);
  }
  t << "\nomega ≅ R: " << modules::to_string(iso.verdict);
  if (iso.witness) t << " via " << arith::to_string(*iso.witness);
  emit(cfg,
       {{"check", "dualizing"},
        {"ring", r->name()},
        {"generators", gj},
        {"e", gens.size()},
        {"isomorphic_to_ring", modules::to_string(iso.verdict)}},
       t.str());
  return 0;
}

json row_record(const catalog::Table2Row& row) {
  return {{"check", "table2"},
          {"ring", row.ring_id},
          {"module", row.presentation},
          {"subdivision", row.subdivision},
          {"expected_end", catalog::join_ids(row.expected_end)},
          {"computed_end", catalog::join_ids(row.computed_end)},
          {"end_delta", row.end_delta},
          {"ring_flag", row.ring_flag},
          {"dualizing_flag", row.dualizing_flag},
          {"detail", row.detail},
          {"result", row.pass() ? "PASS" : "FAIL"}};
}

std::string row_text(const catalog::Table2Row& row) {
  std::ostringstream t;
  t << (row.pass() ? "PASS " : "FAIL ") << row.ring_id << " | " << row.presentation << " | End "
    << catalog::join_ids(row.computed_end) << " (expected " << catalog::join_ids(row.expected_end) << ") | "
    << (row.ring_flag ? "ring" : "dualizing") << " | " << row.detail;
  return t.str();
}

int report_rows(const RunConfig& cfg, const std::vector<catalog::Table2Row>& rows) {
  int passed = 0;
  for (const auto& row : rows) {
    passed += row.pass() ? 1 : 0;
    emit(cfg, row_record(row), row_text(row));
  }
  const bool all = passed == static_cast<int>(rows.size());
  emit(cfg, {{"check", "table2-summary"}, {"passed", passed}, {"total", rows.size()}},
       std::to_string(passed) + "/" + std::to_string(rows.size()) + " rows PASS");
  return all ? 0 : 1;
}

int cmd_modules(const RunConfig& cfg, const std::string& id) {
  const auto ns = with_n_of(cfg.n_values, id);
  std::vector<catalog::CatalogEntry> rows;
  for (auto& m : module_rows(cfg, ns)) {
    if (m.ring_id == id) rows.push_back(std::move(m));
  }
  if (rows.empty()) throw NotApplicable("no Table 2 block for " + id);
  const auto cat = make_catalog(cfg, ns);
  return report_rows(cfg, batch::table2(rows, cat, cfg.seed));
}

int cmd_table2(const RunConfig& cfg) {
  const auto cat = make_catalog(cfg, cfg.n_values);
  return report_rows(cfg, batch::table2(module_rows(cfg, cfg.n_values), cat, cfg.seed));
}

json report_record(const certify::CertificateReport& rep) {
  json stages = json::array();
  for (const auto& s : rep.stages) {
    stages.push_back({{"stage", s.stage}, {"name", s.name}, {"passed", s.passed}, {"detail", s.detail}});
  }
  return {{"check", "certificate"}, {"id", rep.id}, {"stages", stages}, {"result", rep.pass() ? "PASS" : "FAIL"}};
}

std::string report_text(const certify::CertificateReport& rep) {
  std::ostringstream t;
  t << (rep.pass() ? "PASS " : "FAIL ") << rep.id << "  stages";
  for (const auto& s : rep.stages) t << " " << s.stage << (s.passed ? "+" : "-");
  for (const auto& s : rep.stages) {
    if (!s.passed) t << "\n    stage " << s.stage << " " << s.name << ": " << s.detail;
  }
  return t.str();
}

int cmd_verify_certificate(const RunConfig& cfg, const std::string& path) {
  const auto cert = io::parse_certificate(io::read_json_file(path));
  const auto rep = certify::verify_certificate(cert, cfg.window(), cfg.seed);
  if (cfg.records()) {
    emit(cfg, report_record(rep), "");
  } else {
    std::cout << report_text(rep) << "\n";
    for (const auto& s : rep.stages) {
      if (s.passed) std::cout << "    stage " << s.stage << " " << s.name << ": " << s.detail << "\n";
    }
  }
  return rep.pass() ? 0 : 1;
}

int cmd_verify_all(const RunConfig& cfg) {
  const auto certs = certify::builtin_certificates(cfg.n_values);
  const auto reps = batch::verify_all(certs, cfg.window(), cfg.seed);
  int passed = 0;
  for (const auto& rep : reps) {
    passed += rep.pass() ? 1 : 0;
    emit(cfg, report_record(rep), report_text(rep));
  }
  emit(cfg, {{"check", "certificate-summary"}, {"passed", passed}, {"total", reps.size()}},
       std::to_string(passed) + "/" + std::to_string(reps.size()) + " PASS");
  return passed == static_cast<int>(reps.size()) ? 0 : 1;
}

int cmd_show_certificate(const RunConfig& cfg, const std::string& id) {
  for (const auto& c : certify::builtin_certificates(with_n_of(cfg.n_values, id))) {
    if (c.id == id) {
      std::cout << io::certificate_json(c).dump(cfg.records() ? -1 : 2) << "\n";
      return 0;
    }
  }
  throw NotApplicable("no built-in certificate " + id);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Verification engine for rank-1 torsion-free modules over curve singularities"};
  app.require_subcommand(1);
  app.fallthrough();
  RunConfig cfg;
  app.add_option("--precision", cfg.precision, "series precision N")->capture_default_str();
  app.add_option("--guard", cfg.guard, "guard G; comparisons happen below N - G")->capture_default_str();
  app.add_option("--n", cfg.n_spec, "n values, e.g. 1..6 or 2,4,6")->capture_default_str();
  app.add_option("--seed", cfg.seed, "seed for the isomorphism search")->capture_default_str();
  app.add_option("--catalog", cfg.catalog_path, "catalog file overriding built-in entries");
  app.add_option("--format", cfg.format, "text or records")->capture_default_str();

  std::string arg;
  auto* inv = app.add_subcommand("invariants", "delta, embedding dimension, conductor, e, Gorenstein");
  inv->add_option("ring-file", arg)->required();
  auto* cls = app.add_subcommand("classify", "match a ring against the catalog fingerprints");
  cls->add_option("ring-file", arg)->required();
  auto* comp = app.add_subcommand("components", "component count of the compactified Jacobian");
  comp->add_option("id-or-ring-file", arg)->required();
  auto* dual = app.add_subcommand("dualizing", "dualizing module of a ring");
  dual->add_option("ring-file", arg)->required();
  auto* mods = app.add_subcommand("modules", "Table 2 block of one ring with computed columns");
  mods->add_option("id", arg)->required();
  auto* t2 = app.add_subcommand("table2", "recompute every Table 2 row");
  auto* vc = app.add_subcommand("verify-certificate", "check one certificate file");
  vc->add_option("file", arg)->required();
  auto* va = app.add_subcommand("verify-all", "check the built-in certificates");
  auto* sc = app.add_subcommand("show-certificate", "print a built-in certificate as JSON");
  sc->add_option("id", arg)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    cfg.n_values = parse_n_list(cfg.n_spec);
    validate(cfg);
    if (*inv) return cmd_invariants(cfg, arg);
    if (*cls) return cmd_classify(cfg, arg);
    if (*comp) return cmd_components(cfg, arg);
    if (*dual) return cmd_dualizing(cfg, arg);
    if (*mods) return cmd_modules(cfg, arg);
    if (*t2) return cmd_table2(cfg);
    if (*vc) return cmd_verify_certificate(cfg, arg);
    if (*va) return cmd_verify_all(cfg);
    if (*sc) return cmd_show_certificate(cfg, arg);
  } catch (const curvecert::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
