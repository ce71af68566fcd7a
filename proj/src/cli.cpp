#include "cheb/cli.hpp"

#include <CLI11.hpp>
#include <cmath>
#include <fstream>
#include <json.hpp>
#include <limits>
#include <map>
#include <memory>
#include <ostream>
#include <sstream>

#include "cheb/artin_coeffs.hpp"
#include "cheb/chebotarev.hpp"
#include "cheb/errors.hpp"
#include "cheb/families.hpp"
#include "cheb/large_sieve.hpp"
#include "cheb/selftest.hpp"
#include "cheb/weights.hpp"
#include "cheb/zfr.hpp"

#ifndef CHEB_DEFAULT_CATALOG
#define CHEB_DEFAULT_CATALOG "data/catalog.txt"
#endif

namespace cheb {

namespace {

using json = nlohmann::ordered_json;
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

struct RunConfig {
  std::string subcommand;
  std::string catalog_path = CHEB_DEFAULT_CATALOG;
  std::string format;  // empty: the subcommand's default
  std::string output = "-";
  std::uint64_t seed = 1;
  unsigned threads = 1;
  double c1 = kDefaultC1;
  double c_eps = kDefaultCEps;
  bool selftest = false;

  std::string field, field2, selector = "1", mode = "classical", grid = "f", subgroup, group, eps_preset;
  std::vector<std::string> fields;
  std::uint64_t n = 100;
  double x = 1e4, eps = 0.1, y = 2, u = 1000, T = 1, Q = kNaN, sigma = kNaN, eta = kNaN;
  double t_min = kNaN, t_max = kNaN, z_re = 0, x_min = 1e3, x_max = 1e12, threshold = INFINITY;
  double weights_eps = kNaN;
  std::string disc = "1";
  int points = 101, m = 1, degree = 1;
  std::int64_t quadratic_bound = 0;
  bool list = false, base_change = false;
};

const std::map<std::string, std::string> kSelftestModule{
    {"coeffs", "artin_coeffs"}, {"splitting", "groups_fields"}, {"large-sieve", "large_sieve"},
    {"weights", "weights"},     {"eta", "zfr"},                 {"chebotarev", "chebotarev"},
    {"family", "families"}};

json header(const std::string& command) {
  json j;
  j["schema"] = 1;
  j["command"] = command;
  return j;
}

json exact(const BigInt& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
    return v.convert_to<std::int64_t>();
  return v.str();
}

/// Finite doubles as numbers, the rest as strings, since JSON has no infinity.
json num(double v) {
  if (std::isfinite(v)) return v;
  if (std::isnan(v)) return "nan";
  return v > 0 ? "inf" : "-inf";
}

std::string csv_cell(const json& v) {
  if (v.is_string()) {
    const auto s = v.get<std::string>();
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
    return q + "\"";
  }
  if (v.is_null()) return "";
  return v.dump();
}

/// Tables are stored as {"columns": [...], "rows": [[...]]}; CSV prints the
/// table, or key/value pairs of the scalar fields when there is none.
void write_csv(const json& report, std::ostream& out) {
  if (report.contains("rows")) {
    const auto& cols = report["columns"];
    for (std::size_t i = 0; i < cols.size(); ++i) out << (i ? "," : "") << csv_cell(cols[i]);
    out << '\n';
    for (const auto& row : report["rows"]) {
      for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << csv_cell(row[i]);
      out << '\n';
    }
    return;
  }
  out << "key,value\n";
  std::function<void(const std::string&, const json&)> walk = [&](const std::string& prefix, const json& v) {
    if (v.is_object()) {
      for (const auto& [k, sub] : v.items()) walk(prefix.empty() ? k : prefix + "." + k, sub);
    } else if (v.is_array()) {
      for (std::size_t i = 0; i < v.size(); ++i) walk(prefix + "." + std::to_string(i), v[i]);
    } else {
      out << csv_cell(prefix) << ',' << csv_cell(v) << '\n';
    }
  };
  walk("", report);
}

void emit(const json& report, const std::string& format, std::ostream& out) {
  if (format == "csv")
    write_csv(report, out);
  else
    out << report.dump(2) << '\n';
}

std::unique_ptr<PrimeSieve> sieve_for(double limit) {
  require(limit <= static_cast<double>(kMaxSieveLimit), ErrorCode::LimitTooLarge,
          "x exceeds the sieve limit 1e8");
  return std::make_unique<PrimeSieve>(static_cast<std::uint64_t>(std::max(limit, 2.0)) + 1);
}

json run_coeffs(const RunConfig& cfg, const Catalog& catalog) {
  require(!cfg.field.empty(), ErrorCode::InvalidArgument, "--field is required");
  require(cfg.n >= 1 && cfg.n <= 1'000'000, ErrorCode::ParameterOutOfRange, "--n must be in [1, 1e6]");
  const auto& K = catalog.find(cfg.field);
  const FieldDescriptor* K2 = cfg.field2.empty() ? nullptr : &catalog.find(cfg.field2);
  json j = header("coeffs");
  j["field"] = K.name();
  if (K2) j["field2"] = K2->name();
  j["columns"] = {"n", K2 ? "a_KxK(n)" : "a_K(n)"};
  json rows = json::array();
  for (std::uint64_t n = 1; n <= cfg.n; ++n) {
    const BigInt bn(n);
    if (gcd(abs(K.disc_field()), bn) != 1) continue;
    if (K2 && gcd(abs(K2->disc_field()), bn) != 1) continue;
    rows.push_back({n, exact(K2 ? coeff_a_KxK(K, *K2, n) : coeff_a_K(K, n))});
  }
  j["rows"] = std::move(rows);
  return j;
}

json run_splitting(const RunConfig& cfg, const Catalog& catalog) {
  require(!cfg.field.empty(), ErrorCode::InvalidArgument, "--field is required");
  require(cfg.x >= 2, ErrorCode::ParameterOutOfRange, "--x must be at least 2");
  const auto& K = catalog.find(cfg.field);
  const auto sieve = sieve_for(cfg.x);
  const SplittingTable table(K, *sieve, cfg.x, cfg.threads);
  json j = header("splitting");
  j["field"] = K.name();
  j["group"] = K.group().name();
  j["x"] = cfg.x;
  j["pi"] = table.size();
  std::vector<std::uint64_t> counts(K.type_blocks().size(), 0);
  std::uint64_t ramified = 0;
  for (std::size_t i = 0; i < table.size(); ++i) {
    if (table.ramified(i))
      ++ramified;
    else
      ++counts[table.block(i)];
  }
  j["ramified"] = ramified;
  json blocks = json::array();
  for (std::size_t b = 0; b < counts.size(); ++b) {
    const auto& blk = K.type_blocks()[b];
    std::size_t size = 0;
    for (auto c : blk.classes) size += K.group().classes()[c].size;
    blocks.push_back({{"type", format_cycle_type(blk.type)},
                      {"order", blk.order},
                      {"classes", blk.classes},
                      {"share", static_cast<double>(size) / K.group().order()},
                      {"count", counts[b]}});
  }
  j["blocks"] = std::move(blocks);
  if (cfg.list || cfg.format == "csv") {
    j["columns"] = {"p", "ramified", "type", "order", "class"};
    json rows = json::array();
    for (std::size_t i = 0; i < table.size(); ++i) {
      const auto fd = frobenius_data(K, table.prime(i));
      rows.push_back({fd.p, fd.ramified, format_cycle_type(fd.factorization_type),
                      fd.ramified ? json(nullptr) : json(fd.frobenius_order),
                      fd.class_index ? json(*fd.class_index) : json(nullptr)});
    }
    j["rows"] = std::move(rows);
  }
  return j;
}

std::vector<const FieldDescriptor*> select_fields(const RunConfig& cfg, const Catalog& catalog,
                                                  std::vector<FieldDescriptor>& owned) {
  std::vector<const FieldDescriptor*> out;
  if (cfg.quadratic_bound > 0) {
    for (auto D : fundamental_discriminants_up_to(cfg.quadratic_bound)) owned.push_back(make_quadratic_field(D));
    for (const auto& f : owned) out.push_back(&f);
  }
  if (!cfg.field.empty()) out.push_back(&catalog.find(cfg.field));
  for (const auto& name : cfg.fields) out.push_back(&catalog.find(name));
  if (!cfg.group.empty())
    for (const auto& f : catalog.fields)
      if (f.group().name() == cfg.group) out.push_back(&f);
  require(!out.empty(), ErrorCode::InvalidArgument, "no fields selected (use --field, --fields, --group or --quadratic)");
  return out;
}

BigInt family_Q(const RunConfig& cfg, const std::vector<const FieldDescriptor*>& fields) {
  if (!std::isnan(cfg.Q)) {
    require(cfg.Q >= 1 && cfg.Q < 1e18, ErrorCode::ParameterOutOfRange, "--Q must be in [1, 1e18)");
    return BigInt(static_cast<std::int64_t>(std::floor(cfg.Q)));
  }
  BigInt q = 1;
  for (const auto* f : fields) q = std::max<BigInt>(q, abs(f->disc_field()));
  return q;
}

json shape_json(const BoundShape& s) {
  json j;
  j["name"] = s.name;
  j["formula"] = s.formula;
  j["log_rhs"] = num(s.log_rhs);
  j["literal_range"] = s.literal_range;
  return j;
}

json run_large_sieve(const RunConfig& cfg, const Catalog& catalog) {
  std::vector<FieldDescriptor> owned;
  const auto fields = select_fields(cfg, catalog, owned);
  const BigInt Q = family_Q(cfg, fields);
  const int m = fields.front()->m();
  for (const auto* f : fields)
    require(f->m() == m, ErrorCode::InvalidArgument, "all fields of a family must have the same degree");
  std::size_t mult = fields.size();
  std::string mult_source = "family size (upper bound)";
  if (default_intersection_rule(fields.front()->group())) {
    mult = intersection_multiplicity(make_family(fields, Q));
    mult_source = "intersection rule";
  }
  require(cfg.y >= 1 && cfg.u >= cfg.y, ErrorCode::ParameterOutOfRange, "need 1 <= y <= u");
  const auto sieve = sieve_for(cfg.u);
  const double lhs = mvt_primes_lhs(fields, cfg.y, cfg.u, cfg.T, *sieve);
  const double Qd = Q.convert_to<double>();
  const auto shape = mean_value_shape(std::max(cfg.y, 1.0 + 1e-9), cfg.u, Qd, std::max(cfg.T, 1.0), std::max(m, 1),
                                      static_cast<double>(mult), lhs);
  json j = header("large-sieve");
  j["params"] = {{"fields", json::array()}, {"y", cfg.y},     {"u", cfg.u},
                 {"T", cfg.T},              {"Q", exact(Q)}, {"m", m},
                 {"m_F", mult},             {"m_F_source", mult_source}};
  for (const auto* f : fields) j["params"]["fields"].push_back(f->name());
  j["lhs"] = lhs;
  j["rhs_shape"] = shape_json(shape);
  j["ratio"] = lhs > 0 ? num(std::exp(shape.log_ratio)) : json(0.0);
  if (!std::isnan(cfg.sigma))
    j["zero_density_shape"] = shape_json(zero_density_shape(cfg.sigma, Qd, std::max(cfg.T, 1.0), std::max(m, 1),
                                                            static_cast<double>(mult)));
  return j;
}

double resolve_eps(const RunConfig& cfg, double x) {
  if (cfg.eps_preset.empty()) return cfg.eps;
  require(!std::isnan(cfg.eta), ErrorCode::InvalidArgument, "--eps-preset needs --eta");
  if (cfg.eps_preset == "pi") return eps_preset_pi(x, cfg.eta);
  return eps_preset_li(x, cfg.eta, cfg.eta);
}

json run_weights(const RunConfig& cfg) {
  const WeightParams params(cfg.x, resolve_eps(cfg, cfg.x));
  require(cfg.points >= 2 && cfg.points <= 1'000'000, ErrorCode::ParameterOutOfRange,
          "--points must be in [2, 1e6]");
  json j = header("weights");
  j["x"] = params.x();
  j["eps"] = params.eps();
  j["F0"] = laplace_F(params, 0).real();
  json rows = json::array();
  if (cfg.grid == "f") {
    const double lo = std::isnan(cfg.t_min) ? params.support_lo() - 0.05 : cfg.t_min;
    const double hi = std::isnan(cfg.t_max) ? params.support_hi() + 0.05 : cfg.t_max;
    require(hi > lo, ErrorCode::ParameterOutOfRange, "need t-max > t-min");
    j["columns"] = {"t", "f"};
    for (int i = 0; i < cfg.points; ++i) {
      const double t = lo + (hi - lo) * i / (cfg.points - 1);
      rows.push_back({t, f_eval(params, t)});
    }
  } else {
    const double lo = std::isnan(cfg.t_min) ? -50 : cfg.t_min;
    const double hi = std::isnan(cfg.t_max) ? 50 : cfg.t_max;
    require(hi > lo, ErrorCode::ParameterOutOfRange, "need t-max > t-min");
    j["columns"] = {"re_z", "im_z", "re_F", "im_F", "abs_F"};
    for (int i = 0; i < cfg.points; ++i) {
      const std::complex<double> z(cfg.z_re, lo + (hi - lo) * i / (cfg.points - 1));
      const auto F = laplace_F(params, z);
      rows.push_back({z.real(), z.imag(), F.real(), F.imag(), std::abs(F)});
    }
  }
  j["rows"] = std::move(rows);
  return j;
}

json run_eta(const RunConfig& cfg) {
  require(cfg.points >= 1 && cfg.points <= 100'000, ErrorCode::ParameterOutOfRange,
          "--points must be in [1, 1e5]");
  require(cfg.x_min >= 3 && cfg.x_max >= cfg.x_min, ErrorCode::ParameterOutOfRange, "need 3 <= x-min <= x-max");
  const double l0 = std::log(cfg.x_min), l1 = std::log(cfg.x_max);
  auto log_x_at = [&](int i) { return cfg.points == 1 ? l0 : l0 + (l1 - l0) * i / (cfg.points - 1); };
  json j = header("eta");
  j["mode"] = cfg.mode;
  json rows = json::array();
  if (cfg.mode == "classical") {
    const BigInt D = parse_bigint(cfg.disc);
    require(D >= 1, ErrorCode::ParameterOutOfRange, "--D must be at least 1");
    require(cfg.degree >= 1, ErrorCode::ParameterOutOfRange, "--degree must be at least 1");
    const double logD = std::log(D.convert_to<double>());
    const auto zfr = classical_zfr(logD, cfg.degree, cfg.c1, cfg.c_eps);
    j["params"] = {{"D", exact(D)}, {"degree", cfg.degree}, {"c1", cfg.c1}, {"c_eps", cfg.c_eps}};
    j["provenance"] = zfr.provenance();
    j["columns"] = {"x", "eta_closed", "eta_grid", "error_factor"};
    for (int i = 0; i < cfg.points; ++i) {
      const double L = log_x_at(i);
      const double closed = eta_classical_closed(logD, cfg.degree, cfg.c1, cfg.c_eps, L);
      json factor = nullptr;
      if (L >= 4 * std::log(1 + logD)) factor = error_factor(closed, L, logD);
      rows.push_back({std::exp(L), closed, eta_from_delta(zfr, L), factor});
    }
  } else {
    require(!std::isnan(cfg.Q), ErrorCode::InvalidArgument, "--Q is required in large mode");
    const double logQ = std::log(cfg.Q);
    j["params"] = {{"Q", cfg.Q}, {"eps", cfg.eps}, {"m", cfg.m}, {"c1", cfg.c1}};
    j["bound"] = "exp(-eta) <= x^(-20 delta) + exp(-sqrt(20 delta log Q log x) - log(Q)/2) + "
                 "exp(-sqrt(c1 log x/(m+1)) - Q^(eps/2))";
    j["columns"] = {"x", "eta", "branch1", "branch2", "term1", "term2", "term3", "bound_sum", "bound_holds"};
    for (int i = 0; i < cfg.points; ++i) {
      const double L = log_x_at(i);
      const auto r = eta_large_zfr_closed(logQ, cfg.eps, cfg.m, L, cfg.c1);
      rows.push_back({std::exp(L), r.eta, r.branch1, r.branch2, r.bound_terms[0], r.bound_terms[1], r.bound_terms[2],
                      r.bound_sum, r.bound_holds});
    }
  }
  j["rows"] = std::move(rows);
  return j;
}

json count_json(const ChebotarevCount& c) {
  return {{"selector", c.selector.label}, {"classes", c.selector.classes}, {"selector_size", c.selector_size},
          {"group_order", c.group_order}, {"count", c.count},              {"pi", c.pi},
          {"ramified", c.ramified},       {"expected", c.expected},        {"error", c.error}};
}

json certificate_json(const FiniteGroup& G, const AdmissibilityCertificate& c) {
  std::vector<std::size_t> elems;
  for (std::size_t g = 0; g < G.order(); ++g)
    if (c.subgroup[g]) elems.push_back(g);
  return {{"class", c.class_index},
          {"subgroup_order", c.subgroup_order},
          {"subgroup", elems},
          {"witness", c.witness},
          {"entire_characters", c.entire_characters},
          {"dedekind_quotient", c.dedekind_quotient},
          {"conditional", c.conditional}};
}

ElementSet parse_subgroup(const FiniteGroup& G, const std::string& text) {
  std::vector<ElementId> gens;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    std::size_t pos = 0;
    unsigned long v = 0;
    try {
      v = std::stoul(tok, &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    require(pos == tok.size() && !tok.empty() && v < G.order(), ErrorCode::InvalidArgument,
            "bad subgroup generator '" + tok + "'");
    gens.push_back(static_cast<ElementId>(v));
  }
  return G.closure(gens);
}

json run_chebotarev(const RunConfig& cfg, const Catalog& catalog) {
  require(!cfg.field.empty(), ErrorCode::InvalidArgument, "--field is required");
  require(cfg.x >= 2, ErrorCode::ParameterOutOfRange, "--x must be at least 2");
  const auto& K = catalog.find(cfg.field);
  const auto sel = parse_class_selector(K, cfg.selector);
  double limit = cfg.x;
  if (!std::isnan(cfg.weights_eps)) limit = cfg.x * std::exp(cfg.weights_eps);
  const auto sieve = sieve_for(limit);
  json j = header("chebotarev");
  j["field"] = K.name();
  j["group"] = K.group().name();
  j["x"] = cfg.x;
  const auto count = pi_C_count(K, sel, cfg.x, *sieve, cfg.threads);
  const json counted = count_json(count);
  for (const auto& [k, v] : counted.items()) j[k] = v;

  const double L = std::log(cfg.x);
  if (L >= 4 * std::log(1 + K.log_abs_disc())) {
    const auto rep = flexi_error_report(K, sel, cfg.x, *sieve,
                                       classical_profile(K.log_abs_disc(), K.group().order(), cfg.c1, cfg.c_eps),
                                       classical_profile(0, 1, cfg.c1, cfg.c_eps));
    json f;
    f["eta_K"] = rep.eta_K;
    f["eta_Q"] = rep.eta_Q;
    f["li_shape"] = rep.li_shape;
    f["li_ratio"] = rep.li_ratio;
    f["pi_shape"] = rep.pi_shape ? json(*rep.pi_shape) : json(nullptr);
    f["pi_ratio"] = rep.pi_ratio ? json(*rep.pi_ratio) : json(nullptr);
    f["pi_conditional"] = rep.pi_conditional;
    f["certificate"] = rep.certificate ? certificate_json(K.group(), *rep.certificate) : json(nullptr);
    j["error_shapes"] = std::move(f);
  } else {
    j["error_shapes"] = nullptr;
    j["error_shapes_note"] = "x below (log eD_K)^4";
  }

  if (!std::isnan(cfg.weights_eps)) {
    const WeightParams params(cfg.x, cfg.weights_eps);
    j["psi_weighted"] = {{"eps", cfg.weights_eps}, {"value", psi_weighted_class(K, sel, params, *sieve, cfg.threads)}};
  }

  if (cfg.base_change) {
    require(sel.classes.size() == 1, ErrorCode::InvalidArgument, "--base-change needs a single class");
    ElementSet H;
    if (cfg.subgroup.empty()) {
      const auto adm = is_admissible(K.group(), sel.classes.front(), K.strong_artin());
      require(adm.certificate.has_value(), ErrorCode::UnsupportedSubgroupAction,
              "no admissible subgroup found; pass --subgroup");
      H = adm.certificate->subgroup;
    } else {
      H = parse_subgroup(K.group(), cfg.subgroup);
    }
    const auto bc = base_change_compare(K, sel.classes.front(), H, cfg.x, *sieve);
    j["base_change"] = {{"subgroup_order", bc.subgroup_order}, {"witness", bc.witness},
                        {"h_class_size", bc.h_class_size},     {"pi_C", bc.pi_C},
                        {"pi_C_H", bc.pi_C_H},                 {"scaled", bc.scaled},
                        {"lhs", bc.lhs},                       {"rhs_bound", bc.rhs_bound},
                        {"pass", bc.pass}};
  }
  return j;
}

json run_family(const RunConfig& cfg, const Catalog& catalog) {
  std::vector<FieldDescriptor> owned;
  const auto fields = select_fields(cfg, catalog, owned);
  const BigInt Q = family_Q(cfg, fields);
  const auto family = make_family(fields, Q);
  require(cfg.x >= 2, ErrorCode::ParameterOutOfRange, "--x must be at least 2");
  const auto sieve = sieve_for(cfg.x);
  const auto rep = avg_cheb_error(family, cfg.x, *sieve, cfg.eps, cfg.threshold);
  json j = header("family");
  j["Q"] = exact(Q);
  j["group"] = fields.front()->group().name();
  j["rule"] = intersection_rule_name(family.rule);
  j["x"] = cfg.x;
  j["size"] = rep.size;
  j["m"] = rep.multiplicity;
  j["avg_error"] = rep.avg_error;
  const double L = std::log(cfg.x);
  json shapes = json::array();
  for (int A : {1, 2, 3}) {
    const double v = cfg.x / std::pow(L, A);
    shapes.push_back({{"name", "average_error_A" + std::to_string(A)},
                      {"formula", "x/(log x)^" + std::to_string(A)},
                      {"value", v},
                      {"ratio", rep.avg_error / v}});
  }
  j["bound_shapes"] = std::move(shapes);
  j["diagnostics"] = {{"eps", cfg.eps},
                      {"log_mF_Qeps_over_size", num(rep.log_multiplicity_diagnostic)},
                      {"error_threshold", num(cfg.threshold)},
                      {"exceptional_fraction", rep.exceptional_fraction}};
  json per = json::array();
  for (const auto& f : rep.per_field)
    per.push_back({{"field", f.name}, {"worst_selector", f.worst_selector}, {"max_error", f.max_error}});
  j["per_field"] = std::move(per);
  return j;
}

std::string default_format(const std::string& sub) {
  if (sub == "coeffs" || sub == "weights" || sub == "eta") return "csv";
  return "json";
}

json dispatch(const RunConfig& cfg) {
  const bool needs_catalog = cfg.selftest || (cfg.subcommand != "weights" && cfg.subcommand != "eta");
  Catalog catalog;
  if (needs_catalog) catalog = load_catalog(cfg.catalog_path);
  if (cfg.selftest) {
    const std::string module = cfg.subcommand.empty() ? "all" : kSelftestModule.at(cfg.subcommand);
    return run_selftest(module, catalog, {cfg.seed, cfg.threads});
  }
  if (cfg.subcommand == "coeffs") return run_coeffs(cfg, catalog);
  if (cfg.subcommand == "splitting") return run_splitting(cfg, catalog);
  if (cfg.subcommand == "large-sieve") return run_large_sieve(cfg, catalog);
  if (cfg.subcommand == "weights") return run_weights(cfg);
  if (cfg.subcommand == "eta") return run_eta(cfg);
  if (cfg.subcommand == "chebotarev") return run_chebotarev(cfg, catalog);
  return run_family(cfg, catalog);
}

int report_error(std::ostream& err, std::string_view code, const std::string& msg, int status) {
  err << "error[" << code << "]: " << msg << '\n';
  return status;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"chebotarev-lab: Artin coefficients, large-sieve integrals, weights, zero-free regions and "
               "Chebotarev counts"};
  app.name("chebotarev-lab");
  app.option_defaults()->always_capture_default();
  app.add_option("--catalog", cfg.catalog_path, "Field catalog file")->envname("CHEBOTAREV_CATALOG");
  app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--output,-o", cfg.output, "Output file, - for standard output");
  app.add_option("--seed", cfg.seed, "Random seed for self-tests");
  app.add_option("--threads", cfg.threads, "Worker thread cap")->check(CLI::Range(1u, 256u));
  app.add_option("--c1", cfg.c1, "Classical zero-free region constant")->check(CLI::PositiveNumber);
  app.add_option("--c-eps", cfg.c_eps, "Constant of the Stark piece")->check(CLI::PositiveNumber);
  app.add_flag("--selftest", cfg.selftest, "Run every module's oracle comparisons");
  app.require_subcommand(0, 1);
  app.fallthrough();

  auto sub = [&](const std::string& name, const std::string& help) {
    auto* s = app.add_subcommand(name, help);
    s->add_flag("--selftest", cfg.selftest, "Run this module's oracle comparisons");
    s->final_callback([&cfg, name] { cfg.subcommand = name; });
    return s;
  };

  auto* coeffs = sub("coeffs", "Dirichlet coefficients of zeta_K/zeta or of the Rankin-Selberg product");
  coeffs->add_option("--field", cfg.field, "Catalog field");
  coeffs->add_option("--field2", cfg.field2, "Second field for a_KxK'");
  coeffs->add_option("--n", cfg.n, "Largest n");

  auto* splitting = sub("splitting", "Frobenius type of every prime up to x");
  splitting->add_option("--field", cfg.field, "Catalog field");
  splitting->add_option("--x", cfg.x, "Bound on p");
  splitting->add_flag("--list", cfg.list, "Include the per-prime table in JSON output");

  auto* ls = sub("large-sieve", "Prime mean value over a family and its bound shape");
  ls->add_option("--field", cfg.field, "Single catalog field");
  ls->add_option("--fields", cfg.fields, "Catalog fields")->delimiter(',');
  ls->add_option("--group", cfg.group, "All catalog fields with this group");
  ls->add_option("--quadratic", cfg.quadratic_bound, "Quadratic fields with |D| up to this bound");
  ls->add_option("--y", cfg.y, "Primes above y");
  ls->add_option("--u", cfg.u, "Primes up to u");
  ls->add_option("--T", cfg.T, "Height T");
  ls->add_option("--Q", cfg.Q, "Discriminant bound (default: largest |D_K|)");
  ls->add_option("--sigma", cfg.sigma, "Also report the zero-density shape at sigma");

  auto* w = sub("weights", "The weight f on a t grid or its transform F on a vertical line");
  w->add_option("--x", cfg.x, "x");
  w->add_option("--eps", cfg.eps, "Smoothing parameter");
  w->add_option("--eps-preset", cfg.eps_preset, "Choose eps from eta")->check(CLI::IsMember({"pi", "li"}));
  w->add_option("--eta", cfg.eta, "eta(x) for --eps-preset");
  w->add_option("--grid", cfg.grid, "f or F")->check(CLI::IsMember({"f", "F"}));
  w->add_option("--t-min", cfg.t_min, "Grid start (t for f, Im z for F)");
  w->add_option("--t-max", cfg.t_max, "Grid end");
  w->add_option("--re-z", cfg.z_re, "Real part of z for the F grid");
  w->add_option("--points", cfg.points, "Grid points");

  auto* eta = sub("eta", "eta(x) tables for the classical and large zero-free regions");
  eta->add_option("--mode", cfg.mode, "classical or large")->check(CLI::IsMember({"classical", "large"}));
  eta->add_option("--D", cfg.disc, "Discriminant (classical)");
  eta->add_option("--degree", cfg.degree, "Degree n (classical)");
  eta->add_option("--Q", cfg.Q, "Q (large)");
  eta->add_option("--eps", cfg.eps, "epsilon (large)");
  eta->add_option("--m", cfg.m, "m (large)");
  eta->add_option("--x-min", cfg.x_min, "Smallest x");
  eta->add_option("--x-max", cfg.x_max, "Largest x");
  eta->add_option("--points", cfg.points, "Geometric grid points");

  auto* cheb = sub("chebotarev", "pi_C(x) with error shapes, weighted sums and base change");
  cheb->add_option("--field", cfg.field, "Catalog field");
  cheb->add_option("--class", cfg.selector, "1, class:k[+k], or type:a,b,...");
  cheb->add_option("--x", cfg.x, "x");
  cheb->add_option("--weights-eps", cfg.weights_eps, "Also compute the weighted sum with this eps");
  cheb->add_option("--report", cfg.format, "Report format")->check(CLI::IsMember({"csv", "json"}));
  cheb->add_flag("--base-change", cfg.base_change, "Compare with the count over a fixed field");
  cheb->add_option("--subgroup", cfg.subgroup, "Generators (element ids) of H for --base-change");

  auto* fam = sub("family", "Average Chebotarev error over a family of fields");
  fam->add_option("--group", cfg.group, "All catalog fields with this group");
  fam->add_option("--fields", cfg.fields, "Catalog fields")->delimiter(',');
  fam->add_option("--quadratic", cfg.quadratic_bound, "Quadratic fields with |D| up to this bound");
  fam->add_option("--Q", cfg.Q, "Discriminant bound (default: largest |D_K|)");
  fam->add_option("--x", cfg.x, "x");
  fam->add_option("--eps", cfg.eps, "epsilon in the multiplicity diagnostic");
  fam->add_option("--threshold", cfg.threshold, "Error threshold for the exceptional fraction");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    return report_error(err, error_code_name(ErrorCode::InvalidArgument), e.what(), 1);
  }
  if (cfg.subcommand.empty() && !cfg.selftest) {
    out << app.help();
    return 1;
  }

  try {
    const json report = dispatch(cfg);
    const std::string format = cfg.selftest ? "json" : (cfg.format.empty() ? default_format(cfg.subcommand) : cfg.format);
    if (cfg.output == "-") {
      emit(report, format, out);
    } else {
      std::ofstream file(cfg.output);
      require(static_cast<bool>(file), ErrorCode::InvalidArgument, "cannot open output file " + cfg.output);
      emit(report, format, file);
    }
    if (cfg.selftest && !report["pass"].get<bool>()) return 2;
    return 0;
  } catch (const Error& e) {
    return report_error(err, error_code_name(e.code()), e.what(), is_validation_error(e.code()) ? 1 : 2);
  } catch (const std::exception& e) {
    return report_error(err, "Internal", e.what(), 2);
  }
}

}  // namespace cheb
