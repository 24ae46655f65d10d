#include "truncata/campaign.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <fstream>
#include <functional>
#include <sstream>

#include "truncata/binomial_identities.hpp"
#include "truncata/qaffine.hpp"
#include "truncata/yangian.hpp"

namespace truncata {

namespace {

using Clock = std::chrono::steady_clock;

qaffine::Convention to_convention(const std::string& s) {
  if (s == "auto") return qaffine::Convention::auto_select;
  if (s == "paper") return qaffine::Convention::paper_literal;
  if (s == "twisted") return qaffine::Convention::dj_twisted;
  throw ConfigError("unknown convention '" + s + "' (expected auto|paper|twisted)");
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == ',' || c == ' ' || c == '\t') {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

struct CheckContext {
  const CampaignConfig& config;
  std::vector<Report>& reports;

  void add(Report r) { reports.push_back(std::move(r)); }
};

// --- Yangian-side parameter plumbing -------------------------------------

std::vector<std::pair<Rational, Rational>> yangian_modules(const CampaignConfig& c) {
  if (c.alphas.size() != c.betas.size())
    throw ConfigError("--alpha and --beta lists must have equal length");
  if (c.alphas.empty()) throw ConfigError("yangian checks need at least one (alpha, beta)");
  std::vector<std::pair<Rational, Rational>> out;
  for (size_t i = 0; i < c.alphas.size(); ++i) out.emplace_back(c.alphas[i], c.betas[i]);
  return out;
}

std::vector<std::array<Rational, 4>> yangian_pairs(const CampaignConfig& c) {
  if (c.alphas2.size() != c.betas2.size())
    throw ConfigError("--alpha2 and --beta2 lists must have equal length");
  if (c.alphas2.empty())
    throw ConfigError("this check needs a second factor (--alpha2/--beta2)");
  const auto firsts = yangian_modules(c);
  if (firsts.size() != c.alphas2.size())
    throw ConfigError("first and second factor lists must have equal length");
  std::vector<std::array<Rational, 4>> out;
  for (size_t i = 0; i < firsts.size(); ++i)
    out.push_back({firsts[i].first, firsts[i].second, c.alphas2[i], c.betas2[i]});
  return out;
}

std::vector<std::pair<long, RatFuncQ>> qaffine_modules(const CampaignConfig& c) {
  if (c.ns.size() != c.as.size())
    throw ConfigError("--n and --a lists must have equal length");
  if (c.ns.empty()) throw ConfigError("qaffine checks need at least one (n, a)");
  std::vector<std::pair<long, RatFuncQ>> out;
  for (size_t i = 0; i < c.ns.size(); ++i) out.emplace_back(c.ns[i], c.as[i]);
  return out;
}

std::vector<std::array<long, 2>> qaffine_pair_dims(const CampaignConfig& c) {
  if (c.ms.size() != c.bs.size())
    throw ConfigError("--m and --b lists must have equal length");
  if (c.ms.empty()) throw ConfigError("this check needs a second factor (--m/--b)");
  if (c.ms.size() != c.ns.size())
    throw ConfigError("first and second factor lists must have equal length");
  std::vector<std::array<long, 2>> out;
  for (size_t i = 0; i < c.ms.size(); ++i) out.push_back({static_cast<long>(i), 0});
  return out;
}

// --- Individual checks ----------------------------------------------------

void run_yangian_check(const std::string& name, CheckContext& ctx) {
  const CampaignConfig& c = ctx.config;
  const long N = c.order;
  if (name == "relations") {
    for (const auto& [a, b] : yangian_modules(c))
      ctx.add(yangian::check_relations(yangian::make_evaluation_module(a, b), N));
    if (!c.alphas2.empty())
      for (const auto& p : yangian_pairs(c)) {
        auto v = yangian::make_evaluation_module(p[0], p[1]);
        auto w = yangian::make_evaluation_module(p[2], p[3]);
        Report r = yangian::check_relations(yangian::tensor(v, w), N);
        r.param("tensor", "L(" + p[0].str() + "," + p[1].str() + ") (x) L(" +
                              p[2].str() + "," + p[3].str() + ")");
        ctx.add(std::move(r));
      }
  } else if (name == "gklo") {
    for (const auto& [a, b] : yangian_modules(c))
      ctx.add(yangian::verify_gklo_diagonal(yangian::make_evaluation_module(a, b), N));
  } else if (name == "tensor") {
    for (const auto& p : yangian_pairs(c))
      ctx.add(yangian::verify_tensor_formula(yangian::make_evaluation_module(p[0], p[1]),
                                             yangian::make_evaluation_module(p[2], p[3]),
                                             N));
  } else if (name == "coproduct") {
    for (const auto& p : yangian_pairs(c)) {
      auto v = yangian::make_evaluation_module(p[0], p[1]);
      auto w = yangian::make_evaluation_module(p[2], p[3]);
      ctx.add(yangian::verify_coproduct(v, yangian::drinfeld_poly(p[0], p[1]), w,
                                        yangian::drinfeld_poly(p[2], p[3]), N));
    }
  } else if (name == "s-series") {
    for (const auto& [a, b] : yangian_modules(c))
      ctx.add(yangian::verify_s_difference_equation(
          yangian::make_evaluation_module(a, b), N));
  } else if (name == "s-coproduct") {
    for (const auto& p : yangian_pairs(c))
      ctx.add(yangian::verify_s_coproduct(yangian::make_evaluation_module(p[0], p[1]),
                                          yangian::make_evaluation_module(p[2], p[3]),
                                          N));
  } else if (name == "binomial") {
    // Twisted binomial expansion on the tensor configuration X, Y with
    // [X, Y] = t X^2, plus the exponential shift identity it feeds.
    const auto v = yangian::derive_modes(yangian::make_evaluation_module(1, 0), 1);
    const auto w = v;
    const Rational z0(3);
    const Rational t = Rational(1) / (z0 + Rational(1));
    const MatQ x = scalar_mul(Rational(1) / z0, kron(v.x_minus_0, w.x_plus_0));
    const MatQ y = scalar_mul(-Rational(1) / (z0 * (z0 + Rational(1))),
                              kron(v.x_minus_0, w.x_plus(1)));
    for (long n = 0; n <= 4; ++n) {
      Report r = verify_twisted_binomial(x, y, t, n);
      r.check = "yangian/binomial";
      ctx.add(std::move(r));
    }
    Report r = yangian::verify_exp_shift_identity(v, w, z0);
    ctx.add(std::move(r));
  } else {
    throw ConfigError("unknown yangian check '" + name + "'");
  }
}

void run_qaffine_check(const std::string& name, CheckContext& ctx) {
  const CampaignConfig& c = ctx.config;
  const long N = c.order;
  const qaffine::Convention conv = to_convention(c.convention);

  auto pair_modules = [&](size_t i) {
    return std::make_pair(qaffine::make_eval_module(c.ns[i], c.as[i]),
                          qaffine::make_eval_module(c.ms[i], c.bs[i]));
  };

  if (name == "relations") {
    for (const auto& [n, a] : qaffine_modules(c))
      ctx.add(qaffine::check_relations(qaffine::make_eval_module(n, a), N));
    if (!c.ms.empty())
      for (const auto& idx : qaffine_pair_dims(c)) {
        auto [v, w] = pair_modules(static_cast<size_t>(idx[0]));
        Report r = qaffine::check_relations(qaffine::tensor(v, w, conv), N);
        r.param("tensor", "L_" + std::to_string(v.params->first) + " (x) L_" +
                              std::to_string(w.params->first));
        ctx.add(std::move(r));
      }
  } else if (name == "gklo") {
    for (const auto& [n, a] : qaffine_modules(c))
      ctx.add(qaffine::verify_gklo_diagonal(qaffine::make_eval_module(n, a), N));
  } else if (name == "truncation") {
    for (const auto& [n, a] : qaffine_modules(c)) {
      const auto rep = qaffine::make_eval_module(n, a);
      const auto g = qaffine::gklo(rep, qaffine::drinfeld_poly(n, a), N);
      Report r = qaffine::truncation_check(g, rep, N);
      r.param("n", std::to_string(n));
      ctx.add(std::move(r));
    }
  } else if (name == "tensor+" || name == "tensor-") {
    for (const auto& idx : qaffine_pair_dims(c)) {
      auto [v, w] = pair_modules(static_cast<size_t>(idx[0]));
      ctx.add(qaffine::verify_tensor_formula(v, w, N, name.back(), conv));
    }
  } else if (name == "coproduct+" || name == "coproduct-") {
    for (const auto& idx : qaffine_pair_dims(c)) {
      auto [v, w] = pair_modules(static_cast<size_t>(idx[0]));
      ctx.add(qaffine::verify_coproduct(
          v, qaffine::drinfeld_poly(v.params->first, v.params->second), w,
          qaffine::drinfeld_poly(w.params->first, w.params->second), N, name.back(),
          conv));
    }
  } else if (name == "t-coproduct") {
    for (const auto& idx : qaffine_pair_dims(c)) {
      auto [v, w] = pair_modules(static_cast<size_t>(idx[0]));
      ctx.add(qaffine::verify_t_coproduct(v, w, N, conv));
    }
  } else if (name == "interversion") {
    for (const auto& [n, a] : qaffine_modules(c)) {
      const auto rep = qaffine::make_eval_module(n, a);
      ctx.add(qaffine::verify_interversion(rep, '+', N));
      ctx.add(qaffine::verify_interversion(rep, '-', N));
    }
  } else if (name == "qcomm-shift") {
    for (const auto& [n, a] : qaffine_modules(c))
      ctx.add(qaffine::verify_qcomm_shift(qaffine::make_eval_module(n, a), 2, N));
  } else if (name == "qexp") {
    // Nilpotent tensor instance with X Y = q^2 Y X.
    for (const auto& idx : qaffine_pair_dims(c)) {
      auto [v, w] = pair_modules(static_cast<size_t>(idx[0]));
      const auto vd = qaffine::derive_modes(v, 2);
      const auto wd = qaffine::derive_modes(w, 2);
      const MatQq x = kron(vd.x_minus_0, wd.x_plus(-1));
      const MatQq y = scalar_mul(RatFuncQ::q_pow(2), kron(vd.x_minus_0, wd.x_plus(-2)));
      Report r = qaffine::verify_qexp_identities(x, y);
      r.param("dimV", std::to_string(v.dim));
      r.param("dimW", std::to_string(w.dim));
      ctx.add(std::move(r));
    }
    // Single 2x2 nilpotent control.
    MatQq e01 = zero<RatFuncQ>(2, 2);
    e01(0, 1) = RatFuncQ(1);
    Report r = qaffine::verify_qexp_identities(e01, zero<RatFuncQ>(2, 2));
    r.param("instance", "2x2 nilpotent");
    ctx.add(std::move(r));
  } else {
    throw ConfigError("unknown qaffine check '" + name + "'");
  }
}

}  // namespace

const std::vector<std::string>& known_checks(const std::string& algebra) {
  static const std::vector<std::string> yangian_names = {
      "relations", "gklo", "tensor", "coproduct", "s-series", "s-coproduct", "binomial"};
  static const std::vector<std::string> qaffine_names = {
      "relations",  "gklo",        "truncation",  "tensor+",     "tensor-",
      "coproduct+", "coproduct-",  "t-coproduct", "interversion", "qcomm-shift",
      "qexp"};
  if (algebra == "yangian") return yangian_names;
  if (algebra == "qaffine") return qaffine_names;
  throw ConfigError("unknown algebra '" + algebra + "' (expected yangian|qaffine)");
}

CampaignConfig load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  CampaignConfig c;
  std::string line;
  while (std::getline(in, line)) {
    const size_t hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    const size_t eq = line.find('=');
    if (eq == std::string::npos) continue;
    auto trim = [](std::string s) {
      const auto b = s.find_first_not_of(" \t\r");
      const auto e = s.find_last_not_of(" \t\r");
      return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
    };
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty()) continue;
    if (key == "algebra") {
      c.algebra = value;
    } else if (key == "checks" || key == "check") {
      for (const auto& s : split_list(value)) c.checks.push_back(s);
    } else if (key == "all") {
      c.run_all = (value == "true" || value == "1" || value == "yes");
    } else if (key == "alpha") {
      for (const auto& s : split_list(value)) c.alphas.push_back(Rational::from_string(s));
    } else if (key == "beta") {
      for (const auto& s : split_list(value)) c.betas.push_back(Rational::from_string(s));
    } else if (key == "alpha2") {
      for (const auto& s : split_list(value)) c.alphas2.push_back(Rational::from_string(s));
    } else if (key == "beta2") {
      for (const auto& s : split_list(value)) c.betas2.push_back(Rational::from_string(s));
    } else if (key == "n") {
      for (const auto& s : split_list(value)) c.ns.push_back(std::stol(s));
    } else if (key == "m") {
      for (const auto& s : split_list(value)) c.ms.push_back(std::stol(s));
    } else if (key == "a") {
      for (const auto& s : split_list(value)) c.as.push_back(RatFuncQ::parse(s));
    } else if (key == "b") {
      for (const auto& s : split_list(value)) c.bs.push_back(RatFuncQ::parse(s));
    } else if (key == "order") {
      c.order = std::stol(value);
      c.order_explicit = true;
    } else if (key == "convention") {
      c.convention = value;
    } else if (key == "emit") {
      c.emit = value;
    } else if (key == "out") {
      c.out_path = value;
    } else if (key == "timings") {
      c.include_timings = (value == "true" || value == "1" || value == "yes");
    } else {
      throw ConfigError("unknown config key '" + key + "'");
    }
  }
  return c;
}

namespace {

// The default campaign: the full identity suite at its pinned orders.
void run_all_campaign(const std::string& algebra, std::vector<Report>& reports,
                      std::vector<double>& wall_ms) {
  auto timed = [&](const std::function<void(CheckContext&)>& body, CampaignConfig cfg) {
    CheckContext ctx{cfg, reports};
    const size_t before = reports.size();
    const auto t0 = Clock::now();
    body(ctx);
    const auto t1 = Clock::now();
    const double ms =
        std::chrono::duration_cast<std::chrono::microseconds>(t1 - t0).count() / 1000.0;
    const size_t added = reports.size() - before;
    for (size_t i = 0; i < added; ++i) wall_ms.push_back(ms / static_cast<double>(added));
  };

  if (algebra == "yangian") {
    CampaignConfig modules;
    modules.algebra = "yangian";
    modules.alphas = {Rational(1), Rational(2), Rational(3), Rational(5, 2)};
    modules.betas = {Rational(0), Rational(0), Rational(1), Rational(1, 2)};

    CampaignConfig pairs = modules;
    pairs.alphas = {Rational(2), Rational(3)};
    pairs.betas = {Rational(0), Rational(1)};
    pairs.alphas2 = {Rational(1), Rational(2)};
    pairs.betas2 = {Rational(0), Rational(0)};

    CampaignConfig spairs = pairs;
    spairs.alphas = {Rational(1), Rational(2)};
    spairs.betas = {Rational(0), Rational(0)};
    spairs.alphas2 = {Rational(1), Rational(1)};
    spairs.betas2 = {Rational(0), Rational(0)};

    auto with_order = [](CampaignConfig c, long n) {
      c.order = n;
      return c;
    };
    timed([](CheckContext& x) { run_yangian_check("gklo", x); }, with_order(modules, 12));
    timed([](CheckContext& x) { run_yangian_check("tensor", x); }, with_order(pairs, 12));
    timed([](CheckContext& x) { run_yangian_check("coproduct", x); }, with_order(pairs, 12));
    timed([](CheckContext& x) { run_yangian_check("relations", x); }, with_order(pairs, 6));
    timed([](CheckContext& x) { run_yangian_check("relations", x); },
          with_order(modules, 6));
    timed([](CheckContext& x) { run_yangian_check("s-series", x); },
          with_order(modules, 6));
    timed([](CheckContext& x) { run_yangian_check("s-coproduct", x); },
          with_order(spairs, 8));
    timed([](CheckContext& x) { run_yangian_check("binomial", x); }, modules);
    return;
  }

  CampaignConfig modules;
  modules.algebra = "qaffine";
  modules.ns = {1, 2, 3};
  modules.as = {RatFuncQ::parse("2*q^3"), RatFuncQ::parse("2*q^3"),
                RatFuncQ::parse("3/2*q^-2")};

  CampaignConfig pairs = modules;
  pairs.ns = {1, 2};
  pairs.as = {RatFuncQ::parse("2*q^3"), RatFuncQ::parse("q^2")};
  pairs.ms = {1, 1};
  pairs.bs = {RatFuncQ::parse("3*q^-1"), RatFuncQ(5)};

  CampaignConfig tpairs = modules;
  tpairs.ns = {1};
  tpairs.as = {RatFuncQ::parse("q^2")};
  tpairs.ms = {1};
  tpairs.bs = {RatFuncQ(3)};

  CampaignConfig small = modules;
  small.ns = {1, 2};
  small.as = {RatFuncQ::parse("2*q^3"), RatFuncQ::parse("q^2")};

  auto with_order = [](CampaignConfig c, long n) {
    c.order = n;
    return c;
  };
  timed([](CheckContext& x) { run_qaffine_check("gklo", x); }, with_order(modules, 12));
  timed([](CheckContext& x) { run_qaffine_check("truncation", x); },
        with_order(modules, 12));
  timed([](CheckContext& x) { run_qaffine_check("relations", x); },
        with_order(small, 4));
  timed([](CheckContext& x) { run_qaffine_check("relations", x); },
        with_order(pairs, 4));
  timed([](CheckContext& x) { run_qaffine_check("tensor+", x); }, with_order(pairs, 12));
  timed([](CheckContext& x) { run_qaffine_check("tensor-", x); }, with_order(pairs, 12));
  timed([](CheckContext& x) { run_qaffine_check("coproduct+", x); },
        with_order(pairs, 8));
  timed([](CheckContext& x) { run_qaffine_check("coproduct-", x); },
        with_order(pairs, 8));
  timed([](CheckContext& x) { run_qaffine_check("t-coproduct", x); },
        with_order(tpairs, 8));
  timed([](CheckContext& x) { run_qaffine_check("interversion", x); },
        with_order(small, 8));
  timed([](CheckContext& x) { run_qaffine_check("qcomm-shift", x); },
        with_order(small, 8));
  timed([](CheckContext& x) { run_qaffine_check("qexp", x); }, with_order(tpairs, 8));
}

}  // namespace

long CampaignReport::passed() const {
  long n = 0;
  for (const auto& r : reports) n += r.pass ? 1 : 0;
  return n;
}

long CampaignReport::failed() const {
  return static_cast<long>(reports.size()) - passed();
}

CampaignReport run_campaign(const CampaignConfig& config) {
  if (config.algebra != "yangian" && config.algebra != "qaffine")
    throw ConfigError("unknown algebra '" + config.algebra + "' (expected yangian|qaffine)");
  if (config.order < 4) throw ConfigError("order must be at least 4");
  if (!config.run_all) {
    if (config.checks.empty()) throw ConfigError("no checks requested");
    const auto& known = known_checks(config.algebra);
    for (const auto& name : config.checks)
      if (std::find(known.begin(), known.end(), name) == known.end())
        throw ConfigError("unknown " + config.algebra + " check '" + name + "'");
  }

  CampaignReport out;
  out.version = kVersion;
  out.config = config;

  if (config.run_all) {
    run_all_campaign(config.algebra, out.reports, out.wall_ms);
  } else {
    for (const auto& name : config.checks) {
      CheckContext ctx{config, out.reports};
      const size_t before = out.reports.size();
      const auto t0 = Clock::now();
      try {
        if (config.algebra == "yangian")
          run_yangian_check(name, ctx);
        else
          run_qaffine_check(name, ctx);
      } catch (const ConfigError&) {
        throw;
      } catch (const Error& e) {
        // Internal check errors (e.g. S-series resonance) are findings, not
        // crashes: they fail the campaign with the message as witness.
        Report r;
        r.check = config.algebra + "/" + name;
        r.order = static_cast<int>(config.order);
        r.fail("error", e.what());
        out.reports.push_back(std::move(r));
      }
      const auto t1 = Clock::now();
      const double ms =
          std::chrono::duration_cast<std::chrono::microseconds>(t1 - t0).count() / 1000.0;
      const size_t added = out.reports.size() - before;
      for (size_t i = 0; i < added; ++i)
        out.wall_ms.push_back(ms / static_cast<double>(added ? added : 1));
    }
  }

  // Order-stable output: by check name, then by rendered parameters.
  std::vector<size_t> idx(out.reports.size());
  for (size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  auto key = [&](size_t i) {
    std::string k = out.reports[i].check;
    for (const auto& [a, b] : out.reports[i].params) k += "|" + a + "=" + b;
    return k;
  };
  std::stable_sort(idx.begin(), idx.end(),
                   [&](size_t a, size_t b) { return key(a) < key(b); });
  std::vector<Report> sorted;
  std::vector<double> sorted_ms;
  std::string prev_key;
  for (size_t i : idx) {
    const std::string k = key(i);
    if (!sorted.empty() && k == prev_key) continue;  // drop exact duplicates
    prev_key = k;
    sorted.push_back(std::move(out.reports[i]));
    sorted_ms.push_back(i < out.wall_ms.size() ? out.wall_ms[i] : 0.0);
  }
  out.reports = std::move(sorted);
  out.wall_ms = std::move(sorted_ms);
  return out;
}

std::string emit_json(const CampaignReport& report) {
  nlohmann::ordered_json j;
  j["tool"] = kToolName;
  j["version"] = report.version;
  nlohmann::ordered_json cfg;
  cfg["algebra"] = report.config.algebra;
  cfg["checks"] = report.config.checks;
  cfg["all"] = report.config.run_all;
  auto str_list = [](const auto& v) {
    std::vector<std::string> out;
    for (const auto& x : v) out.push_back(x.str());
    return out;
  };
  if (!report.config.alphas.empty()) cfg["alpha"] = str_list(report.config.alphas);
  if (!report.config.betas.empty()) cfg["beta"] = str_list(report.config.betas);
  if (!report.config.alphas2.empty()) cfg["alpha2"] = str_list(report.config.alphas2);
  if (!report.config.betas2.empty()) cfg["beta2"] = str_list(report.config.betas2);
  if (!report.config.ns.empty()) cfg["n"] = report.config.ns;
  if (!report.config.ms.empty()) cfg["m"] = report.config.ms;
  if (!report.config.as.empty()) cfg["a"] = str_list(report.config.as);
  if (!report.config.bs.empty()) cfg["b"] = str_list(report.config.bs);
  cfg["order"] = report.config.order;
  cfg["convention"] = report.config.convention;
  j["config"] = cfg;
  nlohmann::ordered_json rs = nlohmann::ordered_json::array();
  for (const auto& r : report.reports) rs.push_back(report_json(r));
  j["reports"] = rs;
  nlohmann::ordered_json summary;
  summary["checks"] = report.reports.size();
  summary["pass"] = report.passed();
  summary["fail"] = report.failed();
  j["summary"] = summary;
  if (report.config.include_timings) {
    nlohmann::ordered_json t = nlohmann::ordered_json::array();
    for (double ms : report.wall_ms) t.push_back(ms);
    j["timings_ms"] = t;
  }
  return j.dump(2) + "\n";
}

std::string emit_text(const CampaignReport& report) {
  std::ostringstream os;
  os << kToolName << " " << report.version << " — " << report.config.algebra
     << " verification campaign\n";
  for (size_t i = 0; i < report.reports.size(); ++i) {
    os << report_text(report.reports[i]);
    if (i < report.wall_ms.size()) {
      os.precision(1);
      os << std::fixed << "  [" << report.wall_ms[i] << " ms]";
    }
    os << "\n";
  }
  os << report.reports.size() << " checks, " << report.passed() << " passed, "
     << report.failed() << " failed\n";
  return os.str();
}

int campaign_exit_code(const CampaignReport& report) {
  return report.all_pass() ? 0 : 1;
}

}  // namespace truncata
