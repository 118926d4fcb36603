#include "mtcc/scenario_file.hpp"

#include <charconv>
#include <cstdlib>
#include <sstream>

namespace mtcc {

namespace {

std::string trim(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

double to_double(const std::string& key, const std::string& v) {
  char* end = nullptr;
  double x = std::strtod(v.c_str(), &end);
  if (end == v.c_str() || *end != '\0')
    throw ConfigError("invalid numeric value for '" + key + "': " + v);
  return x;
}

long long to_int(const std::string& key, const std::string& v) {
  char* end = nullptr;
  long long x = std::strtoll(v.c_str(), &end, 10);
  if (end == v.c_str() || *end != '\0')
    throw ConfigError("invalid integer value for '" + key + "': " + v);
  return x;
}

}  // namespace

ScenarioConfig parse_scenario(
    const std::string& text,
    const std::map<std::string, std::string>& overrides) {
  std::map<std::string, std::string> kv;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string s = trim(line);
    if (s.empty() || s[0] == '#') continue;
    std::size_t eq = s.find('=');
    if (eq == std::string::npos)
      throw ConfigError("line " + std::to_string(lineno) +
                        ": expected key=value, got '" + s + "'");
    std::string key = trim(s.substr(0, eq));
    std::string val = trim(s.substr(eq + 1));
    if (key.empty())
      throw ConfigError("line " + std::to_string(lineno) + ": empty key");
    kv[key] = val;
  }
  for (const auto& [k, v] : overrides) kv[k] = v;

  auto get = [&kv](const std::string& key) -> const std::string* {
    auto it = kv.find(key);
    return it == kv.end() ? nullptr : &it->second;
  };
  auto require = [&](const std::string& key) -> const std::string& {
    const std::string* v = get(key);
    if (v == nullptr) throw ConfigError("missing required key '" + key + "'");
    return *v;
  };

  ScenarioConfig cfg;
  cfg.params.m = static_cast<int>(to_int("m", require("m")));
  if (const auto* v = get("r")) cfg.params.r = to_double("r", *v);
  cfg.horizon = to_double("horizon", require("horizon"));
  if (const auto* v = get("warmup")) cfg.warmup = to_double("warmup", *v);
  if (const auto* v = get("replications"))
    cfg.replications = static_cast<int>(to_int("replications", *v));
  if (const auto* v = get("seed"))
    cfg.seed = static_cast<std::uint64_t>(to_int("seed", *v));
  if (const auto* v = get("sample_dt"))
    cfg.sample_dt = to_double("sample_dt", *v);

  std::string pk = require("probing.kind");
  if (pk == "poisson") {
    cfg.probing =
        PoissonAggregate{to_double("probing.beta", require("probing.beta"))};
  } else if (pk == "exponential") {
    cfg.probing = PerBotExponential{
        static_cast<int>(to_int("probing.n_bots", require("probing.n_bots"))),
        to_double("probing.mean", require("probing.mean"))};
  } else if (pk == "deterministic") {
    cfg.probing = PerBotDeterministic{
        static_cast<int>(to_int("probing.n_bots", require("probing.n_bots"))),
        to_double("probing.mean", require("probing.mean"))};
  } else if (pk == "truncgaussian") {
    cfg.probing = PerBotTruncGaussian{
        static_cast<int>(to_int("probing.n_bots", require("probing.n_bots"))),
        to_double("probing.mean", require("probing.mean")),
        to_double("probing.kappa", require("probing.kappa")),
        to_double("probing.floor", require("probing.floor"))};
  } else {
    throw ConfigError("unknown probing.kind '" + pk + "'");
  }

  std::string rk = require("replacement.kind");
  double delta = to_double("replacement.delta", require("replacement.delta"));
  if (rk == "all") {
    cfg.replacement = AllAtOnce{delta};
  } else if (rk == "selective") {
    cfg.replacement =
        Selective{delta, to_double("replacement.r", require("replacement.r"))};
    cfg.params.r = std::get<Selective>(cfg.replacement).r;
  } else if (rk == "perproxy") {
    cfg.replacement = PerProxyIndependent{delta};
  } else {
    throw ConfigError("unknown replacement.kind '" + rk + "'");
  }

  std::string ak = "random";
  if (const auto* v = get("assignment.kind")) ak = *v;
  if (ak == "random") {
    cfg.assignment = UniformRandom{};
  } else if (ak == "roundrobin") {
    double rate = 0.0;
    if (const auto* v = get("assignment.nominal_rate"))
      rate = to_double("assignment.nominal_rate", *v);
    cfg.assignment = RoundRobin{rate};
  } else {
    throw ConfigError("unknown assignment.kind '" + ak + "'");
  }

  cfg.params.beta = cfg.aggregate_beta();
  cfg.params.delta = delta;
  cfg.validate();
  return cfg;
}

std::string scenario_to_text(const ScenarioConfig& cfg) {
  std::ostringstream out;
  out.imbue(std::locale::classic());
  out.precision(17);
  out << "m = " << cfg.params.m << "\n";
  out << "r = " << cfg.params.r << "\n";
  std::visit(
      [&out](const auto& v) {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, PoissonAggregate>) {
          out << "probing.kind = poisson\n";
          out << "probing.beta = " << v.beta << "\n";
        } else if constexpr (std::is_same_v<T, PerBotExponential>) {
          out << "probing.kind = exponential\n";
          out << "probing.n_bots = " << v.n_bots << "\n";
          out << "probing.mean = " << v.mean_interprobe << "\n";
        } else if constexpr (std::is_same_v<T, PerBotDeterministic>) {
          out << "probing.kind = deterministic\n";
          out << "probing.n_bots = " << v.n_bots << "\n";
          out << "probing.mean = " << v.period << "\n";
        } else {
          out << "probing.kind = truncgaussian\n";
          out << "probing.n_bots = " << v.n_bots << "\n";
          out << "probing.mean = " << v.mean_interprobe << "\n";
          out << "probing.kappa = " << v.kappa << "\n";
          out << "probing.floor = " << v.floor << "\n";
        }
      },
      cfg.probing);
  std::visit(
      [&out](const auto& v) {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, AllAtOnce>) {
          out << "replacement.kind = all\n";
        } else if constexpr (std::is_same_v<T, Selective>) {
          out << "replacement.kind = selective\n";
          out << "replacement.r = " << v.r << "\n";
        } else {
          out << "replacement.kind = perproxy\n";
        }
        out << "replacement.delta = " << v.delta << "\n";
      },
      cfg.replacement);
  std::visit(
      [&out](const auto& v) {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, UniformRandom>) {
          out << "assignment.kind = random\n";
        } else {
          out << "assignment.kind = roundrobin\n";
          out << "assignment.nominal_rate = " << v.nominal_client_rate << "\n";
        }
      },
      cfg.assignment);
  out << "horizon = " << cfg.horizon << "\n";
  out << "warmup = " << cfg.effective_warmup() << "\n";
  out << "replications = " << cfg.replications << "\n";
  out << "seed = " << cfg.seed << "\n";
  if (cfg.sample_dt > 0.0) out << "sample_dt = " << cfg.sample_dt << "\n";
  return out.str();
}

}  // namespace mtcc
