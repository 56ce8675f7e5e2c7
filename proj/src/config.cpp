#include "burgers/config.hpp"

#include <cmath>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace burgers {

namespace {

std::string trim(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = s.find(sep, start);
    if (pos == std::string::npos) {
      out.push_back(trim(s.substr(start)));
      return out;
    }
    out.push_back(trim(s.substr(start, pos - start)));
    start = pos + 1;
  }
}

double parse_double(const std::string& s, const std::string& key) {
  try {
    std::size_t used = 0;
    double v = std::stod(s, &used);
    if (used != s.size() || !std::isfinite(v)) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw std::invalid_argument("config: bad number for " + key + ": '" + s + "'");
  }
}

int parse_int(const std::string& s, const std::string& key) {
  try {
    std::size_t used = 0;
    int v = std::stoi(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw std::invalid_argument("config: bad integer for " + key + ": '" + s + "'");
  }
}

std::pair<double, double> parse_range(const std::string& s,
                                      const std::string& key) {
  auto parts = split(s, ':');
  if (parts.size() != 2)
    throw std::invalid_argument("config: expected 'lo:hi' for " + key);
  return {parse_double(parts[0], key), parse_double(parts[1], key)};
}

class KeyValues {
 public:
  explicit KeyValues(std::map<std::string, std::string> kv) : kv_(std::move(kv)) {}

  bool has(const std::string& key) {
    seen_.insert(key);
    return kv_.count(key) > 0;
  }
  std::string get(const std::string& key) {
    seen_.insert(key);
    auto it = kv_.find(key);
    if (it == kv_.end())
      throw std::invalid_argument("config: missing required key '" + key + "'");
    return it->second;
  }
  std::string get_or(const std::string& key, const std::string& fallback) {
    return has(key) ? get(key) : fallback;
  }
  void reject_unknown() const {
    for (const auto& [k, v] : kv_) {
      if (!seen_.count(k))
        throw std::invalid_argument("config: unknown key '" + k + "'");
    }
  }

 private:
  std::map<std::string, std::string> kv_;
  std::set<std::string> seen_;
};

}  // namespace

RunConfig RunConfig::parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("config: cannot open '" + path + "'");
  return parse(in, path);
}

RunConfig RunConfig::parse(std::istream& is, const std::string& origin) {
  std::map<std::string, std::string> raw;
  std::string line;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("config: " + origin + ":" +
                                  std::to_string(lineno) + ": expected key = value");
    std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    if (key.empty() || value.empty())
      throw std::invalid_argument("config: " + origin + ":" +
                                  std::to_string(lineno) + ": empty key or value");
    if (!raw.emplace(key, value).second)
      throw std::invalid_argument("config: duplicate key '" + key + "'");
  }
  KeyValues kv(std::move(raw));

  RunConfig cfg;
  cfg.dim = parse_int(kv.get("dim"), "dim");
  if (cfg.dim < 1) throw std::invalid_argument("config: dim must be >= 1");

  auto broadcast = [&](std::vector<std::string> items, const std::string& key) {
    if (items.size() == 1)
      items.assign(static_cast<std::size_t>(cfg.dim), items[0]);
    if (items.size() != static_cast<std::size_t>(cfg.dim))
      throw std::invalid_argument("config: " + key + " needs 1 or dim entries");
    return items;
  };

  for (const auto& c : broadcast(split(kv.get("grid.cells"), ','), "grid.cells"))
    cfg.cells.push_back(parse_int(c, "grid.cells"));

  std::string box = kv.get_or("grid.box", "auto");
  if (box == "auto") {
    cfg.auto_box = true;
  } else {
    cfg.auto_box = false;
    for (const auto& r : broadcast(split(box, ','), "grid.box")) {
      auto [lo, hi] = parse_range(r, "grid.box");
      cfg.box_lo.push_back(lo);
      cfg.box_hi.push_back(hi);
    }
  }

  ProfileKind kind = profile_kind_from_string(kv.get("init.kind"));
  double amplitude = parse_double(kv.get("init.amplitude"), "init.amplitude");
  std::vector<double> slo, shi;
  for (const auto& r : broadcast(split(kv.get("init.support"), ','), "init.support")) {
    auto [lo, hi] = parse_range(r, "init.support");
    slo.push_back(lo);
    shi.push_back(hi);
  }
  SignPattern sign = sign_pattern_from_string(kv.get_or("init.sign", "+"));
  cfg.init = InitialData::make(kind, cfg.dim, amplitude, std::move(slo),
                               std::move(shi), sign);

  cfg.t_final = parse_double(kv.get("time.t_final"), "time.t_final");
  if (!(cfg.t_final > 0.0))
    throw std::invalid_argument("config: time.t_final must be > 0");
  cfg.cfl = parse_double(kv.get_or("time.cfl", "0.9"), "time.cfl");

  std::string samples = kv.get_or("time.samples", "decades:10");
  if (samples.rfind("decades:", 0) == 0) {
    int per_decade = parse_int(samples.substr(8), "time.samples");
    double t_first = kv.has("time.t_first")
                         ? parse_double(kv.get("time.t_first"), "time.t_first")
                         : cfg.t_final / 100.0;
    cfg.sample_times = log_spaced_samples(t_first, cfg.t_final, per_decade);
  } else if (samples.rfind("list:", 0) == 0) {
    for (const auto& s : split(samples.substr(5), ','))
      cfg.sample_times.push_back(parse_double(s, "time.samples"));
  } else {
    throw std::invalid_argument("config: time.samples must be decades:N or list:...");
  }

  cfg.flux = flux_choice_from_string(kv.get_or("flux", "eo"));

  if (kv.has("analysis.window")) {
    auto [lo, hi] = parse_range(kv.get("analysis.window"), "analysis.window");
    cfg.window_lo = lo;
    cfg.window_hi = hi;
  } else {
    cfg.window_lo = 1.0;
    cfg.window_hi = cfg.t_final;
  }

  if (kv.has("analysis.gammas")) {
    for (const auto& g : split(kv.get("analysis.gammas"), ','))
      cfg.eq3_gammas.push_back(Rational::parse(g));
  }

  cfg.series_path = kv.get_or("output.series", "series.csv");
  cfg.report_prefix = kv.get_or("output.report_prefix", "report");

  kv.reject_unknown();
  return cfg;
}

Grid RunConfig::make_grid() const {
  if (auto_box) return auto_grid(init, cells, t_final, cfl, flux);
  return Grid::make(dim, cells, box_lo, box_hi);
}

}  // namespace burgers
