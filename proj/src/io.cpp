#include "hydfit/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace hydfit {

std::string format_full(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string format_fixed(double v, int precision) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", precision, v);
  return buf;
}

std::string format_compact(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%g", v);
  return buf;
}

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

[[noreturn]] void fail(const std::string& source, int line, const std::string& what) {
  std::ostringstream os;
  os << source << ":" << line << ": " << what;
  throw std::runtime_error(os.str());
}

double pick(const std::map<std::string, double>& kv, const std::string& key,
            const std::string& source) {
  const auto it = kv.find(key);
  if (it == kv.end()) throw std::runtime_error(source + ": missing key '" + key + "'");
  return it->second;
}

void reject_extras(const std::map<std::string, double>& kv,
                   const std::vector<std::string>& allowed, const std::string& source) {
  for (const auto& [key, value] : kv) {
    (void)value;
    bool known = false;
    for (const auto& a : allowed) known = known || a == key;
    if (!known) throw std::runtime_error(source + ": unknown key '" + key + "'");
  }
}

}  // namespace

std::map<std::string, double> load_key_values(std::istream& in, const std::string& source) {
  std::map<std::string, double> kv;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) fail(source, line_no, "expected 'key = value'");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty() || value.empty()) fail(source, line_no, "expected 'key = value'");
    double parsed = 0.0;
    try {
      std::size_t pos = 0;
      parsed = std::stod(value, &pos);
      if (pos != value.size()) throw std::invalid_argument("trailing characters");
    } catch (const std::exception&) {
      fail(source, line_no, "malformed number '" + value + "'");
    }
    if (!kv.emplace(key, parsed).second) fail(source, line_no, "duplicate key '" + key + "'");
  }
  return kv;
}

ModelConfiguration load_config(std::istream& in, const std::string& source) {
  const auto kv = load_key_values(in, source);
  reject_extras(kv, config_field_names(), source);
  ModelConfiguration c;
  c.anf_capacity = pick(kv, "anf_capacity", source);
  c.ans_capacity = pick(kv, "ans_capacity", source);
  c.m_ae = pick(kv, "m_ae", source);
  c.m_ans = pick(kv, "m_ans", source);
  c.m_anf = pick(kv, "m_anf", source);
  c.phi = pick(kv, "phi", source);
  c.theta = pick(kv, "theta", source);
  c.gamma = pick(kv, "gamma", source);
  return c;
}

ModelConfiguration load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open configuration '" + path + "'");
  return load_config(in, path);
}

void write_config(std::ostream& out, const ModelConfiguration& c) {
  const Eigen::VectorXd v = to_genome(c);
  const auto& names = config_field_names();
  for (int i = 0; i < v.size(); ++i)
    out << names[static_cast<std::size_t>(i)] << " = " << format_full(v(i)) << '\n';
}

void write_config_file(const std::string& path, const ModelConfiguration& c) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write configuration '" + path + "'");
  write_config(out, c);
}

AthleteParams load_athlete(std::istream& in, const std::string& source) {
  const auto kv = load_key_values(in, source);
  reject_extras(kv, {"cp_watts", "w_prime_joules"}, source);
  AthleteParams a{pick(kv, "cp_watts", source), pick(kv, "w_prime_joules", source)};
  require_valid(a);
  return a;
}

AthleteParams load_athlete_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open athlete file '" + path + "'");
  return load_athlete(in, path);
}

void write_athlete(std::ostream& out, const AthleteParams& a) {
  out << "cp_watts = " << format_full(a.cp) << '\n';
  out << "w_prime_joules = " << format_full(a.w_prime) << '\n';
}

SearchBounds load_bounds(std::istream& in, const std::string& source) {
  const auto kv = load_key_values(in, source);
  std::vector<std::string> allowed;
  for (const auto& name : config_field_names()) {
    allowed.push_back(name + "_min");
    allowed.push_back(name + "_max");
  }
  reject_extras(kv, allowed, source);
  SearchBounds b;
  b.lower.resize(8);
  b.upper.resize(8);
  const auto& names = config_field_names();
  for (int i = 0; i < 8; ++i) {
    b.lower(i) = pick(kv, names[static_cast<std::size_t>(i)] + "_min", source);
    b.upper(i) = pick(kv, names[static_cast<std::size_t>(i)] + "_max", source);
    if (!(b.lower(i) < b.upper(i)))
      throw std::runtime_error(source + ": bound '" + names[static_cast<std::size_t>(i)] +
                               "' has min >= max");
  }
  return b;
}

SearchBounds load_bounds_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open bounds file '" + path + "'");
  return load_bounds(in, path);
}

void write_bounds(std::ostream& out, const SearchBounds& b) {
  const auto& names = config_field_names();
  for (int i = 0; i < 8; ++i) {
    out << names[static_cast<std::size_t>(i)] << "_min = " << format_full(b.lower(i)) << '\n';
    out << names[static_cast<std::size_t>(i)] << "_max = " << format_full(b.upper(i)) << '\n';
  }
}

}  // namespace hydfit
