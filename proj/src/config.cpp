#include "sfc/config.hpp"

#include <fstream>
#include <sstream>

#include "sfc/error.hpp"

namespace sfc {

namespace {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::size_t parse_size(const std::string& key, const std::string& v) {
  try {
    std::size_t used = 0;
    long long x = std::stoll(v, &used);
    if (used != v.size() || x <= 0) throw InputError("");
    return static_cast<std::size_t>(x);
  } catch (const std::exception&) {
    throw InputError("config: '" + key + "' expects a positive integer, got '" + v + "'");
  }
}

bool parse_bool(const std::string& key, const std::string& v) {
  if (v == "true" || v == "1") return true;
  if (v == "false" || v == "0") return false;
  throw InputError("config: '" + key + "' expects true/false, got '" + v + "'");
}

}  // namespace

Config Config::from_text(const std::string& text) {
  Config c;
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto h = line.find('#'); h != std::string::npos) line.resize(h);
    line = trim(line);
    if (line.empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos)
      throw InputError("config line " + std::to_string(lineno) + ": expected key = value");
    std::string key = trim(line.substr(0, eq));
    std::string val = trim(line.substr(eq + 1));
    if (val.size() >= 2 && val.front() == '"' && val.back() == '"') val = val.substr(1, val.size() - 2);
    if (key == "monoid_cap") c.monoid_cap = parse_size(key, val);
    else if (key == "powerset_cap") c.powerset_cap = parse_size(key, val);
    else if (key == "powerset2_cap") c.powerset2_cap = parse_size(key, val);
    else if (key == "amt_alphabet_cap") c.amt_alphabet_cap = parse_size(key, val);
    else if (key == "amt_monoid_cap") c.amt_monoid_cap = parse_size(key, val);
    else if (key == "delay_dmax") c.delay_dmax = parse_size(key, val);
    else if (key == "round_cap") c.round_cap = parse_size(key, val);
    else if (key == "trace") c.trace = parse_bool(key, val);
    else throw InputError("config line " + std::to_string(lineno) + ": unknown key '" + key + "'");
  }
  c.validate();
  return c;
}

Config Config::from_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw InputError("cannot open config file '" + path + "'");
  std::stringstream ss;
  ss << f.rdbuf();
  return from_text(ss.str());
}

void Config::validate() const {
  if (monoid_cap == 0 || powerset_cap == 0 || powerset2_cap == 0 || amt_alphabet_cap == 0 ||
      amt_monoid_cap == 0 || delay_dmax == 0 || round_cap == 0)
    throw InputError("config: all caps must be positive");
  if (powerset_cap > 64) throw InputError("config: powerset_cap cannot exceed 64 (bitset width)");
}

}  // namespace sfc
