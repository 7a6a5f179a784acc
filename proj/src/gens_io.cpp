#include "radgeo/gens_io.hpp"

#include <fstream>
#include <sstream>

namespace radgeo {

namespace {

std::string strip(const std::string& s) {
  auto hash = s.find('#');
  std::string t = s.substr(0, hash);
  auto b = t.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  auto e = t.find_last_not_of(" \t\r\n");
  return t.substr(b, e - b + 1);
}

std::uint32_t parse_point(const std::string& tok, std::size_t degree) {
  if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
    throw InputError("bad point '" + tok + "'");
  unsigned long v = std::stoul(tok);
  if (v < 1 || v > degree) throw InputError("point " + tok + " out of range 1.." + std::to_string(degree));
  return static_cast<std::uint32_t>(v - 1);
}

}  // namespace

Permutation parse_generator_line(const std::string& raw, std::size_t degree) {
  const std::string line = strip(raw);
  if (line.empty()) throw InputError("empty generator line");
  try {
    if (line.front() == '(') {
      std::vector<std::vector<std::uint32_t>> cycles;
      std::size_t i = 0;
      while (i < line.size()) {
        if (line[i] == ' ' || line[i] == '\t') { ++i; continue; }
        if (line[i] != '(') throw InputError("expected '(' in cycle notation");
        auto close = line.find(')', i);
        if (close == std::string::npos) throw InputError("unbalanced parenthesis");
        std::vector<std::uint32_t> cyc;
        std::stringstream body(line.substr(i + 1, close - i - 1));
        std::string tok;
        while (std::getline(body, tok, ',')) cyc.push_back(parse_point(strip(tok), degree));
        cycles.push_back(std::move(cyc));
        i = close + 1;
      }
      return Permutation::from_cycles(degree, cycles);
    }
    std::stringstream ss(line);
    std::string tok;
    std::vector<std::uint32_t> img;
    while (ss >> tok) img.push_back(parse_point(tok, degree));
    if (img.size() != degree)
      throw InputError("expected " + std::to_string(degree) + " images, got " + std::to_string(img.size()));
    return Permutation::from_images(img);
  } catch (const PermError& e) {
    throw InputError(e.what());
  }
}

GeneratorFile parse_generators(std::istream& in) {
  GeneratorFile f;
  std::string raw;
  std::size_t lineno = 0;
  bool header = false;
  while (std::getline(in, raw)) {
    ++lineno;
    const std::string line = strip(raw);
    if (line.empty()) continue;
    try {
      if (!header) {
        std::stringstream ss(line);
        std::string kw;
        long long deg = -1;
        if (!(ss >> kw >> deg) || kw != "perm" || deg < 1 || deg > static_cast<long long>(kMaxDegree))
          throw InputError("header must be 'perm <degree>'");
        f.degree = static_cast<std::size_t>(deg);
        header = true;
        continue;
      }
      f.gens.push_back(parse_generator_line(line, f.degree));
    } catch (const InputError& e) {
      throw InputError("line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  if (!header) throw InputError("missing 'perm <degree>' header");
  if (f.gens.empty()) throw InputError("no generators");
  return f;
}

GeneratorFile read_generators(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path.string());
  return parse_generators(in);
}

void write_generators(std::ostream& out, const GeneratorFile& f, bool cycles) {
  out << "perm " << f.degree << '\n';
  for (const auto& g : f.gens) {
    if (cycles) {
      out << (g.is_identity() ? std::string("()") : g.to_cycle_string(true)) << '\n';
      continue;
    }
    for (std::size_t i = 0; i < g.degree(); ++i) out << (i ? " " : "") << g[i] + 1;
    out << '\n';
  }
}

}  // namespace radgeo
