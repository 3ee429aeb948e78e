#include "sigma/group_io.hpp"

#include <fstream>
#include <sstream>

namespace sigma {

namespace {

std::string strip(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

}  // namespace

FiniteGroup parse_group(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  std::optional<Point> degree;
  std::vector<Permutation> gens;
  while (std::getline(in, line)) {
    ++lineno;
    std::string s = strip(line);
    if (s.empty() || s[0] == '#') continue;
    if (!degree) {
      std::uint64_t d = 0;
      for (char c : s) {
        if (c < '0' || c > '9') throw GroupParseError(lineno, "expected degree, got \"" + s + "\"");
        d = d * 10 + static_cast<std::uint64_t>(c - '0');
        if (d > 0xffffffffull) throw GroupParseError(lineno, "degree out of range");
      }
      if (d == 0) throw GroupParseError(lineno, "degree must be positive");
      degree = static_cast<Point>(d);
      continue;
    }
    try {
      gens.push_back(Permutation::parse_cycles(s, *degree));
    } catch (const std::invalid_argument& e) {
      throw GroupParseError(lineno, e.what());
    }
  }
  if (!degree) throw GroupParseError(lineno, "missing degree line");
  return FiniteGroup(*degree, std::move(gens));
}

std::string format_group(const FiniteGroup& g) {
  std::ostringstream os;
  os << g.degree() << "\n";
  for (const Permutation& p : g.generators()) os << p.to_cycle_string() << "\n";
  return os.str();
}

FiniteGroup load_group(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open group file: " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_group(buf.str());
}

void save_group(const FiniteGroup& g, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write group file: " + path.string());
  out << format_group(g);
}

}  // namespace sigma
