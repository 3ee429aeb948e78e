#include "sigma/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>
#include <stdexcept>

#include "sigma/numbers.hpp"
#include "sigma/subgroup_lattice.hpp"

namespace sigma {

FiniteGroup cyclic(std::uint64_t n) {
  if (n == 0 || n > 60000) throw std::invalid_argument("cyclic: bad order");
  if (n == 1) return FiniteGroup::trivial(1);
  std::vector<Point> im(n);
  for (Point i = 0; i < n; ++i) im[i] = (i + 1) % n;
  return FiniteGroup(static_cast<Point>(n), {Permutation(std::move(im))});
}

FiniteGroup dihedral(std::uint64_t order) {
  if (order < 6 || order % 2 != 0) throw std::invalid_argument("dihedral: order must be even and >= 6");
  Point n = static_cast<Point>(order / 2);
  std::vector<Point> rot(n), refl(n);
  for (Point i = 0; i < n; ++i) {
    rot[i] = (i + 1) % n;
    refl[i] = (n - i) % n;
  }
  return FiniteGroup(n, {Permutation(std::move(rot)), Permutation(std::move(refl))});
}

FiniteGroup symmetric(std::uint32_t n) {
  if (n == 0) throw std::invalid_argument("symmetric: n must be positive");
  if (n == 1) return FiniteGroup::trivial(1);
  std::vector<Permutation> gens{Permutation::parse_cycles("(0 1)", n)};
  if (n > 2) {
    std::vector<Point> im(n);
    for (Point i = 0; i < n; ++i) im[i] = (i + 1) % n;
    gens.emplace_back(std::move(im));
  }
  return FiniteGroup(n, std::move(gens));
}

FiniteGroup alternating(std::uint32_t n) {
  if (n < 3) throw std::invalid_argument("alternating: n must be at least 3");
  std::vector<Permutation> gens{Permutation::parse_cycles("(0 1 2)", n)};
  if (n > 3) {
    std::vector<Point> im(n);
    if (n % 2 == 1) {
      for (Point i = 0; i < n; ++i) im[i] = (i + 1) % n;  // n-cycle, even for odd n
    } else {
      im[0] = 0;
      for (Point i = 1; i < n; ++i) im[i] = i % (n - 1) + 1;  // (n-1)-cycle on 1..n-1
    }
    gens.emplace_back(std::move(im));
  }
  return FiniteGroup(n, std::move(gens));
}

FiniteGroup elementary_abelian(std::uint64_t p, std::uint32_t k) {
  if (!is_prime(p)) throw std::invalid_argument("elementary_abelian: p must be prime");
  if (k == 0 || p * k > 60000) throw std::invalid_argument("elementary_abelian: bad rank");
  Point degree = static_cast<Point>(p * k);
  std::vector<Permutation> gens;
  for (std::uint32_t c = 0; c < k; ++c) {
    std::vector<Point> im(degree);
    for (Point i = 0; i < degree; ++i) im[i] = i;
    for (Point i = 0; i < p; ++i)
      im[c * p + i] = static_cast<Point>(c * p + (i + 1) % p);
    gens.emplace_back(std::move(im));
  }
  return FiniteGroup(degree, std::move(gens));
}

FiniteGroup frobenius21() {
  return FiniteGroup(7, {Permutation::parse_cycles("(0 1 2 3 4 5 6)", 7),
                         Permutation::parse_cycles("(1 2 4)(3 6 5)", 7)});
}

namespace {

Permutation pad_left(const Permutation& p, Point total) {
  std::vector<Point> im(total);
  for (Point i = 0; i < total; ++i) im[i] = i < p.degree() ? p[i] : i;
  return Permutation(std::move(im));
}

Permutation shift_right(const Permutation& p, Point offset, Point total) {
  std::vector<Point> im(total);
  for (Point i = 0; i < total; ++i) im[i] = i;
  for (Point i = 0; i < p.degree(); ++i) im[offset + i] = offset + p[i];
  return Permutation(std::move(im));
}

}  // namespace

FiniteGroup DirectProduct::embed_left(const FiniteGroup& sub) const {
  if (sub.degree() != left_degree) throw std::invalid_argument("embed_left: degree mismatch");
  std::vector<Permutation> gens;
  for (const Permutation& g : sub.generators()) gens.push_back(pad_left(g, group.degree()));
  return subgroup_generated(group, std::move(gens));
}

FiniteGroup DirectProduct::embed_right(const FiniteGroup& sub) const {
  if (sub.degree() != right_degree) throw std::invalid_argument("embed_right: degree mismatch");
  std::vector<Permutation> gens;
  for (const Permutation& g : sub.generators())
    gens.push_back(shift_right(g, left_degree, group.degree()));
  return subgroup_generated(group, std::move(gens));
}

DirectProduct direct_product(const FiniteGroup& a, const FiniteGroup& b) {
  Point total = a.degree() + b.degree();
  std::vector<Permutation> gens;
  for (const Permutation& g : a.generators()) gens.push_back(pad_left(g, total));
  for (const Permutation& g : b.generators()) gens.push_back(shift_right(g, a.degree(), total));
  return DirectProduct{FiniteGroup(total, std::move(gens)), a.degree(), b.degree()};
}

Example12 example_1_2() {
  FiniteGroup f21 = frobenius21();
  FiniteGroup a5 = alternating(5);
  DirectProduct dp = direct_product(f21, a5);

  Example12 ex{
      dp.group,
      dp.embed_right(FiniteGroup(5, {Permutation::parse_cycles("(0 1 2)", 5),
                                     Permutation::parse_cycles("(0 1)(2 3)", 5)})),  // B
      dp.embed_right(FiniteGroup(5, {Permutation::parse_cycles("(0 1 2 3 4)", 5)})),  // A
      dp.embed_left(FiniteGroup(7, {Permutation::parse_cycles("(1 2 4)(3 6 5)", 7)})),
      dp.embed_left(FiniteGroup(7, {Permutation::parse_cycles("(0 1 2 3 4 5 6)", 7)})),
      dp.embed_right(a5),
      FiniteGroup::trivial(1),  // placeholders, filled below
      FiniteGroup::trivial(1),
      FiniteGroup::trivial(1),
      FiniteGroup::trivial(1),
      SigmaPartition::parse("2,3,5|7")};
  FiniteGroup f21_embedded = dp.embed_left(f21);
  ex.T1 = join(f21_embedded, ex.A);
  ex.T2 = join(ex.C7, ex.A5_factor);
  ex.H = join(ex.B, ex.C3_factor);
  ex.A5C3 = join(ex.A5_factor, ex.C3_factor);
  return ex;
}

// ---------------------------------------------------------------------------
// constructor-expression parser

namespace {

struct ExprParser {
  const std::string& text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }

  bool eat(char c) {
    skip_ws();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  std::string ident() {
    skip_ws();
    std::size_t start = pos;
    while (pos < text.size() &&
           (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
      ++pos;
    if (start == pos) throw std::invalid_argument("constructor expression: expected a name");
    return text.substr(start, pos - start);
  }

  std::uint64_t number() {
    skip_ws();
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (start == pos) throw std::invalid_argument("constructor expression: expected a number");
    return std::stoull(text.substr(start, pos - start));
  }

  std::string quoted() {
    skip_ws();
    if (pos >= text.size() || text[pos] != '"')
      throw std::invalid_argument("constructor expression: expected a quoted string");
    ++pos;
    std::size_t start = pos;
    while (pos < text.size() && text[pos] != '"') ++pos;
    if (pos == text.size()) throw std::invalid_argument("constructor expression: unterminated string");
    std::string out = text.substr(start, pos - start);
    ++pos;
    return out;
  }

  FiniteGroup expr() {
    std::string name = ident();
    if (!eat('(')) throw std::invalid_argument("constructor expression: expected '('");
    FiniteGroup out = dispatch(name);
    if (!eat(')')) throw std::invalid_argument("constructor expression: expected ')'");
    return out;
  }

  FiniteGroup dispatch(const std::string& name) {
    if (name == "cyclic") return cyclic(number());
    if (name == "dihedral") return dihedral(number());
    if (name == "symmetric") return symmetric(static_cast<std::uint32_t>(number()));
    if (name == "alternating") return alternating(static_cast<std::uint32_t>(number()));
    if (name == "elementary_abelian") {
      std::uint64_t p = number();
      if (!eat(',')) throw std::invalid_argument("elementary_abelian needs two arguments");
      return elementary_abelian(p, static_cast<std::uint32_t>(number()));
    }
    if (name == "frobenius21") return frobenius21();
    if (name == "product") {
      FiniteGroup a = expr();
      if (!eat(',')) throw std::invalid_argument("product needs two arguments");
      FiniteGroup b = expr();
      return direct_product(a, b).group;
    }
    if (name == "subgroup") {
      FiniteGroup parent = expr();
      std::vector<Permutation> gens;
      while (eat(',')) gens.push_back(Permutation::parse_cycles(quoted(), parent.degree()));
      return subgroup_generated(parent, std::move(gens));
    }
    throw std::invalid_argument("unknown constructor \"" + name + "\"");
  }
};

}  // namespace

FiniteGroup parse_constructor(const std::string& text) {
  ExprParser p{text};
  FiniteGroup out = p.expr();
  p.skip_ws();
  if (p.pos != text.size())
    throw std::invalid_argument("constructor expression: trailing input");
  return out;
}

// ---------------------------------------------------------------------------
// corpus

namespace {

std::string element_fingerprint(const FiniteGroup& g) {
  std::ostringstream os;
  os << g.degree() << ":";
  for (const Permutation& e : g.elements()) os << e.to_cycle_string() << ";";
  return os.str();
}

void add_entry(std::vector<CatalogEntry>& out, std::set<std::string>& seen, std::string name,
               std::string expr, FiniteGroup group, std::uint64_t expected,
               std::set<std::string> tags) {
  if (group.order() != expected)
    throw std::logic_error("catalog entry " + name + " has order " +
                           std::to_string(group.order()) + ", expected " +
                           std::to_string(expected));
  if (!seen.insert(element_fingerprint(group)).second) return;  // constructed twice
  StructureFlags flags = structure_predicates(group);
  if (flags.soluble) tags.insert("soluble");
  if (flags.nilpotent) tags.insert("nilpotent");
  if (group.is_abelian()) tags.insert("abelian");
  out.push_back({std::move(name), std::move(expr), std::move(group), expected, std::move(tags)});
}

}  // namespace

std::vector<CatalogEntry> corpus(std::uint64_t max_order) {
  std::vector<CatalogEntry> out;
  std::set<std::string> seen;

  auto add_expr = [&](const std::string& name, const std::string& expr, std::uint64_t expected,
                      std::set<std::string> tags) {
    if (expected > max_order) return;
    add_entry(out, seen, name, expr, parse_constructor(expr), expected, std::move(tags));
  };

  for (std::uint64_t n :
       {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 12, 14, 15, 16, 18, 20, 21, 24, 27, 30, 36, 60, 105})
    add_expr("c" + std::to_string(n), "cyclic(" + std::to_string(n) + ")", n, {"family:cyclic"});

  for (std::uint64_t m : {6, 8, 10, 12, 14, 16, 18, 20, 24})
    add_expr("d" + std::to_string(m), "dihedral(" + std::to_string(m) + ")", m,
             {"family:dihedral"});

  for (std::uint32_t n : {3, 4, 5}) {
    std::uint64_t fact = 1;
    for (std::uint32_t k = 2; k <= n; ++k) fact *= k;
    add_expr("s" + std::to_string(n), "symmetric(" + std::to_string(n) + ")", fact,
             {"family:symmetric"});
  }
  add_expr("a4", "alternating(4)", 12, {"family:alternating"});
  add_expr("a5", "alternating(5)", 60, {"family:alternating", "simple"});

  for (auto [p, k] : std::vector<std::pair<std::uint64_t, std::uint32_t>>{
           {2, 2}, {2, 3}, {2, 4}, {3, 2}, {5, 2}}) {
    std::uint64_t order = 1;
    for (std::uint32_t i = 0; i < k; ++i) order *= p;
    add_expr("e" + std::to_string(p) + "_" + std::to_string(k),
             "elementary_abelian(" + std::to_string(p) + "," + std::to_string(k) + ")", order,
             {"family:elementary-abelian"});
  }

  add_expr("f21", "frobenius21()", 21, {"family:frobenius"});

  // pairwise direct products of a short seed list
  struct Seed {
    std::string expr;
    std::uint64_t order;
    std::string name;
  };
  const std::vector<Seed> seeds{
      {"cyclic(2)", 2, "c2"},         {"cyclic(3)", 3, "c3"},
      {"cyclic(4)", 4, "c4"},         {"cyclic(5)", 5, "c5"},
      {"cyclic(6)", 6, "c6"},         {"cyclic(7)", 7, "c7"},
      {"cyclic(9)", 9, "c9"},         {"elementary_abelian(2,2)", 4, "v4"},
      {"dihedral(8)", 8, "d8"},       {"symmetric(3)", 6, "s3"},
      {"alternating(4)", 12, "a4"},   {"symmetric(4)", 24, "s4"},
      {"alternating(5)", 60, "a5"},   {"frobenius21()", 21, "f21"},
  };
  for (std::size_t i = 0; i < seeds.size(); ++i)
    for (std::size_t j = i; j < seeds.size(); ++j) {
      std::uint64_t order = seeds[i].order * seeds[j].order;
      if (order > max_order) continue;
      add_expr(seeds[i].name + "x" + seeds[j].name,
               "product(" + seeds[i].expr + ", " + seeds[j].expr + ")", order,
               {"family:product"});
    }

  if (1260 <= max_order)
    add_expr("g1260", "product(frobenius21(), alternating(5))", 1260,
             {"family:product", "example-1.2"});

  // conjugacy class representatives of the subgroups of small symmetric groups
  for (std::uint32_t n : {2, 3, 4, 5}) {
    FiniteGroup sn = symmetric(n);
    if (sn.order() > max_order) continue;
    SubgroupLattice lat = SubgroupLattice::build(sn);
    int counter = 0;
    for (const auto& cls : lat.conjugacy_classes()) {
      SubIdx rep = cls.front();
      if (rep == lat.bottom() || rep == lat.top()) continue;
      FiniteGroup g(n, lat.as_group(rep).generators());
      std::string name = "s" + std::to_string(n) + "sub" + std::to_string(counter++);
      std::ostringstream expr;
      expr << "subgroup(symmetric(" << n << ")";
      for (const Permutation& gen : g.generators()) expr << ", \"" << gen.to_cycle_string() << "\"";
      expr << ")";
      add_entry(out, seen, name, expr.str(), g, g.order(), {"family:symmetric-subgroup"});
    }
  }

  return out;
}

std::string catalog_manifest(const std::vector<CatalogEntry>& entries) {
  std::ostringstream os;
  for (const CatalogEntry& e : entries) os << e.name << " = " << e.expression << "\n";
  return os.str();
}

const CatalogEntry* find_entry(const std::vector<CatalogEntry>& entries, const std::string& name) {
  for (const CatalogEntry& e : entries)
    if (e.name == name) return &e;
  return nullptr;
}

}  // namespace sigma
