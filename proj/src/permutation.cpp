#include "sigma/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace sigma {

Permutation Permutation::identity(Point degree) {
  std::vector<Point> im(degree);
  std::iota(im.begin(), im.end(), 0u);
  return Permutation(std::move(im), unchecked_tag{});
}

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images)) {
  if (images_.empty()) throw std::invalid_argument("permutation degree must be positive");
  std::vector<bool> seen(images_.size(), false);
  for (Point v : images_) {
    if (v >= images_.size() || seen[v])
      throw std::invalid_argument("image array is not a bijection of {0..degree-1}");
    seen[v] = true;
  }
}

bool Permutation::is_identity() const {
  for (Point i = 0; i < degree(); ++i)
    if (images_[i] != i) return false;
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<Point> im(images_.size());
  for (Point i = 0; i < degree(); ++i) im[images_[i]] = i;
  return Permutation(std::move(im), unchecked_tag{});
}

std::uint64_t Permutation::order() const {
  std::uint64_t ord = 1;
  std::vector<bool> seen(images_.size(), false);
  for (Point i = 0; i < degree(); ++i) {
    if (seen[i]) continue;
    std::uint64_t len = 0;
    for (Point j = i; !seen[j]; j = images_[j]) {
      seen[j] = true;
      ++len;
    }
    ord = std::lcm(ord, len);
  }
  return ord;
}

std::vector<std::vector<Point>> Permutation::cycles() const {
  std::vector<std::vector<Point>> out;
  std::vector<bool> seen(images_.size(), false);
  for (Point i = 0; i < degree(); ++i) {
    if (seen[i] || images_[i] == i) {
      seen[i] = true;
      continue;
    }
    std::vector<Point> cyc;
    for (Point j = i; !seen[j]; j = images_[j]) {
      seen[j] = true;
      cyc.push_back(j);
    }
    out.push_back(std::move(cyc));
  }
  return out;
}

std::string Permutation::to_cycle_string() const {
  auto cs = cycles();
  if (cs.empty()) return "()";
  std::ostringstream os;
  for (auto& cyc : cs) {
    os << '(';
    for (std::size_t k = 0; k < cyc.size(); ++k) {
      if (k) os << ' ';
      os << cyc[k];
    }
    os << ')';
  }
  return os.str();
}

Permutation Permutation::parse_cycles(const std::string& text, Point degree) {
  if (degree == 0) throw std::invalid_argument("degree must be positive");
  std::vector<Point> im(degree);
  std::iota(im.begin(), im.end(), 0u);
  std::vector<bool> used(degree, false);

  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  if (i == text.size()) throw std::invalid_argument("empty permutation, expected cycles or \"()\"");
  bool any_cycle = false;
  while (i < text.size()) {
    skip_ws();
    if (i == text.size()) break;
    if (text[i] != '(') throw std::invalid_argument("expected '(' in cycle notation");
    ++i;
    std::vector<Point> cyc;
    while (true) {
      skip_ws();
      if (i == text.size()) throw std::invalid_argument("unterminated cycle, missing ')'");
      if (text[i] == ')') {
        ++i;
        break;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[i])))
        throw std::invalid_argument("expected point or ')' in cycle");
      std::uint64_t v = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        v = v * 10 + static_cast<std::uint64_t>(text[i] - '0');
        if (v > 0xffffffffull) throw std::invalid_argument("point out of range");
        ++i;
      }
      if (v >= degree) throw std::invalid_argument("point " + std::to_string(v) + " exceeds degree");
      Point pt = static_cast<Point>(v);
      if (used[pt]) throw std::invalid_argument("point " + std::to_string(v) + " repeated");
      used[pt] = true;
      cyc.push_back(pt);
    }
    any_cycle = true;
    for (std::size_t k = 0; k < cyc.size(); ++k) im[cyc[k]] = cyc[(k + 1) % cyc.size()];
  }
  if (!any_cycle) throw std::invalid_argument("expected at least one cycle");
  return Permutation(std::move(im));
}

std::size_t Permutation::Hash::operator()(const Permutation& p) const noexcept {
  // FNV-1a over the image words
  std::size_t h = 1469598103934665603ull;
  for (Point v : p.images()) {
    h ^= v;
    h *= 1099511628211ull;
  }
  return h;
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree()) throw std::invalid_argument("degree mismatch in composition");
  std::vector<Point> im(p.degree());
  for (Point i = 0; i < p.degree(); ++i) im[i] = q.images_[p.images_[i]];
  return Permutation(std::move(im), Permutation::unchecked_tag{});
}

Permutation conjugate(const Permutation& p, const Permutation& x) {
  if (p.degree() != x.degree()) throw std::invalid_argument("degree mismatch in conjugation");
  // q = x^-1 p x maps x[i] -> x[p[i]]
  std::vector<Point> im(p.degree());
  for (Point i = 0; i < p.degree(); ++i) im[x.images_[i]] = x.images_[p.images_[i]];
  return Permutation(std::move(im), Permutation::unchecked_tag{});
}

Permutation commutator(const Permutation& a, const Permutation& b) {
  return a.inverse() * b.inverse() * a * b;
}

}  // namespace sigma
