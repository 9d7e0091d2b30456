#include "invgen/perm.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "invgen/errors.hpp"

namespace invgen {

Perm::Perm(int n) : images_(n) {
  std::iota(images_.begin(), images_.end(), 0);
}

Perm::Perm(std::vector<int> images) : images_(std::move(images)) {
  std::vector<char> seen(images_.size(), 0);
  for (int v : images_) {
    if (v < 0 || v >= degree() || seen[v])
      throw Error(Errc::InvalidArgument, "image table is not a bijection");
    seen[v] = 1;
  }
}

bool Perm::is_identity() const {
  for (int i = 0; i < degree(); ++i)
    if (images_[i] != i) return false;
  return true;
}

Perm Perm::inverse() const {
  std::vector<int> inv(images_.size());
  for (int i = 0; i < degree(); ++i) inv[images_[i]] = i;
  Perm p;
  p.images_ = std::move(inv);
  return p;
}

int Perm::support_size() const {
  int count = 0;
  for (int i = 0; i < degree(); ++i)
    if (images_[i] != i) ++count;
  return count;
}

bool Perm::has_fixed_point() const {
  for (int i = 0; i < degree(); ++i)
    if (images_[i] == i) return true;
  return false;
}

long Perm::order() const {
  long result = 1;
  for (const auto& cycle : cycles())
    result = std::lcm(result, static_cast<long>(cycle.size()));
  return result;
}

Perm compose(const Perm& g, const Perm& h) {
  if (g.degree() != h.degree())
    throw Error(Errc::InvalidArgument, "composing permutations of different degrees");
  std::vector<int> images(g.degree());
  for (int i = 0; i < g.degree(); ++i) images[i] = g.images_[h.images_[i]];
  Perm p;
  p.images_ = std::move(images);
  return p;
}

Perm conjugate(const Perm& g, const Perm& x) {
  return compose(compose(x.inverse(), g), x);
}

std::vector<std::vector<int>> Perm::cycles() const {
  std::vector<std::vector<int>> result;
  std::vector<char> seen(images_.size(), 0);
  for (int i = 0; i < degree(); ++i) {
    if (seen[i]) continue;
    std::vector<int> cycle;
    int j = i;
    do {
      seen[j] = 1;
      cycle.push_back(j);
      j = images_[j];
    } while (j != i);
    result.push_back(std::move(cycle));
  }
  return result;
}

std::string Perm::to_cycle_string() const {
  std::ostringstream out;
  bool any = false;
  for (const auto& cycle : cycles()) {
    if (cycle.size() < 2) continue;
    any = true;
    out << '(';
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      if (k) out << ' ';
      out << cycle[k];
    }
    out << ')';
  }
  return any ? out.str() : "id";
}

Perm Perm::from_cycle_string(const std::string& text, int degree) {
  std::vector<int> images(degree);
  std::iota(images.begin(), images.end(), 0);
  std::vector<char> used(degree, 0);
  std::size_t i = 0;
  auto skip_space = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_space();
  if (text.compare(i, 2, "id") == 0) i += 2;
  while (true) {
    skip_space();
    if (i >= text.size()) break;
    if (text[i] != '(')
      throw Error(Errc::ParseError, "expected '(' in cycle string: " + text);
    ++i;
    std::vector<int> cycle;
    while (true) {
      skip_space();
      if (i < text.size() && text[i] == ')') {
        ++i;
        break;
      }
      if (i < text.size() && text[i] == ',') {
        ++i;
        continue;
      }
      std::size_t start = i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      if (start == i)
        throw Error(Errc::ParseError, "expected point index in cycle string: " + text);
      int point = std::stoi(text.substr(start, i - start));
      if (point < 0 || point >= degree)
        throw Error(Errc::ParseError, "point out of range in cycle string: " + text);
      cycle.push_back(point);
    }
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      int from = cycle[k];
      int to = cycle[(k + 1) % cycle.size()];
      if (used[from])
        throw Error(Errc::ParseError, "point repeated across cycles: " + text);
      used[from] = 1;
      images[from] = to;
    }
  }
  return Perm(std::move(images));
}

std::size_t PermHash::operator()(const Perm& p) const {
  std::size_t h = 1469598103934665603ull;
  for (int v : p.images()) {
    h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ull;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace invgen
