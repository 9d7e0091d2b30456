#include "invgen/tree/address.hpp"

#include <algorithm>

#include "invgen/errors.hpp"

namespace invgen::tree {

Address::Address(std::vector<Color> colors) : colors_(std::move(colors)) {
  for (std::size_t i = 0; i < colors_.size(); ++i) {
    if (colors_[i] < 1)
      throw Error(Errc::InvalidArgument, "address colors are 1-based");
    if (i > 0 && colors_[i] == colors_[i - 1])
      throw Error(Errc::InvalidArgument,
                  "address repeats a color on consecutive steps: " + to_string());
  }
}

Address Address::child(Color c) const {
  if (!colors_.empty() && c == colors_.back())
    throw Error(Errc::InvalidArgument, "child color equals the incoming color");
  std::vector<Color> next = colors_;
  next.push_back(c);
  Address a;
  a.colors_ = std::move(next);
  return a;
}

Address Address::parent() const {
  if (colors_.empty())
    throw Error(Errc::InvalidArgument, "the base vertex has no parent");
  Address a;
  a.colors_.assign(colors_.begin(), colors_.end() - 1);
  return a;
}

Address Address::neighbor(Color c) const {
  if (!colors_.empty() && c == colors_.back()) return parent();
  return child(c);
}

bool Address::is_prefix_of(const Address& other) const {
  if (depth() > other.depth()) return false;
  return std::equal(colors_.begin(), colors_.end(), other.colors_.begin());
}

Address Address::prefix(int length) const {
  Address a;
  a.colors_.assign(colors_.begin(), colors_.begin() + length);
  return a;
}

int common_prefix_length(const Address& a, const Address& b) {
  int n = std::min(a.depth(), b.depth());
  int i = 0;
  while (i < n && a.colors_[i] == b.colors_[i]) ++i;
  return i;
}

int distance(const Address& a, const Address& b) {
  int k = common_prefix_length(a, b);
  return a.depth() + b.depth() - 2 * k;
}

bool adjacent(const Address& a, const Address& b) {
  return distance(a, b) == 1;
}

Address step_toward(const Address& from, const Address& to) {
  if (from == to)
    throw Error(Errc::InvalidArgument, "no step from a vertex to itself");
  int k = common_prefix_length(from, to);
  if (k < from.depth()) return from.parent();
  return from.child(to.color_at(k));
}

std::string Address::to_string() const {
  std::string out;
  for (Color c : colors_) out += static_cast<char>('0' + c);
  return out;
}

Address Address::parse(const std::string& text, int valence) {
  if (text == "." || text.empty()) return Address();
  std::vector<Color> colors;
  for (char ch : text) {
    if (ch < '1' || ch > '9')
      throw Error(Errc::ParseError, "bad address digit in: " + text);
    int c = ch - '0';
    if (c > valence)
      throw Error(Errc::ParseError, "address color exceeds the valence: " + text);
    colors.push_back(c);
  }
  try {
    return Address(std::move(colors));
  } catch (const Error&) {
    throw Error(Errc::ParseError, "address backtracks: " + text);
  }
}

std::vector<Address> ball(const Address& center, int radius, int valence) {
  std::vector<Address> result{center};
  std::size_t level_start = 0;
  for (int r = 1; r <= radius; ++r) {
    std::size_t level_end = result.size();
    for (std::size_t i = level_start; i < level_end; ++i) {
      Address v = result[i];
      for (Color c = 1; c <= valence; ++c) {
        Address n = v.neighbor(c);
        // walking outward: skip the step back toward the center
        if (distance(n, center) == r) result.push_back(n);
      }
    }
    level_start = level_end;
  }
  return result;
}

std::vector<Address> sphere(const Address& center, int radius, int valence) {
  std::vector<Address> shell;
  for (const Address& v : ball(center, radius, valence))
    if (distance(v, center) == radius) shell.push_back(v);
  return shell;
}

}  // namespace invgen::tree
