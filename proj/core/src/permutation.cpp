#include "residua/permutation.hpp"

#include <numeric>
#include <sstream>

#include "residua/errors.hpp"

namespace residua {

Permutation::Permutation(std::size_t degree) : images_(degree) {
  std::iota(images_.begin(), images_.end(), Point{0});
}

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (Point p : images_) {
    if (p >= images_.size() || seen[p]) throw InputError("image list is not a permutation");
    seen[p] = true;
  }
}

Permutation Permutation::from_cycles(std::string_view text, std::size_t degree, bool one_indexed) {
  if (degree == 0) throw InputError("permutation degree must be positive");
  if (degree > 65535) throw InputError("permutation degree too large");
  std::vector<Point> img(degree);
  std::iota(img.begin(), img.end(), Point{0});
  std::vector<bool> used(degree, false);
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t' || text[i] == ',')) ++i;
  };
  skip_ws();
  while (i < text.size()) {
    if (text[i] != '(') throw InputError("expected '(' in cycle string: " + std::string(text));
    ++i;
    std::vector<std::size_t> cycle;
    for (;;) {
      skip_ws();
      if (i >= text.size()) throw InputError("unterminated cycle: " + std::string(text));
      if (text[i] == ')') {
        ++i;
        break;
      }
      std::size_t v = 0;
      bool any = false;
      while (i < text.size() && text[i] >= '0' && text[i] <= '9') {
        v = v * 10 + static_cast<std::size_t>(text[i] - '0');
        if (v > 1000000) throw InputError("point out of range: " + std::string(text));
        any = true;
        ++i;
      }
      if (!any) throw InputError("bad character in cycle string: " + std::string(text));
      if (one_indexed) {
        if (v == 0) throw InputError("point 0 in 1-indexed cycle string");
        --v;
      }
      if (v >= degree) throw InputError("point exceeds degree in: " + std::string(text));
      if (used[v]) throw InputError("point repeated in cycle string: " + std::string(text));
      used[v] = true;
      cycle.push_back(v);
    }
    for (std::size_t k = 0; k < cycle.size(); ++k)
      img[cycle[k]] = static_cast<Point>(cycle[(k + 1) % cycle.size()]);
    skip_ws();
  }
  return Permutation(std::move(img));
}

bool Permutation::is_identity() const {
  for (std::size_t x = 0; x < images_.size(); ++x)
    if (images_[x] != x) return false;
  return true;
}

std::optional<Point> Permutation::first_moved() const {
  for (std::size_t x = 0; x < images_.size(); ++x)
    if (images_[x] != x) return static_cast<Point>(x);
  return std::nullopt;
}

Permutation Permutation::inverse() const {
  Permutation out;
  out.images_.resize(images_.size());
  for (std::size_t x = 0; x < images_.size(); ++x) out.images_[images_[x]] = static_cast<Point>(x);
  return out;
}

std::uint64_t Permutation::element_order() const {
  std::vector<bool> seen(images_.size(), false);
  std::uint64_t ord = 1;
  for (std::size_t x = 0; x < images_.size(); ++x) {
    if (seen[x]) continue;
    std::uint64_t len = 0;
    for (std::size_t y = x; !seen[y]; y = images_[y]) {
      seen[y] = true;
      ++len;
    }
    ord = std::lcm(ord, len);
  }
  return ord;
}

Permutation Permutation::pow(std::uint64_t k) const {
  Permutation result(degree());
  Permutation base = *this;
  while (k) {
    if (k & 1) result = result * base;
    base = base * base;
    k >>= 1;
  }
  return result;
}

std::string Permutation::to_cycles(bool one_indexed) const {
  std::ostringstream os;
  std::vector<bool> seen(images_.size(), false);
  const std::size_t shift = one_indexed ? 1 : 0;
  for (std::size_t x = 0; x < images_.size(); ++x) {
    if (seen[x] || images_[x] == x) continue;
    os << '(';
    bool first = true;
    for (std::size_t y = x; !seen[y]; y = images_[y]) {
      seen[y] = true;
      if (!first) os << ' ';
      os << y + shift;
      first = false;
    }
    os << ')';
  }
  std::string s = os.str();
  return s.empty() ? "()" : s;
}

std::size_t Permutation::hash() const {
  std::uint64_t h = 1469598103934665603ull;
  for (Point p : images_) {
    h ^= p;
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree()) throw InputError("degree mismatch in product");
  Permutation out;
  out.images_.resize(a.images_.size());
  for (std::size_t x = 0; x < a.images_.size(); ++x) out.images_[x] = b.images_[a.images_[x]];
  return out;
}

Permutation identity(std::size_t degree) { return Permutation(degree); }

Permutation conjugate(const Permutation& g, const Permutation& h) { return h.inverse() * g * h; }

Permutation commutator(const Permutation& a, const Permutation& b) {
  return a.inverse() * b.inverse() * a * b;
}

}  // namespace residua
