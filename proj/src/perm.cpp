#include "kernelsplit/perm.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "kernelsplit/error.hpp"

namespace ks {

Perm::Perm(unsigned degree) {
  if (degree > kMaxDegree)
    fail(ErrorKind::InvalidInput, "permutation degree " + std::to_string(degree) + " exceeds limit");
  img_.resize(degree);
  std::iota(img_.begin(), img_.end(), Pt{0});
}

Perm Perm::from_images(std::vector<Pt> images) {
  if (images.size() > kMaxDegree)
    fail(ErrorKind::InvalidInput, "permutation degree exceeds limit");
  std::vector<bool> seen(images.size(), false);
  for (Pt x : images) {
    if (x >= images.size() || seen[x])
      fail(ErrorKind::InvalidInput, "image vector is not a bijection");
    seen[x] = true;
  }
  Perm p;
  p.img_ = std::move(images);
  return p;
}

Perm Perm::from_cycles(unsigned degree, const std::vector<std::vector<Pt>>& cycles) {
  Perm p(degree);
  std::vector<bool> used(degree, false);
  for (const auto& cyc : cycles) {
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      Pt from = cyc[i];
      Pt to = cyc[(i + 1) % cyc.size()];
      if (from >= degree || to >= degree)
        fail(ErrorKind::InvalidInput, "cycle point out of range");
      if (used[from])
        fail(ErrorKind::InvalidInput, "cycles are not disjoint");
      used[from] = true;
      p.img_[from] = to;
    }
  }
  return from_images(std::move(p.img_));
}

Perm Perm::parse_cycles(const std::string& text, unsigned min_degree) {
  std::vector<std::vector<Pt>> cycles;
  unsigned max_point = 0;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  if (i == text.size()) fail(ErrorKind::ParseError, "empty cycle string");
  while (i < text.size()) {
    skip_ws();
    if (i == text.size()) break;
    if (text[i] != '(') fail(ErrorKind::ParseError, "expected '(' in cycle string: " + text);
    ++i;
    std::vector<Pt> cyc;
    while (true) {
      skip_ws();
      if (i == text.size()) fail(ErrorKind::ParseError, "unterminated cycle: " + text);
      if (text[i] == ')') {
        ++i;
        break;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[i])))
        fail(ErrorKind::ParseError, "expected point or ')' in cycle string: " + text);
      unsigned long v = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        v = v * 10 + (text[i] - '0');
        if (v > kMaxDegree) fail(ErrorKind::ParseError, "point too large in cycle string");
        ++i;
      }
      if (v == 0) fail(ErrorKind::ParseError, "cycle points are 1-indexed; 0 is invalid");
      max_point = std::max<unsigned>(max_point, static_cast<unsigned>(v));
      cyc.push_back(static_cast<Pt>(v - 1));
      skip_ws();
      if (i < text.size() && text[i] == ',') ++i;  // tolerate comma separators
    }
    if (cyc.size() >= 2) cycles.push_back(std::move(cyc));
  }
  skip_ws();
  if (i != text.size()) fail(ErrorKind::ParseError, "trailing junk in cycle string: " + text);
  unsigned degree = std::max(min_degree, max_point);
  return from_cycles(degree, cycles);
}

bool Perm::is_identity() const {
  for (std::size_t i = 0; i < img_.size(); ++i)
    if (img_[i] != i) return false;
  return true;
}

Perm Perm::operator*(const Perm& rhs) const {
  if (degree() != rhs.degree())
    fail(ErrorKind::InvalidInput, "degree mismatch in permutation product");
  Perm r;
  r.img_.resize(img_.size());
  for (std::size_t i = 0; i < img_.size(); ++i) r.img_[i] = img_[rhs.img_[i]];
  return r;
}

Perm Perm::inverse() const {
  Perm r;
  r.img_.resize(img_.size());
  for (std::size_t i = 0; i < img_.size(); ++i) r.img_[img_[i]] = static_cast<Pt>(i);
  return r;
}

std::uint64_t Perm::order() const {
  std::vector<bool> seen(img_.size(), false);
  std::uint64_t ord = 1;
  for (std::size_t i = 0; i < img_.size(); ++i) {
    if (seen[i]) continue;
    std::uint64_t len = 0;
    std::size_t j = i;
    while (!seen[j]) {
      seen[j] = true;
      j = img_[j];
      ++len;
    }
    ord = std::lcm(ord, len);
  }
  return ord;
}

unsigned Perm::moved_points() const {
  unsigned n = 0;
  for (std::size_t i = 0; i < img_.size(); ++i)
    if (img_[i] != i) ++n;
  return n;
}

unsigned Perm::lowest_moved_point() const {
  for (std::size_t i = 0; i < img_.size(); ++i)
    if (img_[i] != i) return static_cast<unsigned>(i);
  return degree();
}

std::string Perm::cycle_string() const {
  std::ostringstream out;
  std::vector<bool> seen(img_.size(), false);
  bool any = false;
  for (std::size_t i = 0; i < img_.size(); ++i) {
    if (seen[i] || img_[i] == i) continue;
    any = true;
    out << '(';
    std::size_t j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = true;
      if (!first) out << ' ';
      out << (j + 1);
      first = false;
      j = img_[j];
    }
    out << ')';
  }
  if (!any) return "()";
  return out.str();
}

std::size_t PermHash::operator()(const Perm& p) const {
  // FNV-1a over the image words.
  std::size_t h = 1469598103934665603ull;
  for (Perm::Pt x : p.images()) {
    h ^= x;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace ks
