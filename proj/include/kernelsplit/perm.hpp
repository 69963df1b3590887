#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace ks {

// A permutation of {0, ..., degree-1}, stored as its image vector.
// Composition is function composition: (p * q)(x) = p(q(x)).
class Perm {
 public:
  using Pt = std::uint16_t;
  static constexpr unsigned kMaxDegree = 60'000;

  Perm() = default;                // degree 0; usable only as a placeholder
  explicit Perm(unsigned degree);  // identity

  static Perm from_images(std::vector<Pt> images);
  // Cycles are 0-indexed point lists; points absent from every cycle are fixed.
  static Perm from_cycles(unsigned degree, const std::vector<std::vector<Pt>>& cycles);
  // Parses 1-indexed cycle notation, e.g. "(1 2 3)(4 5)".  "()" is the
  // identity.  Degree is the largest point mentioned, or min_degree if larger.
  static Perm parse_cycles(const std::string& text, unsigned min_degree = 1);

  unsigned degree() const { return static_cast<unsigned>(img_.size()); }
  Pt operator[](Pt x) const { return img_[x]; }
  const std::vector<Pt>& images() const { return img_; }

  bool is_identity() const;
  Perm operator*(const Perm& rhs) const;
  Perm inverse() const;
  std::uint64_t order() const;
  unsigned moved_points() const;
  // Smallest point not fixed; degree() if the permutation is the identity.
  unsigned lowest_moved_point() const;

  // 1-indexed cycle notation; identity renders as "()".
  std::string cycle_string() const;

  friend bool operator==(const Perm& a, const Perm& b) = default;
  friend std::strong_ordering operator<=>(const Perm& a, const Perm& b) = default;

 private:
  std::vector<Pt> img_;
};

struct PermHash {
  std::size_t operator()(const Perm& p) const;
};

}  // namespace ks
