#pragma once

#include "basecraft/numeric.hpp"

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace basecraft {

using Point = std::uint32_t;

// A permutation of {0,...,n-1} stored by images. Products compose left to
// right: (a*b)[i] = b[a[i]], i.e. i^(ab) = (i^a)^b.
class Perm {
public:
  Perm() = default;
  explicit Perm(std::size_t n);
  // Throws std::invalid_argument unless images is a bijection.
  explicit Perm(std::vector<Point> images);

  static Perm unchecked(std::vector<Point> images);

  std::size_t degree() const { return img_.size(); }
  Point operator[](std::size_t i) const { return img_[i]; }
  Point apply(Point i) const { return img_[i]; }
  const Point *data() const { return img_.data(); }
  const std::vector<Point> &images() const { return img_; }

  Perm operator*(const Perm &b) const;
  Perm &operator*=(const Perm &b);
  Perm inverse() const;
  Perm pow(long long k) const;
  // x^g = g^-1 x g
  Perm conj(const Perm &g) const;

  bool is_identity() const;
  std::size_t fixed_points() const;
  BigInt order() const;
  // Cycle lengths of the nontrivial cycles, unsorted.
  std::vector<std::size_t> cycle_lengths() const;
  // Prime p if the permutation has order p, else 0.
  unsigned prime_order() const;
  bool is_even() const;

  std::string cycles() const;
  std::string image_list() const;

  // Accepts cycle notation "(0 1 2)(3 4)" or "()" and image lists "[1,0,2]".
  static Perm parse(std::string_view text, std::size_t degree);
  static Perm from_cycles(const std::vector<std::vector<Point>> &cycles,
                          std::size_t degree);

  bool operator==(const Perm &o) const;
  bool operator!=(const Perm &o) const { return !(*this == o); }
  bool operator<(const Perm &o) const { return img_ < o.img_; }

private:
  std::vector<Point> img_;
};

// out = a*b without allocating.
void compose_into(const Perm &a, const Perm &b, std::vector<Point> &out);

struct PermHash {
  std::size_t operator()(const Perm &p) const;
};

struct PointVecHash {
  std::size_t operator()(const std::vector<Point> &v) const;
};

} // namespace basecraft
