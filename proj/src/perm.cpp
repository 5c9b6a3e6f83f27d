#include "basecraft/perm.hpp"
#include "basecraft/kernels.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace basecraft {

Perm::Perm(std::size_t n) : img_(n) {
  std::iota(img_.begin(), img_.end(), Point{0});
}

Perm::Perm(std::vector<Point> images) : img_(std::move(images)) {
  std::vector<char> seen(img_.size(), 0);
  for (Point p : img_) {
    if (p >= img_.size() || seen[p])
      throw std::invalid_argument("image list is not a permutation");
    seen[p] = 1;
  }
}

Perm Perm::unchecked(std::vector<Point> images) {
  Perm p;
  p.img_ = std::move(images);
  return p;
}

Perm Perm::operator*(const Perm &b) const {
  if (b.degree() != degree())
    throw std::invalid_argument("degree mismatch");
  Perm r;
  r.img_.resize(img_.size());
  kernels::active().compose(img_.data(), b.img_.data(), r.img_.data(),
                            img_.size());
  return r;
}

Perm &Perm::operator*=(const Perm &b) {
  *this = *this * b;
  return *this;
}

void compose_into(const Perm &a, const Perm &b, std::vector<Point> &out) {
  out.resize(a.degree());
  kernels::active().compose(a.data(), b.data(), out.data(), a.degree());
}

Perm Perm::inverse() const {
  Perm r;
  r.img_.resize(img_.size());
  kernels::active().invert(img_.data(), r.img_.data(), img_.size());
  return r;
}

Perm Perm::pow(long long k) const {
  Perm base = k < 0 ? inverse() : *this;
  unsigned long long e = k < 0 ? -static_cast<unsigned long long>(k) : k;
  Perm r(degree());
  while (e) {
    if (e & 1)
      r = r * base;
    e >>= 1;
    if (e)
      base = base * base;
  }
  return r;
}

Perm Perm::conj(const Perm &g) const { return g.inverse() * *this * g; }

bool Perm::is_identity() const {
  return kernels::active().is_identity(img_.data(), img_.size());
}

std::size_t Perm::fixed_points() const {
  return kernels::active().count_fixed(img_.data(), img_.size());
}

std::vector<std::size_t> Perm::cycle_lengths() const {
  std::vector<std::size_t> out;
  std::vector<char> seen(img_.size(), 0);
  for (std::size_t i = 0; i < img_.size(); ++i) {
    if (seen[i])
      continue;
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = img_[j]) {
      seen[j] = 1;
      ++len;
    }
    if (len > 1)
      out.push_back(len);
  }
  return out;
}

BigInt Perm::order() const {
  BigInt r = 1;
  for (std::size_t len : cycle_lengths()) {
    BigInt l = static_cast<unsigned long>(len);
    mpz_lcm(r.get_mpz_t(), r.get_mpz_t(), l.get_mpz_t());
  }
  return r;
}

unsigned Perm::prime_order() const {
  std::size_t p = 0;
  for (std::size_t len : cycle_lengths()) {
    if (p == 0)
      p = len;
    else if (len != p)
      return 0;
  }
  if (p < 2)
    return 0;
  for (std::size_t d = 2; d * d <= p; ++d)
    if (p % d == 0)
      return 0;
  return static_cast<unsigned>(p);
}

bool Perm::is_even() const {
  std::size_t transpositions = 0;
  for (std::size_t len : cycle_lengths())
    transpositions += len - 1;
  return transpositions % 2 == 0;
}

std::string Perm::cycles() const {
  std::ostringstream os;
  std::vector<char> seen(img_.size(), 0);
  for (std::size_t i = 0; i < img_.size(); ++i) {
    if (seen[i] || img_[i] == i)
      continue;
    os << '(';
    bool first = true;
    for (std::size_t j = i; !seen[j]; j = img_[j]) {
      seen[j] = 1;
      if (!first)
        os << ' ';
      os << j;
      first = false;
    }
    os << ')';
  }
  std::string s = os.str();
  return s.empty() ? "()" : s;
}

std::string Perm::image_list() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < img_.size(); ++i)
    os << (i ? "," : "") << img_[i];
  os << ']';
  return os.str();
}

Perm Perm::from_cycles(const std::vector<std::vector<Point>> &cycles,
                       std::size_t degree) {
  std::vector<Point> img(degree);
  std::iota(img.begin(), img.end(), Point{0});
  std::vector<char> used(degree, 0);
  for (const auto &c : cycles) {
    for (std::size_t k = 0; k < c.size(); ++k) {
      Point a = c[k];
      if (a >= degree)
        throw std::invalid_argument("point " + std::to_string(a) +
                                    " outside degree");
      if (used[a])
        throw std::invalid_argument("point repeated in cycles");
      used[a] = 1;
      img[a] = c[(k + 1) % c.size()];
    }
  }
  return Perm(std::move(img));
}

namespace {

std::vector<Point> parse_numbers(std::string_view s) {
  std::vector<Point> out;
  std::size_t i = 0;
  while (i < s.size()) {
    if (std::isdigit(static_cast<unsigned char>(s[i]))) {
      unsigned long v = 0;
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
        v = v * 10 + (s[i++] - '0');
      out.push_back(static_cast<Point>(v));
    } else if (s[i] == ' ' || s[i] == ',' || s[i] == '\t') {
      ++i;
    } else {
      throw std::invalid_argument("unexpected character in permutation");
    }
  }
  return out;
}

} // namespace

Perm Perm::parse(std::string_view text, std::size_t degree) {
  auto b = text.find_first_not_of(" \t\r\n");
  auto e = text.find_last_not_of(" \t\r\n");
  if (b == std::string_view::npos)
    throw std::invalid_argument("empty permutation");
  text = text.substr(b, e - b + 1);
  if (text.front() == '[') {
    if (text.back() != ']')
      throw std::invalid_argument("unterminated image list");
    auto img = parse_numbers(text.substr(1, text.size() - 2));
    if (img.size() != degree)
      throw std::invalid_argument("image list length differs from degree");
    return Perm(std::move(img));
  }
  std::vector<std::vector<Point>> cycles;
  std::size_t i = 0;
  while (i < text.size()) {
    if (text[i] == ' ' || text[i] == '\t') {
      ++i;
      continue;
    }
    if (text[i] != '(')
      throw std::invalid_argument("expected '(' in cycle notation");
    auto close = text.find(')', i);
    if (close == std::string_view::npos)
      throw std::invalid_argument("unterminated cycle");
    auto c = parse_numbers(text.substr(i + 1, close - i - 1));
    if (!c.empty())
      cycles.push_back(std::move(c));
    i = close + 1;
  }
  return from_cycles(cycles, degree);
}

bool Perm::operator==(const Perm &o) const {
  return img_.size() == o.img_.size() &&
         kernels::active().equal(img_.data(), o.img_.data(), img_.size());
}

std::size_t PointVecHash::operator()(const std::vector<Point> &v) const {
  // FNV-1a over the words
  std::uint64_t h = 1469598103934665603ull;
  for (Point p : v) {
    h ^= p;
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h ^ (h >> 29));
}

std::size_t PermHash::operator()(const Perm &p) const {
  return PointVecHash{}(p.images());
}

} // namespace basecraft
