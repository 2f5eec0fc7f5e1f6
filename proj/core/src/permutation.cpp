#include "compa/permutation.hpp"

#include <numeric>
#include <sstream>

#include "compa/error.hpp"

namespace compa {

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images)) {
  std::vector<bool> hit(images_.size(), false);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    Point v = images_[i];
    if (v >= images_.size()) {
      throw InvalidArgument("image " + std::to_string(v) + " of point " + std::to_string(i) +
                            " out of range for degree " + std::to_string(images_.size()));
    }
    if (hit[v]) {
      throw InvalidArgument("point " + std::to_string(v) + " is the image of two points");
    }
    hit[v] = true;
  }
}

Permutation Permutation::identity(std::size_t degree) {
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  return from_images_unchecked(std::move(images));
}

Permutation Permutation::from_cycles(std::size_t degree,
                                     const std::vector<std::vector<Point>>& cycles) {
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  std::vector<bool> used(degree, false);
  for (const auto& cycle : cycles) {
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      Point a = cycle[k];
      if (a >= degree) {
        throw InvalidArgument("point " + std::to_string(a) + " out of range for degree " +
                              std::to_string(degree));
      }
      if (used[a]) {
        throw InvalidArgument("point " + std::to_string(a) + " appears twice in cycle notation");
      }
      used[a] = true;
      images[a] = cycle[(k + 1) % cycle.size()];
    }
  }
  return from_images_unchecked(std::move(images));
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

Point Permutation::first_moved_point() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return static_cast<Point>(i);
  }
  return static_cast<Point>(images_.size());
}

bool Permutation::is_even() const {
  std::size_t even_cycles = 0;
  for (const auto& c : cycles()) {
    if (c.size() % 2 == 0) ++even_cycles;
  }
  return even_cycles % 2 == 0;
}

Permutation Permutation::inverse() const {
  std::vector<Point> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) inv[images_[i]] = static_cast<Point>(i);
  return from_images_unchecked(std::move(inv));
}

Permutation Permutation::pow(std::int64_t exponent) const {
  Permutation base = exponent < 0 ? inverse() : *this;
  std::uint64_t e = exponent < 0 ? static_cast<std::uint64_t>(-(exponent + 1)) + 1
                                 : static_cast<std::uint64_t>(exponent);
  Permutation result = identity(degree());
  while (e > 0) {
    if (e & 1U) result = result * base;
    base = base * base;
    e >>= 1U;
  }
  return result;
}

std::uint64_t Permutation::order() const {
  std::uint64_t result = 1;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i]) continue;
    std::uint64_t len = 0;
    for (std::size_t j = i; !seen[j]; j = images_[j]) {
      seen[j] = true;
      ++len;
    }
    result = std::lcm(result, len);
  }
  return result;
}

std::vector<std::vector<Point>> Permutation::cycles() const {
  std::vector<std::vector<Point>> out;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i] || images_[i] == i) continue;
    std::vector<Point> cycle;
    for (Point j = static_cast<Point>(i); !seen[j]; j = images_[j]) {
      seen[j] = true;
      cycle.push_back(j);
    }
    out.push_back(std::move(cycle));
  }
  return out;
}

std::string Permutation::to_cycle_string() const {
  auto cs = cycles();
  if (cs.empty()) return "()";
  std::ostringstream os;
  for (const auto& c : cs) {
    os << '(';
    for (std::size_t k = 0; k < c.size(); ++k) {
      if (k) os << ' ';
      os << c[k];
    }
    os << ')';
  }
  return os.str();
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree()) {
    throw InvalidArgument("cannot compose permutations of degree " + std::to_string(p.degree()) +
                          " and " + std::to_string(q.degree()));
  }
  std::vector<Point> images(p.degree());
  for (std::size_t i = 0; i < images.size(); ++i) images[i] = q[p[static_cast<Point>(i)]];
  return Permutation::from_images_unchecked(std::move(images));
}

Permutation operator*(const Permutation& p, const Permutation& q) { return compose(p, q); }

Permutation conjugate(const Permutation& g, const Permutation& p) {
  // x^(p^-1 g p): p[x] -> p[g[x]]
  std::vector<Point> images(g.degree());
  for (std::size_t x = 0; x < images.size(); ++x) {
    images[p[static_cast<Point>(x)]] = p[g[static_cast<Point>(x)]];
  }
  return Permutation::from_images_unchecked(std::move(images));
}

Permutation commutator(const Permutation& a, const Permutation& b) {
  return a.inverse() * b.inverse() * a * b;
}

}  // namespace compa
