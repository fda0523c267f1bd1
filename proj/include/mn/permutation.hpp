#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace mn {

/// A bijection of {0..degree-1}, stored as the image table images()[i] = p(i).
///
/// The product p * q acts with the rightmost factor first:
/// (p * q)(i) = p(q(i)). This convention is global to the project.
class Permutation {
public:
  /// Identity on `degree` points.
  explicit Permutation(unsigned degree);

  /// From an image table; throws std::invalid_argument unless it is a
  /// bijection.
  explicit Permutation(std::vector<std::uint32_t> images);

  /// From disjoint cycles over {0..degree-1}. Points absent from every
  /// cycle are fixed. Throws on out-of-range or repeated points.
  static Permutation from_cycles(unsigned degree,
                                 const std::vector<std::vector<unsigned>> &cycles);

  unsigned degree() const { return static_cast<unsigned>(images_.size()); }
  std::uint32_t operator[](std::uint32_t point) const { return images_[point]; }
  const std::vector<std::uint32_t> &images() const { return images_; }

  bool is_identity() const;
  Permutation inverse() const;

  /// (p * q)(i) = p(q(i)); throws on degree mismatch.
  Permutation operator*(const Permutation &rhs) const;

  /// Order of the element (lcm of cycle lengths).
  std::uint64_t order() const;

  /// Nontrivial cycles, each starting at its least point, sorted by that
  /// point. Canonical, so equal permutations print identically.
  std::vector<std::vector<std::uint32_t>> cycles() const;

  /// "(0 1 2)(3 4)", or "()" for the identity.
  std::string cycle_string() const;

  /// Same mapping on `new_degree` >= degree points, fixing the new points.
  Permutation extended(unsigned new_degree) const;

  /// Same mapping shifted up by `offset` on `new_degree` points; the first
  /// `offset` points are fixed.
  Permutation shifted(unsigned offset, unsigned new_degree) const;

  friend bool operator==(const Permutation &a, const Permutation &b) = default;
  friend std::strong_ordering operator<=>(const Permutation &a,
                                          const Permutation &b) {
    return a.images_ <=> b.images_;
  }

private:
  std::vector<std::uint32_t> images_;
};

/// Convenience for test and construction code.
Permutation parse_cycles(unsigned degree, const std::string &text,
                         bool one_indexed = false);

} // namespace mn

template <> struct std::hash<mn::Permutation> {
  std::size_t operator()(const mn::Permutation &p) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (std::uint32_t v : p.images()) {
      h ^= v;
      h *= 0x100000001b3ULL;
    }
    return h;
  }
};
