#include "mn/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace mn {

Permutation::Permutation(unsigned degree) : images_(degree) {
  std::iota(images_.begin(), images_.end(), 0u);
}

Permutation::Permutation(std::vector<std::uint32_t> images)
    : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (std::uint32_t v : images_) {
    if (v >= images_.size() || seen[v])
      throw std::invalid_argument("image table is not a bijection");
    seen[v] = true;
  }
}

Permutation Permutation::from_cycles(
    unsigned degree, const std::vector<std::vector<unsigned>> &cycles) {
  std::vector<std::uint32_t> images(degree);
  std::iota(images.begin(), images.end(), 0u);
  std::vector<bool> used(degree, false);
  for (const auto &cycle : cycles) {
    for (unsigned p : cycle) {
      if (p >= degree)
        throw std::invalid_argument("cycle point " + std::to_string(p) +
                                    " out of range for degree " +
                                    std::to_string(degree));
      if (used[p])
        throw std::invalid_argument("point " + std::to_string(p) +
                                    " appears twice in cycle data");
      used[p] = true;
    }
    for (std::size_t k = 0; k < cycle.size(); ++k)
      images[cycle[k]] = cycle[(k + 1) % cycle.size()];
  }
  return Permutation(std::move(images));
}

bool Permutation::is_identity() const {
  for (std::uint32_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i)
      return false;
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<std::uint32_t> inv(images_.size());
  for (std::uint32_t i = 0; i < images_.size(); ++i)
    inv[images_[i]] = i;
  Permutation result(0u);
  result.images_ = std::move(inv);
  return result;
}

Permutation Permutation::operator*(const Permutation &rhs) const {
  if (degree() != rhs.degree())
    throw std::invalid_argument("degree mismatch in permutation product");
  std::vector<std::uint32_t> prod(images_.size());
  for (std::uint32_t i = 0; i < images_.size(); ++i)
    prod[i] = images_[rhs.images_[i]];
  Permutation result(0u);
  result.images_ = std::move(prod);
  return result;
}

std::uint64_t Permutation::order() const {
  std::uint64_t result = 1;
  for (const auto &cycle : cycles())
    result = std::lcm<std::uint64_t>(result, cycle.size());
  return result;
}

std::vector<std::vector<std::uint32_t>> Permutation::cycles() const {
  std::vector<std::vector<std::uint32_t>> result;
  std::vector<bool> seen(images_.size(), false);
  for (std::uint32_t start = 0; start < images_.size(); ++start) {
    if (seen[start] || images_[start] == start)
      continue;
    std::vector<std::uint32_t> cycle;
    std::uint32_t p = start;
    do {
      seen[p] = true;
      cycle.push_back(p);
      p = images_[p];
    } while (p != start);
    result.push_back(std::move(cycle));
  }
  return result;
}

std::string Permutation::cycle_string() const {
  auto cs = cycles();
  if (cs.empty())
    return "()";
  std::ostringstream out;
  for (const auto &cycle : cs) {
    out << '(';
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      if (k)
        out << ' ';
      out << cycle[k];
    }
    out << ')';
  }
  return out.str();
}

Permutation Permutation::extended(unsigned new_degree) const {
  if (new_degree < degree())
    throw std::invalid_argument("cannot extend to a smaller degree");
  std::vector<std::uint32_t> images(new_degree);
  std::iota(images.begin(), images.end(), 0u);
  std::copy(images_.begin(), images_.end(), images.begin());
  Permutation result(0u);
  result.images_ = std::move(images);
  return result;
}

Permutation Permutation::shifted(unsigned offset, unsigned new_degree) const {
  if (new_degree < offset + degree())
    throw std::invalid_argument("shifted permutation does not fit");
  std::vector<std::uint32_t> images(new_degree);
  std::iota(images.begin(), images.end(), 0u);
  for (std::uint32_t i = 0; i < degree(); ++i)
    images[offset + i] = offset + images_[i];
  Permutation result(0u);
  result.images_ = std::move(images);
  return result;
}

Permutation parse_cycles(unsigned degree, const std::string &text,
                         bool one_indexed) {
  std::vector<std::vector<unsigned>> cycles;
  std::size_t pos = 0;
  auto skip_space = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  };
  skip_space();
  while (pos < text.size()) {
    if (text[pos] != '(')
      throw std::invalid_argument("expected '(' in cycle notation at column " +
                                  std::to_string(pos + 1));
    ++pos;
    std::vector<unsigned> cycle;
    skip_space();
    while (pos < text.size() && text[pos] != ')') {
      if (!std::isdigit(static_cast<unsigned char>(text[pos])))
        throw std::invalid_argument("expected point in cycle at column " +
                                    std::to_string(pos + 1));
      unsigned value = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        value = value * 10 + static_cast<unsigned>(text[pos] - '0');
        ++pos;
      }
      if (one_indexed) {
        if (value == 0)
          throw std::invalid_argument("point 0 invalid in 1-indexed input");
        value -= 1;
      }
      cycle.push_back(value);
      skip_space();
    }
    if (pos >= text.size())
      throw std::invalid_argument("unterminated cycle");
    ++pos; // ')'
    if (cycle.size() > 1)
      cycles.push_back(std::move(cycle));
    skip_space();
  }
  return Permutation::from_cycles(degree, cycles);
}

} // namespace mn
