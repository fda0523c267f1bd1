#include "mn/catalog.hpp"

#include "mn/constructions.hpp"

#include <stdexcept>

namespace mn {

namespace {

unsigned parse_unsigned(const std::string &text, const std::string &what) {
  try {
    std::size_t used = 0;
    unsigned long value = std::stoul(text, &used);
    if (used != text.size() || value > 0xffffffffUL)
      throw std::invalid_argument("");
    return static_cast<unsigned>(value);
  } catch (...) {
    throw std::invalid_argument("invalid " + what + ": '" + text + "'");
  }
}

void expect_args(const std::vector<std::string> &args, std::size_t n,
                 const std::string &name) {
  if (args.size() != n)
    throw std::invalid_argument("builtin '" + name + "' expects " +
                                std::to_string(n) + " argument(s), got " +
                                std::to_string(args.size()));
}

} // namespace

PermGroup build_builtin(const std::string &name,
                        const std::vector<std::string> &args) {
  if (name == "cyclic") {
    expect_args(args, 1, name);
    return groups::cyclic(parse_unsigned(args[0], "cyclic order"));
  }
  if (name == "dihedral") {
    expect_args(args, 1, name);
    return groups::dihedral(parse_unsigned(args[0], "dihedral parameter"));
  }
  if (name == "symmetric") {
    expect_args(args, 1, name);
    unsigned n = parse_unsigned(args[0], "symmetric degree");
    if (n > 6)
      throw std::invalid_argument("symmetric builtin limited to degree 6");
    return groups::symmetric(n);
  }
  if (name == "alternating") {
    expect_args(args, 1, name);
    unsigned n = parse_unsigned(args[0], "alternating degree");
    if (n > 6)
      throw std::invalid_argument("alternating builtin limited to degree 6");
    return groups::alternating(n);
  }
  if (name == "quaternion" || name == "q8") {
    expect_args(args, 0, name);
    return groups::quaternion();
  }
  if (name == "klein") {
    expect_args(args, 0, name);
    return groups::klein();
  }
  if (name == "heisenberg") {
    expect_args(args, 1, name);
    unsigned p = parse_unsigned(args[0], "heisenberg prime");
    if (p != 2 && p != 3 && p != 5)
      throw std::invalid_argument("heisenberg builtin limited to p in {2,3,5}");
    return groups::heisenberg(p);
  }
  if (name == "elementary-abelian") {
    expect_args(args, 2, name);
    return groups::elementary_abelian(parse_unsigned(args[0], "prime"),
                                      parse_unsigned(args[1], "rank"));
  }
  throw std::invalid_argument("unknown builtin '" + name + "'");
}

const std::vector<CatalogEntry> &catalog_entries() {
  static const std::vector<CatalogEntry> entries = [] {
    std::vector<CatalogEntry> list;
    for (unsigned n : {1u, 2u, 3u, 4u, 5u, 6u, 8u, 9u, 10u, 12u, 16u, 18u,
                       24u, 27u, 32u, 64u, 81u, 128u})
      list.push_back({"C" + std::to_string(n),
                      "builtin cyclic " + std::to_string(n)});
    for (unsigned m : {3u, 4u, 5u, 6u, 7u, 8u, 9u, 10u, 12u, 16u, 24u, 48u})
      list.push_back({"D" + std::to_string(2 * m),
                      "builtin dihedral " + std::to_string(m)});
    for (unsigned n : {3u, 4u, 5u})
      list.push_back({"S" + std::to_string(n),
                      "builtin symmetric " + std::to_string(n)});
    for (unsigned n : {4u, 5u})
      list.push_back({"A" + std::to_string(n),
                      "builtin alternating " + std::to_string(n)});
    list.push_back({"Q8", "builtin quaternion"});
    list.push_back({"V4", "builtin klein"});
    for (unsigned p : {2u, 3u, 5u})
      list.push_back({"Heis" + std::to_string(p),
                      "builtin heisenberg " + std::to_string(p)});
    list.push_back({"E2^2", "builtin elementary-abelian 2 2"});
    list.push_back({"E2^3", "builtin elementary-abelian 2 3"});
    list.push_back({"E2^4", "builtin elementary-abelian 2 4"});
    list.push_back({"E3^2", "builtin elementary-abelian 3 2"});
    list.push_back({"E3^3", "builtin elementary-abelian 3 3"});
    list.push_back({"E5^2", "builtin elementary-abelian 5 2"});
    list.push_back({"Q8 x S3",
                    "product (builtin quaternion) (builtin symmetric 3)"});
    list.push_back({"Q8 x Q8",
                    "product (builtin quaternion) (builtin quaternion)"});
    list.push_back({"D8 x D8",
                    "product (builtin dihedral 4) (builtin dihedral 4)"});
    list.push_back({"S3 x S3",
                    "product (builtin symmetric 3) (builtin symmetric 3)"});
    list.push_back({"C2 x S3",
                    "product (builtin cyclic 2) (builtin symmetric 3)"});
    list.push_back({"Q8 x C3",
                    "product (builtin quaternion) (builtin cyclic 3)"});
    list.push_back({"S4 x C2",
                    "product (builtin symmetric 4) (builtin cyclic 2)"});
    list.push_back({"D10 x C5",
                    "product (builtin dihedral 5) (builtin cyclic 5)"});
    list.push_back({"A4 x C2",
                    "product (builtin alternating 4) (builtin cyclic 2)"});
    list.push_back({"C4 x C4",
                    "product (builtin cyclic 4) (builtin cyclic 4)"});
    return list;
  }();
  return entries;
}

} // namespace mn
