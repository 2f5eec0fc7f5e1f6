#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "compa/perm_group.hpp"
#include "compa/permutation.hpp"

namespace compa {

/// Contents of a generator file:
///
///     degree: 5
///     (0 1 2 3 4)
///     (0 1)
///
/// One generator per line in disjoint-cycle notation over 0-based points;
/// "()" is the identity. Blank lines and lines starting with '#' are ignored.
struct GeneratorDocument {
  std::size_t degree = 0;
  std::vector<Permutation> generators;

  PermGroup group() const { return PermGroup(degree, generators); }
};

/// Parses one permutation in cycle notation. Throws InvalidArgument.
Permutation parse_cycles(std::string_view text, std::size_t degree);

/// Throws ParseError carrying the offending 1-based line number.
GeneratorDocument parse_generator_document(std::string_view text);
GeneratorDocument read_generator_file(const std::string& path);

std::string format_generator_document(std::size_t degree,
                                      const std::vector<Permutation>& generators);

}  // namespace compa
