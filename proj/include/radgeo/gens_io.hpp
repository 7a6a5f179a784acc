#pragma once

#include <filesystem>
#include <istream>
#include <ostream>
#include <string>
#include <vector>

#include "radgeo/perm.hpp"

namespace radgeo {

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct GeneratorFile {
  std::size_t degree = 0;
  std::vector<Permutation> gens;
};

/// Text format: first non-comment line `perm <degree>`, then one generator per
/// line, either as 1-based images or as 1-based cycles `(1,2,3)(4,5)`.
/// `#` starts a comment.
GeneratorFile parse_generators(std::istream& in);
GeneratorFile read_generators(const std::filesystem::path& path);
void write_generators(std::ostream& out, const GeneratorFile& f, bool cycles = false);

/// Parses one generator line; degree is needed for cycle notation.
Permutation parse_generator_line(const std::string& line, std::size_t degree);

}  // namespace radgeo
