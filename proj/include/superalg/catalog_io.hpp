#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "superalg/superspace.hpp"

namespace superalg {

// Line-based text format:
//
//   # comment
//   superalg <name> <n> <m>
//   <i> <j> <k> <num>/<den>      e_i e_j has coefficient num/den at e_k
//   assoc                        optional; entries below belong to *
//
// Indices are 0-based in the even-first basis.
struct AlgebraFile {
  std::string name;
  BilinearOp product;
  std::optional<BilinearOp> assoc;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what);
  int line() const { return line_; }

 private:
  int line_;
};

AlgebraFile parse_algebra(const std::string& text);
std::string serialize_algebra(const AlgebraFile& file);

AlgebraFile read_algebra_file(const std::string& path);  // "-" reads stdin
void write_algebra_file(const std::string& path, const AlgebraFile& file);  // "-" writes stdout

// Names accepted by catalog(); the parametrized ones are listed as
// zero(p|q) and abelian-lie(p|q).
std::vector<std::string> catalog_names();

// Throws std::invalid_argument for unknown names.
AlgebraFile catalog(const std::string& name);

// Fixed list used by the test suites: every catalog entry with small
// concrete parameters.
std::vector<AlgebraFile> catalog_examples();

// Even product with constants in [-2, 2]; each admissible constant is
// nonzero with probability about density.
BilinearOp random_superalgebra(std::uint64_t seed, int n, int m, double density);

}  // namespace superalg
