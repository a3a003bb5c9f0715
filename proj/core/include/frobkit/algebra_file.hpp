#pragma once

#include <filesystem>
#include <string>

#include "frobkit/algebra.hpp"

namespace frobkit {

/// Malformed algebra definition; what() starts with "origin:line:".
class AlgebraFileError : public Error {
 public:
  AlgebraFileError(std::string origin, int line, const std::string& msg)
      : Error(origin + ":" + std::to_string(line) + ": " + msg), origin_(std::move(origin)), line_(line) {}
  const std::string& origin() const { return origin_; }
  int line() const { return line_; }

 private:
  std::string origin_;
  int line_;
};

/// Line-based format, "#" comments:
///
///   field Q | field Fp <p>
///   univariate <label> : <monic polynomial in label>
///   structure
///     basis 1 <l2> ...
///     mul <li> <lj> = <linear combination>
///   tensor <fileA> <fileB>
///
/// Exactly one body form. Unlisted products are 0; products with 1 and the
/// mirror of a listed product are filled in. Coefficients are integers or p/q.
Algebra parse_algebra_text(const std::string& text, const std::string& origin = "<input>",
                           const std::filesystem::path& base_dir = ".", int depth = 0);

/// Reads a file; relative paths in `tensor` lines resolve against its directory.
Algebra load_algebra_file(const std::filesystem::path& path, int depth = 0);

}  // namespace frobkit
