#pragma once

#include "kfloer/complex.hpp"

#include <filesystem>
#include <string>
#include <string_view>

namespace kfloer {

// Line-oriented text format, '#' starts a comment:
//
//   gen NAME GRADING I J
//   d NAME = 0
//   d NAME = TERM (+ TERM)*      TERM := [U^K] NAME, K >= 1
//
// Generators without a `d` line have zero boundary. Errors carry the
// 1-based line number.

ModelComplex parse_complex(std::string_view text);
ModelComplex load_complex(const std::filesystem::path& path);
std::string format_complex(const ModelComplex& c);

}  // namespace kfloer
