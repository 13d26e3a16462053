#pragma once

#include <string>

#include "ucat/sweep.hpp"

namespace ucat {

// Renders f with its cumulative positive/negative variation profiles, the
// sweep broken line, and the unimodal summands in distinct strokes.
std::string decomposition_svg(const PLFunction& f, const UnimodalDecomposition& d);

void write_text_file(const std::string& path, const std::string& content);

} // namespace ucat
