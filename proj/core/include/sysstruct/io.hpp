#pragma once

#include <string>
#include <string_view>

#include "sysstruct/realization.hpp"

namespace sysstruct {

/// Realization file format: the size header (n, l, m, p), then one section
/// per matrix (A, Ahat, Abar, Atil, B, Bbar, C, Cbar, D) holding rows of
/// rational-number strings. Zero-sized matrices may be omitted. Optional
/// "labels u|x|w|y name..." lines name the variables. '#' starts a comment.
GeneralizedRealization parse_realization(std::string_view text);

std::string write_realization(const GeneralizedRealization& g);
std::string write_realization(const StateRealization& r);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view content);

}  // namespace sysstruct
