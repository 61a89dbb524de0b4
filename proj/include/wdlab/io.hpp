#pragma once

// Plain-text formats. Tokens are whitespace separated and '#' starts a
// comment that runs to the end of the line.
//
//   profile           m n, then n lines of m indices, most preferred first
//   weighted profile  same, each line led by a p/q weight
//   digraph           m e, then e lines "u v" for the arc u->v
//   x3c               q s, then s lines of three element indices

#include <string>
#include <string_view>

#include <json.hpp>

#include "wdlab/core.hpp"
#include "wdlab/reductions.hpp"

namespace wdlab {

/// All parsers throw InvalidArgument naming the offending line.
Profile parse_profile(std::string_view text);
WeightedProfile parse_weighted_profile(std::string_view text);
Digraph parse_digraph(std::string_view text);
X3CInstance parse_x3c(std::string_view text);

std::string format_profile(const Profile& p);
std::string format_weighted_profile(const WeightedProfile& p);
std::string format_digraph(const Digraph& g);
std::string format_x3c(const X3CInstance& inst);

/// Index map and counts of a Dodgson reduction, for the sidecar file.
nlohmann::json layout_json(const DodgsonReductionOutput& out);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

}  // namespace wdlab
