#pragma once

#include <iosfwd>
#include <span>
#include <string>

#include "parcut/cut_result.hpp"
#include "parcut/driver.hpp"

namespace parcut {

// args excludes the program name.
int run_cli(std::span<const std::string> args, std::ostream& out, std::ostream& err);

std::string result_json(const CutResult& r, Mode mode, bool with_stats);
std::string approx_json(const ApproxResult& r, std::uint64_t seed, bool with_stats);

}  // namespace parcut
