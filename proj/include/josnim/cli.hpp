#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "josnim/grundy.hpp"

namespace josnim::cli {

enum ExitCode : int { ok = 0, verification_failed = 1, usage_error = 2 };

// Entry point for the josnim tool; args excludes the program name.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

// Header "x,y,grundy,family,s,param1,param2", rows sorted by (x, y). grundy is
// the table value, the remaining columns come from classify.
void write_grundy_csv(std::ostream& out, const GrundyTable& table);

}  // namespace josnim::cli
