#pragma once

#include "coringlab/session.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace coringlab {

std::string report_json(const Report& r);

// args excludes the program name; returns 0 on pass, 1 on a failed check, 2 on an input error
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace coringlab
