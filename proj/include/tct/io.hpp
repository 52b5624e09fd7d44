#pragma once

#include "tct/instance.hpp"
#include "tct/solver.hpp"

#include <iosfwd>
#include <stdexcept>
#include <string>

namespace tct {

struct ParseError : std::runtime_error {
    int line;
    ParseError(int line_, const std::string& reason)
        : std::runtime_error("line " + std::to_string(line_) + ": " + reason),
          line(line_)
    {
    }
};

// Text format, one record per line, 1-based vertex ids:
//   c <comment>
//   p tct <n> <mode>        mode in {mct, gmwct, wgmwct}
//   e <u> <v> [<cost>]      cost allowed in wgmwct mode only
//   q <u> <v>               requests, mct mode only
//   t <set> <u1> <u2> ...   terminal sets, gmwct/wgmwct modes
//   k <int>
Instance parse_instance(std::istream& in);
Instance parse_instance_file(const std::string& path);
void print_instance(std::ostream& out, const Instance& inst);

// Cut files list one edge per line as "e <u> <v>" (1-based), comments allowed.
std::vector<EdgeId> parse_cut_file(const std::string& path, const Instance& inst);

// CLI driver; exit codes: 0 yes/solved/valid, 1 no/invalid, 2 usage or input error.
int run_cli(int argc, const char* const* argv);

} // namespace tct
