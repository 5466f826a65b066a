#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "permrep/families.hpp"

namespace permrep {

// A parsed generator file. Format: first significant line "degree n", then
// one generator per line in cycle notation. '#' starts a comment anywhere
// on a line; blank lines are skipped. Insertion order is file order.
struct GeneratorFile {
  std::string path;
  int degree = 0;
  GeneratorSet gens;
};

// Exit codes shared by all subcommands:
//   0 success (for member: the perm is a member)
//   1 malformed input (syntax errors, unknown family, bad flags)
//   2 degree violation (degree line < 1, or a point beyond the degree)
//   3 non-member (cmd_member only)
inline constexpr int kExitOk = 0;
inline constexpr int kExitParse = 1;
inline constexpr int kExitDegree = 2;
inline constexpr int kExitNonMember = 3;

// Throws ParseError (syntax, duplicate points) or std::out_of_range
// (degree violations), with the file line in the message.
GeneratorFile read_generator_file(const std::string& path);
GeneratorFile read_generator_stream(std::istream& in, const std::string& name);

// Entry point used by the permgroup binary and by tests. args excludes the
// program name. Normal output goes to out, diagnostics to err.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace permrep
