#pragma once

#include <complex>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace kaluza::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_failed = 1;
inline constexpr int exit_input_error = 2;

// Runs one subcommand. args excludes the program name. JSON goes to `out`
// (or the --out file), diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// "0.25,0.25" or "0.1+0.2i,-0.3i". Throws InputError on malformed text.
std::vector<std::complex<double>> parse_point(std::string_view text);

} // namespace kaluza::cli
