#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "wonderful/orbits.hpp"

namespace wonderful::cli {

constexpr int kExitOk = 0;
constexpr int kExitDomainError = 1;
constexpr int kExitVerifyFailed = 2;

/// "A2" -> RootSystem. Throws DomainError naming the bad token.
RootSystem parse_group(const std::string& spec);

/// "2" or "1,0" -> Weight of the group's rank.
Weight parse_weight(const RootSystem& rs, const std::string& spec);

/// "s1 s2", "s1s2", "e" or "w0" -> element.
WeylElement parse_word(const WeylGroup& g, const std::string& spec);

/// "I=1,2;x=e;w=w0" -> OrbitLabel; x must lie in W^I.
OrbitLabel parse_orbit(const WeylGroup& g, const std::string& spec);

/// Runs one command line (without the program name). Output goes to out
/// unless --out is given; diagnostics go to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace wonderful::cli
