#pragma once

// Command-line front end: construct | verify | bounds | code | oracle.
// Exit codes: 0 success, 1 verification failure, 2 usage or parse error.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "hychroma/hypercube.hpp"

namespace hychroma::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitViolation = 1;
inline constexpr int kExitUsage = 2;

struct CliConfig {
    std::string subcommand;
    std::string action;  ///< construct method, code action, or oracle quantity
    std::vector<std::string> inputs;
    std::string output;
    std::optional<int> n;
    std::optional<int> d;
    std::optional<int> r;
    std::optional<std::string> mode;
    std::string family;
    std::string strategy = "auto";
    std::string report_format = "text";
    std::string report_path;
    std::string table_format = "text";
    std::string quantity;
    std::vector<std::string> n_list;
    std::string k_table;
    std::string code_path;
    std::string forbidden_code_path;
    std::string first;
    std::string second;
    std::uint64_t seed = 1;
    std::uint64_t trials = 1'000'000;
    bool force = false;
};

// Certificate file: "hychroma-coloring v1 n=<n> d=<d> mode=<atmost|exact> colors=<L>",
// "provenance: <text>", then 2^n decimal color ids in vertex order.
void write_certificate(std::ostream& os, const ColoringCertificate& c);
/// Throws ParseError on any deviation from the format.
ColoringCertificate read_certificate(std::istream& is);

/// Expands "13", "2..20" and comma-separated mixtures into a list of lengths.
std::vector<int> parse_length_list(const std::vector<std::string>& tokens);

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hychroma::cli
