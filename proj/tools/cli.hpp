#pragma once

#include "calogero/rootsys.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace calogero::cli {

class ParseError : public std::invalid_argument {
public:
    ParseError(const std::string& what, std::size_t position)
        : std::invalid_argument(what + " at position " + std::to_string(position)), position_(position) {}
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

/// "B3", "d4", "I2(8)". Throws ParseError on malformed text and CatalogError
/// for well formed names outside the catalog.
CatalogSpec parse_spec(const std::string& text);

enum class ExitCode { Pass = 0, VerificationFailure = 1, Usage = 2, Internal = 3 };

struct RunConfig {
    std::string type;
    std::string format = "json";
    std::optional<std::vector<Rational>> nu;
    std::size_t degree = 4;
    std::size_t element_cap = 1000000;
    std::uint64_t seed = 20240601;
    /// class label -> value; empty means str(1) = 1 and the other free classes 0.
    std::vector<std::pair<std::string, Rational>> normalization;
    std::string suite = "all";
    bool include_h4 = false;
    bool elements = false;
    bool timing = false;
    std::size_t points = 5;
};

/// Comma separated rationals, e.g. "1/2,3".
std::vector<Rational> parse_rationals(const std::string& text);

/// "1=1,C3=1/2" or "str(1)=1".
std::vector<std::pair<std::string, Rational>> parse_normalization(const std::string& text);

/// Executes one subcommand and writes its document to `out`.
int run(const RunConfig& config, const std::string& command, std::ostream& out);

/// Full command line handling; errors become a JSON object on `err`.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace calogero::cli
