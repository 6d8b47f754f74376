#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "kwalls/charge.hpp"
#include "kwalls/lattice.hpp"
#include "kwalls/rational.hpp"

namespace kwalls::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomainError = 1;
inline constexpr int kExitParseError = 2;

/// Malformed command line: unknown command or flag, bad rational or vector.
class ParseError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct Query {
    std::string command;
    SurfaceKind kind = SurfaceKind::K3;
    int parameter = 0;  ///< --genus or --polarization
    std::optional<ChargeKind> charge;
    std::optional<Rational> t_squared;
    std::optional<CharVector> v;
    std::optional<CharVector> w;
    std::int64_t rank_cap = 9;
    std::int64_t margin = 3;
    bool json = false;
    std::optional<std::string> svg_path;
    int digits = 6;

    /// Twisted on K3 and naive on abelian surfaces unless --charge is given.
    ChargeKind resolved_charge() const;
};

const std::vector<std::string>& commands();

/// "r,c,s" with three integers.
CharVector parse_vector(const std::string& text);

/// Parses argv-style arguments (without the program name). Flags given on the
/// command line override values from a --config file of "flag = value" lines.
/// Throws ParseError.
Query parse_query(const std::vector<std::string>& args);

/// Runs a parsed query. Returns kExitDomainError (after writing a message to
/// err) when the query violates an engine precondition.
int run(const Query& query, std::ostream& out, std::ostream& err);

/// Parse then run; parse failures return kExitParseError.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace kwalls::cli
