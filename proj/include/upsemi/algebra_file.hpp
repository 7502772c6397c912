#ifndef UPSEMI_ALGEBRA_FILE_HPP
#define UPSEMI_ALGEBRA_FILE_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "upsemi/cayley_table.hpp"

namespace upsemi {

/// Parse failure; line is 1-based and refers to the offending input line.
class ParseError : public std::runtime_error
{
public:
    ParseError(int line, const std::string& message);

    int line() const { return line_; }

private:
    int line_;
};

/// A parsed table file. Tables are range-checked but deliberately not
/// validated against the UP/associativity laws: the check command exists to
/// run those checks and report witnesses.
struct AlgebraFile
{
    int order = 0;
    ElementIndex zero = 0;
    CayleyTable dot{1, {0}};
    std::optional<CayleyTable> star;
};

/// Text grammar: '#' starts a comment line; header lines "order: N" and
/// "zero: K"; a "dot:" section with N rows of N whitespace-separated
/// entries; an optional "star:" section likewise. Blank lines and trailing
/// whitespace are ignored. Throws ParseError with the offending line.
AlgebraFile parse_algebra_file(std::string_view text);

/// Canonical text form; parse_algebra_file(format_algebra_file(f)) == f.
std::string format_algebra_file(const AlgebraFile& file);

} // namespace upsemi

#endif
