#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "hmalab/term.hpp"

namespace hmalab {

struct SourceSpan {
    std::size_t start = 0;
    std::size_t end = 0;
};

class SyntaxError : public std::runtime_error {
public:
    SyntaxError(const std::string& message, SourceSpan span);
    SourceSpan span() const { return span_; }

private:
    SourceSpan span_;
};

enum class PrintStyle { ternary, sugared };

// Operators: "p <| q |> r", "x && y", "x || y", "!x". T and F are the constants.
Term parse_term(std::string_view text);
std::string print_term(const Term& t, PrintStyle style = PrintStyle::ternary);

}  // namespace hmalab
