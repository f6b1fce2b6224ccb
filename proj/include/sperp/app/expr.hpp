#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "sperp/plethysm.hpp"
#include "sperp/symfunc.hpp"

namespace sperp::app {

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, std::size_t position)
        : std::runtime_error("parse error at column " + std::to_string(position + 1) + ": " + message),
          position_(position) {}
    /// 0-based offset into the input.
    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

/// Parses and evaluates a symmetric-function expression.
///
///   expr    := ['+'|'-'] term (('+'|'-') term)*
///   term    := factor ('*' factor)*
///   factor  := coeff | basis '[' parts ']' apply* | '(' expr ')' apply*
///   apply   := '[' expr ']'                      (plethysm)
///   coeff   := integer | integer '/' integer
///   basis   := 's' | 'm' | 'h' | 'e' | 'p'
///   parts   := ε | int (',' int)*
///
/// Whitespace is ignored. Sums take the basis of their left operand;
/// plethysms are evaluated by `engine` with `method` and come back in the
/// Schur basis.
SymFunc parse_expr(std::string_view text, PlethysmEngine& engine, Method method = Method::auto_select);

/// Parses expressions without plethysm application.
SymFunc parse_expr(std::string_view text);

}  // namespace sperp::app
