#ifndef JACIDEAL_PARSE_HPP
#define JACIDEAL_PARSE_HPP

#include <string>
#include <string_view>

#include "jacideal/errors.hpp"
#include "jacideal/hompoly.hpp"

namespace jacideal {

// Syntax or semantic failure in a polynomial expression, with a 0-based
// character position.
class parse_error : public precondition_error {
public:
    parse_error(const std::string& msg, std::size_t position)
        : precondition_error(msg + " (at position " + std::to_string(position) + ")"),
          position_(position) {}

    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

// Grammar (whitespace-insensitive, products need an explicit '*'):
//   expr     := term (('+'|'-') term)*
//   term     := factor ('*' factor)*
//   factor   := rational | var ('^' uint)? | '(' expr ')'
//   rational := int ('/' uint)?
// Variables are x0..x9, or the aliases x,y,z,t,u for x0..x4; the two styles
// may not be mixed in one expression. The result must be homogeneous.
HomPoly parse_poly(std::string_view text);

enum class VarStyle { indexed, alias };

// Canonical printing: terms in descending graded-lex order, exact rational
// coefficients, explicit '*' and '^'. parse_poly(print_poly(f)) == f for
// nonzero f; the zero polynomial prints as "0".
std::string print_poly(const HomPoly& f, VarStyle style = VarStyle::indexed);

std::string variable_name(int i, VarStyle style);

} // namespace jacideal

#endif
