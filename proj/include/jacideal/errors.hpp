#ifndef JACIDEAL_ERRORS_HPP
#define JACIDEAL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace jacideal {

// Violated contract on user-supplied input (bad file, unmet mathematical
// precondition, malformed expression). The CLI maps this to exit code 2;
// any other exception reaching main is an internal error, exit code 1.
class precondition_error : public std::runtime_error {
public:
    explicit precondition_error(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace jacideal

#endif
