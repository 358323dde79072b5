#ifndef ILMT_ERRORS_HPP
#define ILMT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ilmt {

// Bad input: malformed arc lists, unparsable files or sequence literals.
struct parse_error : std::runtime_error {
    explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

// A configured resource limit (node cap, state budget, solver size cap) was hit.
struct cap_error : std::runtime_error {
    explicit cap_error(const std::string& what) : std::runtime_error(what) {}
};

// An operation was called outside its documented domain.
struct precondition_error : std::runtime_error {
    explicit precondition_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace ilmt

#endif
