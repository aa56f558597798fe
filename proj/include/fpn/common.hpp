#ifndef FPN_COMMON_HPP
#define FPN_COMMON_HPP

#include <stdexcept>
#include <string>

namespace fpn {

// Error taxonomy, mapped to process exit codes by the CLI:
//   InputError    -> 2   (bad files, bad arguments, malformed values)
//   ResourceError -> 4   (vertex/clique/enumeration ceilings)
//   InternalError -> 5   (invariants of the implementation itself violated)
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

class InputError : public Error {
public:
    explicit InputError(const std::string& msg) : Error(msg) {}
};

class DivisionByZeroError : public InputError {
public:
    explicit DivisionByZeroError(const std::string& msg) : InputError(msg) {}
};

class ResourceError : public Error {
public:
    explicit ResourceError(const std::string& msg) : Error(msg) {}
};

class InternalError : public Error {
public:
    explicit InternalError(const std::string& msg) : Error(msg) {}
};

} // namespace fpn

#endif
