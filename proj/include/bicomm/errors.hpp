#ifndef BICOMM_ERRORS_HPP
#define BICOMM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace bicomm {

// Operands live over different ranks d.
class RankMismatch : public std::invalid_argument {
public:
    explicit RankMismatch(const std::string& what) : std::invalid_argument(what) {}
};

// Degree or index outside the range an operation accepts (e.g. degree 0 in a
// non-unital algebra).
class DomainError : public std::invalid_argument {
public:
    explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

class NonHomogeneous : public std::invalid_argument {
public:
    explicit NonHomogeneous(const std::string& what) : std::invalid_argument(what) {}
};

class SingularMatrix : public std::invalid_argument {
public:
    explicit SingularMatrix(const std::string& what) : std::invalid_argument(what) {}
};

// Group closure grew past its element cap: the generators span an infinite
// (or unreasonably large) group.
class CapExceeded : public std::runtime_error {
public:
    explicit CapExceeded(const std::string& what) : std::runtime_error(what) {}
};

class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace bicomm

#endif
