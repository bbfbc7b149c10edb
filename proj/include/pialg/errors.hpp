#ifndef PIALG_ERRORS_HPP
#define PIALG_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace pialg {

// Bad input: malformed files, invalid structure constants, grammar errors,
// domains that are not closed under multiplication, and so on.
class usage_error : public std::runtime_error {
public:
    explicit usage_error(const std::string& what) : std::runtime_error(what) {}
};

// A configured budget was exceeded (indeterminate count, envelope dimension,
// enumeration size).  Distinct from usage_error so the CLI can map both to
// exit code 2 while reports still tell them apart.
class resource_error : public std::runtime_error {
public:
    explicit resource_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace pialg

#endif
