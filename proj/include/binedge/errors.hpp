#ifndef BINEDGE_ERRORS_HPP
#define BINEDGE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace binedge {

// Reason tags for domain-level rejections. Kept as a flat enum so callers
// (and tests) can distinguish failure modes without parsing messages.
enum class errc {
    out_of_range,
    loop,
    duplicate_edge,
    not_bijective,
    not_a_path,
    disconnected,
    empty_edge_set,
    too_small,
    not_a_tree,
    is_a_path,
    not_caterpillar,
    bad_start,
    bad_endpoints,
    bad_join,
    precondition_failed,
};

const char* errc_name(errc c);

// Invalid input in the mathematical sense (loops, non-trees, bad labelings, ...).
class DomainError : public std::runtime_error {
public:
    DomainError(errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
    errc code() const { return code_; }

private:
    errc code_;
};

// A size or step guard was exceeded. Guards are hard errors, not fallbacks.
class GuardError : public std::runtime_error {
public:
    explicit GuardError(const std::string& what)
        : std::runtime_error("guard exceeded: " + what) {}
};

// Malformed input file or inline argument; carries a 1-based line when known.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& origin, int line, const std::string& what)
        : std::runtime_error(format(origin, line, what)), line_(line) {}
    int line() const { return line_; }

private:
    static std::string format(const std::string& origin, int line, const std::string& what);
    int line_;
};

} // namespace binedge

#endif
