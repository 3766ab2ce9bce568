#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace qmob {

// Base for all domain errors.  `code()` is stable and machine-readable; the
// CLI serializes it verbatim, so renaming a code is a breaking change.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& msg)
        : std::runtime_error(msg), code_(std::move(code)) {}

    const std::string& code() const { return code_; }

private:
    std::string code_;
};

struct DomainError : Error {
    explicit DomainError(const std::string& msg) : Error("DomainError", msg) {}
};

struct AmbientMismatch : Error {
    explicit AmbientMismatch(const std::string& msg) : Error("AmbientMismatch", msg) {}
};

// Enumeration refused because it would exceed the configured cap.  Results are
// never truncated; `count_so_far` is the number of elements produced before
// the refusal (== cap when the total is only known to be larger).
struct CapExceeded : Error {
    CapExceeded(std::uint64_t count, const std::string& msg)
        : Error("CapExceeded", msg), count_so_far(count) {}

    std::uint64_t count_so_far;
};

struct NotComparable : Error {
    explicit NotComparable(const std::string& msg) : Error("NotComparable", msg) {}
};

struct NotBounded : Error {
    explicit NotBounded(const std::string& msg) : Error("NotBounded", msg) {}
};

struct Incompatible : Error {
    explicit Incompatible(const std::string& msg) : Error("Incompatible", msg) {}
};

struct NotASubrep : Error {
    explicit NotASubrep(const std::string& msg) : Error("NotASubrep", msg) {}
};

struct NotSinking : Error {
    explicit NotSinking(const std::string& msg) : Error("NotSinking", msg) {}
};

struct InfiniteLattice : Error {
    explicit InfiniteLattice(const std::string& msg) : Error("InfiniteLattice", msg) {}
};

struct InfiniteModeNonThin : Error {
    explicit InfiniteModeNonThin(const std::string& msg)
        : Error("InfiniteModeNonThin", msg) {}
};

struct NotApplicable : Error {
    explicit NotApplicable(const std::string& msg) : Error("NotApplicable", msg) {}
};

struct SyntaxError : Error {
    SyntaxError(int line_, int col_, const std::string& msg)
        : Error("SyntaxError",
                "line " + std::to_string(line_) + ", col " + std::to_string(col_) + ": " + msg),
          line(line_), col(col_) {}

    int line;
    int col;
};

struct ValidationError : Error {
    explicit ValidationError(std::vector<std::string> violations_)
        : Error("ValidationError", join(violations_)), violations(std::move(violations_)) {}

    std::vector<std::string> violations;

private:
    static std::string join(const std::vector<std::string>& v) {
        std::string s = "validation failed";
        for (const auto& x : v) {
            s += "; ";
            s += x;
        }
        return s;
    }
};

} // namespace qmob
