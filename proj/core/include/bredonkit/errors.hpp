#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace bredonkit {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Collects every violated invariant of a quotient complex document.
struct ValidationError : std::runtime_error {
    std::vector<std::string> violations;
    explicit ValidationError(std::vector<std::string> v)
        : std::runtime_error(join(v)), violations(std::move(v)) {}

  private:
    static std::string join(const std::vector<std::string>& v) {
        std::string s = "validation failed:";
        for (const auto& m : v) s += "\n  " + m;
        return s;
    }
};

struct IllegalEmbedding : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NonIntegralProduct : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SplitViolation : std::logic_error {
    using std::logic_error::logic_error;
};

struct PrimeMismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotAComplex : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SingularPartTooBig : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Disconnected : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct TorsionInH2 : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct OddD2 : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct UnknownComponent : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace bredonkit
