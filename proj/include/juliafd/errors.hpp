#pragma once

#include <stdexcept>
#include <string>

namespace juliafd {

// Numeric failures (CLI exit code 3). Config/validation problems are
// config_error (exit code 2).
struct numeric_error : std::runtime_error {
    explicit numeric_error(const std::string& msg) : std::runtime_error(msg) {}
};

struct PoleProximity : numeric_error {
    explicit PoleProximity(const std::string& msg) : numeric_error(msg) {}
};

struct NoConvergence : numeric_error {
    explicit NoConvergence(const std::string& msg) : numeric_error(msg) {}
};

// "Not proven hyperbolic at this budget", never "proven non-hyperbolic".
struct NotCertified : numeric_error {
    std::string reason;
    explicit NotCertified(const std::string& r)
        : numeric_error("not certified: " + r), reason(r) {}
};

struct NotFullShift : numeric_error {
    explicit NotFullShift(const std::string& msg) : numeric_error(msg) {}
};

struct BranchLost : numeric_error {
    explicit BranchLost(const std::string& msg) : numeric_error(msg) {}
};

struct BadBracket : numeric_error {
    explicit BadBracket(const std::string& msg) : numeric_error(msg) {}
};

struct ResolutionExceeded : numeric_error {
    explicit ResolutionExceeded(const std::string& msg) : numeric_error(msg) {}
};

struct InsufficientData : numeric_error {
    explicit InsufficientData(const std::string& msg) : numeric_error(msg) {}
};

struct EmptyBlockFamily : numeric_error {
    explicit EmptyBlockFamily(const std::string& msg) : numeric_error(msg) {}
};

struct ZeroValue : numeric_error {
    explicit ZeroValue(const std::string& msg) : numeric_error(msg) {}
};

struct MissingArtifacts : numeric_error {
    explicit MissingArtifacts(const std::string& msg) : numeric_error(msg) {}
};

struct config_error : std::runtime_error {
    std::string field;
    config_error(const std::string& msg, std::string fld = "")
        : std::runtime_error(msg), field(std::move(fld)) {}
};

} // namespace juliafd
