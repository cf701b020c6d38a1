#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace kagome {

// Base for all domain errors. Carries a stable machine-readable name so the
// CLI can echo it in error records without parsing what() strings.
class Error : public std::runtime_error {
public:
    Error(std::string name, const std::string& message)
        : std::runtime_error(message), name_(std::move(name)) {}
    const std::string& name() const noexcept { return name_; }

private:
    std::string name_;
};

#define KAGOME_DEFINE_ERROR(ClassName)                                  \
    class ClassName : public Error {                                    \
    public:                                                             \
        explicit ClassName(const std::string& message)                  \
            : Error(#ClassName, message) {}                             \
    }

KAGOME_DEFINE_ERROR(BeyondBound);        // enumeration / size limits exceeded
KAGOME_DEFINE_ERROR(WindowTooSmall);     // lattice window cannot hold the request
KAGOME_DEFINE_ERROR(NotAPartitionState); // occupation pattern not reachable by box flips
KAGOME_DEFINE_ERROR(IllegalFlip);        // hexagon not in the required class
KAGOME_DEFINE_ERROR(MissingWeight);      // weight table lacks a class entry
KAGOME_DEFINE_ERROR(NoSolution);         // linear solve found no kernel vector
KAGOME_DEFINE_ERROR(DimensionMismatch);  // incompatible operand dimensions
KAGOME_DEFINE_ERROR(ConvergenceFailure); // iterative eigensolver did not converge
KAGOME_DEFINE_ERROR(SingularParameters); // construction evaluated at a pole
KAGOME_DEFINE_ERROR(NotAdjacent);        // gluing rule queried for non-neighbors

#undef KAGOME_DEFINE_ERROR

} // namespace kagome
