#ifndef CTORIC_ERRORS_HPP
#define CTORIC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ctoric {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CycleDetected : Error { using Error::Error; };
struct IndexOutOfRange : Error { using Error::Error; };
struct InvalidOrderHint : Error { using Error::Error; };
struct SizeLimitExceeded : Error { using Error::Error; };
struct InhomogeneousRevlex : Error { using Error::Error; };
struct FiberTooLarge : Error { using Error::Error; };
struct NotChordal : Error { using Error::Error; };
struct NotConnected : Error { using Error::Error; };
struct NotInducedEvenCycle : Error { using Error::Error; };
struct PreconditionViolated : Error { using Error::Error; };
struct InvalidInnerEdge : Error { using Error::Error; };

/// Raised when two independently computed routes disagree.  Never expected
/// to fire; the CLI maps it to exit code 2.
struct InternalInconsistency : Error { using Error::Error; };

/// Parse failure for the poset/graph text formats; carries a line number.
struct ParseError : Error {
    int line;
    ParseError(const std::string& msg, int line_no)
        : Error(msg + " (line " + std::to_string(line_no) + ")"), line(line_no) {}
};

} // namespace ctoric

#endif
