#ifndef SPECDATA_ERRORS_HPP
#define SPECDATA_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace specdata {

/// Process exit codes used by the CLI; every documented error state gets
/// its own code so scripts can branch on the outcome.
enum class ExitCode : int {
    ok = 0,
    check_failed = 1,
    not_commuting = 2,
    unsplit = 3,
    identically_degenerate = 4,
    bad_input = 5,
    not_invariant = 6,
    degree_bound = 7,
};

class SpecdataError : public std::runtime_error {
public:
    SpecdataError(ExitCode code, const std::string& msg) : std::runtime_error(msg), code_(code) {}
    ExitCode code() const { return code_; }

private:
    ExitCode code_;
};

/// A pair of matrices in a tuple fails to commute; indices are 0-based.
class NotCommutingError : public SpecdataError {
public:
    NotCommutingError(std::size_t i, std::size_t j, const std::string& msg)
        : SpecdataError(ExitCode::not_commuting, msg), i_(i), j_(j) {}
    std::size_t lhs_index() const { return i_; }
    std::size_t rhs_index() const { return j_; }

private:
    std::size_t i_, j_;
};

/// A polynomial has a non-linear factor with no root in the base field.
/// The message carries the stuck factor; callers must surface it.
class UnsplitError : public SpecdataError {
public:
    explicit UnsplitError(const std::string& factor)
        : SpecdataError(ExitCode::unsplit, "spectrum does not split over the base field; stuck factor: " + factor),
          factor_(factor) {}
    const std::string& factor() const { return factor_; }

private:
    std::string factor_;
};

class IdenticallyDegenerateError : public SpecdataError {
public:
    explicit IdenticallyDegenerateError(const std::string& msg)
        : SpecdataError(ExitCode::identically_degenerate, msg) {}
};

class BadInputError : public SpecdataError {
public:
    explicit BadInputError(const std::string& msg) : SpecdataError(ExitCode::bad_input, msg) {}
};

class NotInvariantError : public SpecdataError {
public:
    explicit NotInvariantError(const std::string& msg) : SpecdataError(ExitCode::not_invariant, msg) {}
};

class DegreeBoundError : public SpecdataError {
public:
    explicit DegreeBoundError(const std::string& msg) : SpecdataError(ExitCode::degree_bound, msg) {}
};

}  // namespace specdata

#endif
