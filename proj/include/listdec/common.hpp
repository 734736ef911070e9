#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace listdec {

using u32 = std::uint32_t;
using u64 = std::uint64_t;
using i64 = std::int64_t;
using u128 = unsigned __int128;
using i128 = __int128;

// Invalid input or unsatisfied precondition.  The CLI maps this to exit code 1.
struct ParamError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// An enumeration would exceed the caller-supplied budget; the caller must
// switch to a cheaper method (e.g. prune instead of exhaustive listing).
struct BudgetError : ParamError {
    using ParamError::ParamError;
};

// A guarantee that is a theorem failed to hold at runtime.  This always means
// an implementation bug; the CLI maps it to exit code 2.
struct InvariantError : std::logic_error {
    using std::logic_error::logic_error;
};

inline void require(bool cond, const std::string& msg) {
    if (!cond) throw ParamError(msg);
}

inline void ensure(bool cond, const std::string& msg) {
    if (!cond) throw InvariantError(msg);
}

}  // namespace listdec
