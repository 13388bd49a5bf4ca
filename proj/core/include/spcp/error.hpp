#pragma once

#include <stdexcept>
#include <string>

namespace spcp {

// Contract violations, malformed inputs and I/O failures all surface as
// spcp::Error; the CLI turns the message into a one-line diagnostic.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline void require(bool cond, const std::string& msg) {
    if (!cond) throw Error(msg);
}

}  // namespace spcp
