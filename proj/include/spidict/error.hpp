#pragma once

#include <stdexcept>
#include <string>

namespace spidict {

// Error conditions surfaced by the library. Codes are stable so callers
// (and tests) can match on the condition rather than the message text.
enum class Errc {
    bad_magic,
    truncated,
    oversize,
    insufficient_images,
    non_convergence,
    not_symmetric,
    k_out_of_range,
    zero_pattern,
    c_out_of_range,
    dimension_mismatch,
    basis_mismatch,
    plan_mismatch,
    degenerate_bounds,
    bad_config,
    io_error,
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& message)
        : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

    Errc code() const { return code_; }

private:
    Errc code_;
};

} // namespace spidict
