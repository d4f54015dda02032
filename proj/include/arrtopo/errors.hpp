#pragma once

#include <stdexcept>

namespace arrtopo {

/// Malformed input document; the message names the offending field.
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace arrtopo
