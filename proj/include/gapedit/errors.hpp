#pragma once

#include <stdexcept>

namespace gapedit {

/// A file could not be opened, read, or written.
class IoError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A file was readable but is not a valid artifact (bad magic, version,
/// checksum, or contents).
class FormatError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A request exceeds a configured size limit.
class LimitError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// The inputs are well formed but the operation cannot meet its contract on
/// them (e.g. no generated pair reached the requested distance).
class PreconditionError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace gapedit
