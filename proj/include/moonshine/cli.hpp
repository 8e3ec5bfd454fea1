#pragma once

#include <iosfwd>

namespace moonshine {

/// Entry point of the `moonshine` tool. Exit codes: 0 all assertions pass,
/// 1 an assertion failed, 2 usage or domain error, 3 data or I/O error.
int cli_dispatch(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

} // namespace moonshine
