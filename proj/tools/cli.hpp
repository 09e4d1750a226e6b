#pragma once

namespace chebpi {

// Exit codes: 0 success, 1 identity violation, 2 usage error,
// 3 engine cap / precision floor violation.
int run_cli(int argc, const char* const* argv);

} // namespace chebpi
