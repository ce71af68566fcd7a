#pragma once

#include <iosfwd>

namespace cheb {

/// Entry point of the chebotarev-lab command line. Returns 0 on success,
/// 1 on validation errors and 2 on computation errors.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace cheb
