#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bianchi {

// Exit codes: 0 success, 1 a verified mathematical claim failed,
// 2 usage or capacity error.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

// Negative squarefree d in [dmin, dmax], descending from dmax.
std::vector<long> squarefree_range(long dmin, long dmax);

}  // namespace bianchi
