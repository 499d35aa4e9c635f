#pragma once

#include <iosfwd>

namespace singwf {

// Exit codes: 0 success, 1 a verification failure, 2 usage or input error.
int cli_main(int argc, char** argv);
int cli_main(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace singwf
