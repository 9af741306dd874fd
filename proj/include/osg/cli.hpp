#ifndef OSG_CLI_HPP_
#define OSG_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace osg {

//! Command dispatch for the osg tool.  Returns the process exit status:
//! 0 on success (verify: all laws pass or are not applicable), 1 when a
//! verification law fails, 2 on input or usage errors.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace osg

#endif  // OSG_CLI_HPP_
