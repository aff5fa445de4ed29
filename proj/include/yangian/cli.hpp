#ifndef YANGIAN_CLI_HPP
#define YANGIAN_CLI_HPP

namespace yangian {

/// Entry point of the ytwist command-line tool. Exit statuses:
///   0  success (and, for checks and scans, everything passed)
///   1  a check or scan found a violation (output is still written)
///   2  usage or parameter error
///   3  the requested object does not exist at these parameters (pole)
int cli_main(int argc, char** argv);

}  // namespace yangian

#endif  // YANGIAN_CLI_HPP
