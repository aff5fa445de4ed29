#include "yangian/cli.hpp"

int main(int argc, char** argv) { return yangian::cli_main(argc, argv); }
