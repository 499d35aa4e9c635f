#include "cli.hpp"

int main(int argc, char** argv) { return singwf::cli_main(argc, argv); }
