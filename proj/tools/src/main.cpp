#include "compa_cli/cli.hpp"

int main(int argc, char** argv) { return compa::cli::main(argc, argv); }
