#include "graysim/cli.hpp"

int main(int argc, char** argv) { return graysim::cli::run_cli(argc, argv); }
