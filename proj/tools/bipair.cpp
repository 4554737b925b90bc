#include "bipair/cli.hpp"

int main(int argc, char** argv) { return bipair::cli::main(argc, argv); }
