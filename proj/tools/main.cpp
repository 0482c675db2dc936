#include "cli.hpp"

int main(int argc, char** argv) { return cyclestab::cli::run(argc, argv); }
