#include "invsemi/cli.hpp"

int main(int argc, char** argv) { return invsemi::cli::run(argc, argv); }
