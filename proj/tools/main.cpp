#include "weakmult/cli.hpp"

int main(int argc, char** argv) { return weakmult::cli::run(argc, argv); }
