#include "parabose/cli.hpp"

int main(int argc, char** argv) { return parabose::cli::run(argc, argv); }
