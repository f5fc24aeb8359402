#include "k4holo/cli.hpp"

int main(int argc, char** argv) { return k4holo::cli::run(argc, argv); }
