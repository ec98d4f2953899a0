#include "mcshane/cli.hpp"

int main(int argc, char** argv) { return mcshane::cli::run(argc, argv); }
