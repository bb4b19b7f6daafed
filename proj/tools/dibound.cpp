#include "dibound/cli.hpp"

int main(int argc, char** argv) { return dibound::cli::main(argc, argv); }
