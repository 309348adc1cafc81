#include "latforge/cli.hpp"

int main(int argc, char** argv) { return latforge::cli_main(argc, argv); }
