#include "sln/cli.hpp"

int main(int argc, char** argv) { return sln::cli_main(argc, argv); }
