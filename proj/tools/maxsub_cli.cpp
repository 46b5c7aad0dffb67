#include "maxsub/cli.hpp"

int main(int argc, char** argv) { return maxsub::cli_main(argc, argv); }
