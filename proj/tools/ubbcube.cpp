#include "ubb/cli.hpp"

int main(int argc, char** argv) { return ubb::cli_main(argc, argv); }
