#include "rqi/cli.hpp"

int main(int argc, char** argv) { return rqi::cli_main(argc, argv); }
