#include "pjl/cli.hpp"

int main(int argc, char** argv) { return pjl::run_cli(argc, argv); }
