#include "ilmt/cli.hpp"

int main(int argc, char** argv) { return ilmt::run_cli(argc, argv); }
