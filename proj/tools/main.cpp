#include "commands.hpp"

int main(int argc, char** argv) { return rep2d::cli::run_cli(argc, argv); }
