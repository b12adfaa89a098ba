#include "ptn_cli.hpp"

int main(int argc, char** argv) { return ptn::cli::run(argc, argv); }
