#include "gsf/cli.hpp"

int main(int argc, char** argv) { return gsf::cli::main_entry(argc, argv); }
