#include "yangdex/cli.hpp"

int main(int argc, char** argv) { return yangdex::run_cli(argc, argv); }
