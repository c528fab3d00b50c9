#include "wsets/cli/commands.hpp"

int main(int argc, char** argv) { return wsets::cli::run(argc, argv); }
