#include "cli.hpp"

int main(int argc, char** argv) { return masl::cli::run(argc, argv); }
