#include "podles/cli.hpp"

int main(int argc, char** argv) { return podles::cli::run(argc, argv); }
