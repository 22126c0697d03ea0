#include "oclique/cli.hpp"

int main(int argc, char** argv) { return oclique::cli::run(argc, argv); }
