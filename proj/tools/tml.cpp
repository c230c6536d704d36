#include "cli.hpp"

int main(int argc, char** argv) { return tml::cli::run(argc, argv); }
