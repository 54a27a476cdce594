#include "cli.hpp"

int main(int argc, char** argv) { return starks::cli::run(argc, argv); }
