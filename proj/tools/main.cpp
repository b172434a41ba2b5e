#include "cli.hpp"

int main(int argc, char** argv) { return bpden::cli::run(argc, argv); }
