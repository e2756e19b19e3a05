#include "deljoin_cli.hpp"

int main(int argc, char** argv) { return deljoin::cli::run(argc, argv); }
