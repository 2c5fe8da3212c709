#include "cli.hpp"

int main(int argc, char** argv) { return mhilb::cli::run(argc, argv); }
