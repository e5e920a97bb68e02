#include "cartanqt/cli.hpp"

int main(int argc, char** argv) { return cartanqt::cli::run(argc, argv); }
