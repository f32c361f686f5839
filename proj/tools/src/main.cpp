#include "cli.hpp"

int main(int argc, char** argv) { return binodal::run(argc, argv); }
