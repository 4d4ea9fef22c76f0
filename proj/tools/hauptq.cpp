#include "hauptq/cli.hpp"

int main(int argc, char** argv) { return hauptq::run(argc, argv); }
