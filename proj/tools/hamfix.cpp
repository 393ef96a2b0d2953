#include "hamfix/cli.hpp"

int main(int argc, char** argv) { return hamfix::run(argc, argv); }
