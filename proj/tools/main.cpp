#include "irrcount/cli.hpp"

int main(int argc, char** argv) { return irrcount::cliMain(argc, argv); }
