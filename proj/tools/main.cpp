#include "skeinrep/cli.hpp"

int main(int argc, char** argv) { return skeinrep::run_cli(argc, argv); }
