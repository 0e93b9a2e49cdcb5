#include "susy/cli.hpp"

int main(int argc, char** argv) { return susy::run_cli(argc, argv); }
