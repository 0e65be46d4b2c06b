#include "qdc/cli.hpp"

int main(int argc, char** argv) { return qdc::run_cli(argc, argv); }
