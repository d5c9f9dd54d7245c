#include "cli.hpp"

int main(int argc, char** argv) { return tancurve::run_cli(argc, argv); }
