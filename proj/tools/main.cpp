#include "cli.hpp"

int main(int argc, char** argv) { return circq::app::run_cli(argc, argv); }
