#include "lexfolio/cli.hpp"

int main(int argc, char** argv) { return lexfolio::run_cli(argc, argv); }
