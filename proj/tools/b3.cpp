#include "b3/commands.hpp"

int main(int argc, char** argv) { return b3::run_cli(argc, argv); }
