#include <iostream>

#include "packcert/shell/cli.hpp"

int main(int argc, char** argv) { return packcert::shell::run_cli(argc, argv, std::cout, std::cerr); }
