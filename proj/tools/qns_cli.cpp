#include <iostream>

#include "qns/io/cli.hpp"

int main(int argc, char** argv) { return qns::io::cli_dispatch(argc, argv, std::cout, std::cerr); }
