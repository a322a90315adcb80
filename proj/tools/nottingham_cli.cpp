#include <iostream>

#include "nottingham/cli.hpp"

int main(int argc, char** argv)
{
    return nottingham::cli::run(argc, argv, std::cout, std::cerr);
}
