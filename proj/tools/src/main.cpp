#include <iostream>

#include "unipoly/cli.hpp"

int main(int argc, char** argv)
{
    return unipoly::cli::run(argc, argv, std::cout, std::cerr);
}
