#include <iostream>
#include <string>
#include <vector>

#include "etaq/cli.hpp"

int main(int argc, char** argv)
{
    return etaq::cli::run(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
