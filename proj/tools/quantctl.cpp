#include <iostream>

#include "quant/cli.hpp"

int main(int argc, char** argv)
{
    return quant::run_cli({argv + 1, argv + argc}, std::cout, std::cerr);
}
