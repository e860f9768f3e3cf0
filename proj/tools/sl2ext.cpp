#include <iostream>
#include <string>
#include <vector>

#include "sl2ext/commands.hpp"

int main(int argc, char** argv)
{
    const std::vector<std::string> args(argv, argv + argc);
    const auto result = sl2ext::run_cli(args);
    std::cout << result.out << std::flush;
    std::cerr << result.err << std::flush;
    return result.status;
}
