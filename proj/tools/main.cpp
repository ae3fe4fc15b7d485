#include <iostream>
#include <string>
#include <vector>

#include "eulersums/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return eulersums::run(args, std::cout, std::cerr);
}
