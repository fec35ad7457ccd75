#include <vector>

#include "dynchrome/cli.hpp"

int main(int argc, char** argv) {
    return dynchrome::run_command(std::vector<std::string>(argv + 1, argv + argc));
}
