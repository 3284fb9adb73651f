#include <string>
#include <vector>

#include "polarfit/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return polarfit::cli::run(args);
}
