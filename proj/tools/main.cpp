#include <vector>

#include "leosdn/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return leosdn::run_cli(args);
}
