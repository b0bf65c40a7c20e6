#include <vector>

#include "mtlattice/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return mtlat::run_cli(args);
}
