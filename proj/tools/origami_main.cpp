#include "origami/cli.hpp"

int main(int argc, char** argv) {
    return origami::cli::run(std::vector<std::string>(argv + 1, argv + argc));
}
