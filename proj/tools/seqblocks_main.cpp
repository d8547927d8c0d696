#include "seqblocks/cli.hpp"

#include <cstdio>

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    auto result = seqblocks::cli::run(args);
    std::fputs(result.output.c_str(), stdout);
    return result.exit_code;
}
