#include "linkpred/cli.hpp"

int main(int argc, char** argv) {
    return linkpred::cli_dispatch(argc, argv);
}
