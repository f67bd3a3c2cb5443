#include "algodyn/cli.hpp"

int main(int argc, char** argv) {
    return algodyn::cli::main(argc, argv);
}
