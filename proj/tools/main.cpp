#include "cli.hpp"

int main(int argc, char** argv) {
    return chebpi::run_cli(argc, argv);
}
