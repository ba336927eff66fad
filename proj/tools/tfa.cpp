#include <vector>

#include "tfa/cli.hpp"

int main(int argc, char** argv) {
    return tfa::dispatch(std::vector<std::string>(argv + 1, argv + argc));
}
