#include "mrips_cli.hpp"

int main(int argc, char** argv)
{
    return mrips::cli::run(std::vector<std::string>(argv + 1, argv + argc));
}
