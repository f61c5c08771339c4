#include <cliquecover/cli.hpp>

int main(int argc, char** argv)
{
    std::vector<std::string> args(argv + 1, argv + argc);
    return cliquecover::cli::cli_dispatch(std::move(args));
}
