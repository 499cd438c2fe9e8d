#include "gm/cli/app.hpp"

int main(int argc, char** argv)
{
    return gm::cli::run(argc, argv);
}
