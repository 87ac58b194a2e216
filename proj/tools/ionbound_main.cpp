#include "ionbound/cli.hpp"

int main(int argc, char** argv) { return ionbound::cli::dispatch(argc, argv); }
