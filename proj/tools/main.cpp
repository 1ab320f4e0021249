#include "stripvortex/io.hpp"

int main(int argc, char** argv) { return stripvortex::cli_main(argc, argv); }
