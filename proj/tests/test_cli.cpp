#include <catch2/catch_amalgamated.hpp>
int dummy_cli;
