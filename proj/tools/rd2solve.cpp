#include "rd2/cli.hpp"

int main(int argc, char** argv) { return rd2::cli::run_main(argc, argv); }
