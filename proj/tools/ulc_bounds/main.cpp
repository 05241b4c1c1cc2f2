#include "commands.hpp"

int main(int argc, char** argv) { return ulc::cli::run_main(argc, argv); }
