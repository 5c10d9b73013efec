#include "wwords/cli.hpp"

int main(int argc, char** argv) {
  return wwords::run_cli(argc, argv);
}
