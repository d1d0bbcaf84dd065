#include <iostream>

#include "sumfree/cli.hpp"

int main(int argc, char** argv) {
  const auto env = sumfree::cli::dispatch(std::vector<std::string>(argv + 1, argv + argc));
  std::cout << sumfree::cli::render_stdout(env);
  std::cerr << sumfree::cli::render_stderr(env);
  return env.exit_status;
}
