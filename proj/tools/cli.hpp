#pragma once

namespace circq::app {

// Full command-line entry point; returns the exit code (0 ok, 1 failed check, 2 usage error).
int run_cli(int argc, const char* const* argv);

}  // namespace circq::app
