#pragma once

#include <sys/wait.h>

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

// Minimal driver for end-to-end checks against the installed binary: runs a
// shell command, captures exit code and both streams through temp files in
// the working directory.
namespace herta::testrun {

struct RunResult {
    int exit_code = -1;
    std::string out;
    std::string err;
};

inline std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

inline RunResult run(const std::string& cmd) {
    static int serial = 0;
    const std::string tag = std::to_string(++serial);
    const std::string out_path = "cli_out_" + tag + ".txt";
    const std::string err_path = "cli_err_" + tag + ".txt";
    const std::string full = cmd + " > " + out_path + " 2> " + err_path;
    const int raw = std::system(full.c_str());
    RunResult r;
    r.exit_code = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    r.out = slurp(out_path);
    r.err = slurp(err_path);
    std::remove(out_path.c_str());
    std::remove(err_path.c_str());
    return r;
}

}  // namespace herta::testrun
