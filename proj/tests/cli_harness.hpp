#pragma once

// Helpers for driving the installed CLI binary from tests. The binary path
// arrives via the TRUNCDIST_CLI environment variable (set by CTest).

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

namespace truncdist::cli {

struct RunResult {
    int exit_code = -1;
    std::string out;
    std::string err;
};

inline std::string cli_path() {
    const char* path = std::getenv("TRUNCDIST_CLI");
    return path ? path : "./truncdist";
}

inline std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

inline RunResult run(const std::string& args, const std::string& env_prefix = "") {
    static int counter = 0;
    const std::string tag = std::to_string(getpid()) + "_" + std::to_string(counter++);
    const std::string out_path = "/tmp/truncdist_test_out_" + tag;
    const std::string err_path = "/tmp/truncdist_test_err_" + tag;
    const std::string cmd = env_prefix + " " + cli_path() + " " + args + " >" + out_path +
                            " 2>" + err_path;
    const int status = std::system(cmd.c_str());

    RunResult result;
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    result.out = slurp(out_path);
    result.err = slurp(err_path);
    std::remove(out_path.c_str());
    std::remove(err_path.c_str());
    return result;
}

struct Csv {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    std::string cell(std::size_t row, const std::string& key) const {
        for (std::size_t c = 0; c < header.size(); ++c) {
            if (header[c] == key) return rows.at(row).at(c);
        }
        throw std::out_of_range("no CSV column: " + key);
    }
};

inline Csv parse_csv(const std::string& text) {
    Csv csv;
    std::istringstream stream(text);
    std::string line;
    while (std::getline(stream, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        std::vector<std::string> cells;
        std::string cell;
        std::istringstream line_stream(line);
        while (std::getline(line_stream, cell, ',')) cells.push_back(cell);
        if (line.back() == ',') cells.emplace_back();
        if (csv.header.empty())
            csv.header = std::move(cells);
        else
            csv.rows.push_back(std::move(cells));
    }
    return csv;
}

} // namespace truncdist::cli
