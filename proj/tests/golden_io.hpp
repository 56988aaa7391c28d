#pragma once

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

// Reader for the golden-value files produced by tests/golden/generate.py.
// Record format: fn_name arg0 arg1 ... expected_value abs_tol

namespace golden {

struct Record {
    std::string fn;
    std::vector<double> args;
    double expected = 0.0;
    double abs_tol = 0.0;
};

inline std::vector<Record> load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open golden file: " + path);
    std::vector<Record> out;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ss(line);
        Record rec;
        ss >> rec.fn;
        std::vector<double> nums;
        double v;
        while (ss >> v) nums.push_back(v);
        if (nums.size() < 2) throw std::runtime_error("bad golden line: " + line);
        rec.abs_tol = nums.back();
        rec.expected = nums[nums.size() - 2];
        rec.args.assign(nums.begin(), nums.end() - 2);
        out.push_back(std::move(rec));
    }
    return out;
}

} // namespace golden
