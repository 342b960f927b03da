#pragma once

#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace sumlab::test {

struct MalformedCase {
  std::size_t line = 0;
  std::size_t column = 0;
  std::string text;
};

inline std::vector<std::string> read_lines(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::vector<std::string> out;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line[0] != '#') out.push_back(line);
  }
  return out;
}

inline std::vector<std::string> valid_corpus() { return read_lines(SUMLAB_CORPUS_DIR "/valid.txt"); }

inline std::vector<MalformedCase> malformed_corpus() {
  std::vector<MalformedCase> out;
  for (const auto& raw : read_lines(SUMLAB_CORPUS_DIR "/malformed.txt")) {
    const auto colon = raw.find(':');
    const auto tab = raw.find('\t');
    MalformedCase c;
    c.line = std::stoul(raw.substr(0, colon));
    c.column = std::stoul(raw.substr(colon + 1, tab - colon - 1));
    for (std::size_t i = tab + 1; i < raw.size(); ++i) {
      if (raw[i] == '\\' && i + 1 < raw.size() && raw[i + 1] == 'n') {
        c.text += '\n';
        ++i;
      } else {
        c.text += raw[i];
      }
    }
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace sumlab::test
