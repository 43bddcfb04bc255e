// Copyright 2026 The Plantopo Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cctype>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "plantopo/grid.hpp"

namespace plantopo {
namespace {

struct Token {
  std::string text;
  std::size_t column;  // 1-based
};

std::vector<Token> tokenize(const std::string& line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    if (line[i] == '#') break;
    if (std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i])) &&
           line[i] != '#') {
      ++i;
    }
    out.push_back({line.substr(start, i - start), start + 1});
  }
  return out;
}

std::int64_t parse_int(const Token& t, const std::string& path, std::size_t lineno,
                       const char* what) {
  std::size_t pos = 0;
  std::int64_t value = 0;
  try {
    value = std::stoll(t.text, &pos);
  } catch (const std::exception&) {
    throw ParseError(path, lineno, t.column, std::string(what) + " is not an integer: '" + t.text + "'");
  }
  if (pos != t.text.size()) {
    throw ParseError(path, lineno, t.column + pos, std::string(what) + " has trailing characters");
  }
  return value;
}

}  // namespace

GridContinuum load_grid(std::istream& in, const std::string& path) {
  std::string line;
  std::size_t lineno = 0;
  bool have_n = false;
  int n = 0;
  std::vector<CellIndex> cells;
  while (std::getline(in, line)) {
    ++lineno;
    const std::vector<Token> toks = tokenize(line);
    if (toks.empty()) continue;
    if (!have_n) {
      if (toks[0].text != "n") {
        throw ParseError(path, lineno, toks[0].column, "expected resolution line 'n <exponent>'");
      }
      if (toks.size() != 2) {
        throw ParseError(path, lineno, toks.size() > 2 ? toks[2].column : toks[0].column,
                         "resolution line must be 'n <exponent>'");
      }
      const std::int64_t value = parse_int(toks[1], path, lineno, "resolution exponent");
      if (value < 0 || value > kMaxGridDepth) {
        throw ParseError(path, lineno, toks[1].column, "resolution exponent out of range [0, 24]");
      }
      n = static_cast<int>(value);
      have_n = true;
      continue;
    }
    if (toks.size() != 2) {
      throw ParseError(path, lineno, toks.size() > 2 ? toks[2].column : toks[0].column,
                       "cell line must be '<k> <l>'");
    }
    cells.push_back({parse_int(toks[0], path, lineno, "cell index k"),
                     parse_int(toks[1], path, lineno, "cell index l")});
  }
  if (!have_n) throw ParseError(path, lineno == 0 ? 1 : lineno, 1, "missing resolution line");
  if (cells.empty()) throw ParseError(path, lineno, 1, "no cells listed");
  try {
    return GridContinuum(n, std::move(cells));
  } catch (const InvalidArgument& e) {
    throw ParseError(path, lineno, 1, e.what());
  }
}

GridContinuum load_grid_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path, 1, 1, "cannot open file");
  return load_grid(in, path);
}

void save_grid(const GridContinuum& g, std::ostream& out) {
  out << "n " << g.n() << "\n";
  for (const CellIndex& c : g.cells()) out << c.k << " " << c.l << "\n";
}

void save_grid_file(const GridContinuum& g, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot open '" + path + "' for writing");
  save_grid(g, out);
}

}  // namespace plantopo
