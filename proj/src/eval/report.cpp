// Copyright 2026 The argtree Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "argtree/eval/report.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "argtree/common/error.hpp"
#include "argtree/common/format.hpp"

namespace argtree {

namespace {

void check_consistent(std::span<const EvalReport> reports) {
  if (reports.empty()) throw DataError("no reports to render");
  for (const auto& r : reports) {
    bool same = r.strata.size() == reports[0].strata.size();
    for (std::size_t i = 0; same && i < r.strata.size(); ++i) same = r.strata[i].name == reports[0].strata[i].name;
    if (!same) {
      throw DataError("inconsistent strata: '" + r.model + "' and '" + reports[0].model +
                      "' were evaluated on different strata");
    }
    if (r.model.find_first_of(",\n\"") != std::string::npos) {
      throw DataError("model name '" + r.model + "' cannot be written to CSV");
    }
  }
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    std::size_t end = line.find(',', start);
    out.push_back(line.substr(start, end == std::string::npos ? std::string::npos : end - start));
    if (end == std::string::npos) break;
    start = end + 1;
  }
  return out;
}

}  // namespace

std::string format_report_csv(std::span<const EvalReport> reports) {
  check_consistent(reports);
  std::string out = "model,task";
  for (const auto& s : reports[0].strata) out += "," + s.name + "," + s.name + "_n";
  out += "\n";
  for (const auto& r : reports) {
    out += r.model + "," + std::string(to_string(r.task));
    for (const auto& s : r.strata) {
      out += ",";
      if (s.count) out += format_double(s.accuracy());
      out += "," + std::to_string(s.count);
    }
    out += "\n";
  }
  return out;
}

std::string format_report_text(std::span<const EvalReport> reports) {
  check_consistent(reports);
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> header{"model"};
  for (const auto& s : reports[0].strata) header.push_back(s.name);
  rows.push_back(header);
  for (const auto& r : reports) {
    std::vector<std::string> row{r.model};
    for (const auto& s : r.strata) {
      row.push_back(s.count ? format_fixed(100.0 * s.accuracy(), 2) + " (" + std::to_string(s.count) + ")"
                            : "- (0)");
    }
    rows.push_back(row);
  }
  std::vector<std::size_t> width(header.size(), 0);
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  }
  std::string out;
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c == 0) {
        line += row[c] + std::string(width[c] - row[c].size(), ' ');
      } else {
        line += "  " + std::string(width[c] - row[c].size(), ' ') + row[c];
      }
    }
    out += line + "\n";
  }
  return out;
}

std::vector<EvalReport> parse_report_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line)) throw DataError("report CSV is empty");
  const auto header = split_csv(line);
  if (header.size() < 2 || header[0] != "model" || header[1] != "task" || header.size() % 2 != 0) {
    throw DataError("report CSV header must be model,task,<stratum>,<stratum>_n,...");
  }
  for (std::size_t c = 2; c < header.size(); c += 2) {
    if (header[c + 1] != header[c] + "_n") throw DataError("report CSV column '" + header[c + 1] + "' is misplaced");
  }
  std::vector<EvalReport> out;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    const auto cells = split_csv(line);
    if (cells.size() != header.size()) {
      throw DataError("report CSV line " + std::to_string(line_no) + ": expected " + std::to_string(header.size()) +
                      " cells");
    }
    EvalReport r;
    r.model = cells[0];
    try {
      r.task = parse_task(cells[1]);
    } catch (const UsageError& e) {
      throw DataError("report CSV line " + std::to_string(line_no) + ": " + e.what());
    }
    for (std::size_t c = 2; c < cells.size(); c += 2) {
      StratumResult s;
      s.name = header[c];
      const auto n = parse_int(cells[c + 1], "stratum count");
      if (n < 0) throw DataError("report CSV line " + std::to_string(line_no) + ": negative count");
      s.count = static_cast<std::size_t>(n);
      if (s.count) {
        const double acc = parse_double(cells[c], "stratum accuracy");
        if (acc < 0.0 || acc > 1.0) throw DataError("report CSV line " + std::to_string(line_no) + ": accuracy outside [0,1]");
        s.correct = static_cast<std::size_t>(std::llround(acc * static_cast<double>(s.count)));
      } else if (!cells[c].empty()) {
        throw DataError("report CSV line " + std::to_string(line_no) + ": accuracy given for an empty stratum");
      }
      r.strata.push_back(std::move(s));
    }
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace argtree
