// Copyright 2026 The holochannel Authors
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

#ifndef HOLO_DIAGNOSTICS_CSV_H
#define HOLO_DIAGNOSTICS_CSV_H

#include <string>
#include <vector>

namespace holo {

/// Decimal form with 17 significant digits ("%.17g").
std::string format_double(double v);

struct CsvRow {
    std::string experiment;
    long long L = 0;
    double g_or_p = 0;
    long long depth = 0;
    std::string quantity;
    double value = 0;
    std::string tolerance_meta;
};

/// Collects rows with the columns
///   experiment,L,g_or_p,depth,quantity,value,tolerance_meta
class CsvTable {
   public:
    static const char *header();
    void add(CsvRow row) { rows_.push_back(std::move(row)); }
    const std::vector<CsvRow> &rows() const { return rows_; }
    std::string str() const;
    void write(const std::string &path) const;

   private:
    std::vector<CsvRow> rows_;
};

}  // namespace holo

#endif
