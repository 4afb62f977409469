// Copyright 2026 The lfgraph Authors
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

#include <iomanip>
#include <sstream>

#include "lfg/harness/verify.hpp"

namespace lfg::harness {

std::string render_text(const Report& report) {
  std::ostringstream out;
  out << "instance q=" << report.q << " n=" << report.n << " seed=" << report.seed
      << "\n";
  for (const auto& c : report.claims) {
    out << "  " << std::left << std::setw(14) << c.id << std::setw(16)
        << c.verdict_string();
    if (c.formula) out << " formula=" << to_decimal(*c.formula);
    if (c.oracle) out << " oracle=" << to_decimal(*c.oracle);
    if (c.ms) out << " ms=" << std::fixed << std::setprecision(1) << *c.ms;
    out << "\n";
    if (c.failed() && !c.witness.is_null()) out << "      witness " << c.witness.dump() << "\n";
  }
  out << "result " << (report.ok() ? "ok" : "FAILED") << "\n";
  return out.str();
}

}  // namespace lfg::harness
