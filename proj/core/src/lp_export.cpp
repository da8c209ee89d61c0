// Copyright 2026 The storient Authors
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

#include <sstream>
#include <string>
#include <vector>

#include "storient/ilp_model.hpp"

namespace storient {

namespace {

constexpr std::size_t kLineWidth = 78;

// Writes tokens after `lead`, breaking before a token that would overflow.
class LineWriter {
 public:
  explicit LineWriter(std::ostringstream& out) : out_(out) {}

  void start(const std::string& lead) {
    out_ << lead;
    width_ = lead.size();
  }
  void token(const std::string& tok) {
    if (width_ + 1 + tok.size() > kLineWidth) {
      out_ << "\n  ";
      width_ = 2;
    } else {
      out_ << ' ';
      ++width_;
    }
    out_ << tok;
    width_ += tok.size();
  }
  void end() { out_ << '\n'; }

 private:
  std::ostringstream& out_;
  std::size_t width_ = 0;
};

void write_terms(LineWriter& w, const IlpModel& m, const std::vector<Term>& terms) {
  bool first = true;
  for (const Term& term : terms) {
    const std::string& name = m.vars[term.var].name;
    const int mag = term.coef < 0 ? -term.coef : term.coef;
    std::string coef = mag == 1 ? "" : std::to_string(mag) + " ";
    if (first) {
      w.token((term.coef < 0 ? "- " : "") + coef + name);
    } else {
      w.token(term.coef < 0 ? "-" : "+");
      w.token(coef + name);
    }
    first = false;
  }
}

const char* sense_text(Sense s) {
  switch (s) {
    case Sense::kLe: return "<=";
    case Sense::kGe: return ">=";
    case Sense::kEq: return "=";
  }
  return "=";
}

}  // namespace

std::string export_lp(const IlpModel& m) {
  std::ostringstream out;
  LineWriter w(out);
  out << "\\ minimum transitive st-orientation, s = " << m.s << ", t = " << m.t << '\n';
  out << "Minimize\n";
  w.start(" obj:");
  std::vector<Term> obj;
  for (int v : m.objective) obj.push_back({v, 1});
  if (obj.empty()) {
    w.token("0");
  } else {
    write_terms(w, m, obj);
  }
  w.end();
  out << "Subject To\n";
  for (const Row& r : m.rows) {
    w.start(" " + r.name + ":");
    write_terms(w, m, r.terms);
    w.token(sense_text(r.sense));
    w.token(std::to_string(r.rhs));
    w.end();
  }
  out << "Bounds\n";
  for (const Variable& v : m.vars) {
    if (v.kind == VarKind::kZ) out << ' ' << v.name << " >= 0\n";
  }
  out << "Generals\n";
  w.start("");
  for (const Variable& v : m.vars) {
    if (v.kind == VarKind::kZ) w.token(v.name);
  }
  w.end();
  out << "Binaries\n";
  w.start("");
  for (const Variable& v : m.vars) {
    if (v.kind != VarKind::kZ) w.token(v.name);
  }
  w.end();
  out << "End\n";
  return out.str();
}

}  // namespace storient
