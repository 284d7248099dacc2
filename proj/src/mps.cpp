// Copyright 2026 The grouprelax Authors.
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
#include "grouprelax/mps.hpp"

#include <fstream>
#include <sstream>
#include <unordered_map>

#include "grouprelax/errors.hpp"

namespace grouprelax {
namespace {

enum class Section { kNone, kName, kRows, kColumns, kRhs, kRanges, kBounds, kObjSense, kEnd };

[[noreturn]] void malformed(std::size_t line, const std::string& what) {
  fail(ErrorKind::kMalformedInput, "line " + std::to_string(line) + ": " + what);
}

std::vector<std::string> tokenize(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream in(line);
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

std::string upper(std::string s) {
  for (char& ch : s) ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
  return s;
}

std::string strip_quotes(const std::string& s) {
  if (s.size() >= 2 && s.front() == '\'' && s.back() == '\'') return s.substr(1, s.size() - 2);
  return s;
}

Rational parse_number(const std::string& tok, std::size_t line) {
  Rational v;
  auto slash = tok.find('/');
  if (slash != std::string::npos) {
    Rational num, den;
    if (!parse_decimal(tok.substr(0, slash), &num) || !parse_decimal(tok.substr(slash + 1), &den) || den == 0)
      malformed(line, "bad number '" + tok + "'");
    return Rational(num / den);
  }
  if (!parse_decimal(tok, &v)) malformed(line, "bad number '" + tok + "'");
  return v;
}

struct Parser {
  MpsModel model;
  std::unordered_map<std::string, std::size_t> row_index;
  std::unordered_map<std::string, std::size_t> col_index;
  std::vector<bool> bounded_explicitly;
  bool in_integer_block = false;
  std::string last_column;

  std::size_t row_of(const std::string& name, std::size_t line, bool* is_objective) {
    *is_objective = name == model.objective;
    if (*is_objective) return 0;
    auto it = row_index.find(name);
    if (it == row_index.end()) malformed(line, "unknown row '" + name + "'");
    return it->second;
  }

  std::size_t column_of(const std::string& name, std::size_t line) {
    auto it = col_index.find(name);
    if (it == col_index.end()) malformed(line, "unknown column '" + name + "'");
    return it->second;
  }

  void add_row(const std::vector<std::string>& t, std::size_t line) {
    if (t.size() != 2) malformed(line, "ROWS entry needs a type and a name");
    std::string type = upper(t[0]);
    if (type.size() != 1 || std::string("NLGE").find(type[0]) == std::string::npos)
      malformed(line, "unknown row type '" + t[0] + "'");
    if (type[0] == 'N') {
      if (model.objective.empty()) model.objective = t[1];
      else ignored_free_rows.push_back(t[1]);
      return;
    }
    if (row_index.count(t[1]) || t[1] == model.objective) malformed(line, "duplicate row '" + t[1] + "'");
    row_index[t[1]] = model.rows.size();
    model.rows.push_back({t[1], type[0]});
  }

  bool is_ignored(const std::string& row) const {
    for (const auto& r : ignored_free_rows)
      if (r == row) return true;
    return false;
  }

  void add_entry(std::size_t col, const std::string& row, const std::string& value, std::size_t line) {
    if (is_ignored(row)) return;
    bool obj = false;
    std::size_t r = row_of(row, line, &obj);
    Rational v = parse_number(value, line);
    if (obj) {
      if (model.objective_coeffs.count(col)) malformed(line, "duplicate objective entry");
      model.objective_coeffs[col] = v;
    } else {
      auto& rowmap = model.entries[r];
      if (rowmap.count(col)) malformed(line, "duplicate entry for row '" + row + "'");
      rowmap[col] = v;
    }
  }

  void columns(const std::vector<std::string>& t, std::size_t line) {
    if (t.size() >= 3 && strip_quotes(upper(t[1])) == "MARKER") {
      std::string kind = strip_quotes(upper(t[2]));
      if (kind == "INTORG") in_integer_block = true;
      else if (kind == "INTEND") in_integer_block = false;
      else malformed(line, "unknown marker '" + t[2] + "'");
      return;
    }
    if (t.size() != 3 && t.size() != 5) malformed(line, "COLUMNS entry needs 3 or 5 fields");
    std::size_t col;
    auto it = col_index.find(t[0]);
    if (it == col_index.end()) {
      col = model.columns.size();
      col_index[t[0]] = col;
      MpsColumn c;
      c.name = t[0];
      c.integer = in_integer_block;
      c.lower = Rational(0);
      model.columns.push_back(c);
      bounded_explicitly.push_back(false);
    } else {
      if (t[0] != last_column) malformed(line, "column '" + t[0] + "' is not contiguous");
      col = it->second;
    }
    last_column = t[0];
    add_entry(col, t[1], t[2], line);
    if (t.size() == 5) add_entry(col, t[3], t[4], line);
  }

  void rhs_pair(const std::string& row, const std::string& value, std::size_t line, bool ranges) {
    if (is_ignored(row)) return;
    bool obj = false;
    std::size_t r = row_of(row, line, &obj);
    Rational v = parse_number(value, line);
    if (obj) {
      if (ranges) malformed(line, "RANGES on the objective row");
      model.objective_rhs = v;
      return;
    }
    auto& target = ranges ? model.ranges : model.rhs;
    if (target.count(r)) malformed(line, "duplicate value for row '" + row + "'");
    target[r] = v;
  }

  void rhs(const std::vector<std::string>& t, std::size_t line, bool ranges) {
    std::size_t start = t.size() % 2 == 1 ? 1 : 0;
    if (t.size() < 2 || t.size() > 5 || t.size() - start < 2) malformed(line, "bad RHS/RANGES entry");
    for (std::size_t i = start; i + 1 < t.size(); i += 2) rhs_pair(t[i], t[i + 1], line, ranges);
  }

  void bounds(const std::vector<std::string>& t, std::size_t line) {
    if (t.size() < 2 || t.size() > 4) malformed(line, "bad BOUNDS entry");
    std::string type = upper(t[0]);
    const bool valueless = type == "FR" || type == "MI" || type == "PL" || type == "BV";
    std::string colname;
    std::optional<Rational> value;
    if (valueless) {
      if (t.size() == 2) colname = t[1];
      else if (t.size() == 3 && type != "BV") colname = t[2];
      else if (type == "BV" && t.size() == 3) {
        // "BV set col" or "BV col value"
        Rational probe;
        if (parse_decimal(t[2], &probe) && !col_index.count(t[2])) {
          colname = t[1];
          value = probe;
        } else {
          colname = t[2];
        }
      } else if (type == "BV" && t.size() == 4) {
        colname = t[2];
        value = parse_number(t[3], line);
      } else {
        malformed(line, "bad BOUNDS entry");
      }
    } else {
      if (t.size() == 4) {
        colname = t[2];
        value = parse_number(t[3], line);
      } else if (t.size() == 3) {
        colname = t[1];
        value = parse_number(t[2], line);
      } else {
        malformed(line, "bound needs a value");
      }
    }
    std::size_t j = column_of(colname, line);
    MpsColumn& c = model.columns[j];
    bounded_explicitly[j] = true;
    if (type == "UP") {
      if (*value < 0 && c.lower && *c.lower == 0) c.lower.reset();
      c.upper = *value;
    } else if (type == "LO") {
      c.lower = *value;
    } else if (type == "FX") {
      c.lower = *value;
      c.upper = *value;
    } else if (type == "FR") {
      c.lower.reset();
      c.upper.reset();
    } else if (type == "MI") {
      c.lower.reset();
    } else if (type == "PL") {
      c.upper.reset();
    } else if (type == "BV") {
      c.integer = true;
      c.lower = Rational(0);
      c.upper = Rational(1);
    } else if (type == "LI") {
      c.integer = true;
      c.lower = *value;
    } else if (type == "UI") {
      c.integer = true;
      if (*value < 0 && c.lower && *c.lower == 0) c.lower.reset();
      c.upper = *value;
    } else {
      malformed(line, "unknown bound type '" + t[0] + "'");
    }
  }

  std::vector<std::string> ignored_free_rows;
};

}  // namespace

MpsModel parse_mps_model(const std::string& text) {
  Parser p;
  Section sec = Section::kNone;
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  bool saw_end = false;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '*') continue;
    std::vector<std::string> t = tokenize(line);
    if (t.empty()) continue;
    const bool header = !std::isspace(static_cast<unsigned char>(line[0]));
    if (header) {
      std::string key = upper(t[0]);
      if (key == "NAME") {
        sec = Section::kName;
        if (t.size() > 1) p.model.name = t[1];
      } else if (key == "ROWS") {
        sec = Section::kRows;
      } else if (key == "COLUMNS") {
        sec = Section::kColumns;
      } else if (key == "RHS") {
        sec = Section::kRhs;
      } else if (key == "RANGES") {
        sec = Section::kRanges;
      } else if (key == "BOUNDS") {
        sec = Section::kBounds;
      } else if (key == "OBJSENSE") {
        sec = Section::kObjSense;
        if (t.size() > 1) {
          std::string s = upper(t[1]);
          p.model.maximize = s == "MAX" || s == "MAXIMIZE";
        }
      } else if (key == "ENDATA") {
        saw_end = true;
        break;
      } else {
        malformed(lineno, "unknown section '" + t[0] + "'");
      }
      continue;
    }
    switch (sec) {
      case Section::kRows: p.add_row(t, lineno); break;
      case Section::kColumns: p.columns(t, lineno); break;
      case Section::kRhs: p.rhs(t, lineno, false); break;
      case Section::kRanges: p.rhs(t, lineno, true); break;
      case Section::kBounds: p.bounds(t, lineno); break;
      case Section::kObjSense: {
        std::string s = upper(t[0]);
        if (s == "MAX" || s == "MAXIMIZE") p.model.maximize = true;
        else if (s == "MIN" || s == "MINIMIZE") p.model.maximize = false;
        else malformed(lineno, "unknown objective sense '" + t[0] + "'");
        break;
      }
      default: malformed(lineno, "data outside a section");
    }
  }
  if (!saw_end) malformed(lineno, "missing ENDATA");
  if (p.model.objective.empty()) malformed(lineno, "no objective row");
  return p.model;
}

ILPInstance to_ilp(const MpsModel& model) {
  ILPInstance inst;
  inst.name = model.name;
  const std::size_t n = model.columns.size();
  std::vector<BigInt> shift(n, 0);
  for (std::size_t j = 0; j < n; ++j) {
    const MpsColumn& c = model.columns[j];
    if (!c.integer) fail(ErrorKind::kNotPureILP, "column '" + c.name + "' is continuous");
    if (!c.lower) fail(ErrorKind::kNotPureILP, "column '" + c.name + "' has no finite lower bound");
    BigInt lo = ceil_of(*c.lower);
    if (lo < 0) shift[j] = lo;
    inst.var_names.push_back(c.name);
  }
  const Rational sign = model.maximize ? Rational(-1) : Rational(1);
  inst.c.assign(n, Rational(0));
  for (const auto& [j, v] : model.objective_coeffs) inst.c[j] = sign * v;
  inst.obj_offset = -sign * model.objective_rhs;
  for (std::size_t j = 0; j < n; ++j) inst.obj_offset += inst.c[j] * shift[j];

  struct PendingRow {
    std::string name;
    std::vector<Rational> coeffs;
    Rational rhs;
    RowSense sense;
  };
  std::vector<PendingRow> rows;
  auto add_row = [&](std::string name, const std::vector<Rational>& a, Rational rhs, RowSense s) {
    for (std::size_t j = 0; j < n; ++j) rhs -= a[j] * shift[j];
    rows.push_back({std::move(name), a, rhs, s});
  };
  for (std::size_t i = 0; i < model.rows.size(); ++i) {
    std::vector<Rational> a(n, Rational(0));
    auto it = model.entries.find(i);
    if (it != model.entries.end())
      for (const auto& [j, v] : it->second) a[j] = v;
    Rational rhs = 0;
    if (auto r = model.rhs.find(i); r != model.rhs.end()) rhs = r->second;
    const char type = model.rows[i].type;
    const std::string& name = model.rows[i].name;
    auto rg = model.ranges.find(i);
    if (rg == model.ranges.end()) {
      RowSense s = type == 'L' ? RowSense::kLessEqual : type == 'G' ? RowSense::kGreaterEqual : RowSense::kEqual;
      add_row(name, a, rhs, s);
      continue;
    }
    Rational R = rg->second;
    Rational absR = R < 0 ? Rational(-R) : R;
    Rational lo, hi;
    if (type == 'L') {
      lo = rhs - absR;
      hi = rhs;
    } else if (type == 'G') {
      lo = rhs;
      hi = rhs + absR;
    } else if (R >= 0) {
      lo = rhs;
      hi = rhs + R;
    } else {
      lo = rhs + R;
      hi = rhs;
    }
    add_row(name, a, lo, RowSense::kGreaterEqual);
    add_row(name + "_rng", a, hi, RowSense::kLessEqual);
  }
  for (std::size_t j = 0; j < n; ++j) {
    const MpsColumn& c = model.columns[j];
    std::vector<Rational> e(n, Rational(0));
    e[j] = 1;
    BigInt lo = ceil_of(*c.lower);
    if (lo > 0) add_row("LB_" + c.name, e, Rational(lo), RowSense::kGreaterEqual);
    if (c.upper) {
      BigInt hi = floor_of(*c.upper);
      if (hi < lo) fail(ErrorKind::kInfeasible, "column '" + c.name + "' has an empty integer domain");
      add_row("UB_" + c.name, e, Rational(hi), RowSense::kLessEqual);
    }
  }

  inst.A = IntMatrix(rows.size(), n);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    BigInt scale = rows[i].rhs.get_den();
    for (const Rational& v : rows[i].coeffs) scale = lcm(scale, v.get_den());
    for (std::size_t j = 0; j < n; ++j) {
      Rational s = rows[i].coeffs[j] * scale;
      inst.A(i, j) = s.get_num();
    }
    Rational rs = rows[i].rhs * scale;
    inst.b.push_back(rs.get_num());
    inst.senses.push_back(rows[i].sense);
    inst.row_names.push_back(rows[i].name);
  }
  inst.validate();
  return inst;
}

ILPInstance parse_mps(const std::string& text) { return to_ilp(parse_mps_model(text)); }

ILPInstance read_mps_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorKind::kMalformedInput, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  ILPInstance inst = parse_mps(ss.str());
  if (inst.name.empty()) {
    std::string base = path.substr(path.find_last_of('/') + 1);
    inst.name = base.substr(0, base.find('.'));
  }
  return inst;
}

std::string emit_mps(const ILPInstance& in) {
  ILPInstance inst = in;
  inst.ensure_names();
  inst.validate();
  std::ostringstream out;
  out << "NAME " << (inst.name.empty() ? "unnamed" : inst.name) << "\n";
  out << "ROWS\n N obj\n";
  for (std::size_t i = 0; i < inst.num_rows(); ++i) {
    char t = inst.senses[i] == RowSense::kLessEqual ? 'L' : inst.senses[i] == RowSense::kGreaterEqual ? 'G' : 'E';
    out << " " << t << " " << inst.row_names[i] << "\n";
  }
  out << "COLUMNS\n    MARKER 'MARKER' 'INTORG'\n";
  for (std::size_t j = 0; j < inst.num_vars(); ++j) {
    out << "    " << inst.var_names[j] << " obj " << to_exact_string(inst.c[j]) << "\n";
    for (std::size_t i = 0; i < inst.num_rows(); ++i)
      if (inst.A(i, j) != 0) out << "    " << inst.var_names[j] << " " << inst.row_names[i] << " " << inst.A(i, j).get_str() << "\n";
  }
  out << "    MARKER 'MARKER' 'INTEND'\n";
  out << "RHS\n";
  if (inst.obj_offset != 0) out << "    RHS obj " << to_exact_string(Rational(-inst.obj_offset)) << "\n";
  for (std::size_t i = 0; i < inst.num_rows(); ++i)
    if (inst.b[i] != 0) out << "    RHS " << inst.row_names[i] << " " << inst.b[i].get_str() << "\n";
  out << "BOUNDS\n";
  for (std::size_t j = 0; j < inst.num_vars(); ++j) out << " PL BND " << inst.var_names[j] << "\n";
  out << "ENDATA\n";
  return out.str();
}

std::string normalize_whitespace(const std::string& text) {
  std::istringstream in(text);
  std::string line, out;
  while (std::getline(in, line)) {
    std::vector<std::string> t = tokenize(line);
    if (t.empty()) continue;
    for (std::size_t i = 0; i < t.size(); ++i) {
      if (i) out += ' ';
      out += t[i];
    }
    out += '\n';
  }
  return out;
}

}  // namespace grouprelax
