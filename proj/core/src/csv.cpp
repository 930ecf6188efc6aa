// Copyright 2026 The depprof Authors. All rights reserved.
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

#include <istream>
#include <iterator>
#include <ostream>
#include <sstream>

#include "depprof/errors.hpp"
#include "depprof/relation_io.hpp"

namespace depprof {

std::vector<std::vector<std::string>> parse_csv(std::istream& in) {
  const std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  std::vector<std::vector<std::string>> records;
  std::vector<std::string> record;
  std::string field;
  bool in_quotes = false;
  bool field_was_quoted = false;
  std::size_t line = 1;

  auto end_field = [&] {
    record.push_back(std::move(field));
    field.clear();
    field_was_quoted = false;
  };
  auto end_record = [&] {
    end_field();
    records.push_back(std::move(record));
    record.clear();
  };

  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (in_quotes) {
      if (c == '"') {
        if (i + 1 < text.size() && text[i + 1] == '"') {
          field += '"';
          ++i;
        } else {
          in_quotes = false;
        }
      } else {
        if (c == '\n') ++line;
        field += c;
      }
      continue;
    }
    switch (c) {
      case '"':
        if (!field.empty() || field_was_quoted)
          throw InputError("CSV line " + std::to_string(line) + ": stray quote inside unquoted field");
        in_quotes = true;
        field_was_quoted = true;
        break;
      case ',':
        end_field();
        break;
      case '\r':
        if (i + 1 < text.size() && text[i + 1] == '\n') ++i;
        end_record();
        ++line;
        break;
      case '\n':
        end_record();
        ++line;
        break;
      default:
        if (field_was_quoted)
          throw InputError("CSV line " + std::to_string(line) + ": text after closing quote");
        field += c;
    }
  }
  if (in_quotes) throw InputError("CSV: unterminated quoted field");
  // A trailing line break does not start another record.
  if (!field.empty() || field_was_quoted || !record.empty()) end_record();
  return records;
}

Relation read_relation_csv(std::istream& in) {
  auto records = parse_csv(in);
  if (records.empty()) throw InputError("CSV has no header");
  auto header = std::move(records.front());
  if (header.size() == 1 && header.front().empty()) throw InputError("CSV header is empty");
  std::vector<Row> rows;
  rows.reserve(records.size() - 1);
  for (std::size_t i = 1; i < records.size(); ++i) {
    if (records[i].size() != header.size())
      throw InputError("CSV record " + std::to_string(i + 1) + " has " + std::to_string(records[i].size()) +
                       " fields, header has " + std::to_string(header.size()));
    rows.push_back(std::move(records[i]));
  }
  return Relation(std::move(header), std::move(rows));
}

Relation parse_relation_csv(const std::string& text) {
  std::istringstream in(text);
  return read_relation_csv(in);
}

namespace {

void write_field(std::ostream& out, const std::string& v) {
  if (!v.empty() && v.find_first_of(",\"\r\n") == std::string::npos) {
    out << v;
    return;
  }
  out << '"';
  for (char c : v) {
    if (c == '"') out << '"';
    out << c;
  }
  out << '"';
}

void write_record(std::ostream& out, const std::vector<std::string>& rec) {
  for (std::size_t i = 0; i < rec.size(); ++i) {
    if (i) out << ',';
    write_field(out, rec[i]);
  }
  out << '\n';
}

}  // namespace

void write_relation_csv(std::ostream& out, const Relation& rel) {
  write_record(out, rel.schema());
  for (const auto& row : rel.rows()) write_record(out, row);
}

std::string relation_to_csv(const Relation& rel) {
  std::ostringstream out;
  write_relation_csv(out, rel);
  return out.str();
}

}  // namespace depprof
