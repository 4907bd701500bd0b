// Copyright (c) 2026 the prym-rank authors
// SPDX-License-Identifier: Apache-2.0

#include "prymrank/json_writer.hpp"

#include <cmath>
#include <cstdio>

#include "prymrank/errors.hpp"

namespace prymrank {

std::string format_double(double x) {
  if (!std::isfinite(x)) throw DomainError("non-finite double has no JSON form");
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

void JsonWriter::comma_if_needed() {
  if (pending_key_) return;  // value directly after "key":
  if (!has_item_.empty()) {
    if (has_item_.back()) out_ += ',';
    has_item_.back() = true;
  }
}

JsonWriter& JsonWriter::begin_object() {
  comma_if_needed();
  pending_key_ = false;
  out_ += '{';
  has_item_.push_back(false);
  return *this;
}

JsonWriter& JsonWriter::end_object() {
  out_ += '}';
  has_item_.pop_back();
  return *this;
}

JsonWriter& JsonWriter::begin_array() {
  comma_if_needed();
  pending_key_ = false;
  out_ += '[';
  has_item_.push_back(false);
  return *this;
}

JsonWriter& JsonWriter::end_array() {
  out_ += ']';
  has_item_.pop_back();
  return *this;
}

namespace {

void append_escaped(std::string& out, std::string_view s) {
  out += '"';
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      case '\r': out += "\\r"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  out += '"';
}

}  // namespace

JsonWriter& JsonWriter::key(std::string_view name) {
  comma_if_needed();
  append_escaped(out_, name);
  out_ += ':';
  pending_key_ = true;
  return *this;
}

JsonWriter& JsonWriter::value(double x) {
  comma_if_needed();
  pending_key_ = false;
  out_ += format_double(x);
  return *this;
}

JsonWriter& JsonWriter::value(int x) { return value(static_cast<long long>(x)); }

JsonWriter& JsonWriter::value(long long x) {
  comma_if_needed();
  pending_key_ = false;
  out_ += std::to_string(x);
  return *this;
}

JsonWriter& JsonWriter::value(std::uint64_t x) {
  comma_if_needed();
  pending_key_ = false;
  out_ += std::to_string(x);
  return *this;
}

JsonWriter& JsonWriter::value(bool x) {
  comma_if_needed();
  pending_key_ = false;
  out_ += x ? "true" : "false";
  return *this;
}

JsonWriter& JsonWriter::value(std::string_view x) {
  comma_if_needed();
  pending_key_ = false;
  append_escaped(out_, x);
  return *this;
}

JsonWriter& JsonWriter::null() {
  comma_if_needed();
  pending_key_ = false;
  out_ += "null";
  return *this;
}

JsonWriter& JsonWriter::raw(std::string_view json) {
  comma_if_needed();
  pending_key_ = false;
  out_ += json;
  return *this;
}

}  // namespace prymrank
