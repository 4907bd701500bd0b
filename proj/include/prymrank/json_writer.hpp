// Copyright (c) 2026 the prym-rank authors
// SPDX-License-Identifier: Apache-2.0

#ifndef PRYMRANK_JSON_WRITER_HPP
#define PRYMRANK_JSON_WRITER_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace prymrank {

/// 17-significant-digit decimal form of x ("%.17g"); round-trips doubles
/// exactly and is byte-stable across runs. Non-finite values are not
/// representable in JSON and must be handled by the caller.
std::string format_double(double x);

/// Minimal streaming JSON emitter. Keys appear exactly in insertion
/// order and floats are formatted with format_double, which is what makes
/// reports byte-identical for identical configurations.
class JsonWriter {
 public:
  JsonWriter& begin_object();
  JsonWriter& end_object();
  JsonWriter& begin_array();
  JsonWriter& end_array();
  JsonWriter& key(std::string_view name);

  JsonWriter& value(double x);
  JsonWriter& value(int x);
  JsonWriter& value(long long x);
  JsonWriter& value(std::uint64_t x);
  JsonWriter& value(bool x);
  JsonWriter& value(std::string_view x);
  JsonWriter& value(const char* x) { return value(std::string_view(x)); }
  JsonWriter& null();

  /// Splices a pre-rendered JSON value verbatim.
  JsonWriter& raw(std::string_view json);

  /// Convenience: key + scalar value.
  template <typename T>
  JsonWriter& field(std::string_view name, T&& v) {
    key(name);
    return value(std::forward<T>(v));
  }

  std::string str() const { return out_; }

 private:
  void comma_if_needed();
  std::string out_;
  std::vector<bool> has_item_;  // per open scope
  bool pending_key_ = false;
};

}  // namespace prymrank

#endif
